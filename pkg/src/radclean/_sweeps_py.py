"""Pure-Python kernel for brute-force sweeps over M2(Z/p^k).

Matrices are packed integers: [[a, b], [c, d]] <-> a + m*b + m^2*c + m^3*d
with 0 <= a, b, c, d < m.  The compiled kernel (_sweeps_c) implements the
same interface; the two must produce identical output, which the test
suite checks.

The predicates are decided straight from their definitions by searching
idempotents (and, for quasinilpotence, scanning the full commutant), so
this module is deliberately independent of the closed-form criteria it is
used to validate.
"""

from __future__ import annotations

from functools import lru_cache

PREDICATES = ("clean", "rad_clean", "j_clean", "quasipolar")

# quasinilpotence results per (m, p): packed matrix -> bool
_QNIL_CACHE: dict[tuple[int, int], dict[int, bool]] = {}


@lru_cache(maxsize=None)
def _cells(m: int) -> tuple[tuple[int, int, int, int], ...]:
    m2, m3 = m * m, m * m * m
    return tuple(
        (i % m, (i // m) % m, (i // m2) % m, i // m3) for i in range(m**4)
    )


@lru_cache(maxsize=None)
def idempotents(m: int) -> tuple[int, ...]:
    """All packed E with E*E == E, ascending."""
    out = []
    for idx, (a, b, c, d) in enumerate(_cells(m)):
        if (
            (a * a + b * c) % m == a
            and (a * b + b * d) % m == b
            and (c * a + d * c) % m == c
            and (c * b + d * d) % m == d
        ):
            out.append(idx)
    return tuple(out)


def _commutes(x, y, m: int) -> bool:
    xa, xb, xc, xd = x
    ya, yb, yc, yd = y
    return (
        (xa * ya + xb * yc) % m == (ya * xa + yb * xc) % m
        and (xa * yb + xb * yd) % m == (ya * xb + yb * xd) % m
        and (xc * ya + xd * yc) % m == (yc * xa + yd * xc) % m
        and (xc * yb + xd * yd) % m == (yc * xb + yd * xd) % m
    )


def quasinilpotent(m: int, p: int, q: int) -> bool:
    """I + Q*X invertible for every X commuting with Q, by full scan."""
    cache = _QNIL_CACHE.setdefault((m, p), {})
    hit = cache.get(q)
    if hit is not None:
        return hit
    cells = _cells(m)
    qa, qb, qc, qd = cells[q]
    result = True
    for xa, xb, xc, xd in cells:
        ta = qa * xa + qb * xc
        tb = qa * xb + qb * xd
        tc = qc * xa + qd * xc
        td = qc * xb + qd * xd
        if (
            ta % m != (xa * qa + xb * qc) % m
            or tb % m != (xa * qb + xb * qd) % m
            or tc % m != (xc * qa + xd * qc) % m
            or td % m != (xc * qb + xd * qd) % m
        ):
            continue
        if ((ta + 1) * (td + 1) - tb * tc) % p == 0:
            result = False
            break
    cache[q] = result
    return result


def brute_one(m: int, p: int, idx: int, which: str) -> bool:
    """Definitional check of one predicate for one packed matrix."""
    if which not in PREDICATES:
        raise ValueError(f"unknown predicate {which!r}")
    cells = _cells(m)
    a = cells[idx]
    aa, ab, ac, ad = a
    for e in idempotents(m):
        ea, eb, ec, ed = cells[e]
        if which == "j_clean":
            # A - E must have all entries in pZ.
            if (
                (aa - ea) % p or (ab - eb) % p or (ac - ec) % p or (ad - ed) % p
            ):
                continue
            if _commutes((ea, eb, ec, ed), a, m):
                return True
            continue
        if not _commutes((ea, eb, ec, ed), a, m):
            continue
        if which == "quasipolar":
            # A + E invertible and A*E quasinilpotent.
            if ((aa + ea) * (ad + ed) - (ab + eb) * (ac + ec)) % p == 0:
                continue
            qa = (aa * ea + ab * ec) % m
            qb = (aa * eb + ab * ed) % m
            qc = (ac * ea + ad * ec) % m
            qd = (ac * eb + ad * ed) % m
            if quasinilpotent(m, p, qa + m * (qb + m * (qc + m * qd))):
                return True
            continue
        # clean / rad_clean: A - E invertible ...
        if ((aa - ea) * (ad - ed) - (ab - eb) * (ac - ec)) % p == 0:
            continue
        if which == "clean":
            return True
        # ... and E*A*E entrywise in pZ for rad_clean.
        fa = (ea * aa + eb * ac) % m
        fb = (ea * ab + eb * ad) % m
        fc = (ec * aa + ed * ac) % m
        fd = (ec * ab + ed * ad) % m
        if (
            (fa * ea + fb * ec) % p == 0
            and (fa * eb + fb * ed) % p == 0
            and (fc * ea + fd * ec) % p == 0
            and (fc * eb + fd * ed) % p == 0
        ):
            return True
    return False


def sweep(m: int, p: int, which: tuple[str, ...]) -> dict[str, bytes]:
    """Predicate tables over all m**4 packed matrices."""
    for name in which:
        if name not in PREDICATES:
            raise ValueError(f"unknown predicate {name!r}")
    total = m**4
    return {
        name: bytes(
            1 if brute_one(m, p, idx, name) else 0 for idx in range(total)
        )
        for name in which
    }
