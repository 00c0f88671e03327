"""Monic quadratics over local rings: the split solver behind the
classification criteria.

All quadratics of interest are t**2 + mu*t + lam with mu a unit and lam in
the radical; over a local ring such a polynomial, when it splits, has
exactly one root in J(R) and one in U(R).  Per-ring strategies:

* residue rings (ZMod, PAdic): the residue polynomial mod p factors as
  t*(t + mu) with distinct simple roots, so Newton iteration lifts the
  radical root to the full modulus;
* localized integers: the discriminant must be the square of a rational,
  tested exactly on the reduced numerator and denominator;
* series rings: solve in the base ring, then lift coefficientwise with the
  recurrence from the series module.

Every returned root is re-checked exactly in its ring before it leaves
this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import sampling
from ._numtheory import sqrt_mod_prime_power
from .errors import (
    BudgetExceeded,
    CharTwo,
    NotASquare,
    NotSolvable,
    PreconditionViolated,
)
from .mat2 import MonicQuadratic
from .rings import (
    Elem,
    LocalRing,
    PAdic,
    SeriesRing,
    ZLocal,
    ZMod,
    _ResidueRing,
)

__all__ = [
    "RootPair",
    "SolvabilityReport",
    "verified_pair",
    "solve_split_quadratic",
    "solve_x2_plus_x",
    "discriminant_sqrt",
    "solvable_for_all",
]


@dataclass(frozen=True)
class RootPair:
    """Roots of a split quadratic: alpha in J(R), beta in U(R)."""

    alpha: Elem
    beta: Elem


def verified_pair(q: MonicQuadratic, alpha: Elem, beta: Elem) -> RootPair:
    """Build a RootPair after re-checking roots, memberships and Vieta sums."""
    assert not q.eval_at(alpha), f"{alpha} is not a root of {q}"
    assert not q.eval_at(beta), f"{beta} is not a root of {q}"
    assert alpha.in_radical() and beta.is_unit()
    assert alpha + beta == -q.mu and alpha * beta == q.lam
    return RootPair(alpha, beta)


def solve_split_quadratic(q: MonicQuadratic) -> RootPair:
    """Solve t**2 + mu*t + lam = 0 for mu a unit, lam in the radical.

    Returns the unique pair with the radical root first; raises NotSolvable
    when the quadratic does not split in the ring (localized integers and
    series over them are the only families where that happens).
    """
    if not q.mu.is_unit():
        raise PreconditionViolated(f"mu = {q.mu} must be a unit")
    if not q.lam.in_radical():
        raise PreconditionViolated(f"lam = {q.lam} must lie in the radical")
    ring = q.ring
    if isinstance(ring, _ResidueRing):
        alpha = Elem(ring, _lift_residue_root(ring, q.mu.rep, q.lam.rep))
        beta = -q.mu - alpha
    elif isinstance(ring, ZLocal):
        alpha, beta = _solve_zloc(ring, q)
    elif isinstance(ring, SeriesRing):
        alpha, beta = _solve_series(ring, q)
    else:
        raise TypeError(f"no quadratic solver for {ring}")
    return verified_pair(q, alpha, beta)


def _lift_residue_root(ring: _ResidueRing, mu: int, lam: int) -> int:
    """Newton-lift the root of t^2 + mu*t + lam that is 0 mod p.

    The derivative 2t + mu stays a unit along the orbit (t is always 0 mod
    p, mu is a unit), and the residual valuation at least doubles per step.
    """
    m = ring.modulus
    x = 0
    f = lam % m
    steps = 0
    while f:
        x = (x - f * pow((2 * x + mu) % m, -1, m)) % m
        f = (x * x + mu * x + lam) % m
        steps += 1
        assert steps <= m.bit_length() + 2, "Newton iteration failed to converge"
    return x


def _solve_zloc(ring: ZLocal, q: MonicQuadratic) -> tuple[Elem, Elem]:
    mu: Fraction = q.mu.rep
    lam: Fraction = q.lam.rep
    disc = mu * mu - 4 * lam
    if disc < 0:
        raise NotSolvable(f"discriminant {disc} is negative")
    rn, rd = isqrt(disc.numerator), isqrt(disc.denominator)
    if rn * rn != disc.numerator or rd * rd != disc.denominator:
        raise NotSolvable(f"discriminant {disc} is not a rational square")
    s = Fraction(rn, rd)
    roots = ((-mu + s) / 2, (-mu - s) / 2)
    # Monicity keeps the roots p-integral for odd p; for p = 2 membership
    # is checked rather than assumed.
    for r in roots:
        if r.denominator % ring.p == 0:
            raise NotSolvable(f"root {r} does not lie in {ring}")
    radical = [r for r in roots if r.numerator % ring.p == 0]
    assert len(radical) == 1, "split quadratic must have exactly one radical root"
    alpha = radical[0]
    beta = roots[0] if alpha == roots[1] else roots[1]
    return Elem(ring, alpha), Elem(ring, beta)


def _solve_series(ring: SeriesRing, q: MonicQuadratic) -> tuple[Elem, Elem]:
    from . import series

    base_q = MonicQuadratic(ring.base, q.mu.rep[0], q.lam.rep[0])
    seed = solve_split_quadratic(base_q).alpha
    alpha = series.lift_root_recurrence(q.mu, q.lam, seed)
    return alpha, -q.mu - alpha


def solve_x2_plus_x(c: Elem) -> Elem:
    """The radical root of x**2 + x = c, for c in the radical.

    Solvable if and only if the split solver succeeds on t**2 + t - c; over
    residue rings a root always exists.
    """
    if not c.in_radical():
        raise PreconditionViolated(f"c = {c} must lie in the radical")
    ring = c.ring
    return solve_split_quadratic(MonicQuadratic(ring, ring.one, -c)).alpha


def discriminant_sqrt(d: Elem) -> Elem:
    """A square root of d, for rings where 2 is a unit.

    Residue rings use a Tonelli-Shanks root mod p Hensel-lifted to the full
    modulus (complete for every d, including non-units, via valuation
    stripping); localized integers use the exact rational square test;
    series delegate the constant term to the base ring and lift the rest
    coefficientwise, which requires a unit (or zero) argument.
    """
    ring = d.ring
    if not ring.from_int(2).is_unit():
        raise CharTwo(f"2 is not a unit in {ring}")
    if isinstance(ring, _ResidueRing):
        return Elem(ring, sqrt_mod_prime_power(d.rep, ring.p, ring.e))
    if isinstance(ring, ZLocal):
        f: Fraction = d.rep
        if f < 0:
            raise NotASquare(f"{f} is negative")
        rn, rd = isqrt(f.numerator), isqrt(f.denominator)
        if rn * rn != f.numerator or rd * rd != f.denominator:
            raise NotASquare(f"{f} is not a rational square")
        return Elem(ring, Fraction(rn, rd))
    if isinstance(ring, SeriesRing):
        return _series_sqrt(ring, d)
    raise TypeError(f"no square-root strategy for {ring}")


def _series_sqrt(ring: SeriesRing, d: Elem) -> Elem:
    coeffs = d.rep
    if all(not c for c in coeffs):
        return ring.zero
    if not coeffs[0].is_unit():
        # Truncated series admit squares with nilpotent constant terms, but
        # no criterion here ever produces one; refuse rather than guess.
        raise PreconditionViolated(
            "series square root is only computed for unit or zero arguments"
        )
    s0 = discriminant_sqrt(coeffs[0])
    inv2s0 = (2 * s0).inverse()
    out = [s0]
    for k in range(1, ring.order):
        acc = coeffs[k]
        for i in range(1, k):
            acc = acc - out[i] * out[k - i]
        out.append(inv2s0 * acc)
    root = Elem(ring, tuple(out))
    assert root * root == d
    return root


@dataclass(frozen=True)
class SolvabilityReport:
    """Outcome of checking x**2 + mu*x + lam = 0 over all (lam, mu) in
    J(R) x U(R): exhaustive over finite rings, sampled elsewhere."""

    ring: LocalRing
    holds: bool
    exhaustive: bool
    checked: int
    counterexample: tuple[Elem, Elem] | None  # (lam, mu)
    justification: str


def solvable_for_all(ring: LocalRing, budget: int = 100) -> SolvabilityReport:
    """Decide whether every quadratic x**2 + mu*x + lam with lam in J(R)
    and mu in U(R) is solvable.

    ZMod rings are checked exhaustively (definitional root search, not the
    lift); PAdic rings hold unconditionally; ZLocal rings enumerate small
    coefficient pairs and series rings sample coefficientwise, both up to
    ``budget`` pairs, reporting the first counterexample found.
    """
    if isinstance(ring, ZMod):
        radical = list(ring.radical_elements())
        units = list(ring.units())
        total = len(radical) * len(units)
        if total > budget:
            raise BudgetExceeded(
                f"{total} (lam, mu) pairs over {ring} exceed budget {budget}"
            )
        checked = 0
        for lam in radical:
            for mu in units:
                checked += 1
                q = MonicQuadratic(ring, mu, lam)
                if not any(not q.eval_at(t) for t in ring.elements()):
                    return SolvabilityReport(
                        ring, False, True, checked, (lam, mu),
                        f"x^2 + {mu}x + {lam} has no root in {ring}",
                    )
        return SolvabilityReport(
            ring, True, True, checked,
            None, f"all {total} (lam, mu) pairs solvable by enumeration",
        )
    if isinstance(ring, PAdic):
        return SolvabilityReport(
            ring, True, False, 0, None,
            "Hensel lifting from the simple residue root t = 0 "
            "succeeds at any precision",
        )
    if isinstance(ring, ZLocal):
        return _zloc_pair_scan(ring, budget)
    if isinstance(ring, SeriesRing):
        return _series_pair_sample(ring, budget)
    raise TypeError(f"no solvability strategy for {ring}")


def _zloc_pair_scan(ring: ZLocal, budget: int) -> SolvabilityReport:
    # Deterministic spiral over small radical/unit integers; fractions add
    # nothing because solvability only depends on the discriminant square
    # test, which small integer pairs already exercise.
    p = ring.p

    def lam_candidates():
        n = 1
        while True:
            yield ring.from_int(p * n)
            yield ring.from_int(-p * n)
            n += 1

    def mu_candidates():
        n = 1
        while True:
            if n % p:
                yield ring.from_int(n)
                yield ring.from_int(-n)
            n += 1

    lams: list[Elem] = []
    mus: list[Elem] = []
    lam_gen = lam_candidates()
    mu_gen = mu_candidates()
    checked = 0
    diagonal = 0
    while checked < budget:
        diagonal += 1
        while len(lams) < diagonal:
            lams.append(next(lam_gen))
        while len(mus) < diagonal:
            mus.append(next(mu_gen))
        for i in range(diagonal):
            lam, mu = lams[i], mus[diagonal - 1 - i]
            checked += 1
            try:
                solve_split_quadratic(MonicQuadratic(ring, mu, lam))
            except NotSolvable:
                return SolvabilityReport(
                    ring, False, False, checked, (lam, mu),
                    f"x^2 + {mu}x + {lam} is unsolvable "
                    "(discriminant is not a rational square)",
                )
            if checked >= budget:
                break
    return SolvabilityReport(
        ring, True, False, checked, None,
        f"no counterexample among {checked} small coefficient pairs",
    )


def _series_pair_sample(ring: SeriesRing, budget: int) -> SolvabilityReport:
    rng = random.Random(0)
    for i in range(budget):
        lam = sampling.random_radical(rng, ring)
        mu = sampling.random_unit(rng, ring)
        try:
            solve_split_quadratic(MonicQuadratic(ring, mu, lam))
        except NotSolvable:
            return SolvabilityReport(
                ring, False, False, i + 1, (lam, mu),
                "sampled pair is unsolvable in the base ring",
            )
    return SolvabilityReport(
        ring, True, False, budget, None,
        f"all {budget} sampled pairs lift from the base ring",
    )
