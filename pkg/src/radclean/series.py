"""Classification of matrices over truncated power-series rings.

Membership of a series matrix in GL2 or in the radical is decided by its
constant-term matrix, and a split characteristic root of the constant-term
matrix lifts coefficientwise to the series ring: writing the quadratic as
y**2 + mu(x)*y + lam(x) = 0 and collecting the x**k coefficient gives

    (2*b0 + mu0) * b_k = -lam_k - sum_{i=1..k} mu_i*b_{k-i}
                                - sum_{i=1..k-1} b_i*b_{k-i}

with 2*b0 + mu0 a unit whenever b0 is the radical root of a split pair.
The lift is validated by checking that the residual vanishes exactly in
the truncated ring, never trusted.  Rings with several variables are
nested series rings and lift variable by variable through the recursion
built into the quadratic solver.
"""

from __future__ import annotations

from typing import NamedTuple

from . import classify, quadratic
from .errors import NotSimpleRoot, PreconditionViolated, RingMismatch
from .mat2 import Mat2, MonicQuadratic, identity
from .rings import Elem, SeriesRing

__all__ = [
    "Membership",
    "evaluate_at_zero",
    "series_membership",
    "lift_root_recurrence",
    "truncate_series",
    "classify_series_matrix",
]


class Membership(NamedTuple):
    gl2: bool
    radical: bool


def _series_ring_of(value) -> SeriesRing:
    ring = value.ring
    if not isinstance(ring, SeriesRing):
        raise PreconditionViolated(f"{ring} is not a series ring")
    return ring


def evaluate_at_zero(A: Mat2) -> Mat2:
    """The constant-term matrix A(0) over the base ring."""
    ring = _series_ring_of(A)
    return Mat2(
        ring.base, A.a.rep[0], A.b.rep[0], A.c.rep[0], A.d.rep[0]
    )


def series_membership(A: Mat2) -> Membership:
    """GL2 / radical membership of a series matrix, via A(0)."""
    A0 = evaluate_at_zero(A)
    return Membership(gl2=A0.is_gl2(), radical=A0.in_radical())


def truncate_series(e: Elem, order: int) -> Elem:
    """Reduce a series element into the same base ring at a lower order."""
    ring = _series_ring_of(e)
    if order > ring.order:
        raise PreconditionViolated(
            f"cannot extend order {ring.order} to {order}"
        )
    return Elem(SeriesRing(ring.base, order), e.rep[:order])


def lift_root_recurrence(
    mu: Elem, lam: Elem, b0: Elem, order: int | None = None
) -> Elem:
    """Lift a base-ring root b0 of t**2 + mu(0)*t + lam(0) to a series
    root of t**2 + mu(x)*t + lam(x), coefficient by coefficient.

    b0 must be the radical root of a split pair, which makes 2*b0 + mu(0)
    a unit; otherwise NotSimpleRoot is raised.  The result lies in the
    radical of the series ring and its residual is checked to vanish
    exactly at the truncation order.
    """
    ring = _series_ring_of(mu)
    if lam.ring != ring:
        raise RingMismatch(f"mu over {ring} but lam over {lam.ring}")
    if b0.ring != ring.base:
        raise RingMismatch(f"seed root must live in the base ring {ring.base}")
    if order is not None and order != ring.order:
        ring = SeriesRing(ring.base, order)
        mu = truncate_series(mu, order)
        lam = truncate_series(lam, order)
    mu0, lam0 = mu.rep[0], lam.rep[0]
    if b0 * b0 + mu0 * b0 + lam0:
        raise PreconditionViolated(
            f"{b0} is not a root of t^2 + {mu0}t + {lam0}"
        )
    if not b0.in_radical():
        raise PreconditionViolated(f"seed root {b0} must lie in the radical")
    slope = 2 * b0 + mu0
    if not slope.is_unit():
        raise NotSimpleRoot(f"2*b0 + mu0 = {slope} is not a unit")
    inv = slope.inverse()
    coeffs = [b0]
    for k in range(1, ring.order):
        acc = -lam.rep[k]
        for i in range(1, k + 1):
            acc = acc - mu.rep[i] * coeffs[k - i]
        for i in range(1, k):
            acc = acc - coeffs[i] * coeffs[k - i]
        coeffs.append(inv * acc)
    y = Elem(ring, tuple(coeffs))
    assert not (y * y + mu * y + lam), "lifted root has nonzero residual"
    return y


def classify_series_matrix(A: Mat2):
    """Classify a series matrix by classifying A(0) and lifting.

    GL2 and radical verdicts transfer directly; a split spectral verdict
    lifts its radical characteristic root through the recurrence and
    rebuilds a verified witness in the series ring.  The verdict always
    matches the base-ring verdict on A(0).
    """
    ring = _series_ring_of(A)
    base_verdict = classify.classify_rad_clean(evaluate_at_zero(A))
    case = base_verdict.case
    if case in (classify.CASE_INVERTIBLE, classify.CASE_RADICAL):
        witness = classify.construct_witness(A)
        return classify.Classification(
            case=case,
            roots=None,
            strongly_rad_clean=True,
            strongly_clean=True,
            witness=witness,
            method=classify.METHOD_CHAR_ROOTS,
        )
    if case == classify.CASE_SPLIT:
        chi = A.char_poly()
        alpha = lift_root_recurrence(chi.mu, chi.lam, base_verdict.roots.alpha)
        beta = -chi.mu - alpha
        roots = quadratic.verified_pair(chi, alpha, beta)
        witness = classify.construct_witness(A, roots)
        return classify.Classification(
            case=case,
            roots=roots,
            strongly_rad_clean=True,
            strongly_clean=True,
            witness=witness,
            method=classify.METHOD_CHAR_ROOTS,
        )
    return classify.Classification(
        case=classify.CASE_NOT_RAD_CLEAN,
        roots=None,
        strongly_rad_clean=False,
        strongly_clean=(identity(ring) - A).is_gl2(),
        witness=None,
        method=classify.METHOD_CHAR_ROOTS,
        reason=base_verdict.reason,
    )
