"""Strongly rad-clean and strongly clean decisions for 2x2 matrices.

A matrix A over a commutative local ring is strongly rad-clean exactly
when it is invertible, or lies in the radical of the matrix ring, or its
characteristic polynomial splits with one root in J(R) and one in U(R)
(which forces the trace to be a unit).  The verdict is produced along one
of four interchangeable criterion paths:

* ``char-roots``     split the characteristic polynomial directly;
* ``det-over-tr2``   x**2 + x = -det/tr**2 has a root in J(R);
* ``det-over-disc``  x**2 + x = det/(tr**2 - 4*det) is solvable;
* ``disc-square``    tr**2 - 4*det is a square (needs 2 invertible).

The paths must agree everywhere; the finite-ring oracle checks that
exhaustively.  Strong cleanness reduces to: I - A invertible, or A
strongly rad-clean.

Every positive verdict carries a witness decomposition A = E + U with E
the spectral projector (beta - alpha)**-1 * (beta*I - A); witnesses are
emitted only after all five defining conditions re-verify exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import quadratic
from .errors import (
    CharTwo,
    NotASquare,
    NotSolvable,
    PreconditionViolated,
    WitnessVerificationFailed,
)
from .mat2 import Mat2, MonicQuadratic, b12, b21, diag, identity, zero
from .quadratic import RootPair, SolvabilityReport
from .rings import Elem, LocalRing

__all__ = [
    "CASE_INVERTIBLE",
    "CASE_RADICAL",
    "CASE_SPLIT",
    "CASE_NOT_RAD_CLEAN",
    "METHOD_CHAR_ROOTS",
    "PATH_DET_OVER_TR2",
    "PATH_DET_OVER_DISC",
    "PATH_DISC_SQUARE",
    "ALTERNATIVE_PATHS",
    "TRANSCRIPT_CONDITIONS",
    "Witness",
    "Classification",
    "NormalForm",
    "TraceVerdict",
    "classify_rad_clean",
    "classify_strongly_clean",
    "rad_clean_alternative",
    "construct_witness",
    "normalize_invertible_trace",
    "trace_property_check",
]

CASE_INVERTIBLE = "Invertible"
CASE_RADICAL = "Radical"
CASE_SPLIT = "SplitSpectral"
CASE_NOT_RAD_CLEAN = "NotRadClean"

METHOD_CHAR_ROOTS = "char-roots"
PATH_DET_OVER_TR2 = "det-over-tr2"
PATH_DET_OVER_DISC = "det-over-disc"
PATH_DISC_SQUARE = "disc-square"
ALTERNATIVE_PATHS = (PATH_DET_OVER_TR2, PATH_DET_OVER_DISC, PATH_DISC_SQUARE)

REASON_TRACE_NOT_UNIT = "trace is not a unit"
REASON_NO_SPLIT = "characteristic quadratic has no radical/unit root split"

TRANSCRIPT_CONDITIONS = (
    "E^2=E",
    "A=E+U",
    "EA=AE",
    "U in GL2",
    "EAE in M2(J)",
)


@dataclass(frozen=True)
class Witness:
    """A verified strongly rad-clean decomposition A = E + U."""

    E: Mat2
    U: Mat2
    transcript: tuple[str, ...]


@dataclass(frozen=True)
class Classification:
    case: str
    roots: RootPair | None
    strongly_rad_clean: bool
    strongly_clean: bool
    witness: Witness | None
    method: str
    reason: str | None = None


def construct_witness(A: Mat2, roots: RootPair | None = None) -> Witness:
    """Build and verify the decomposition A = E + U.

    Without roots the matrix must be invertible (E = 0) or radical
    (E = I).  With a split root pair, E is the spectral projector
    (beta - alpha)**-1 * (beta*I - A) onto the radical eigendirection.
    The pair is re-verified here rather than trusted.
    """
    ring = A.ring
    ident = identity(ring)
    if roots is None:
        if A.is_gl2():
            E = zero(ring)
        elif A.in_radical():
            E = ident
        else:
            raise PreconditionViolated(
                "a root pair is required unless A is invertible or radical"
            )
    else:
        alpha, beta = roots.alpha, roots.beta
        chi = A.char_poly()
        if (
            chi.eval_at(alpha)
            or chi.eval_at(beta)
            or not alpha.in_radical()
            or not beta.is_unit()
        ):
            raise WitnessVerificationFailed(
                f"({alpha}, {beta}) is not a radical/unit root split of {chi}"
            )
        scale = (beta - alpha).inverse()
        E = (ident.scale(beta) - A).scale(scale)
    U = A - E
    return _verified(A, E, U)


def _verified(A: Mat2, E: Mat2, U: Mat2) -> Witness:
    checks = (
        E * E == E,
        A == E + U,
        E * A == A * E,
        U.is_gl2(),
        (E * A * E).in_radical(),
    )
    failed = [name for name, ok in zip(TRANSCRIPT_CONDITIONS, checks) if not ok]
    if failed:
        raise WitnessVerificationFailed(
            f"witness conditions failed: {', '.join(failed)}"
        )
    return Witness(E=E, U=U, transcript=TRANSCRIPT_CONDITIONS)


def classify_rad_clean(A: Mat2) -> Classification:
    """The main decision: invertible / radical / split spectral / not."""
    if A.is_gl2():
        return Classification(
            CASE_INVERTIBLE, None, True, True,
            construct_witness(A), METHOD_CHAR_ROOTS,
        )
    if A.in_radical():
        return Classification(
            CASE_RADICAL, None, True, True,
            construct_witness(A), METHOD_CHAR_ROOTS,
        )
    strongly_clean = (identity(A.ring) - A).is_gl2()
    if not A.trace().is_unit():
        return Classification(
            CASE_NOT_RAD_CLEAN, None, False, strongly_clean,
            None, METHOD_CHAR_ROOTS, REASON_TRACE_NOT_UNIT,
        )
    try:
        roots = quadratic.solve_split_quadratic(A.char_poly())
    except NotSolvable:
        return Classification(
            CASE_NOT_RAD_CLEAN, None, False, strongly_clean,
            None, METHOD_CHAR_ROOTS, REASON_NO_SPLIT,
        )
    return Classification(
        CASE_SPLIT, roots, True, True,
        construct_witness(A, roots), METHOD_CHAR_ROOTS,
    )


def classify_strongly_clean(A: Mat2) -> bool:
    """A is strongly clean iff I - A is invertible or A is strongly
    rad-clean."""
    if (identity(A.ring) - A).is_gl2():
        return True
    return classify_rad_clean(A).strongly_rad_clean


def rad_clean_alternative(A: Mat2, path: str) -> bool:
    """Decide strong rad-cleanness along one named criterion path.

    All paths share the invertible/radical short circuits and must agree
    with classify_rad_clean; they exist to be cross-checked, not chosen
    between.  The disc-square path needs 2 invertible and raises CharTwo
    otherwise.
    """
    if path not in ALTERNATIVE_PATHS:
        raise ValueError(f"unknown path {path!r}")
    ring = A.ring
    if path == PATH_DISC_SQUARE and not ring.from_int(2).is_unit():
        raise CharTwo(f"2 is not a unit in {ring}")
    if A.is_gl2():
        return True
    if A.in_radical():
        return True
    tr = A.trace()
    if not tr.is_unit():
        return False
    det = A.det()
    tr2 = tr * tr
    if path == PATH_DET_OVER_TR2:
        c = -det * tr2.inverse()
        return _has_radical_root_x2_plus_x(c)
    disc = tr2 - 4 * det
    if path == PATH_DET_OVER_DISC:
        c = det * disc.inverse()
        return _has_radical_root_x2_plus_x(c)
    try:
        quadratic.discriminant_sqrt(disc)
        return True
    except NotASquare:
        return False


def _has_radical_root_x2_plus_x(c: Elem) -> bool:
    # c lies in the radical here, so solvability of x^2 + x = c is
    # equivalent to having a root in J(R).
    try:
        quadratic.solve_x2_plus_x(c)
        return True
    except NotSolvable:
        return False


@dataclass(frozen=True)
class NormalForm:
    """Similarity normalization of a matrix outside M2(J(R)).

    Cases I-III produce the companion-like form N = P*A*P**-1 =
    [[0, *], [1, *]]; case IV certifies invertibility instead with the
    upper-triangular N = P*A (unit diagonal)."""

    P: Mat2
    N: Mat2
    case: str
    kind: str  # "companion" or "triangular"


def normalize_invertible_trace(A: Mat2) -> NormalForm:
    """Reduce A to companion form (or to a GL2 certificate) by elementary
    conjugations, following the entry-unit case split.

    A matrix with all entries in the radical (the would-be case V) has a
    radical trace and admits no such reduction; it is rejected.  Matrices
    with a unit trace always fall in cases I-IV.
    """
    ring = A.ring
    one = ring.one
    if A.c.is_unit():
        return _case_i(A, identity(ring), "I")
    if A.b.is_unit():
        s = Mat2(ring, ring.zero, one, one, ring.zero)
        return _case_i(s * A * s, s, "II")
    if (A.a - A.d).is_unit():
        p = b21(-one)
        return _case_i(p * A * p.inverse(), p, "III")
    if A.a.is_unit():
        p = b21(-(A.c * A.a.inverse()))
        n = p * A
        assert n.c == ring.zero
        if not (n.a.is_unit() and n.d.is_unit()):
            raise PreconditionViolated(
                "triangular reduction did not yield a unit diagonal"
            )
        return NormalForm(P=p, N=n, case="IV", kind="triangular")
    # All entries radical: trace cannot be a unit.
    raise PreconditionViolated(
        "matrix lies in M2(J(R)); trace is not a unit and no companion "
        "form exists"
    )


def _case_i(B: Mat2, pre: Mat2, case: str) -> NormalForm:
    # B has a unit lower-left entry; conjugating by diag(c,1)*b12(-a/c)
    # yields [[0, -det], [1, tr]].
    ring = B.ring
    c_inv = B.c.inverse()
    p = diag(B.c, ring.one) * b12(-(B.a * c_inv))
    n = p * B * p.inverse()
    assert n.a == ring.zero and n.c == ring.one
    return NormalForm(P=p * pre, N=n, case=case, kind="companion")


@dataclass(frozen=True)
class TraceVerdict:
    """Whether every matrix with invertible trace over the ring is
    strongly rad-clean."""

    ring: LocalRing
    holds: bool
    exhaustive: bool
    checked: int
    justification: str
    counterexample: tuple[Elem, Elem] | None  # (lam, mu)
    counterexample_matrix: Mat2 | None


def trace_property_check(ring: LocalRing, budget: int = 100) -> TraceVerdict:
    """Decide the invertible-trace property by reducing it to quadratic
    solvability over all (lam, mu) in J(R) x U(R).

    A failing pair is returned as the companion matrix [[0, -lam], [1, -mu]],
    whose characteristic polynomial is exactly the unsolvable quadratic;
    the matrix is double-checked to classify as not strongly rad-clean.
    """
    report: SolvabilityReport = quadratic.solvable_for_all(ring, budget)
    matrix = None
    if report.counterexample is not None:
        lam, mu = report.counterexample
        matrix = Mat2(ring, ring.zero, -lam, ring.one, -mu)
        verdict = classify_rad_clean(matrix)
        assert not verdict.strongly_rad_clean, (
            "counterexample matrix unexpectedly classified strongly rad-clean"
        )
    return TraceVerdict(
        ring=ring,
        holds=report.holds,
        exhaustive=report.exhaustive,
        checked=report.checked,
        justification=report.justification,
        counterexample=report.counterexample,
        counterexample_matrix=matrix,
    )
