"""Extra involutions of hyperelliptic curves via degree-2 decomposition.

A genus-g curve y^2 = f(x) with deg f = 2g+2 carries an extra involution
defined over the coefficient field exactly when f decomposes as G(H(X)) with
deg H = 2.  The inner quadratic is forced: normalizing H = X^2 + aX, the
value a is read off the subleading coefficient of f, so detection is a single
Taylor shift followed by a parity check on the shifted coefficients --- no
polynomial system solving.  The detected involution is x -> 2c - x where
c = -a/2 is the shift.

Two distinct shifts cannot both work (the reflections they induce would
compose to a translation of infinite order on the finite branch set), so the
rational detection path yields at most one decomposition.

Involutions that need an irrational coordinate change (e.g. x -> 1/x on a
non-even model) are out of reach of the exact path; `search_involutions_numeric`
finds them approximately from the complex roots.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .domains import QQ, Rational
from .errors import (
    DegenerateCurveError,
    InvalidDegreeError,
    NotInLocusError,
    NotNormalizableError,
    NumericFailureError,
)
from .poly import Poly, _check_rational


@dataclass(frozen=True)
class HyperellipticCurve:
    """y^2 = f(x) with f squarefree over Q and deg f in {2g+1, 2g+2}."""

    genus: int
    f: Poly

    def __post_init__(self):
        if self.genus < 2:
            raise DegenerateCurveError(f"genus must be >= 2, got {self.genus}")
        _check_rational(self.f, "curve arithmetic")
        d = self.f.degree
        if d not in (2 * self.genus + 1, 2 * self.genus + 2):
            raise DegenerateCurveError(
                f"degree {d} incompatible with genus {self.genus}"
            )
        if not self.f.is_squarefree():
            raise DegenerateCurveError("defining polynomial has a repeated root")


@dataclass(frozen=True)
class DecompositionWitness:
    """f = G(H(X)) with H = X^2 + aX; compose(G, H) reproduces f exactly."""

    G: Poly
    H: Poly


@dataclass(frozen=True)
class EvenForm:
    """Monic even model X^(2g+2) + c_g X^(2g) + ... + c_1 X^2 + b0, b0 != 0.

    ``shift`` is the substitution X -> X + shift applied to the input and
    ``leading_scale`` the leading coefficient divided out.  Squarefreeness is
    inherited from the construction paths and not re-checked here.
    """

    genus: int
    b0: Rational
    c: tuple
    shift: Rational = Fraction(0)
    leading_scale: Rational = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "b0", Fraction(self.b0))
        object.__setattr__(self, "c", tuple(Fraction(v) for v in self.c))
        object.__setattr__(self, "shift", Fraction(self.shift))
        object.__setattr__(self, "leading_scale", Fraction(self.leading_scale))
        if self.genus < 1:
            raise DegenerateCurveError("even form needs genus >= 1")
        if len(self.c) != self.genus:
            raise DegenerateCurveError(
                f"expected {self.genus} interior coefficients, got {len(self.c)}"
            )
        if self.b0 == 0:
            raise NotNormalizableError("constant term of an even form must be nonzero")

    def polynomial(self) -> Poly:
        out = [QQ.zero] * (2 * self.genus + 3)
        out[0] = self.b0
        out[-1] = QQ.one
        for i, ci in enumerate(self.c, start=1):
            out[2 * i] = ci
        return Poly(out, QQ)


def even_shift_candidate(E: Poly) -> Rational:
    """The only c for which E(X + c) can be even.

    An even polynomial has zero subleading coefficient, and shifting by c
    changes that coefficient by d*lc*c, which pins c.
    """
    d = E.degree
    if d < 0 or d % 2 != 0:
        raise InvalidDegreeError(f"even shift needs even degree, got {d}")
    return -E.coefficient(d - 1) / (d * E.leading_coefficient())


def decompose_degree2(E: Poly) -> DecompositionWitness | None:
    """Decompose E = G(H(X)) with H = X^2 + aX, or return None.

    Quadratic in the degree: one Taylor shift, a parity scan, and one more
    shift to build G.  Absence of a decomposition is a result, not an error.
    """
    _check_rational(E, "decomposition")
    d = E.degree
    if d < 4 or d % 2 != 0:
        return None
    c = even_shift_candidate(E)
    shifted = E.taylor_shift(c)
    if any(shifted.coefficient(k) != 0 for k in range(1, d, 2)):
        return None
    # shifted = P(X^2); G absorbs the square completion (X - c)^2 = H + c^2
    P = Poly([shifted.coefficient(2 * i) for i in range(d // 2 + 1)], QQ)
    G = P.taylor_shift(c * c)
    H = Poly([QQ.zero, -2 * c, QQ.one], QQ)
    return DecompositionWitness(G=G, H=H)


def even_degree_model(curve: HyperellipticCurve) -> tuple[HyperellipticCurve, Rational | None]:
    """A degree-(2g+2) model of the curve, plus the Moebius parameter used.

    Odd-degree input has a branch point at infinity; substituting
    x = t + 1/X for the smallest |t| with f(t) != 0 moves infinity to a
    non-branch point and yields X^(2g+2) f(t + 1/X), of even degree.
    """
    f = curve.f
    if f.degree == 2 * curve.genus + 2:
        return curve, None
    t = Fraction(0)
    k = 0
    while f(t) == 0:
        k += 1
        t = Fraction(k if t <= 0 else -k)
    shifted = f.taylor_shift(t)
    raised = Poly([QQ.zero] + list(shifted.reverse(2 * curve.genus + 1).coeffs), QQ)
    return HyperellipticCurve(curve.genus, raised), t


def has_extra_involution_rational(curve: HyperellipticCurve) -> bool:
    """True iff the (even-degree model of the) curve decomposes over Q."""
    work, _ = even_degree_model(curve)
    return decompose_degree2(work.f) is not None


def normalize_poly_to_even(f: Poly, genus: int) -> EvenForm:
    """Even form of a decomposable polynomial of degree 2*genus + 2.

    Raises NotInLocusError when no rational degree-2 decomposition exists and
    NotNormalizableError in the (impossible for squarefree input) case of a
    vanishing constant term after the shift.
    """
    if f.degree != 2 * genus + 2:
        raise InvalidDegreeError(
            f"normalization needs degree {2 * genus + 2}, got {f.degree}"
        )
    witness = decompose_degree2(f)
    if witness is None:
        raise NotInLocusError("no extra involution visible over the rationals")
    c = -witness.H.coefficient(1) / 2
    lead = f.leading_coefficient()
    monic = f.taylor_shift(c) * (QQ.one / lead)
    b0 = monic.coefficient(0)
    if b0 == 0:
        raise NotNormalizableError(
            "0 is a branch point of the even model; no even form with b0 != 0 over Q"
        )
    return EvenForm(
        genus=genus,
        b0=b0,
        c=tuple(monic.coefficient(2 * i) for i in range(1, genus + 1)),
        shift=c,
        leading_scale=lead,
    )


def normalize_to_even(curve: HyperellipticCurve) -> EvenForm:
    """Even form of a curve, degree-raising odd-degree input first."""
    work, _ = even_degree_model(curve)
    return normalize_poly_to_even(work.f, work.genus)


class MoebiusInvolution:
    """x -> (a x + b) / (c x - a), a trace-zero (hence involutive) Moebius map.

    Coefficients are approximate complex numbers, normalized so the first
    significantly nonzero entry of (a, b, c) equals 1.  Not exact.
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, a: complex, b: complex, c: complex):
        scale = None
        for v in (a, b, c):
            if abs(v) > 1e-12:
                scale = v
                break
        if scale is None:
            raise NumericFailureError("degenerate Moebius candidate")
        self.a, self.b, self.c = a / scale, b / scale, c / scale

    def determinant(self) -> complex:
        return -self.a * self.a - self.b * self.c

    def __call__(self, z: complex) -> complex:
        den = self.c * z - self.a
        if den == 0:
            return cmath.inf
        return (self.a * z + self.b) / den

    def key(self) -> tuple:
        return tuple(
            (round(v.real, 9) + 0.0, round(v.imag, 9) + 0.0)
            for v in (self.a, self.b, self.c)
        )

    def __eq__(self, other):
        return isinstance(other, MoebiusInvolution) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        def fmt(v: complex) -> str:
            return f"{v.real:.6g}{v.imag:+.6g}i" if abs(v.imag) > 1e-9 else f"{v.real:.6g}"

        return f"MoebiusInvolution(a={fmt(self.a)}, b={fmt(self.b)}, c={fmt(self.c)})"


def _permutes_roots(gamma: MoebiusInvolution, roots: list[complex], tol: float) -> bool:
    # greedy nearest-neighbour matching of the image multiset, with rejection
    scale = max(1.0, max(abs(r) for r in roots))
    unused = list(roots)
    for r in roots:
        image = gamma(r)
        if image == cmath.inf:
            return False
        best, best_dist = None, None
        for i, s in enumerate(unused):
            dist = abs(image - s)
            if best_dist is None or dist < best_dist:
                best, best_dist = i, dist
        if best_dist is None or best_dist > tol * scale:
            return False
        unused.pop(best)
    return True


def search_involutions_numeric(
    curve: HyperellipticCurve, tol: float = 1e-9
) -> list[MoebiusInvolution]:
    """Approximate Moebius involutions permuting the branch points.

    Candidates come from sending one root pair to another: gamma(r_i) = r_j
    together with gamma(r_k) = r_l for a fixed third root r_k gives two linear
    constraints on (a, b, c), i.e. O(n^3) candidates for n roots.  Survivors
    must permute the full root multiset within tol (relative).  Results are
    deduplicated and sorted canonically; they are floating approximations,
    never exact statements.
    """
    f = curve.f
    if f.degree != 2 * curve.genus + 2:
        raise InvalidDegreeError("numeric search expects an even-degree model")
    coeffs = [float(c) for c in f.coeffs]
    try:
        roots = np.roots(coeffs[::-1])
    except np.linalg.LinAlgError as exc:
        raise NumericFailureError(f"root finding failed: {exc}") from exc
    if not np.all(np.isfinite(roots)):
        raise NumericFailureError("root finding returned non-finite values")
    roots = sorted((complex(r) for r in roots), key=lambda z: (z.real, z.imag))
    n = len(roots)
    found: dict[tuple, MoebiusInvolution] = {}
    for i in range(n):
        for j in range(n):
            row1 = (roots[i] + roots[j], 1.0 + 0j, -roots[i] * roots[j])
            k = next(m for m in range(n) if m not in (i, j))
            for l in range(n):
                row2 = (roots[k] + roots[l], 1.0 + 0j, -roots[k] * roots[l])
                a = row1[1] * row2[2] - row1[2] * row2[1]
                b = row1[2] * row2[0] - row1[0] * row2[2]
                c = row1[0] * row2[1] - row1[1] * row2[0]
                if max(abs(a), abs(b), abs(c)) < 1e-12:
                    continue
                try:
                    gamma = MoebiusInvolution(a, b, c)
                except NumericFailureError:
                    continue
                if abs(gamma.determinant()) < 1e-9:
                    continue
                if gamma.key() in found:
                    continue
                if _permutes_roots(gamma, roots, tol):
                    found[gamma.key()] = gamma
    return sorted(found.values(), key=MoebiusInvolution.key)
