"""Normal forms and the dihedral invariants that label them.

A curve with an extra involution has a model

    y^2 = X^(2g+2) + a_g X^(2g) + ... + a_1 X^2 + 1,

unique up to the dihedral action generated by

    tau1 : a_i -> eps^(2i) a_i   (eps a primitive (2g+2)-th root of unity)
    tau2 : a_i -> a_(g+1-i).

The invariants

    u_i = a_1^(g-i+1) a_i + a_g^(g-i+1) a_(g+1-i),   1 <= i <= g,

separate orbits: two (curve, involution) pairs are isomorphic exactly when
their u-tuples agree.  For g = 2 this reads u_1 = a_1^3 + a_2^3,
u_2 = 2 a_1 a_2; for g = 3, u_1 = a_1^4 + a_3^4, u_2 = (a_1^2 + a_3^2) a_2,
u_3 = 2 a_1 a_3.

`invariants_from_even` evaluates the u_i directly on a monic even model with
constant term b0, with no root extraction.  Rescaling X by mu with
mu^(2g+2) = b0 sends the even coefficient c_i to a_i = c_i b0^((i-g-1)/(g+1)),
and substituting into the formula above collapses the fractional powers:

    u_i = c_1^(g-i+1) c_i / b0^(g-i+1)  +  c_g^(g-i+1) c_(g+1-i) / b0.

The constant-term power sits on the c_1 term (the c_g term always carries a
single 1/b0); the floating-point rescaling oracle in the test suite pins this
placement and rejects the transposed variant.

All formulas are domain-generic: exact rationals, odd prime fields (the only
way to realize eps exactly), and complex floats for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domains import GF, QQ, PrimeFieldElement, divisors, multiplicative_order
from .errors import (
    DegenerateCurveError,
    DegenerateLocusError,
    DomainMismatchError,
    InvalidComparisonError,
    InvalidRootError,
)
from .involution import EvenForm
from .poly import Poly

_ORDER_TOL = 1e-6


def _classify_domain(values) -> str:
    kinds = set()
    for v in values:
        if isinstance(v, PrimeFieldElement):
            kinds.add(("gf", v.p))
        elif isinstance(v, (complex, float)):
            kinds.add("complex")
        elif isinstance(v, (int, Fraction)):
            kinds.add("rational")
        else:
            raise DomainMismatchError(f"unsupported coefficient {v!r}")
    # rationals coerce freely into any single other domain
    others = kinds - {"rational"}
    if not others:
        return "rational"
    if len(others) > 1:
        raise DomainMismatchError(f"mixed coefficient domains {kinds}")
    return "complex" if others == {"complex"} else "gf"


def _normalize_tuple(values) -> tuple:
    kind = _classify_domain(values)
    if kind == "rational":
        return tuple(Fraction(v) for v in values)
    if kind == "complex":
        return tuple(
            complex(float(v)) if isinstance(v, Fraction) else complex(v)
            for v in values
        )
    p = next(v.p for v in values if isinstance(v, PrimeFieldElement))
    return tuple(PrimeFieldElement(v, p) for v in values)


@dataclass(frozen=True)
class NormalForm:
    """Coefficient tuple (a_1, ..., a_g) of the even monic model with b0 = 1.

    Over exact domains the defining polynomial is checked squarefree; over
    complex floats the check is skipped (it is not numerically meaningful).
    """

    genus: int
    a: tuple

    def __post_init__(self):
        if self.genus < 2:
            raise DegenerateCurveError(f"genus must be >= 2, got {self.genus}")
        if len(self.a) != self.genus:
            raise DegenerateCurveError(
                f"expected {self.genus} coefficients, got {len(self.a)}"
            )
        object.__setattr__(self, "a", _normalize_tuple(self.a))
        if not isinstance(self.a[0], complex):
            poly = self.polynomial()
            if not poly.is_squarefree():
                raise DegenerateCurveError("normal form polynomial has a repeated root")

    def polynomial(self) -> Poly:
        """X^(2g+2) + a_g X^(2g) + ... + a_1 X^2 + 1 over the exact domain."""
        first = self.a[0]
        field = GF(first.p) if isinstance(first, PrimeFieldElement) else QQ
        out = [field.zero] * (2 * self.genus + 3)
        out[0] = field.one
        out[-1] = field.one
        for i, ai in enumerate(self.a, start=1):
            out[2 * i] = field(ai) if not isinstance(ai, PrimeFieldElement) else ai
        return Poly(out, field)


@dataclass(frozen=True)
class DihedralInvariants:
    """Invariant tuple (u_1, ..., u_g); equal tuples mean isomorphic pairs."""

    genus: int
    u: tuple

    def __post_init__(self):
        if len(self.u) != self.genus:
            raise DegenerateCurveError(
                f"expected {self.genus} invariants, got {len(self.u)}"
            )
        object.__setattr__(self, "u", _normalize_tuple(self.u))

    @property
    def exact(self) -> bool:
        return not isinstance(self.u[0], complex)


def dihedral_invariants(nf: NormalForm) -> DihedralInvariants:
    """u_i = a_1^(g-i+1) a_i + a_g^(g-i+1) a_(g+1-i)."""
    g, a = nf.genus, nf.a
    a1, ag = a[0], a[-1]
    if a1 == 0 and ag == 0:
        raise DegenerateLocusError(
            "a_1 = a_g = 0: all dihedral invariants vanish on this locus"
        )
    u = tuple(
        a1 ** (g - i + 1) * a[i - 1] + ag ** (g - i + 1) * a[g - i]
        for i in range(1, g + 1)
    )
    return DihedralInvariants(genus=g, u=u)


def _has_exact_order(eps, n: int) -> bool:
    if isinstance(eps, PrimeFieldElement):
        return eps.value != 0 and multiplicative_order(eps) == n
    if isinstance(eps, (complex, float)):
        eps = complex(eps)
        if abs(eps**n - 1) > _ORDER_TOL:
            return False
        return all(abs(eps**d - 1) > _ORDER_TOL for d in divisors(n)[:-1])
    eps = Fraction(eps)
    if eps**n != 1:
        return False
    return all(eps**d != 1 for d in divisors(n)[:-1])


def tau1(nf: NormalForm, eps) -> NormalForm:
    """Scale a_i by eps^(2i); eps must have exact order 2g+2."""
    n = 2 * nf.genus + 2
    if not _has_exact_order(eps, n):
        raise InvalidRootError(f"scaling element must have exact order {n}")
    return NormalForm(
        genus=nf.genus,
        a=tuple(eps ** (2 * i) * ai for i, ai in enumerate(nf.a, start=1)),
    )


def tau2(nf: NormalForm) -> NormalForm:
    """Reverse the coefficient tuple."""
    return NormalForm(genus=nf.genus, a=nf.a[::-1])


def invariants_from_even(ef: EvenForm) -> DihedralInvariants:
    """Dihedral invariants straight from an even form, exactly over Q.

    Equals `dihedral_invariants` of the mu-rescaled normal form with
    mu^(2g+2) = b0, but stays in the rationals: the b0 powers absorb every
    fractional exponent (see the module docstring for the placement).
    """
    g, b0, c = ef.genus, ef.b0, ef.c
    c1, cg = c[0], c[-1]
    if c1 == 0 and cg == 0:
        raise DegenerateLocusError(
            "c_1 = c_g = 0: all dihedral invariants vanish on this locus"
        )
    u = tuple(
        c1 ** (g - i + 1) * c[i - 1] / b0 ** (g - i + 1)
        + cg ** (g - i + 1) * c[g - i] / b0
        for i in range(1, g + 1)
    )
    return DihedralInvariants(genus=g, u=u)


def relation_check(nf: NormalForm):
    """Evaluate 2^(g+1) a_g^(2g+2) - 2^(g+1) u_1 a_g^(g+1) + u_g^(g+1).

    This vanishes identically (it is the minimal relation tying a_g to the
    invariants); callers assert the returned value is zero.  The degenerate
    locus is allowed here, so u_1 and u_g are expanded inline.
    """
    g, a = nf.genus, nf.a
    a1, ag = a[0], a[-1]
    u1 = a1 ** (g + 1) + ag ** (g + 1)
    ug = 2 * a1 * ag
    return 2 ** (g + 1) * ag ** (2 * g + 2) - 2 ** (g + 1) * u1 * ag ** (g + 1) + ug ** (g + 1)


def invariants_equal(
    u: DihedralInvariants, v: DihedralInvariants, tol: float = 1e-9
) -> bool:
    """Componentwise equality: exact over exact domains, relative tol otherwise."""
    if u.genus != v.genus:
        raise InvalidComparisonError(f"genus mismatch: {u.genus} vs {v.genus}")
    if u.exact and v.exact:
        return u.u == v.u
    try:
        uc = [complex(float(x)) if isinstance(x, Fraction) else complex(x) for x in u.u]
        vc = [complex(float(x)) if isinstance(x, Fraction) else complex(x) for x in v.u]
    except TypeError as exc:
        raise InvalidComparisonError(f"domains not comparable: {exc}") from exc
    return all(
        abs(x - y) <= tol * max(1.0, abs(x), abs(y)) for x, y in zip(uc, vc)
    )
