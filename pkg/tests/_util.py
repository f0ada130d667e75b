"""Shared helpers for the test suite: random exact data and curve families."""

from fractions import Fraction

from hyperinv import EvenForm, NormalForm, dihedral_invariants
from hyperinv.poly import Poly


def rand_fraction(rng, lo=-9, hi=9, max_den=9, nonzero=False):
    while True:
        f = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if not nonzero or f != 0:
            return f


def rand_poly(rng, degree, max_den=4):
    coeffs = [rand_fraction(rng, max_den=max_den) for _ in range(degree)]
    coeffs.append(rand_fraction(rng, max_den=max_den, nonzero=True))
    return Poly(coeffs)


def quartic_factor(lam) -> Poly:
    """X^4 - lam*X^2 + 1."""
    return Poly([1, 0, -Fraction(lam), 0, 1])


def first_case_poly(lambdas) -> Poly:
    """prod_i (X^4 - lambda_i X^2 + 1): odd genus g = 2*len(lambdas) - 1."""
    f = Poly([1])
    for lam in lambdas:
        f = f * quartic_factor(lam)
    return f


def second_case_poly(lambdas) -> Poly:
    """(X^2 + 1) * prod_i (X^4 - lambda_i X^2 + 1): even genus g = 2*len(lambdas)."""
    return Poly([1, 0, 1]) * first_case_poly(lambdas)


def third_case_poly(lambdas) -> Poly:
    """(X^4 - 1) * prod_i (X^4 - lambda_i X^2 + 1): odd genus g = 2*len(lambdas) + 1."""
    return Poly([-1, 0, 0, 0, 1]) * first_case_poly(lambdas)


def draw_lambdas(rng, n):
    """Distinct rational lambdas avoiding +-2 (repeated-root values)."""
    out = []
    while len(out) < n:
        lam = rand_fraction(rng, lo=-6, hi=6, max_den=4)
        if lam in (2, -2) or lam in out:
            continue
        out.append(lam)
    return out


def mu_scaling_oracle(ef: EvenForm):
    """Floating-point reference for the even-form invariants.

    Extracts mu = b0^(1/(2g+2)) numerically (principal branch), rescales to
    the normal form a_i = c_i * mu^(2i - 2g - 2), and evaluates the invariant
    formula there.  Independent of the exact rational path.
    """
    g = ef.genus
    mu = complex(float(ef.b0)) ** (1.0 / (2 * g + 2))
    a = tuple(
        complex(float(ci)) * mu ** (2 * i - 2 * g - 2)
        for i, ci in enumerate(ef.c, start=1)
    )
    return dihedral_invariants(NormalForm(genus=g, a=a))
