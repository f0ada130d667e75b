import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperinv import (
    GF,
    QQ,
    DomainMismatchError,
    InvalidBoundError,
    InvalidDegreeError,
    UndefinedResultantError,
    primitive_nth_root,
)
from hyperinv.domains import PrimeFieldElement, multiplicative_order
from hyperinv.poly import Poly

from _util import rand_poly

X = Poly([0, 1])


def sylvester_resultant(p: Poly, q: Poly) -> Fraction:
    """Independent oracle: determinant of the Sylvester matrix, computed by
    plain Gaussian elimination over Fraction."""
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pc = [p.coefficient(m - j) for j in range(m + 1)]
    qc = [q.coefficient(n - j) for j in range(n + 1)]
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (m - 1 - i))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    return det


class TestArithmetic:
    def test_add_cancellation(self):
        assert Poly([1, 0, 1]) + Poly([0, 0, -1]) == Poly([1])

    def test_add_identity(self):
        p = Poly([3, -2, 1])
        assert Poly([]) + p == p

    def test_add_rational(self):
        half = Poly([Fraction(1, 2), 1])
        assert half + half == Poly([1, 2])

    def test_mul_expansion(self):
        assert Poly([1, 0, 1]) * Poly([1, 0, 0, 0, 1]) == Poly([1, 0, 1, 0, 1, 0, 1])

    def test_mul_identity(self):
        p = Poly([5, 0, -3, 7])
        assert p * Poly([1]) == p

    def test_mul_octic_test_curve(self):
        # even octic used across the suite (degenerate as a curve: double
        # roots at +-1, which is exactly why it shows up in error tests)
        prod = Poly([1, 0, -1, 0, 1]) * Poly([1, 0, -2, 0, 1])
        assert prod == Poly([1, 0, -3, 0, 4, 0, -3, 0, 1])

    def test_mixed_domain_rejected(self):
        p = Poly([1, 1])
        q = Poly([1, 1], GF(7))
        with pytest.raises(DomainMismatchError):
            p + q
        with pytest.raises(DomainMismatchError):
            p * q

    def test_pow(self):
        assert Poly([1, 1]) ** 3 == Poly([1, 3, 3, 1])


class TestCompose:
    def test_substitution(self):
        G = Poly([1, 3, 1])
        assert G.compose(Poly([0, 0, 1])) == Poly([1, 0, 3, 0, 1])

    def test_identity(self):
        p = Poly([2, -1, 4])
        assert X.compose(p) == p

    def test_constant_absorbs(self):
        c = Poly([7])
        assert c.compose(Poly([1, 2, 3])) == c


class TestTaylorShift:
    def test_quartic(self):
        p = Poly([29, -44, 27, -8, 1])
        assert p.taylor_shift(2) == Poly([1, 0, 3, 0, 1])

    def test_zero_shift(self):
        p = Poly([1, 2, 3, 4])
        assert p.taylor_shift(0) == p

    def test_binomial(self):
        assert Poly([0, 0, 1]).taylor_shift(1) == Poly([1, 2, 1])

    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(25):
            p = rand_poly(rng, rng.randint(0, 8))
            c = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            assert p.taylor_shift(c).taylor_shift(-c) == p


class TestReverse:
    def test_reversal(self):
        assert Poly([5, 3, 0, 2]).reverse(3) == Poly([2, 0, 3, 5])

    def test_palindrome_fixed(self):
        p = Poly([1, 4, 6, 4, 1])
        assert p.reverse() == p

    def test_even_coefficient_swap(self):
        a, b = Fraction(3), Fraction(5)
        p = Poly([1, 0, b, 0, a, 0, 1])
        assert p.reverse(6) == Poly([1, 0, a, 0, b, 0, 1])

    def test_window_too_small(self):
        with pytest.raises(InvalidBoundError):
            Poly([1, 2, 3]).reverse(1)

    def test_involution(self):
        rng = random.Random(11)
        for _ in range(25):
            p = rand_poly(rng, rng.randint(0, 7))
            if p.coefficient(0) == 0:
                p = p + Poly([1])
            assert p.reverse(p.degree).reverse(p.degree) == p


class TestResultantDiscriminant:
    def test_shared_root(self):
        assert Poly([-1, 0, 1]).resultant(Poly([-1, 1])) == 0

    def test_linear_convention(self):
        # Sylvester-determinant sign: res(X - a, X - b) = a - b
        a, b = Fraction(3), Fraction(5)
        assert Poly([-a, 1]).resultant(Poly([-b, 1])) == a - b

    def test_matches_sylvester_oracle(self):
        rng = random.Random(13)
        for _ in range(30):
            p = rand_poly(rng, rng.randint(1, 6))
            q = rand_poly(rng, rng.randint(1, 6))
            assert p.resultant(q) == sylvester_resultant(p, q)

    def test_cubic_discriminant(self):
        rng = random.Random(17)
        for _ in range(20):
            a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            b = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            cubic = Poly([b, a, 0, 1])
            assert cubic.discriminant() == -4 * a**3 - 27 * b**2
            assert cubic.resultant(cubic.derivative()) == sylvester_resultant(
                cubic, cubic.derivative()
            )

    def test_quadratic_discriminant(self):
        b, c = Fraction(3), Fraction(7)
        assert Poly([c, b, 1]).discriminant() == b * b - 4 * c

    def test_repeated_root_discriminant(self):
        p = Poly([-1, 1]) ** 2 * Poly([2, 1])
        assert p.discriminant() == 0

    def test_zero_input_rejected(self):
        with pytest.raises(UndefinedResultantError):
            Poly([1, 1]).resultant(Poly([]))

    def test_low_degree_rejected(self):
        with pytest.raises(InvalidDegreeError):
            Poly([1, 1]).discriminant()


class TestSquarefree:
    def test_cyclotomic_product(self):
        assert Poly([1, 0, 1, 0, 1, 0, 1]).is_squarefree()

    def test_square_detected(self):
        assert not (Poly([-1, 0, 1]) ** 2).is_squarefree()

    def test_constant(self):
        assert Poly([5]).is_squarefree()

    def test_agrees_with_discriminant(self):
        rng = random.Random(19)
        for _ in range(30):
            base = rand_poly(rng, rng.randint(1, 3))
            if rng.random() < 0.5:
                p = base * base * rand_poly(rng, rng.randint(1, 2))
            else:
                p = rand_poly(rng, rng.randint(2, 6))
            if p.degree < 2:
                continue
            assert (p.discriminant() == 0) == (not p.is_squarefree())

    def test_prime_field(self):
        F = GF(13)
        p = Poly([1, 0, 1], F)
        assert p.is_squarefree()
        assert not (p * p).is_squarefree()


class TestDivisionGcd:
    def test_divmod(self):
        rng = random.Random(23)
        for _ in range(25):
            a = rand_poly(rng, rng.randint(0, 7))
            b = rand_poly(rng, rng.randint(0, 4))
            q, r = a.divmod(b)
            assert q * b + r == a
            assert r.degree < b.degree

    def test_gcd_common_factor(self):
        common = Poly([1, 2, 1])
        a = common * Poly([3, 1])
        b = common * Poly([-5, 0, 1])
        assert a.gcd(b) == common.monic()


small_fractions = st.fractions(
    min_value=-5, max_value=5, max_denominator=4
)
small_polys = st.lists(small_fractions, min_size=0, max_size=6).map(Poly)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=30, deadline=None)
@given(
    st.lists(small_fractions, min_size=1, max_size=4).map(Poly),
    st.lists(small_fractions, min_size=1, max_size=3).map(Poly),
    st.lists(small_fractions, min_size=1, max_size=3).map(Poly),
)
def test_compose_associative(f, g, h):
    assert f.compose(g).compose(h) == f.compose(g.compose(h))


class TestPrimeField:
    def test_arithmetic(self):
        F = GF(13)
        assert F(7) + F(9) == F(3)
        assert F(7) * F(9) == F(11)
        assert F(7) / F(9) == F(7) * F(9).inverse()
        assert (F(5) ** -1) * F(5) == F.one

    def test_int_mixing(self):
        F = GF(11)
        assert 2 * F(7) == F(3)
        assert F(7) + 5 == F(1)

    def test_fraction_coercion(self):
        F = GF(11)
        assert F(Fraction(1, 2)) == F(6)

    def test_modulus_mismatch(self):
        with pytest.raises(DomainMismatchError):
            GF(11)(3) + GF(13)(3)

    def test_not_prime_rejected(self):
        with pytest.raises(ValueError):
            GF(15)
        with pytest.raises(ValueError):
            GF(2)

    def test_primitive_root_order(self):
        eps = primitive_nth_root(13, 6)
        assert multiplicative_order(eps) == 6
        assert eps == PrimeFieldElement(4, 13)
        with pytest.raises(ValueError):
            primitive_nth_root(13, 5)
