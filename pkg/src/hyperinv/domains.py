"""Exact coefficient domains: rationals and odd prime fields.

Rationals are plain :class:`fractions.Fraction` values; they are already
canonical (positive denominator, fully reduced), so no wrapper is needed.
Prime fields get a tiny element class so the polynomial code can stay
domain-generic.  Python ``complex`` serves as a third, non-exact domain for
the invariant formulas only; it never enters polynomial arithmetic.

A *field handle* (``QQ`` or ``GF(p)``) coerces raw values into the domain and
supplies the domain's zero and one.  Polynomials carry their handle around.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainMismatchError

Rational = Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class PrimeFieldElement:
    """An element of F_p for an odd prime p.

    Arithmetic accepts ints and Fractions on either side (coerced mod p), so
    generic formulas like ``2 * a * b`` work unchanged over any domain.
    """

    __slots__ = ("value", "p")

    def __init__(self, value, p: int):
        self.p = p
        if isinstance(value, PrimeFieldElement):
            if value.p != p:
                raise DomainMismatchError(f"element of F_{value.p} used in F_{p}")
            self.value = value.value
        elif isinstance(value, Fraction):
            self.value = value.numerator * pow(value.denominator, -1, p) % p
        else:
            self.value = int(value) % p

    def _coerce(self, other) -> "PrimeFieldElement":
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise DomainMismatchError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return PrimeFieldElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, n: int):
        if n < 0:
            return PrimeFieldElement(pow(self.value, n, self.p), self.p)
        return PrimeFieldElement(pow(self.value, n, self.p), self.p)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            try:
                other = PrimeFieldElement(other, self.p)
            except ValueError:
                return NotImplemented
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class RationalField:
    """Field handle for exact rationals."""

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise DomainMismatchError(f"cannot coerce {x!r} into the rationals")

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(RationalField)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """Field handle for F_p, p an odd prime."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if p == 2 or not is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        self.p = p

    def __call__(self, x) -> PrimeFieldElement:
        return PrimeFieldElement(x, self.p)

    @property
    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.p)

    @property
    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def multiplicative_order(x: PrimeFieldElement) -> int:
    """Order of x in F_p^*."""
    if x.value == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    for d in divisors(x.p - 1):
        if pow(x.value, d, x.p) == 1:
            return d
    raise AssertionError("unreachable")


def primitive_nth_root(p: int, n: int) -> PrimeFieldElement:
    """An element of exact order n in F_p^*; requires n | p - 1.

    Deterministic: searches bases 2, 3, ... in order.
    """
    if (p - 1) % n != 0:
        raise ValueError(f"no element of order {n} in F_{p}: {n} does not divide p-1")
    for base in range(2, p):
        cand = pow(base, (p - 1) // n, p)
        elem = PrimeFieldElement(cand, p)
        if cand != 1 and multiplicative_order(elem) == n:
            return elem
    raise AssertionError("unreachable for prime p")
