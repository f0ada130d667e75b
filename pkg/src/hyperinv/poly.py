"""Dense univariate polynomials over an exact coefficient field.

Coefficients are stored low degree -> high degree with trailing zeros
trimmed, over a single field handle (``QQ`` or ``GF(p)``).  Degrees stay in
the low hundreds throughout the library, so multiplication is schoolbook and
shifts are quadratic; exactness beats asymptotics at this size.

Sign conventions (fixed for test determinism):

* ``resultant(p, q)`` is the determinant of the Sylvester matrix with
  ``deg q`` rows of p-coefficients on top; in particular
  ``resultant(X - a, X - b) == a - b``.
* ``discriminant(p) == (-1)^(d(d-1)/2) * resultant(p, p') / lc(p)``,
  which gives ``b^2 - 4c`` for ``X^2 + bX + c``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .domains import GF, QQ, PrimeField, RationalField
from .errors import (
    DomainMismatchError,
    InvalidBoundError,
    InvalidDegreeError,
    UndefinedResultantError,
)

# Large primes (> any working degree) used to certify squarefreeness of
# integer polynomials without exact rational gcds.
_CERT_PRIMES = (1000003, 1000033, 1000037, 1000039, 1000081)


class Poly:
    """Immutable dense polynomial; the zero polynomial has degree -1."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=QQ):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basics ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading_coefficient(self):
        if self.is_zero():
            return self.field.zero
        return self.coeffs[-1]

    def coefficient(self, k: int):
        """Coefficient of X^k (zero beyond the degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def _check_field(self, other: "Poly") -> None:
        if self.field != other.field:
            raise DomainMismatchError(
                f"mixed coefficient domains {self.field} and {other.field}"
            )

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.field)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            # scalar
            s = self.field(other)
            return Poly([c * s for c in self.coeffs], self.field)
        self._check_field(other)
        if self.is_zero() or other.is_zero():
            return Poly([], self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == self.field.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.field)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly([self.field.one], self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __call__(self, x):
        """Evaluate by Horner; x is coerced into the coefficient field."""
        x = self.field(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- calculus & structure ---------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(
            [i * c for i, c in enumerate(self.coeffs)][1:],
            self.field,
        )

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.field.one / self.leading_coefficient()
        return Poly([c * inv for c in self.coeffs], self.field)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division; other must be nonzero."""
        self._check_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly([], self.field), self
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        quot = [self.field.zero] * (dq + 1)
        inv_lc = self.field.one / other.leading_coefficient()
        for k in range(dq, -1, -1):
            factor = rem[other.degree + k] * inv_lc
            quot[k] = factor
            if factor != self.field.zero:
                for i, c in enumerate(other.coeffs):
                    rem[i + k] = rem[i + k] - factor * c
        return Poly(quot, self.field), Poly(rem[: other.degree], self.field)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd over the coefficient field."""
        self._check_field(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def compose(self, inner: "Poly") -> "Poly":
        """Return self(inner(X)) by Horner in the polynomial ring."""
        self._check_field(inner)
        acc = Poly([], self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c], self.field)
        return acc

    def taylor_shift(self, c) -> "Poly":
        """Return self(X + c); quadratic in the degree."""
        c = self.field(c)
        zero = self.field.zero
        res: list = []
        for a in reversed(self.coeffs):
            # res <- res * (X + c) + a, done in place on a plain list
            new = [zero] * (len(res) + 1)
            for i, r in enumerate(res):
                new[i + 1] = new[i + 1] + r
                if r != zero:
                    new[i] = new[i] + r * c
            new[0] = new[0] + a
            res = new
        return Poly(res, self.field)

    def reverse(self, n: int | None = None) -> "Poly":
        """Return X^n * self(1/X): the coefficient list reversed in window n."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise InvalidBoundError(f"window {n} < degree {self.degree}")
        out = [self.field.zero] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return Poly(out, self.field)

    def resultant(self, other: "Poly"):
        """Resultant via a Euclidean remainder sequence, Sylvester sign."""
        self._check_field(other)
        if self.is_zero() or other.is_zero():
            raise UndefinedResultantError("resultant of the zero polynomial")
        a, b = self, other
        res = self.field.one
        while b.degree > 0:
            r = a % b
            if r.is_zero():
                return self.field.zero
            if (a.degree * b.degree) % 2 == 1:
                res = -res
            res = res * b.leading_coefficient() ** (a.degree - r.degree)
            a, b = b, r
        return res * b.leading_coefficient() ** a.degree

    def discriminant(self):
        d = self.degree
        if d < 2:
            raise InvalidDegreeError("discriminant needs degree >= 2")
        sign = -1 if (d * (d - 1) // 2) % 2 else 1
        return sign * self.resultant(self.derivative()) / self.leading_coefficient()

    def is_squarefree(self) -> bool:
        """True iff gcd(p, p') is constant.

        Over the rationals, squarefreeness is first certified modulo a large
        prime (a constant gcd mod p forces a constant gcd over Q); the exact
        rational gcd is a fallback for the rare inconclusive case.
        """
        if self.is_zero():
            raise UndefinedResultantError("squarefreeness of the zero polynomial")
        if self.is_constant():
            return True
        if isinstance(self.field, PrimeField):
            return self.gcd(self.derivative()).degree <= 0
        zcoeffs = self._integer_coeffs()
        for p in _CERT_PRIMES:
            if zcoeffs[-1] % p == 0:
                continue
            fp = Poly(zcoeffs, GF(p))
            if fp.gcd(fp.derivative()).degree <= 0:
                return True
        return self.gcd(self.derivative()).degree <= 0

    def _integer_coeffs(self) -> list[int]:
        scale = lcm(*(c.denominator for c in self.coeffs))
        return [int(c * scale) for c in self.coeffs]

    # -- printing ---------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == self.field.zero:
                continue
            if isinstance(c, Fraction):
                mag, neg = abs(c), c < 0
            else:
                mag, neg = c, False
            if i == 0:
                term = f"{mag}"
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                term = xpow if mag == self.field.one else f"{mag}*{xpow}"
            if not parts:
                parts.append(f"-{term}" if neg else term)
            else:
                parts.append(f"- {term}" if neg else f"+ {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self}, {self.field})"


def polynomial_from_pairs(pairs, field=QQ) -> Poly:
    """Build a Poly from (degree, coefficient) pairs."""
    if not pairs:
        return Poly([], field)
    n = max(d for d, _ in pairs)
    out = [field.zero] * (n + 1)
    for d, c in pairs:
        out[d] = out[d] + field(c)
    return Poly(out, field)


def _check_rational(p: Poly, what: str) -> None:
    if not isinstance(p.field, RationalField):
        raise DomainMismatchError(f"{what} requires rational coefficients")
