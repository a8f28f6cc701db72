"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Field objects operate on raw coefficient values (``Fraction`` for the
rationals, ``int`` representatives in ``[0, p)`` for prime fields) rather
than wrapping every element in an object; this keeps the polynomial inner
loops cheap.  ``Fraction`` guarantees lowest terms with positive
denominator, so rational coefficients are canonical by construction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GwalkError

_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Modular arithmetic stays on machine words only while p*p fits; beyond that
# Python ints still work but the speed rationale disappears.
_MAX_PRIME = 2**63


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for q in _WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rational numbers."""

    char = 0
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def coerce(self, value) -> Fraction:
        if isinstance(value, float):
            raise GwalkError("floating-point coefficients are not supported")
        try:
            return Fraction(value)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise GwalkError(f"not a rational coefficient: {value!r}") from exc

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    def inv(self, a):
        if a == 0:
            raise GwalkError("division by zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise GwalkError("division by zero")
        return a / b

    def pow(self, a, k: int):
        return a**k

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class PrimeField:
    """The field F_p for a word-sized prime p; elements are ints in [0, p)."""

    char_is_prime = True

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise GwalkError(f"field modulus not prime: {p!r}")
        if p >= _MAX_PRIME:
            raise GwalkError(f"prime modulus too large for machine words: {p}")
        self.p = p
        self.char = p
        self.name = f"Fp({p})"
        self.zero = 0
        self.one = 1 % p

    def from_int(self, k: int) -> int:
        return k % self.p

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise GwalkError(
                    f"coefficient not valid in field: denominator of {value} "
                    f"vanishes modulo {self.p}"
                )
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        raise GwalkError(f"not a valid F_p coefficient: {value!r}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise GwalkError("division by zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, k: int):
        return pow(a, k, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name
