"""Sparse multivariate polynomial arithmetic over an exact coefficient field.

A polynomial is a mapping from exponent tuples to nonzero coefficients; the
zero polynomial is the empty mapping.  No term order is baked into the
representation: orderings change during a walk, so leading terms are always
computed against an explicitly supplied ordering (see ``orderings``).

Values are immutable by convention.  Nothing mutates a polynomial after
construction, so they may be shared freely between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import GwalkError, RingMismatchError

_IDENT = re.compile(r"[A-Za-z_]\w*\Z")


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a, b):
    """True when the monomial x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def total_degree(a):
    return sum(a)


@dataclass(frozen=True)
class Ring:
    """A polynomial ring: ordered variable names over a coefficient field."""

    variables: tuple[str, ...]
    field: object

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise GwalkError("a polynomial ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise GwalkError(f"duplicate variable names: {self.variables}")
        for v in self.variables:
            if not _IDENT.match(v):
                raise GwalkError(f"invalid variable name: {v!r}")

    @property
    def n(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise GwalkError(f"unknown variable {name!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == self.field.zero:
            return Polynomial._raw(self, {})
        return Polynomial._raw(self, {(0,) * self.n: c})

    def variable(self, which) -> "Polynomial":
        i = which if isinstance(which, int) else self.index(which)
        exp = [0] * self.n
        exp[i] = 1
        return Polynomial._raw(self, {tuple(exp): self.field.one})

    def monomial(self, exponent, coeff=1) -> "Polynomial":
        return self.polynomial({tuple(exponent): coeff})

    def polynomial(self, mapping) -> "Polynomial":
        """Build a canonical polynomial, validating and coercing everything."""
        field = self.field
        terms = {}
        for exp, c in mapping.items():
            exp = tuple(exp)
            if len(exp) != self.n or any(e < 0 or not isinstance(e, int) for e in exp):
                raise GwalkError(f"bad exponent vector {exp} for {self.n} variables")
            c = field.coerce(c)
            if exp in terms:
                raise GwalkError(f"duplicate exponent vector {exp}")
            if c != field.zero:
                terms[exp] = c
        return Polynomial._raw(self, terms)


class Polynomial:
    """Canonical sparse polynomial: no zero coefficients, no duplicate terms."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms):
        canonical = ring.polynomial(terms)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", canonical.terms)

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        """Trusted constructor: `terms` must already be canonical."""
        self = object.__new__(cls)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def support(self):
        return set(self.terms)

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), self.ring.field.zero)

    def _check_ring(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring.variables} over {self.ring.field} "
                f"vs {other.ring.variables} over {other.ring.field}"
            )

    def __add__(self, other):
        self._check_ring(other)
        field = self.ring.field
        zero = field.zero
        res = dict(self.terms)
        for exp, c in other.terms.items():
            s = field.add(res.get(exp, zero), c)
            if s == zero:
                res.pop(exp, None)
            else:
                res[exp] = s
        return Polynomial._raw(self.ring, res)

    def __sub__(self, other):
        self._check_ring(other)
        field = self.ring.field
        zero = field.zero
        res = dict(self.terms)
        for exp, c in other.terms.items():
            s = field.sub(res.get(exp, zero), c)
            if s == zero:
                res.pop(exp, None)
            else:
                res[exp] = s
        return Polynomial._raw(self.ring, res)

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial._raw(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        self._check_ring(other)
        field = self.ring.field
        zero = field.zero
        mul, add = field.mul, field.add
        res = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_add(e1, e2)
                s = add(res.get(e, zero), mul(c1, c2))
                if s == zero:
                    res.pop(e, None)
                else:
                    res[e] = s
        return Polynomial._raw(self.ring, res)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise GwalkError(f"polynomial exponent must be a natural number: {k!r}")
        field = self.ring.field
        if k == 0:
            return self.ring.one()
        if len(self.terms) == 1:
            # Monomial power never expands, even for huge k.
            ((exp, c),) = self.terms.items()
            return Polynomial._raw(
                self.ring, {tuple(e * k for e in exp): field.pow(c, k)}
            )
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.coerce(c)
        if c == field.zero:
            return self.ring.zero()
        mul = field.mul
        return Polynomial._raw(self.ring, {e: mul(c, v) for e, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        body = ", ".join(f"{e}: {c}" for e, c in items)
        return f"Polynomial({{{body}}})"
