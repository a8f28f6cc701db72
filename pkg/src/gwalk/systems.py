"""Generated benchmark systems and the shipped named orderings.

The cyclic-roots and katsura families are generated from their defining
formulas; the two five-variable block-elimination matrices used for the
implicitization benchmarks are shipped as the named orderings "elim-sigma"
and "elim-tau" for use with externally supplied ideal files.
"""

from __future__ import annotations

from .errors import GwalkError, OrderingError
from .fields import QQ
from .groebner import Ideal
from .orderings import TermOrdering, degrevlex, lex, matrix_ordering
from .poly import Ring

__all__ = [
    "gen_cyclic",
    "gen_katsura",
    "elimination_orderings",
    "builtin_ordering",
    "BUILTIN_ORDERING_NAMES",
]

_ELIM_SIGMA_ROWS = (
    (1, 1, 1, 0, 0),
    (0, 0, 0, 1, 1),
    (0, 0, 0, 1, 0),
    (1, 1, 0, 0, 0),
    (1, 0, 0, 0, 0),
)

_ELIM_TAU_ROWS = (
    (0, 0, 0, 1, 1),
    (1, 1, 1, 0, 0),
    (1, 1, 0, 0, 0),
    (1, 0, 0, 0, 0),
    (0, 0, 0, 1, 0),
)

BUILTIN_ORDERING_NAMES = ("lex", "degrevlex", "elim-sigma", "elim-tau")


def elimination_orderings() -> tuple[TermOrdering, TermOrdering]:
    """The 5-variable block elimination pair used by the implicitization runs."""
    return (
        matrix_ordering(_ELIM_SIGMA_ROWS, name="elim-sigma"),
        matrix_ordering(_ELIM_TAU_ROWS, name="elim-tau"),
    )


def builtin_ordering(name: str, n: int) -> TermOrdering:
    if name == "lex":
        return lex(n)
    if name == "degrevlex":
        return degrevlex(n)
    if name in ("elim-sigma", "elim-tau"):
        if n != 5:
            raise OrderingError(f"{name} is a 5-variable ordering, ring has {n}")
        sigma, tau = elimination_orderings()
        return sigma if name == "elim-sigma" else tau
    raise OrderingError(f"unknown ordering name {name!r}")


def gen_cyclic(n: int, field=QQ) -> Ideal:
    """The cyclic n-roots system: n generators in n variables."""
    if n < 2:
        raise GwalkError(f"cyclic systems need n >= 2, got {n}")
    ring = Ring(tuple(f"x{i}" for i in range(n)), field)
    one = field.one
    gens = []
    for k in range(1, n):
        terms = {}
        for i in range(n):
            exp = [0] * n
            for j in range(i, i + k):
                exp[j % n] += 1
            terms[tuple(exp)] = one
        gens.append(ring.polynomial(terms))
    terms = {(1,) * n: one, (0,) * n: field.neg(one)}
    gens.append(ring.polynomial(terms))
    return Ideal(ring, tuple(gens))


def gen_katsura(m: int, field=QQ) -> Ideal:
    """The katsura-m magnetism system: m+1 generators in m+1 variables."""
    if m < 1:
        raise GwalkError(f"katsura systems need m >= 1, got {m}")
    nv = m + 1
    ring = Ring(tuple(f"u{i}" for i in range(nv)), field)
    one = field.one
    gens = []
    for k in range(m):
        terms: dict[tuple, object] = {}
        for i in range(-m, m + 1):
            a, b = abs(i), abs(k - i)
            if b > m:
                continue
            exp = [0] * nv
            exp[a] += 1
            exp[b] += 1
            exp = tuple(exp)
            terms[exp] = field.add(terms.get(exp, field.zero), one)
        uk = [0] * nv
        uk[k] = 1
        uk = tuple(uk)
        terms[uk] = field.sub(terms.get(uk, field.zero), one)
        gens.append(ring.polynomial({e: c for e, c in terms.items() if c != field.zero}))
    terms = {}
    for i in range(nv):
        exp = [0] * nv
        exp[i] = 1
        terms[tuple(exp)] = one if i == 0 else field.from_int(2)
    terms[(0,) * nv] = field.neg(one)
    gens.append(ring.polynomial(terms))
    return Ideal(ring, tuple(gens))
