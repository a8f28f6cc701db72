"""Term orderings as full-rank integer matrices, plus weight-vector tools.

A monomial x^a is compared to x^b by lexicographic comparison of the integer
vectors M.a and M.b.  Every ordering used here keeps each matrix column
lex-positive (first nonzero entry positive), which is what makes 1 the
smallest monomial.  All arithmetic is arbitrary precision: weight vectors
may grow past machine-word size without any overflow tier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import GwalkError, OrderingError
from .poly import Polynomial

__all__ = [
    "TermOrdering",
    "lex",
    "degrevlex",
    "matrix_ordering",
    "weight_refinement",
    "make_ordering",
    "compare_monomials",
    "leading_term",
    "initial_form",
    "represents",
    "primitive_vector",
    "primitive_weight",
]


def primitive_vector(v) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    v = tuple(int(x) for x in v)
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        raise OrderingError("the zero vector has no primitive form")
    return tuple(x // g for x in v)


def primitive_weight(v) -> tuple[int, ...]:
    """Primitive form of a nonnegative, nonzero integer weight vector."""
    v = tuple(int(x) for x in v)
    if any(x < 0 for x in v):
        raise OrderingError(f"weight vector has negative entries: {v}")
    return primitive_vector(v)


def _matrix_rank(rows) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    ncols = len(work[0]) if work else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for r in range(rank + 1, len(work)):
            if work[r][col]:
                factor = work[r][col] / prow[col]
                work[r] = [a - factor * b for a, b in zip(work[r], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


def _columns_lex_positive(rows) -> bool:
    n = len(rows[0])
    for j in range(n):
        for row in rows:
            if row[j] > 0:
                break
            if row[j] < 0:
                return False
        else:
            return False
    return True


def _degrevlex_key(e):
    return (sum(e),) + tuple(-x for x in e[:0:-1])


def _identity_key(e):
    return e


def _matrix_key(rows):
    def key(e, _rows=rows):
        return tuple(sum(r * x for r, x in zip(row, e)) for row in _rows)

    return key


@dataclass(frozen=True)
class TermOrdering:
    """A monomial order given by a full-rank integer matrix, row-major."""

    n: int
    rows: tuple[tuple[int, ...], ...]
    name: str = field(default="matrix", compare=False)
    key: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise OrderingError(f"ordering matrix must be {self.n}x{self.n}")
        if _matrix_rank(rows) != self.n:
            raise OrderingError("ordering matrix is rank deficient")
        if not _columns_lex_positive(rows):
            raise OrderingError(
                "ordering matrix has a column that is not lex-positive, "
                "so some variable would compare below 1"
            )
        if self.name == "lex":
            key = _identity_key
        elif self.name == "degrevlex":
            key = _degrevlex_key
        else:
            key = _matrix_key(rows)
        object.__setattr__(self, "key", key)

    @property
    def first_row(self) -> tuple[int, ...]:
        return self.rows[0]

    def compare(self, a, b) -> int:
        if a == b:
            return 0
        ka, kb = self.key(a), self.key(b)
        return -1 if ka < kb else 1

    def __repr__(self):
        if self.name in ("lex", "degrevlex"):
            return f"{self.name}({self.n})"
        return f"matrix_ordering({[list(r) for r in self.rows]})"


def lex(n: int) -> TermOrdering:
    rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return TermOrdering(n, rows, name="lex")


def degrevlex(n: int) -> TermOrdering:
    rows = [(1,) * n]
    for i in range(n - 1, 0, -1):
        rows.append(tuple(-1 if j == i else 0 for j in range(n)))
    return TermOrdering(n, tuple(rows), name="degrevlex")


def matrix_ordering(rows, name: str = "matrix") -> TermOrdering:
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    if not rows:
        raise OrderingError("empty ordering matrix")
    return TermOrdering(len(rows), rows, name=name)


def weight_refinement(weights, inner: TermOrdering) -> TermOrdering:
    """Refine the weight vector by `inner`: weight row first, ties fall through.

    The canonical matrix stacks the weight row on top of `inner` and keeps the
    first n independent rows.
    """
    weights = tuple(int(x) for x in weights)
    n = inner.n
    if len(weights) != n:
        raise OrderingError(f"weight vector has length {len(weights)}, expected {n}")
    if any(w < 0 for w in weights):
        raise OrderingError(f"weight vector has negative entries: {weights}")
    if not any(weights):
        raise OrderingError("weight vector is zero")
    kept = [weights]
    for row in inner.rows:
        if len(kept) == n:
            break
        if _matrix_rank(kept + [row]) > len(kept):
            kept.append(row)
    return TermOrdering(n, tuple(kept), name="weight")


def make_ordering(spec, n: int) -> TermOrdering:
    """Build an ordering from a name, a matrix, or a weight-refinement spec.

    Accepted specs: "lex" | "degrevlex" | {"name": ...} | {"matrix": [[...]]}
    | {"weight": [...], "then": spec} | a list of matrix rows | TermOrdering.
    """
    if isinstance(spec, TermOrdering):
        if spec.n != n:
            raise OrderingError(f"ordering is on {spec.n} variables, expected {n}")
        return spec
    if isinstance(spec, str):
        if spec == "lex":
            return lex(n)
        if spec == "degrevlex":
            return degrevlex(n)
        raise OrderingError(f"unknown ordering name {spec!r}")
    if isinstance(spec, dict):
        if "name" in spec:
            return make_ordering(spec["name"], n)
        if "matrix" in spec:
            rows = spec["matrix"]
            if len(rows) != n:
                raise OrderingError(f"ordering matrix must be {n}x{n}")
            return matrix_ordering(rows)
        if "weight" in spec:
            if "then" not in spec:
                raise OrderingError('weight ordering spec needs a "then" entry')
            return weight_refinement(spec["weight"], make_ordering(spec["then"], n))
        raise OrderingError(f"unrecognized ordering spec: {spec!r}")
    if isinstance(spec, (list, tuple)):
        if len(spec) != n:
            raise OrderingError(f"ordering matrix must be {n}x{n}")
        return matrix_ordering(spec)
    raise OrderingError(f"unrecognized ordering spec: {spec!r}")


def compare_monomials(ordering: TermOrdering, a, b) -> int:
    """-1, 0 or 1 as x^a is below, equal to, or above x^b under the ordering."""
    a, b = tuple(a), tuple(b)
    if len(a) != ordering.n or len(b) != ordering.n:
        raise OrderingError(
            f"exponent length mismatch: {len(a)} and {len(b)} vs n={ordering.n}"
        )
    return ordering.compare(a, b)


def leading_term(f: Polynomial, ordering: TermOrdering):
    """The unique maximal (exponent, coefficient) of a nonzero polynomial."""
    if f.is_zero:
        raise GwalkError("the zero polynomial has no leading term")
    exp = max(f.terms, key=ordering.key)
    return exp, f.terms[exp]


def _weight_validated(w, n: int, allow_zero: bool) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if len(w) != n:
        raise OrderingError(f"weight vector has length {len(w)}, expected {n}")
    if any(x < 0 for x in w):
        raise OrderingError(f"weight vector has negative entries: {w}")
    if not allow_zero and not any(w):
        raise OrderingError("weight vector is zero")
    return w


def initial_form(f: Polynomial, w) -> Polynomial:
    """Sum of the terms of f with maximal inner product against w.

    The all-zero weight is permitted here (every term ties, so the result is
    f itself) even though walk-internal weight vectors are never zero.
    """
    if f.is_zero:
        raise GwalkError("the zero polynomial has no initial form")
    w = _weight_validated(w, f.ring.n, allow_zero=True)
    best = None
    chosen = {}
    for exp, c in f.terms.items():
        score = sum(wi * ei for wi, ei in zip(w, exp))
        if best is None or score > best:
            best = score
            chosen = {exp: c}
        elif score == best:
            chosen[exp] = c
    return Polynomial._raw(f.ring, chosen)


def represents(w, basis) -> bool:
    """True when w picks exactly the marked term of every basis element."""
    elements = list(basis)
    if not elements:
        raise GwalkError("cannot test an empty basis")
    n = elements[0].poly.ring.n
    w = _weight_validated(w, n, allow_zero=True)
    for g in elements:
        marked = g.marked_exponent
        target = sum(wi * ei for wi, ei in zip(w, marked))
        for exp in g.poly.terms:
            if exp != marked and sum(wi * ei for wi, ei in zip(w, exp)) >= target:
                return False
    return True
