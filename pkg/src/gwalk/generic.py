"""The generic Groebner walk: weight-free conversion along a symbolic line.

No numeric weight vector ever appears.  Facets of the current cone are
filtered and ordered purely through the start and target ordering matrices,
division happens against markings alone, and each flip crosses exactly one
facet.  The facet preorder is calibrated so that facets are visited in the
same order in which the standard walk's segment crosses their hyperplanes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import WalkError
from .groebner import (
    Ideal,
    MarkedGroebnerBasis,
    MarkedPolynomial,
    buchberger,
    interreduce,
    marked_divide,
)
from .orderings import TermOrdering
from .poly import Polynomial, exp_sub
from .walk import WalkTrace, cone_inequalities

__all__ = [
    "OrderingMatrixPair",
    "marked_normal_form",
    "flippable_facets",
    "facet_less",
    "generic_flip",
    "generic_walk",
]


@dataclass(frozen=True)
class OrderingMatrixPair:
    """Start and target ordering matrices driving one generic walk."""

    start: TermOrdering
    target: TermOrdering

    def __post_init__(self):
        if self.start.n != self.target.n:
            raise WalkError("start and target orderings act on different rings")


def marked_normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f modulo a marked basis, using only the markings.

    Agrees exactly with normal_form whenever a compatible ordering exists,
    which holds for every basis produced during a walk.
    """
    return marked_divide(f, list(basis))


def _mat_vec(rows, v):
    return tuple(sum(r * x for r, x in zip(row, v)) for row in rows)


def _lex_sign(vec) -> int:
    for x in vec:
        if x > 0:
            return 1
        if x < 0:
            return -1
    return 0


def flippable_facets(basis: MarkedGroebnerBasis, pair: OrderingMatrixPair):
    """Cone inequality vectors separating the basis cone from the target side.

    A facet vector qualifies when the target matrix sends it lex-negative
    (the target cone lies on the other side) while the start matrix sends it
    lex-positive (the walk's line has not yet passed it).
    """
    S = pair.start.rows
    T = pair.target.rows
    out = []
    for v in cone_inequalities(basis):
        if _lex_sign(_mat_vec(T, v)) < 0 and _lex_sign(_mat_vec(S, v)) > 0:
            out.append(v)
    return out


def facet_less(u, v, pair: OrderingMatrixPair) -> bool:
    """True when the generic start-to-target line crosses facet u before v.

    Compares the outer products (T.u)(S.v)^t and (T.v)(S.u)^t in row-major
    lexicographic order; u comes first when the first differing entry of
    (T.v)(S.u)^t - (T.u)(S.v)^t is positive.  The sign is pinned by the
    crossing-parameter oracle against the standard walk.
    """
    S = pair.start.rows
    T = pair.target.rows
    Su, Sv = _mat_vec(S, u), _mat_vec(S, v)
    Tu, Tv = _mat_vec(T, u), _mat_vec(T, v)
    for j in range(len(Tu)):
        tu, tv = Tu[j], Tv[j]
        for i in range(len(Su)):
            d = tv * Su[i] - tu * Sv[i]
            if d > 0:
                return True
            if d < 0:
                return False
    return False


def _facet_initial(g: MarkedPolynomial, w) -> MarkedPolynomial:
    """Marked term plus every term whose difference from it is a positive
    multiple of the facet vector w."""
    a = g.marked_exponent
    k = next(i for i, x in enumerate(w) if x)
    chosen = {a: g.poly.terms[a]}
    for b, c in g.poly.terms.items():
        if b == a:
            continue
        d = exp_sub(a, b)
        if d[k] == 0 or (d[k] > 0) != (w[k] > 0):
            continue
        if all(d[i] * w[k] == w[i] * d[k] for i in range(len(w))):
            chosen[b] = c
    return MarkedPolynomial(Polynomial._raw(g.ring, chosen), a)


def generic_flip(
    basis: MarkedGroebnerBasis, w, pair: OrderingMatrixPair
) -> MarkedGroebnerBasis:
    """Cross one facet: convert the facet initial forms and lift back."""
    w = tuple(int(x) for x in w)
    if w not in set(flippable_facets(basis, pair)):
        raise WalkError(f"facet {w} is not flippable for this basis")
    forms = [_facet_initial(g, w) for g in basis]
    M = buchberger([g.poly for g in forms], pair.target)
    lifted = []
    for m in M:
        rem = marked_divide(m.poly, basis)
        lifted.append(MarkedPolynomial(m.poly - rem, m.marked_exponent))
    return interreduce(lifted)


def _crossing_param(w, pair: OrderingMatrixPair) -> Fraction | None:
    """Exact parameter where the segment between the first matrix rows meets
    the facet hyperplane; None when the rows do not determine one."""
    a = sum(x * y for x, y in zip(pair.start.first_row, w))
    b = sum(x * y for x, y in zip(pair.target.first_row, w))
    if a == b:
        return None
    return Fraction(a, a - b)


def generic_walk(
    ideal: Ideal, start: TermOrdering, target: TermOrdering
) -> tuple[MarkedGroebnerBasis, WalkTrace]:
    """Convert the start basis to the target basis by repeated facet flips.

    The trace records one facet vector per flip (in the crossed slot) rather
    than numeric weights; an empty flip list means start and target share a
    cone.
    """
    pair = OrderingMatrixPair(start, target)
    G = buchberger(ideal, start)
    trace = WalkTrace(algorithm="generic_walk", basis_sizes=[len(G)])
    while True:
        facets = flippable_facets(G, pair)
        if not facets:
            break
        best = facets[0]
        for cand in facets[1:]:
            if facet_less(cand, best, pair):
                best = cand
        G = generic_flip(G, best, pair)
        trace.crossed.append(best)
        trace.params.append(_crossing_param(best, pair))
        trace.basis_sizes.append(len(G))
    key = target.key
    for g in G:
        if max(g.poly.terms, key=key) != g.marked_exponent:
            raise WalkError("generic walk terminated away from the target cone")
    return MarkedGroebnerBasis(list(G), provenance=target), trace
