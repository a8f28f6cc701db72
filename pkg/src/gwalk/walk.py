"""The standard Groebner walk.

Starting from the basis for the start ordering, the walk follows the
straight segment between the first rows of the start and target matrices.
At each step it computes the last segment point inside the current Groebner
cone, converts the initial forms there with Buchberger under the refinement
of that weight by the target ordering, lifts the result back to a basis of
the full ideal, and interreduces.  Weights stay arbitrary-precision integers
throughout, so there is no magnitude ceiling on intermediate weight vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .errors import WalkError
from .groebner import (
    Ideal,
    MarkedGroebnerBasis,
    MarkedPolynomial,
    buchberger,
    interreduce,
    normal_form,
)
from .orderings import TermOrdering, primitive_vector, weight_refinement
from .poly import Polynomial

__all__ = [
    "ConeInequalities",
    "WalkTrace",
    "cone_inequalities",
    "next_weight",
    "initial_forms",
    "lift",
    "standard_walk",
]


@dataclass(frozen=True)
class ConeInequalities:
    """Primitive facet-normal candidates of a marked basis's Groebner cone.

    A weight w lies in the closed cone exactly when <w, v> >= 0 for every v.
    """

    vectors: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)


@dataclass
class WalkTrace:
    """Ordered record of a conversion run.

    ``crossed`` holds one integer vector per visited cone: intermediate
    weight vectors for the standard walk, facet normals for the generic walk
    (the header of the text rendering says which).  ``params`` holds the
    exact crossing parameter of each conversion along the full start-to-
    target segment, when that parameter is defined.
    """

    algorithm: str
    crossed: list[tuple[int, ...]] = field(default_factory=list)
    basis_sizes: list[int] = field(default_factory=list)
    params: list[Fraction | None] = field(default_factory=list)
    bases: list[MarkedGroebnerBasis] | None = None

    @property
    def count(self) -> int:
        return len(self.crossed)

    def format_text(self) -> str:
        lines = [f"Results for {self.algorithm}"]
        if self.algorithm == "generic_walk":
            lines.append("Crossed Facets in:")
            noun = "Facets"
        else:
            lines.append("Crossed Cones in:")
            noun = "Cones"
        for vec in self.crossed:
            lines.append("[" + ", ".join(str(x) for x in vec) + "]")
        lines.append(f"{noun} crossed: {self.count}")
        return "\n".join(lines)


def cone_inequalities(basis: MarkedGroebnerBasis) -> ConeInequalities:
    """All primitive difference vectors marked-exponent-minus-support."""
    seen = set()
    for g in basis:
        alpha = g.marked_exponent
        for beta in g.poly.terms:
            if beta != alpha:
                seen.add(primitive_vector(tuple(a - b for a, b in zip(alpha, beta))))
    return ConeInequalities(tuple(sorted(seen)))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _segment_point(w, tau, t: Fraction) -> tuple[int, ...]:
    """Primitive integer rescaling of (1-t) w + t tau."""
    coords = [(1 - t) * a + t * b for a, b in zip(w, tau)]
    denom = 1
    for c in coords:
        denom = lcm(denom, c.denominator)
    ints = [int(c * denom) for c in coords]
    return primitive_vector(ints)


def _advance(ineqs: ConeInequalities, w, tau):
    """Last segment point of [w, tau] in the closed cone.

    Returns (new_weight, facet_vector); the facet vector is None when no
    inequality cuts the segment, in which case tau itself is returned.
    """
    best_t = None
    best_v = None
    for v in ineqs:
        a = _dot(v, w)
        if a < 0:
            raise WalkError(f"current weight {w} violates cone inequality {v}")
        b = _dot(v, tau)
        if b < 0:
            t = Fraction(a, a - b)
            if best_t is None or t < best_t:
                best_t = t
                best_v = v
    if best_v is None:
        return tuple(tau), None
    return _segment_point(w, tau, best_t), best_v


def next_weight(ineqs: ConeInequalities, w, tau) -> tuple[int, ...]:
    """Primitive integer form of the last point of [w, tau] inside the cone."""
    new_w, _ = _advance(ineqs, tuple(w), tuple(tau))
    return new_w


def initial_forms(basis: MarkedGroebnerBasis, w) -> MarkedGroebnerBasis:
    """Initial forms of every element at w, markings carried over.

    Requires w to lie in the closed cone of the basis, so each marking stays
    inside its initial form.
    """
    w = tuple(int(x) for x in w)
    forms = []
    for g in basis:
        target = _dot(w, g.marked_exponent)
        chosen = {}
        for exp, c in g.poly.terms.items():
            score = _dot(w, exp)
            if score > target:
                raise WalkError(
                    f"weight {w} lies outside the cone: marking {g.marked_exponent} "
                    f"is not maximal in {g.poly!r}"
                )
            if score == target:
                chosen[exp] = c
        forms.append(
            MarkedPolynomial(Polynomial._raw(g.ring, chosen), g.marked_exponent)
        )
    return MarkedGroebnerBasis(forms, provenance=None)


def lift(
    M: MarkedGroebnerBasis, H: MarkedGroebnerBasis, ord_H: TermOrdering
) -> list[MarkedPolynomial]:
    """m - normal_form(m, H) for each m in M, keeping M's markings.

    H must be marked consistently with ord_H.  The output generates the same
    ideal as H but is not necessarily reduced; callers interreduce it.
    """
    lifted = []
    for m in M:
        rem = normal_form(m.poly, H, ord_H)
        lifted.append(MarkedPolynomial(m.poly - rem, m.marked_exponent))
    return lifted


def _markings_match(basis: MarkedGroebnerBasis, ordering: TermOrdering) -> bool:
    key = ordering.key
    for g in basis:
        if max(g.poly.terms, key=key) != g.marked_exponent:
            return False
    return True


def _start_weight(ordering: TermOrdering) -> tuple[int, ...]:
    row = ordering.first_row
    if any(x < 0 for x in row) or not any(row):
        raise WalkError(
            f"first matrix row {row} must be nonnegative and nonzero to serve "
            "as a walk endpoint"
        )
    return primitive_vector(row)


def standard_walk(
    ideal: Ideal,
    start: TermOrdering,
    target: TermOrdering,
    keep_bases: bool = False,
) -> tuple[MarkedGroebnerBasis, WalkTrace]:
    """Convert the start-ordering basis of `ideal` into the target basis.

    Returns the reduced marked basis for the target ordering together with a
    trace whose first weight is the start weight and which records one
    primitive integer weight vector per crossed cone.
    """
    w0 = _start_weight(start)
    tau = _start_weight(target)
    G = buchberger(ideal, start)
    trace = WalkTrace(
        algorithm="standard_walk",
        crossed=[w0],
        basis_sizes=[len(G)],
        bases=[G] if keep_bases else None,
    )
    w = w0
    prev_ordering = start
    while not _markings_match(G, target):
        w_next, facet = _advance(cone_inequalities(G), w, tau)
        if facet is None:
            trace.params.append(Fraction(1))
        else:
            a0 = _dot(facet, w0)
            trace.params.append(Fraction(a0, a0 - _dot(facet, tau)))
        trace.crossed.append(w_next)
        refinement = weight_refinement(w_next, target)
        forms = initial_forms(G, w_next)
        M = buchberger(forms.polynomials(), refinement)
        G = interreduce(lift(M, G, prev_ordering), provenance=refinement)
        prev_ordering = refinement
        trace.basis_sizes.append(len(G))
        if keep_bases:
            trace.bases.append(G)
        w = w_next
        if w == tau:
            break
    if not _markings_match(G, target):
        raise WalkError("conversion at the target weight did not reach the target cone")
    G = MarkedGroebnerBasis(list(G), provenance=target)
    if keep_bases:
        trace.bases[-1] = G
    return G, trace
