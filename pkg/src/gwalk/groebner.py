"""Multivariate division, Buchberger's algorithm, and marked Groebner bases.

The division engine works on raw term dicts and is shared by the ordered
normal form, the purely marking-driven normal form used by the generic walk,
and interreduction.  Buchberger runs with the Gebauer-Moeller pair update
(product criterion plus chain pruning) and normal selection by lcm degree;
the final result is always the unique reduced, monic, minimal marked basis.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import GwalkError, MarkingError, RingMismatchError
from .orderings import TermOrdering, leading_term
from .poly import Polynomial, Ring, exp_add, exp_divides, exp_lcm, exp_sub

__all__ = [
    "Ideal",
    "MarkedPolynomial",
    "MarkedGroebnerBasis",
    "normal_form",
    "s_polynomial",
    "buchberger",
    "interreduce",
    "leading_ideal",
]

# The marking-driven division only records intermediate states (to detect a
# cycle from incompatible markings) after this many live reduction steps;
# compatible markings never cycle, so the common path stays cheap.
_CYCLE_GUARD_AFTER = 2_000_000


@dataclass(frozen=True)
class Ideal:
    """A nonempty list of nonzero generators in a common ring."""

    ring: Ring
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise GwalkError("an ideal needs at least one generator")
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError("generator from a different ring")
            if g.is_zero:
                raise GwalkError("zero generators are not allowed")

    def __iter__(self):
        return iter(self.generators)


@dataclass(frozen=True)
class MarkedPolynomial:
    """A polynomial with one marked (monic) term playing the leading role."""

    poly: Polynomial
    marked_exponent: tuple[int, ...]

    def __post_init__(self):
        exp = tuple(self.marked_exponent)
        object.__setattr__(self, "marked_exponent", exp)
        coeff = self.poly.terms.get(exp)
        if coeff is None:
            raise MarkingError(f"marked exponent {exp} is not in the support")
        if coeff != self.poly.ring.field.one:
            raise MarkingError(f"marked coefficient must be 1, got {coeff}")

    @property
    def ring(self) -> Ring:
        return self.poly.ring

    def tail(self) -> dict:
        t = dict(self.poly.terms)
        del t[self.marked_exponent]
        return t

    def __repr__(self):
        return f"MarkedPolynomial({self.poly!r}, marked={self.marked_exponent})"


class MarkedGroebnerBasis:
    """Reduced, monic, minimal basis with explicitly marked leading terms.

    Elements are stored sorted by descending marked exponent (plain tuple
    order), so equal bases compare equal regardless of construction order.
    """

    __slots__ = ("elements", "provenance")

    def __init__(self, elements, provenance: TermOrdering | None = None):
        elements = sorted(elements, key=lambda g: g.marked_exponent, reverse=True)
        if not elements:
            raise GwalkError("a marked basis cannot be empty")
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "provenance", provenance)

    @property
    def ring(self) -> Ring:
        return self.elements[0].ring

    def markings(self) -> list[tuple[int, ...]]:
        return [g.marked_exponent for g in self.elements]

    def polynomials(self) -> list[Polynomial]:
        return [g.poly for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return (
            isinstance(other, MarkedGroebnerBasis) and self.elements == other.elements
        )

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"MarkedGroebnerBasis({list(self.elements)!r})"


def _canonical_negkey(e):
    # Max-heap key for the fixed (total degree, then lex) pick order used
    # when no numeric ordering is available.
    return (-sum(e),) + tuple(-x for x in e)


def _ordering_negkey(ordering: TermOrdering):
    cache = {}

    def negkey(e, _key=ordering.key, _cache=cache):
        k = _cache.get(e)
        if k is None:
            k = tuple(-x for x in _key(e))
            _cache[e] = k
        return k

    return negkey


def _divide(terms, divisors, negkey, fld, quotients=None, guarded=False):
    """Full remainder of `terms` modulo monic marked divisors.

    divisors: list of (marked_exponent, tail_terms).  At each step the
    greatest term under the key that is divisible by some marking is rewritten
    using the divisor of smallest list index; irreducible terms accumulate in
    the remainder.  With order-compatible markings this always terminates.
    """
    p = dict(terms)
    if not p or not divisors:
        return p
    r = {}
    heap = [(negkey(e), e) for e in p]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    sub, mul, neg, add, zero = fld.sub, fld.mul, fld.neg, fld.add, fld.zero
    steps = 0
    seen = None
    while heap:
        _, e = pop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        hit = -1
        for i, (mk, _) in enumerate(divisors):
            for a, b in zip(mk, e):
                if a > b:
                    break
            else:
                hit = i
                break
        if hit < 0:
            r[e] = add(r[e], c) if e in r else c
            continue
        mk, tail = divisors[hit]
        delta = exp_sub(e, mk)
        if quotients is not None:
            q = quotients[hit]
            q[delta] = add(q.get(delta, zero), c)
        for b, cb in tail.items():
            nb = exp_add(delta, b)
            prev = p.get(nb)
            if prev is None:
                p[nb] = neg(mul(c, cb))
                push(heap, (negkey(nb), nb))
            else:
                nc = sub(prev, mul(c, cb))
                if nc == zero:
                    del p[nb]
                else:
                    p[nb] = nc
        if guarded:
            steps += 1
            if steps > _CYCLE_GUARD_AFTER:
                state = frozenset(p.items())
                if seen is None:
                    seen = {state}
                elif state in seen:
                    raise MarkingError(
                        "division cycled: markings admit no common term ordering"
                    )
                else:
                    seen.add(state)
    return {e: c for e, c in r.items() if c != zero}


def _as_divisors(elements):
    return [(g.marked_exponent, g.tail()) for g in elements]


def _check_markings(elements, ordering: TermOrdering):
    for g in elements:
        lead, _ = leading_term(g.poly, ordering)
        if lead != g.marked_exponent:
            raise MarkingError(
                f"marked exponent {g.marked_exponent} is not the leading "
                f"exponent {lead} under the supplied ordering"
            )


def normal_form(
    f: Polynomial, basis, ordering: TermOrdering, quotients: list | None = None
) -> Polynomial:
    """Unique remainder of f on division by a marked basis.

    Requires every marking to agree with `ordering`.  When `quotients` is an
    empty list it is filled with one cofactor polynomial per divisor, so that
    f == sum(q_i * g_i) + remainder holds exactly.
    """
    elements = list(basis)
    _check_markings(elements, ordering)
    qdicts = None
    if quotients is not None:
        qdicts = [{} for _ in elements]
    rem = _divide(
        f.terms, _as_divisors(elements), _ordering_negkey(ordering), f.ring.field, qdicts
    )
    if quotients is not None:
        quotients.clear()
        quotients.extend(Polynomial._raw(f.ring, q) for q in qdicts)
    return Polynomial._raw(f.ring, rem)


def marked_divide(f: Polynomial, elements) -> Polynomial:
    """Remainder of f by marked divisors using only the markings.

    No numeric ordering is consulted: the reducible term that is greatest in
    the fixed (total degree, then lex) order is rewritten first.  A cycle
    guard aborts if the markings are not jointly order-compatible.
    """
    rem = _divide(
        f.terms,
        _as_divisors(elements),
        _canonical_negkey,
        f.ring.field,
        guarded=True,
    )
    return Polynomial._raw(f.ring, rem)


def s_polynomial(f: MarkedPolynomial, g: MarkedPolynomial) -> Polynomial:
    """x^(lcm-a) f - x^(lcm-b) g for marked exponents a of f and b of g."""
    if f.ring != g.ring:
        raise RingMismatchError("s-polynomial of polynomials in different rings")
    fld = f.ring.field
    lcm = exp_lcm(f.marked_exponent, g.marked_exponent)
    da = exp_sub(lcm, f.marked_exponent)
    db = exp_sub(lcm, g.marked_exponent)
    res = {}
    for e, c in f.poly.terms.items():
        res[exp_add(e, da)] = c
    sub, zero = fld.sub, fld.zero
    for e, c in g.poly.terms.items():
        ne = exp_add(e, db)
        s = sub(res.get(ne, zero), c)
        if s == zero:
            res.pop(ne, None)
        else:
            res[ne] = s
    return Polynomial._raw(f.ring, res)


def _update(G, B, t, marks):
    """Gebauer-Moeller pair update after appending element index t."""
    mt = marks[t]
    C = set(G)
    D = set()
    lcm_t = {ig: exp_lcm(mt, marks[ig]) for ig in G}
    while C:
        ig = C.pop()
        lcm_tg = lcm_t[ig]
        if lcm_tg == exp_add(mt, marks[ig]):  # coprime markings: product criterion
            D.add((ig, True))
            continue
        if any(exp_divides(lcm_t[ip], lcm_tg) for ip in C) or any(
            exp_divides(lcm_t[ip], lcm_tg) for ip, _ in D
        ):
            continue
        D.add((ig, False))
    E = {(min(ig, t), max(ig, t)) for ig, coprime in D if not coprime}
    B_new = set()
    for (i, j) in B:
        lcm_ij = exp_lcm(marks[i], marks[j])
        if (
            not exp_divides(mt, lcm_ij)
            or exp_lcm(mt, marks[i]) == lcm_ij
            or exp_lcm(mt, marks[j]) == lcm_ij
        ):
            B_new.add((i, j))
    B_new |= E
    G_new = {ig for ig in G if not exp_divides(mt, marks[ig])}
    G_new.add(t)
    return G_new, B_new


def _monic(terms, lead, fld):
    c = terms[lead]
    if c == fld.one:
        return terms
    inv = fld.inv(c)
    mul = fld.mul
    return {e: mul(inv, v) for e, v in terms.items()}


def buchberger(generators, ordering: TermOrdering) -> MarkedGroebnerBasis:
    """The reduced marked Groebner basis of the generated ideal."""
    if isinstance(generators, Ideal):
        gens = list(generators.generators)
    else:
        gens = [g for g in generators]
    if not gens:
        raise GwalkError("no generators")
    ring = gens[0].ring
    if ordering.n != ring.n:
        raise GwalkError(f"ordering is on {ordering.n} variables, ring has {ring.n}")
    fld = ring.field
    negkey = _ordering_negkey(ordering)

    polys: list[dict] = []  # monic term dicts, index-stable
    marks: list[tuple] = []
    G: set[int] = set()
    B: set[tuple[int, int]] = set()

    def divisors():
        return [(marks[i], _tail(i)) for i in sorted(G)]

    tails: dict[int, dict] = {}

    def _tail(i):
        t = tails.get(i)
        if t is None:
            t = dict(polys[i])
            del t[marks[i]]
            tails[i] = t
        return t

    def insert(terms):
        lead = min(terms, key=negkey)
        terms = _monic(terms, lead, fld)
        polys.append(terms)
        marks.append(lead)
        return len(polys) - 1

    okey = ordering.key
    for f in sorted(
        (g for g in gens if not g.is_zero), key=lambda g: okey(max(g.terms, key=okey))
    ):
        rem = _divide(f.terms, divisors(), negkey, fld)
        if rem:
            t = insert(rem)
            G, B = _update(G, B, t, marks)

    if not polys:
        raise GwalkError("no generators")

    def pair_cost(pair):
        lcm = exp_lcm(marks[pair[0]], marks[pair[1]])
        return (sum(lcm), negkey(lcm), pair)

    while B:
        pair = min(B, key=pair_cost)
        B.discard(pair)
        i, j = pair
        fi = MarkedPolynomial(Polynomial._raw(ring, polys[i]), marks[i])
        fj = MarkedPolynomial(Polynomial._raw(ring, polys[j]), marks[j])
        s = s_polynomial(fi, fj)
        rem = _divide(s.terms, divisors(), negkey, fld)
        if rem:
            t = insert(rem)
            G, B = _update(G, B, t, marks)

    final = [
        MarkedPolynomial(Polynomial._raw(ring, polys[i]), marks[i]) for i in sorted(G)
    ]
    return interreduce(final, provenance=ordering)


def _as_marked_candidates(elements):
    """Accept MarkedPolynomial instances or (polynomial, exponent) pairs."""
    out = []
    for item in elements:
        if isinstance(item, MarkedPolynomial):
            out.append((item.poly, item.marked_exponent))
        else:
            poly, exp = item
            exp = tuple(exp)
            if exp not in poly.terms:
                raise MarkingError(f"marked exponent {exp} is not in the support")
            out.append((poly, exp))
    return out


def interreduce(elements, provenance: TermOrdering | None = None) -> MarkedGroebnerBasis:
    """Reduce a marked generating set to the unique reduced marked basis.

    Drops elements whose marking is divisible by another marking, rescales to
    monic, and rewrites every tail modulo the other markings until no term is
    divisible.  The caller guarantees that the markings are compatible with a
    common term ordering; all call sites in this package satisfy that.
    """
    candidates = _as_marked_candidates(elements)
    if not candidates:
        raise GwalkError("nothing to interreduce")
    ring = candidates[0][0].ring
    fld = ring.field

    # Minimal markings first; for equal markings the earlier element wins.
    order = sorted(
        range(len(candidates)),
        key=lambda i: (sum(candidates[i][1]), candidates[i][1], i),
    )
    kept: list[list] = []  # [marking, terms] with terms monic
    for i in order:
        poly, mk = candidates[i]
        if any(exp_divides(other_mk, mk) for other_mk, _ in kept):
            continue
        kept.append([mk, _monic(dict(poly.terms), mk, fld)])

    for entry in kept:
        mk, terms = entry
        others = [(omk, oterms) for omk, oterms in kept if omk != mk]
        if not others:
            continue
        tail = dict(terms)
        del tail[mk]
        divisors = [(omk, _tail_of(oterms, omk)) for omk, oterms in others]
        rem = _divide(tail, divisors, _canonical_negkey, fld, guarded=True)
        rem[mk] = fld.one
        entry[1] = rem

    final = [
        MarkedPolynomial(Polynomial._raw(ring, terms), mk) for mk, terms in kept
    ]
    return MarkedGroebnerBasis(final, provenance=provenance)


def _tail_of(terms, mk):
    t = dict(terms)
    del t[mk]
    return t


def leading_ideal(ideal, ordering: TermOrdering) -> list[tuple[int, ...]]:
    """Minimal monomial generators of the initial ideal, as exponent vectors."""
    return buchberger(ideal, ordering).markings()
