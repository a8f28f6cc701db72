"""Exact Groebner bases and Groebner-walk basis conversion.

Sparse multivariate polynomials over QQ or a prime field, matrix term
orderings, Buchberger's algorithm, and two basis-conversion walks (standard
and generic), with fan-trace diagnostics, an SVG renderer for two-variable
traces, and a benchmark harness.
"""

from .bench import BenchReport, run_bench
from .errors import (
    GwalkError,
    IdealFileError,
    MarkingError,
    OrderingError,
    ParseError,
    RingMismatchError,
    WalkError,
)
from .fan_svg import fan_svg, render_fan
from .fields import QQ, PrimeField, Rationals, is_prime
from .generic import (
    OrderingMatrixPair,
    facet_less,
    flippable_facets,
    generic_flip,
    generic_walk,
    marked_normal_form,
)
from .groebner import (
    Ideal,
    MarkedGroebnerBasis,
    MarkedPolynomial,
    buchberger,
    interreduce,
    leading_ideal,
    normal_form,
    s_polynomial,
)
from .ideal_io import load_ideal, resolve_ordering, save_ideal
from .orderings import (
    TermOrdering,
    compare_monomials,
    degrevlex,
    initial_form,
    leading_term,
    lex,
    make_ordering,
    matrix_ordering,
    primitive_vector,
    primitive_weight,
    represents,
    weight_refinement,
)
from .parse import format_polynomial, parse_polynomial
from .poly import Polynomial, Ring
from .systems import elimination_orderings, gen_cyclic, gen_katsura
from .walk import (
    ConeInequalities,
    WalkTrace,
    cone_inequalities,
    initial_forms,
    lift,
    next_weight,
    standard_walk,
)

__version__ = "0.1.0"
