"""Reading and writing polynomial systems as JSON ideal files.

Schema::

    {
      "ring": {"vars": ["x", "y"], "field": "QQ" | {"Fp": 11863279}},
      "generators": ["y^4 + x^3 - x^2 + x", "x^4"],
      "orderings": {"any-name": ORDERING_SPEC, ...}        # optional
    }

where ORDERING_SPEC is {"name": "lex"|"degrevlex"} | {"matrix": [[...]]} |
{"weight": [...], "then": ORDERING_SPEC}.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GwalkError, IdealFileError
from .fields import QQ, PrimeField
from .groebner import Ideal
from .orderings import TermOrdering, make_ordering
from .parse import format_polynomial, parse_polynomial
from .poly import Ring
from .systems import builtin_ordering

__all__ = ["load_ideal", "save_ideal", "resolve_ordering"]


def _field_from_spec(spec):
    if spec == "QQ":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"Fp"}:
        p = spec["Fp"]
        if not isinstance(p, int):
            raise IdealFileError(f"field modulus must be an integer, got {p!r}")
        try:
            return PrimeField(p)
        except GwalkError as exc:
            raise IdealFileError(str(exc)) from exc
    raise IdealFileError(f'field must be "QQ" or {{"Fp": p}}, got {spec!r}')


def _field_to_spec(field):
    return "QQ" if field == QQ else {"Fp": field.p}


def load_ideal(path) -> tuple[Ideal, dict[str, TermOrdering]]:
    """Load an ideal file, validating the schema and every ordering in it."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except FileNotFoundError:
        raise IdealFileError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise IdealFileError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise IdealFileError(f"{path}: top level must be an object")
    try:
        ring_spec = doc["ring"]
        gen_specs = doc["generators"]
    except (KeyError, TypeError):
        raise IdealFileError(f'{path}: needs "ring" and "generators" entries') from None
    if not isinstance(ring_spec, dict) or "vars" not in ring_spec or "field" not in ring_spec:
        raise IdealFileError(f'{path}: "ring" needs "vars" and "field"')
    variables = ring_spec["vars"]
    if not isinstance(variables, list) or not variables:
        raise IdealFileError(f"{path}: need at least one variable")
    field = _field_from_spec(ring_spec["field"])
    try:
        ring = Ring(tuple(variables), field)
    except GwalkError as exc:
        raise IdealFileError(f"{path}: {exc}") from exc
    if not isinstance(gen_specs, list) or not gen_specs:
        raise IdealFileError(f"{path}: need at least one generator")
    try:
        generators = tuple(parse_polynomial(text, ring) for text in gen_specs)
        ideal = Ideal(ring, generators)
    except GwalkError as exc:
        raise IdealFileError(f"{path}: {exc}") from exc
    orderings = {}
    for name, spec in (doc.get("orderings") or {}).items():
        try:
            orderings[name] = make_ordering(spec, ring.n)
        except GwalkError as exc:
            raise IdealFileError(f"{path}: ordering {name!r}: {exc}") from exc
    return ideal, orderings


def _ordering_to_spec(ordering: TermOrdering):
    if ordering.name in ("lex", "degrevlex"):
        return {"name": ordering.name}
    return {"matrix": [list(row) for row in ordering.rows]}


def save_ideal(path, ideal: Ideal, orderings: dict[str, TermOrdering] | None = None):
    """Write an ideal file that loads back to structurally equal data."""
    from .orderings import degrevlex

    display = degrevlex(ideal.ring.n)
    doc = {
        "ring": {
            "vars": list(ideal.ring.variables),
            "field": _field_to_spec(ideal.ring.field),
        },
        "generators": [format_polynomial(g, display) for g in ideal.generators],
    }
    if orderings:
        doc["orderings"] = {name: _ordering_to_spec(o) for name, o in orderings.items()}
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def resolve_ordering(spec: str, n: int, named: dict[str, TermOrdering] | None = None):
    """Resolve a CLI ordering argument.

    Tries names defined in the input file first, then the builtin names, then
    an inline JSON ordering spec.
    """
    if named and spec in named:
        return named[spec]
    try:
        return builtin_ordering(spec, n)
    except GwalkError:
        pass
    if spec.lstrip().startswith(("{", "[")):
        try:
            return make_ordering(json.loads(spec), n)
        except json.JSONDecodeError as exc:
            raise GwalkError(f"ordering spec is not valid JSON: {spec!r}") from exc
    raise GwalkError(f"unknown ordering {spec!r}")
