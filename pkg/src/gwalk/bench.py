"""Benchmark harness: run conversions on named or file-based systems.

Wall time is reported for information only and is never asserted; basis
sizes are checked against the known sizes for the generated families when
available.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass

from .errors import GwalkError
from .fields import QQ, PrimeField
from .generic import generic_walk
from .groebner import Ideal, buchberger
from .ideal_io import load_ideal
from .orderings import TermOrdering, degrevlex, lex
from .systems import gen_cyclic, gen_katsura
from .walk import standard_walk

__all__ = ["BenchReport", "DEFAULT_BENCH_PRIME", "EXPECTED_SIZES", "run_bench", "format_report_table"]

DEFAULT_BENCH_PRIME = 11863279

# (degrevlex size, lex size) for the generated families.
EXPECTED_SIZES = {
    "cyclic5": (20, 30),
    "cyclic6": (45, 70),
    "katsura6": (41, 64),
    "katsura7": (74, 128),
    "katsura8": (143, 256),
}

_GENERATED = re.compile(r"(cyclic|katsura)(\d+)\Z")

ALGORITHMS = ("standard", "generic", "buchberger")


@dataclass
class BenchReport:
    system: str
    field_name: str
    algorithm: str
    basis_size: int
    cones_crossed: int | None
    seconds: float
    size_ok: bool | None  # None when no expected size is known


def _resolve_system(name: str, field) -> tuple[str, Ideal, TermOrdering, TermOrdering]:
    m = _GENERATED.match(name)
    if m:
        kind, num = m.group(1), int(m.group(2))
        ideal = gen_cyclic(num, field) if kind == "cyclic" else gen_katsura(num, field)
        n = ideal.ring.n
        return name, ideal, degrevlex(n), lex(n)
    ideal, orderings = load_ideal(name)
    n = ideal.ring.n
    start = orderings.get("start", degrevlex(n))
    target = orderings.get("target", lex(n))
    return name, ideal, start, target


def run_bench(systems, field_spec, algorithms=("standard",)) -> list[BenchReport]:
    """Run each system under each algorithm and collect reports.

    `systems` holds generated names (cyclic5, katsura6, ...) or ideal-file
    paths; `field_spec` is "QQ", a prime int, or a field object and applies
    to the generated systems (file systems keep their own field).
    """
    if field_spec == "QQ" or field_spec is QQ:
        field = QQ
    elif isinstance(field_spec, int):
        field = PrimeField(field_spec)
    elif isinstance(field_spec, PrimeField):
        field = field_spec
    else:
        raise GwalkError(f"unrecognized field spec {field_spec!r}")
    for algo in algorithms:
        if algo not in ALGORITHMS:
            raise GwalkError(f"unknown algorithm {algo!r}; pick from {ALGORITHMS}")
    reports = []
    for name in systems:
        label, ideal, start, target = _resolve_system(name, field)
        expected = EXPECTED_SIZES.get(label)
        for algo in algorithms:
            t0 = time.perf_counter()
            cones = None
            if algo == "standard":
                basis, trace = standard_walk(ideal, start, target)
                cones = trace.count
            elif algo == "generic":
                basis, trace = generic_walk(ideal, start, target)
                cones = trace.count
            else:
                basis = buchberger(ideal, target)
            seconds = time.perf_counter() - t0
            size = len(basis)
            size_ok = None if expected is None else (size == expected[1])
            reports.append(
                BenchReport(
                    system=label,
                    field_name=ideal.ring.field.name,
                    algorithm=algo,
                    basis_size=size,
                    cones_crossed=cones,
                    seconds=seconds,
                    size_ok=size_ok,
                )
            )
    return reports


def format_report_table(reports, show_time: bool = True) -> str:
    """Runtime table, one row per system/field, one column per algorithm."""
    if not reports:
        return "(no systems)"
    algorithms = []
    for r in reports:
        if r.algorithm not in algorithms:
            algorithms.append(r.algorithm)
    rows: dict[tuple[str, str], dict[str, BenchReport]] = {}
    for r in reports:
        rows.setdefault((r.system, r.field_name), {})[r.algorithm] = r

    def cell(r: BenchReport | None) -> str:
        if r is None:
            return "-"
        extra = "" if r.size_ok in (True, None) else " (size mismatch!)"
        if show_time:
            return f"{r.seconds:8.2f} s  |G|={r.basis_size}{extra}"
        return f"|G|={r.basis_size}{extra}"

    header = ["System", "Field"] + list(algorithms)
    table = [header]
    for (system, field_name), by_algo in rows.items():
        table.append([system, field_name] + [cell(by_algo.get(a)) for a in algorithms])
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = []
    for i, row in enumerate(table):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append("-" * len(lines[0]))
    return "\n".join(lines)
