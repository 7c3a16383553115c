"""Embedded reference tables and the harness that recomputes them.

The package ships a table of expected values (ratios, residuals, and
constants) spanning every asymptotic regime it implements.  verify_tables
recomputes each row from scratch with the library's own evaluators and
compares against the stored expectation at the stored tolerance, so a
passing run certifies the whole pipeline end to end: exact counts,
partition sums, quadrature constants, saddle solves, and closed forms.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import Mapping, Sequence

from .asymptotics import asy_equal_window, asy_fixed_part, asy_turan_tutte
from .exact import ao_exact, h_s_exact, turan_parts
from .partition_sums import partition_sum, quadratic_model
from .proportions import asy_fixed_proportion
from .saddle import SaddleProblem, solve_saddle

_DATA_RESOURCE = "reference_tables.json"


@dataclass(frozen=True)
class RowCheck:
    inputs: Mapping[str, object]
    got: float
    expected: float
    tol: float

    @property
    def passed(self) -> bool:
        return abs(self.got - self.expected) <= self.tol


@dataclass(frozen=True)
class TableReport:
    table_id: str
    rows: tuple[RowCheck, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


@dataclass(frozen=True)
class RunReport:
    reports: tuple[TableReport, ...]

    @property
    def all_passed(self) -> bool:
        return all(rep.passed for rep in self.reports)

    @property
    def total_rows(self) -> int:
        return sum(len(rep.rows) for rep in self.reports)

    @property
    def failed_rows(self) -> int:
        return sum(1 for rep in self.reports for row in rep.rows if not row.passed)


def load_tables() -> dict:
    text = resources.files("aocount.data").joinpath(_DATA_RESOURCE).read_text()
    return json.loads(text)["tables"]


def table_ids() -> list[str]:
    return list(load_tables().keys())


def canonical_table_id(name: str) -> str:
    known = table_ids()
    candidate = name.strip()
    if candidate.startswith("table-") and candidate not in known:
        candidate = candidate[len("table-"):]
    if candidate not in known:
        raise KeyError(
            f"unknown table {name!r}; available: {', '.join(known)}")
    return candidate


def _window_exact_log(m: int, n: int) -> float:
    return math.log(ao_exact((m,) * n))


def _ratio(exact_count, log_predicted: float) -> float:
    return math.exp(math.log(exact_count) - log_predicted)


def evaluate_row(table_id: str, inputs: Mapping[str, object]) -> float:
    """Recompute the quantity a reference row stores, from scratch."""
    if table_id == "fixed-part":
        k, r = int(inputs["k"]), int(inputs["r"])
        corrected = inputs["quantity"] == "corrected"
        return _ratio(ao_exact((k,) * r),
                      asy_fixed_part(k, r, 1.0, corrected).log_value)
    if table_id == "quadratic-model":
        n = int(inputs["n"])
        distinct = inputs["kind"] == "fermi"
        return quadratic_model(n, distinct=distinct).log_Z / math.sqrt(n)
    if table_id == "saddle-constants":
        problem = SaddleProblem(kind=str(inputs["kind"]),
                                R=None if inputs["R"] is None else float(inputs["R"]))
        result = solve_saddle(problem)
        return result.a_star if inputs["constant"] == "c" else result.C_value
    if table_id == "partition-sum-drift":
        n = int(inputs["n"])
        distinct = inputs["kind"] == "distinct"
        total = partition_sum(n, distinct=distinct)
        return (math.log(total) - math.lgamma(n + 1)) / math.sqrt(n)
    if table_id == "rectangular-window":
        kappa, n = int(inputs["kappa"]), int(inputs["n"])
        m = kappa * n
        return (_window_exact_log(m, n) - math.lgamma(m * n + 1) + 0.5 * m)
    if table_id == "log-error-window":
        m, n = int(inputs["m"]), int(inputs["n"])
        return abs(_window_exact_log(m, n) - asy_equal_window(m, n, 1).log_value)
    if table_id == "critical-window":
        m, n = int(inputs["m"]), int(inputs["n"])
        residual = _window_exact_log(m, n) - asy_equal_window(m, n, 3).log_value
        return n * residual if inputs["quantity"] == "nR" else residual
    if table_id == "tutte-ratio":
        p, s, N = int(inputs["p"]), int(inputs["s"]), int(inputs["N"])
        return _ratio(h_s_exact(turan_parts(N, p), s),
                      asy_turan_tutte(N, p, float(s)).log_value)
    if table_id == "bipartite-proportion":
        a, b = int(inputs["a"]), int(inputs["b"])
        return _ratio(ao_exact((a, b)), asy_fixed_proportion((a, b)).log_value)
    if table_id == "tutte-fixed-part":
        k, s, r = int(inputs["k"]), int(inputs["s"]), int(inputs["r"])
        corrected = inputs["quantity"] == "corrected"
        return _ratio(h_s_exact((k,) * r, s),
                      asy_fixed_part(k, r, float(s), corrected).log_value)
    raise KeyError(f"unknown table {table_id!r}")


def verify_table(table_id: str) -> TableReport:
    table_id = canonical_table_id(table_id)
    spec_rows = load_tables()[table_id]["rows"]
    rows = tuple(
        RowCheck(inputs=row["inputs"],
                 got=evaluate_row(table_id, row["inputs"]),
                 expected=float(row["expected"]),
                 tol=float(row["tol"]))
        for row in spec_rows)
    return TableReport(table_id=table_id, rows=rows)


def verify_tables(names: Sequence[str] | None = None) -> RunReport:
    ids = table_ids() if names is None else [canonical_table_id(n) for n in names]
    return RunReport(reports=tuple(verify_table(tid) for tid in ids))
