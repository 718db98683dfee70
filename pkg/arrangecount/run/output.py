"""Payload models written to stdout and their JSON, CSV and text renderings.

The pydantic models below are the published schema of the command line
output. Big integers travel as decimal strings, polynomial coefficients in
ascending powers of t.
"""
from __future__ import annotations

import csv
import io
import json
from functools import singledispatch
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from arrangecount.charpoly import (
    CharPolyResult,
    ClosedFormReport,
    CycleReport,
    DeletionRestrictionReport,
    EgfCoefficients,
    EgfPowerReport,
    EssentialityReport,
    FourLinesReport,
    InvarianceReport,
    MultiplicativeTable,
    OracleReport,
    PolynomialityReport,
    ProbeReport,
    ShiftReport,
    SpotCheck,
    UnionReport,
)
from arrangecount.exactmath import QPolynomial
from arrangecount.graphcount import IndependenceCounts

EXPERIMENTAL = "EXPERIMENTAL"

Record = Dict[str, str]


def _ints(values: Sequence[Any]) -> List[str]:
    return [str(v) for v in values]


def _joined(values: Sequence[Any]) -> str:
    return ",".join(str(v) for v in values)


def _flag(value: bool) -> str:
    return "true" if value else "false"


class Sample(BaseModel):
    q: str
    count: str


class Payload(BaseModel):
    """Common envelope of every command's output."""

    command: str
    passed: bool = Field(True, alias="pass")

    def records(self) -> List[Record]:
        """Flat rows for the CSV rendering."""
        return [{"command": self.command, "pass": _flag(self.passed)}]

    def text_lines(self) -> List[str]:
        return [f"{k}: {v}" for row in self.records() for k, v in row.items()]


class CharPolyPayload(Payload):
    family: str
    n: int
    coeffs: List[str]
    """Coefficients in ascending powers of t."""
    poly: str
    samples: List[Sample]
    validation: Sample

    def records(self) -> List[Record]:
        return [
            {"family": self.family, "n": str(self.n), "power": str(i), "coeff": c}
            for i, c in enumerate(self.coeffs)
        ]

    def text_lines(self) -> List[str]:
        lines = [f"chi of {self.family} in dimension {self.n}: {self.poly}"]
        lines += [f"  chi({s.q}) = {s.count}" for s in self.samples]
        v = self.validation
        lines.append(f"  validated at q={v.q}: {v.count}")
        return lines


class CountPayload(Payload):
    graph: str
    vertices: int
    edges: int
    n: Optional[int] = None
    cap: Optional[int] = None
    counts: List[str]
    """s_0, s_1, ... up to the requested size."""

    def records(self) -> List[Record]:
        first = self.n if self.n is not None else 0
        return [
            {"graph": self.graph, "n": str(first + i), "count": c}
            for i, c in enumerate(self.counts)
        ]

    def text_lines(self) -> List[str]:
        head = f"{self.graph} ({self.vertices} vertices, {self.edges} edges)"
        first = self.n if self.n is not None else 0
        return [head] + [f"  s_{first + i} = {c}" for i, c in enumerate(self.counts)]


class TableCellPayload(BaseModel):
    pair: str
    q: int
    s3: str
    value: str


class TablePayload(Payload):
    pairs: List[str]
    primes: List[int]
    cells: List[TableCellPayload]
    matches_reference: bool

    def records(self) -> List[Record]:
        return [
            {"pair": c.pair, "q": str(c.q), "s3": c.s3, "value": c.value}
            for c in self.cells
        ]

    def text_lines(self) -> List[str]:
        width = max(len(str(q)) for q in self.primes) + 6
        lines = ["pair".ljust(8) + "".join(str(q).rjust(width) for q in self.primes)]
        for pair in self.pairs:
            row = [c.value for c in self.cells if c.pair == pair]
            lines.append(pair.ljust(8) + "".join(v.rjust(width) for v in row))
        lines.append(f"matches reference: {_flag(self.matches_reference)}")
        return lines


class ReportPayload(Payload):
    """Outcome of a verification or probe: the parameters and one row per
    compared quantity."""

    check: str
    params: Dict[str, str]
    rows: List[Record]
    notes: List[str] = []
    label: Optional[str] = None

    def records(self) -> List[Record]:
        return [{"check": self.check, **row} for row in self.rows]

    def text_lines(self) -> List[str]:
        head = f"{self.check}: {'pass' if self.passed else 'FAIL'}"
        if self.label is not None:
            head = f"{self.label} {self.check}"
        lines = [head]
        lines += [f"  {key} = {value}" for key, value in self.params.items()]
        for row in self.rows:
            lines.append("  " + " ".join(f"{k}={v}" for k, v in row.items()))
        lines += [f"  note: {note}" for note in self.notes]
        return lines


def _payload(cls: type, passed: bool, **fields: Any) -> Any:
    return cls(**{"pass": passed}, **fields)


def _poly_coeffs(poly: QPolynomial) -> List[str]:
    return _ints(poly.coeffs)


def charpoly_payload(result: CharPolyResult) -> CharPolyPayload:
    samples = [Sample(q=str(q), count=str(c)) for q, c in result.samples]
    validation = Sample(
        q=str(result.validation_prime), count=str(result.validation_count)
    )
    return _payload(
        CharPolyPayload,
        True,
        command="charpoly",
        family=result.family.describe(),
        n=result.n,
        coeffs=_poly_coeffs(result.poly),
        poly=str(result.poly),
        samples=samples,
        validation=validation,
    )


def count_payload(
    graph: str,
    vertices: int,
    edges: int,
    counts: IndependenceCounts,
    n: Optional[int] = None,
) -> CountPayload:
    values = [counts[n]] if n is not None else list(counts.counts)
    return _payload(
        CountPayload,
        True,
        command="count",
        graph=graph,
        vertices=vertices,
        edges=edges,
        n=n,
        cap=None if n is not None else counts.cap,
        counts=_ints(values),
    )


def table_payload(table: MultiplicativeTable) -> TablePayload:
    cells = [
        TableCellPayload(
            pair=_joined(c.pair), q=c.q, s3=str(c.s3), value=str(c.value)
        )
        for c in table.cells
    ]
    matches = table.matches_reference()
    return _payload(
        TablePayload,
        matches,
        command="table",
        pairs=[_joined(p) for p in table.pairs],
        primes=list(table.primes),
        cells=cells,
        matches_reference=matches,
    )


@singledispatch
def report_rows(report: Any) -> Tuple[List[Record], List[str]]:
    """Rows and notes describing one report."""
    raise TypeError(f"no rendering for {type(report).__name__}")


@report_rows.register
def _(report: UnionReport) -> Tuple[List[Record], List[str]]:
    rows = [
        {
            "n": str(r.n),
            "union": str(r.union_count),
            "single": str(r.single_count),
            "equal": _flag(r.equal),
        }
        for r in report.rows
    ]
    return rows, []


@report_rows.register
def _(report: EssentialityReport) -> Tuple[List[Record], List[str]]:
    rows = [
        {
            "n": str(r.n),
            "essential": _flag(r.essential),
            "counts": _joined(r.counts),
            "s_dependent": _flag(r.s_dependent),
            "consistent": _flag(r.consistent),
        }
        for r in report.rows
    ]
    return rows, []


@report_rows.register
def _(report: ShiftReport) -> Tuple[List[Record], List[str]]:
    row = {
        "n": str(report.n),
        "chi": str(report.chi),
        "shifted": str(report.shifted),
        "equal": _flag(report.passed),
        "generic_shifted": str(report.generic_shifted),
        "generic_agrees": _flag(report.generic_agrees),
    }
    notes = []
    if not report.generic_agrees:
        notes.append("the generic-offset polynomial differs from chi in this dimension")
    return [row], notes


@report_rows.register
def _(report: InvarianceReport) -> Tuple[List[Record], List[str]]:
    rows = [
        {
            "a": _joined(e.a),
            "independent": _flag(e.independent),
            "poly": str(e.poly),
            "regions": str(e.regions),
        }
        for e in report.entries
    ]
    return rows, [f"regions shared by independent sets: {_flag(report.regions_shared)}"]


@report_rows.register
def _(report: ClosedFormReport) -> Tuple[List[Record], List[str]]:
    row = {
        "form": report.form.value,
        "n": str(report.n),
        "m": str(report.m),
        "computed": str(report.computed),
        "closed": str(report.closed),
        "equal": _flag(report.passed),
    }
    return [row], []


@report_rows.register
def _(report: CycleReport) -> Tuple[List[Record], List[str]]:
    rows = [
        {
            "k": str(r.k),
            "n": str(r.n),
            "counted": str(r.counted),
            "formula": str(r.formula),
        }
        for r in report.rows
    ]
    return rows, []


@report_rows.register
def _(report: FourLinesReport) -> Tuple[List[Record], List[str]]:
    row = {
        "whitney": str(report.whitney),
        "mobius": str(report.mobius),
        "regions": str(report.regions),
        "bounded": str(report.bounded),
    }
    return [row], []


@report_rows.register
def _(report: DeletionRestrictionReport) -> Tuple[List[Record], List[str]]:
    rows = [
        {"arrangement": key, "poly": str(p)} for key, p in sorted(report.polys.items())
    ]
    return rows, []


@report_rows.register
def _(report: EgfPowerReport) -> Tuple[List[Record], List[str]]:
    rows = [
        {
            "n": str(n),
            "regions": str(report.regions[n]),
            "lhs": str(report.lhs.coeffs[n]),
            "rhs": str(report.rhs.coeffs[n]),
        }
        for n in range(report.order + 1)
    ]
    return rows, []


@report_rows.register
def _(report: EgfCoefficients) -> Tuple[List[Record], List[str]]:
    rows = []
    for i, part in enumerate(report.connected):
        row = {
            "n": str(i + 1),
            "connected": str(part),
            "b": str(report.b[i]),
            "c": str(report.c[i]),
        }
        if report.f_at_one is not None:
            row["f_at_one"] = str(report.f_at_one[i])
        rows.append(row)
    return rows, []


@report_rows.register
def _(report: PolynomialityReport) -> Tuple[List[Record], List[str]]:
    rows = [
        {"k": str(k), "counted": str(count), "interpolated": str(report.poly(k))}
        for k, count in report.checks
    ]
    return rows, [f"s_{report.n}(F(a, k)) = {report.poly}"]


@report_rows.register
def _(report: SpotCheck) -> Tuple[List[Record], List[str]]:
    row = {
        "n": str(report.n),
        "q": str(report.q),
        "counted": str(report.counted),
        "expected": str(report.expected),
    }
    return [row], []


@report_rows.register
def _(report: OracleReport) -> Tuple[List[Record], List[str]]:
    rows = [
        {
            "arrangement": r.arrangement,
            "whitney": str(r.whitney),
            "mobius": str(r.mobius),
            "counts": ",".join(f"{q}:{c}" for q, c in r.counts),
            "agree": _flag(r.passed),
        }
        for r in report.rows
    ]
    return rows, []


@report_rows.register
def _(report: ProbeReport) -> Tuple[List[Record], List[str]]:
    rows = [
        {
            "partition": _joined(r.partition),
            "union": _joined(r.union_counts),
            "single": _joined(r.single_counts),
            "equal": _flag(r.equal),
        }
        for r in report.rows
    ]
    notes = [f"equality observed on every partition: {_flag(report.equality_observed)}"]
    return rows, notes


def report_payload(
    check: str,
    params: Dict[str, Any],
    reports: Sequence[Any],
    passed: bool,
    command: str = "verify",
    label: Optional[str] = None,
    notes: Sequence[str] = (),
) -> ReportPayload:
    rows: List[Record] = []
    all_notes = list(notes)
    for report in reports:
        more_rows, more_notes = report_rows(report)
        rows += more_rows
        all_notes += more_notes
    return _payload(
        ReportPayload,
        passed,
        command=command,
        check=check,
        params={key: str(value) for key, value in params.items()},
        rows=rows,
        notes=all_notes,
        label=label,
    )


def _to_csv(records: List[Record]) -> str:
    if not records:
        return ""
    header: List[str] = []
    for record in records:
        header += [key for key in record if key not in header]
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buffer.getvalue()


def render(payload: Payload, output_format: str) -> str:
    """Payload as the text written to stdout."""
    if output_format == "json":
        return json.dumps(payload.dict(by_alias=True), sort_keys=True) + "\n"
    if output_format == "csv":
        return _to_csv(payload.records())
    if output_format == "text":
        return "\n".join(payload.text_lines()) + "\n"
    raise ValueError(f"unknown output format {output_format}")


PAYLOADS: Dict[str, type] = {
    "charpoly": CharPolyPayload,
    "count": CountPayload,
    "table": TablePayload,
    "verify": ReportPayload,
    "probe": ReportPayload,
}


def payload_schema(command: str) -> Dict[str, Any]:
    """JSON schema of the payload `command` writes."""
    return PAYLOADS[command].schema(by_alias=True)
