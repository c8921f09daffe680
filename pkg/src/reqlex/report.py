"""Joined per-program metric records, report emission, and trend correlation.

One ``MetricsRecord`` pairs a program's requirement-based complexity
breakdown with its code-side metrics.  A ``TrendReport`` holds the Spearman
rank correlation of RBC against each code metric over a corpus, which is how
"the requirement view tracks the code view" is made quantitative: positive
rho per metric means the two views rank programs the same way.

Emission is deterministic: records are sorted by name and numbers are
written in full precision, so identical inputs always produce byte-identical
documents.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .rbc_engine import RbcBreakdown

CSV_COLUMNS = (
    "name", "rbc", "ioc", "fr", "nfr", "rc", "pc", "pca", "dci", "ifc",
    "ulc", "sfc", "halstead_D", "halstead_E", "vG", "klcid", "cfs", "cicm",
)

#: Code metrics correlated against RBC in the trend report.
TREND_METRICS = ("halstead_D", "halstead_E", "vG", "klcid", "cfs", "cicm")

FORMATS = ("human", "csv", "json")


@dataclass(frozen=True)
class MetricsRecord:
    """The joined row for one program: RBC breakdown plus code metrics."""

    name: str
    rbc: float
    ioc: int
    fr: int
    nfr: int
    rc: float
    pc: float
    pca: float
    dci: int
    ifc: int
    ulc: int
    sfc: int
    halstead_D: float
    halstead_E: float
    vG: int
    klcid: float | None
    cfs: float
    cicm: float
    detail: dict | None = field(default=None, compare=False)

    def row(self) -> dict:
        return {col: getattr(self, col) for col in CSV_COLUMNS}


@dataclass(frozen=True)
class TrendReport:
    """Spearman rho (and sample size) of RBC against each code metric."""

    rho_by_metric: dict
    programs: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "rho_by_metric": {
                metric: {"rho": rho, "n": n}
                for metric, (rho, n) in self.rho_by_metric.items()
            },
            "programs": list(self.programs),
        }


def make_record(name: str, breakdown: RbcBreakdown, code: dict) -> MetricsRecord:
    """Assemble the joined record from an RBC breakdown and code metrics."""
    return MetricsRecord(
        name=name,
        rbc=breakdown.rbc,
        ioc=breakdown.ioc,
        fr=breakdown.fr,
        nfr=breakdown.nfr,
        rc=breakdown.rc,
        pc=breakdown.pc,
        pca=breakdown.pca,
        dci=breakdown.dci,
        ifc=breakdown.ifc,
        ulc=breakdown.ulc,
        sfc=breakdown.sfc,
        halstead_D=code["D"],
        halstead_E=code["effort_dv"],
        vG=code["vG_graph"],
        klcid=code.get("klcid"),
        cfs=code["cfs"],
        cicm=code["cicm"],
        detail=code,
    )


def join_records(manifest_results, code_results):
    """Inner-join the two result sets on program name.

    Each argument is a mapping or an iterable of (name, value) pairs; a name
    occurring twice on either side is an error.  Returns (records, warnings),
    where warnings describe names present on only one side.
    """
    manifests = _as_mapping(manifest_results, "manifest")
    codes = _as_mapping(code_results, "code")
    records = []
    warnings = []
    for name in sorted(manifests.keys() | codes.keys()):
        if name not in codes:
            warnings.append(f"manifest {name!r} has no matching source")
        elif name not in manifests:
            warnings.append(f"source {name!r} has no matching manifest")
        else:
            records.append(make_record(name, manifests[name], codes[name]))
    return records, warnings


def _as_mapping(results, side: str) -> dict:
    if isinstance(results, dict):
        return results
    out: dict = {}
    for name, value in results:
        if name in out:
            raise ValueError(f"duplicate {side} name {name!r}")
        out[name] = value
    return out


def _average_ranks(values) -> list[float]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[order[j + 1]] == values[order[i]]:
            j += 1
        mean_rank = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = mean_rank
        i = j + 1
    return ranks


def spearman(xs, ys) -> float:
    """Spearman rank correlation with average-rank tie handling.

    Returns NaN when either sequence is constant (no rank ordering exists).
    """
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise ValueError("need at least two paired observations")
    rx = _average_ranks(list(xs))
    ry = _average_ranks(list(ys))
    n = len(rx)
    mx = sum(rx) / n
    my = sum(ry) / n
    cov = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    vx = sum((a - mx) ** 2 for a in rx)
    vy = sum((b - my) ** 2 for b in ry)
    if vx == 0 or vy == 0:
        return math.nan
    return cov / math.sqrt(vx * vy)


def compute_trend(records) -> TrendReport:
    """Correlate RBC against each code metric, excluding absent values pairwise."""
    rho_by_metric = {}
    for metric in TREND_METRICS:
        pairs = [
            (r.rbc, getattr(r, metric))
            for r in records
            if getattr(r, metric) is not None
        ]
        if len(pairs) >= 2:
            rho = spearman([p[0] for p in pairs], [p[1] for p in pairs])
            rho_by_metric[metric] = (rho, len(pairs))
    return TrendReport(
        rho_by_metric=rho_by_metric,
        programs=tuple(sorted(r.name for r in records)),
    )


# ---------------------------------------------------------------------------
# Emission and parsing


def _cell(value) -> str:
    if value is None:
        return ""
    return repr(value) if isinstance(value, float) else str(value)


def emit(records, trend: TrendReport | None = None, format: str = "csv") -> str:
    """Render records (and optionally the trend) in the requested format."""
    records = sorted(records, key=lambda r: r.name)
    if format == "csv":
        return _emit_csv(records, trend)
    if format == "json":
        return _emit_json(records, trend)
    if format == "human":
        return _emit_human(records, trend)
    raise ValueError(f"unknown format {format!r}; choose from {FORMATS}")


def _emit_csv(records, trend) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([_cell(r.row()[col]) for col in CSV_COLUMNS])
    if trend is not None:
        buf.write("\n")
        writer.writerow(["metric", "rho", "n"])
        for metric, (rho, n) in trend.rho_by_metric.items():
            writer.writerow([metric, _cell(rho), n])
    return buf.getvalue()


def _emit_json(records, trend) -> str:
    doc: dict = {"records": [r.row() for r in records]}
    if trend is not None:
        doc["trend"] = trend.as_dict()
    return json.dumps(doc, indent=2) + "\n"


def _emit_human(records, trend) -> str:
    cols = list(CSV_COLUMNS)
    table = [[_pretty(r.row()[c]) for c in cols] for r in records]
    widths = [
        max(len(cols[i]), *(len(row[i]) for row in table)) if table else len(cols[i])
        for i in range(len(cols))
    ]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for row in table:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    if trend is not None:
        lines.append("")
        lines.append("trend (Spearman rho of rbc vs. each metric):")
        for metric, (rho, n) in trend.rho_by_metric.items():
            lines.append(f"  {metric:<12} rho={rho:+.3f}  n={n}")
    return "\n".join(lines) + "\n"


def _pretty(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.2f}"
    return str(value)


def _parse_number(text: str):
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        return float(text)


def parse_csv(text: str) -> list[MetricsRecord]:
    """Read back the record block of a CSV report."""
    record_block = text.split("\n\n", 1)[0]
    rows = list(csv.reader(io.StringIO(record_block)))
    if not rows or tuple(rows[0]) != CSV_COLUMNS:
        raise ValueError("not a metrics CSV: header mismatch")
    records = []
    for row in rows[1:]:
        if not row:
            continue
        values = dict(zip(CSV_COLUMNS, row))
        kwargs = {col: _parse_number(values[col]) for col in CSV_COLUMNS[1:]}
        records.append(MetricsRecord(name=values["name"], **kwargs))
    return records


def parse_json(text: str):
    """Read back a JSON report; returns (records, trend dict or None)."""
    doc = json.loads(text)
    records = []
    for row in doc["records"]:
        kwargs = {col: row[col] for col in CSV_COLUMNS}
        records.append(MetricsRecord(**kwargs))
    return records, doc.get("trend")
