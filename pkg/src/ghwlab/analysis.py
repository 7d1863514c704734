"""End-to-end analysis of one (p, m, d-mode) instance and its renderings."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from .bounds import BoundReport, evaluate_bounds
from .codes import CodeSummary, DefiningSet, build_defining_set, d_mode_params, summarize
from .errors import BoundViolation
from .ghw import METHODS, GhwReport, weight_hierarchy
from .gf import FieldCtx, build_field

EXIT_OK = 0
EXIT_DISAGREE = 2
EXIT_INFEASIBLE = 3
EXIT_USAGE = 64


@dataclass
class AnalysisConfig:
    p: int
    m: int
    d_mode: str
    methods: tuple[str, ...] = METHODS
    r_max: int | None = None
    format: str = "table"
    threads: int = 1
    feasibility_ceiling: int | None = None
    timing: bool = False

    def __post_init__(self):
        if not self.methods:
            raise ValueError("at least one method is required")
        bad = [m for m in self.methods if m not in METHODS]
        if bad:
            raise ValueError(f"unknown methods {bad}; choose from {', '.join(METHODS)}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.format not in ("table", "json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")


@dataclass
class Analysis:
    config: AnalysisConfig
    ctx: FieldCtx
    defining_set: DefiningSet
    summary: CodeSummary
    ghw: GhwReport
    bounds: BoundReport | None
    warnings: list[str] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return self.ghw.agreement and not (self.bounds and self.bounds.violations())

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.ok else EXIT_DISAGREE


def analyze(config: AnalysisConfig) -> Analysis:
    """Build the code, compute its hierarchy with the requested methods, apply the bounds.

    Infeasible brute-force requests raise :class:`~ghwlab.errors.TooLarge`.
    """
    start = time.perf_counter()
    ctx = build_field(config.p, config.m)
    params = d_mode_params(config.p, config.m, config.d_mode)
    D = build_defining_set(ctx, params)
    summary = summarize(ctx, D)
    report = weight_hierarchy(ctx, D, config.methods, config.r_max, config.feasibility_ceiling, config.threads)

    warnings = list(summary.warnings)
    if params.mode == "one" and params.hypothesis_warnings():
        warnings.append("the d = 1 hierarchy formula does not depend on gcd(m, p) = 1; brute force decides")
    warnings.extend(report.warnings)

    method = report.authoritative
    bounds = None
    if summary.k == 0:
        bounds = evaluate_bounds(summary.n, 0, ctx.p, [])
        warnings.append("degenerate code: k = 0")
    elif method is not None:
        hierarchy = report.hierarchy(method)
        try:
            bounds = evaluate_bounds(summary.n, summary.k, ctx.p, hierarchy)
        except BoundViolation as exc:
            warnings.append(f"bound violation in {method} hierarchy: {exc}")
            report.agreement = False
        else:
            warnings.extend(bounds.violations())
        nz = summary.min_distance
        if hierarchy and nz != hierarchy[0]:
            warnings.append(f"minimum weight {nz} differs from d_1 = {hierarchy[0]}")
            report.agreement = False

    elapsed = int((time.perf_counter() - start) * 1000)
    return Analysis(config, ctx, D, summary, report, bounds, warnings, elapsed)


# --- renderings --------------------------------------------------------------


def to_document(a: Analysis) -> dict:
    """JSON-ready dict with a fixed key order and integers only."""
    ctx, s, g, b = a.ctx, a.summary, a.ghw, a.bounds
    doc = {
        "params": {
            "p": ctx.p,
            "m": ctx.m,
            "d_mode": a.config.d_mode,
            "d": a.defining_set.params.d,
            "modulus": list(ctx.modulus),
            "alpha": list(ctx.alpha.coeffs),
        },
        "code": {
            "n": s.n,
            "k": s.k,
            "kernel_dim": s.kernel_dim,
            "weight_distribution": {str(w): c for w, c in s.weight_distribution.items()},
            "closed_form": {"n": s.closed_n, "k": s.closed_k},
        },
        "ghw": {
            "methods": [m for m in METHODS if m in a.config.methods],
            "hierarchy": {
                str(r): {m: per[m] for m in METHODS if m in per} for r, per in g.values.items()
            },
            "agreement": g.agreement,
            "authoritative": g.authoritative,
            "advisory": list(g.advisory),
        },
        "bounds": _bounds_doc(b),
        "warnings": list(a.warnings),
        "timing": {"total_ms": a.elapsed_ms} if a.config.timing else {},
    }
    return doc


def _bounds_doc(b: BoundReport | None) -> dict:
    if b is None:
        return {"degenerate": False, "rows": {}}
    return {
        "degenerate": b.degenerate,
        "mds_ranks": b.mds_ranks,
        "plotkin_ranks": b.plotkin_ranks,
        "griesmer_ranks": b.griesmer_ranks,
        "rows": {
            str(row.r): {
                "d": row.d,
                "singleton_upper": row.singleton_upper,
                "plotkin_like": row.plotkin_like,
                "griesmer_like": row.griesmer_like,
                "flags": row.flags,
            }
            for row in b.rows
        },
    }


def dumps_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def render_json(a: Analysis) -> str:
    return dumps_json(to_document(a))


CSV_COLUMNS = (
    "r",
    "d_closed",
    "d_hyperplane",
    "d_charsum",
    "d_subcode",
    "singleton_up",
    "plotkin",
    "griesmer",
    "flags",
)


def render_csv(a: Analysis) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    rows = {row.r: row for row in a.bounds.rows} if a.bounds else {}
    for r, per in a.ghw.values.items():
        b = rows.get(r)
        w.writerow(
            [r]
            + [per.get(m, "") for m in ("closed", "hyperplane", "charsum", "subcode")]
            + ([b.singleton_upper, b.plotkin_like, b.griesmer_like, ";".join(b.flags)] if b else ["", "", "", ""])
        )
    return buf.getvalue()


def render_table(a: Analysis) -> str:
    ctx, s, g = a.ctx, a.summary, a.ghw
    lines = [
        f"F_{ctx.p}^{ctx.m}  modulus {list(ctx.modulus)}  alpha {list(ctx.alpha.coeffs)}",
        f"d-mode {a.config.d_mode} (d = {a.defining_set.params.d})",
        f"[n, k] = [{s.n}, {s.k}]   closed form [{s.closed_n}, {s.closed_k}]",
        "weights: " + ", ".join(f"{w}^{c}" for w, c in s.weight_distribution.items()),
    ]
    if s.k == 0:
        lines.append("degenerate code (k = 0): no hierarchy")
    else:
        methods = [m for m in METHODS if m in a.config.methods]
        header = ["r"] + methods + ["n-k+r", "plotkin", "griesmer", "flags"]
        body = []
        rows = {row.r: row for row in a.bounds.rows} if a.bounds else {}
        for r, per in g.values.items():
            b = rows.get(r)
            body.append(
                [str(r)]
                + [str(per.get(m, "-")) for m in methods]
                + ([str(b.singleton_upper), str(b.plotkin_like), str(b.griesmer_like), ",".join(b.flags)] if b else ["-"] * 4)
            )
        widths = [max(len(x) for x in col) for col in zip(header, *body)]
        fmt = lambda row: "  ".join(x.rjust(w) for x, w in zip(row, widths))  # noqa: E731
        lines.append(fmt(header))
        lines.extend(fmt(row) for row in body)
        lines.append(f"agreement: {'yes' if g.agreement else 'NO'}" + (f"  (advisory: {', '.join(g.advisory)})" if g.advisory else ""))
        if a.bounds:
            lines.append(f"r-MDS at r in {a.bounds.mds_ranks}")
    for w in a.warnings:
        lines.append(f"warning: {w}")
    if a.config.timing:
        lines.append(f"time: {a.elapsed_ms} ms")
    return "\n".join(lines) + "\n"


def render(a: Analysis) -> str:
    return {"table": render_table, "json": render_json, "csv": render_csv}[a.config.format](a)
