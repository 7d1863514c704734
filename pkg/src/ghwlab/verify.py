"""Verification suites: worked instances, character-sum identities and structural sweeps.

``core`` runs the small worked instances, the empty-set case, the (3, 6)
special-mode probe, Omega and period-sum checks on small fields and a
method-agreement grid. ``extended`` adds the full quadratic-period grid, subspace
count sweeps, field-axiom sweeps and larger partial hierarchies.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .analysis import AnalysisConfig, analyze
from .bounds import evaluate_bounds
from .charsums import (
    gaussian_period_bf,
    gaussian_period_closed_N2,
    period_sum_sides,
    omega_bf_all_b,
    omega_closed,
    omega_params,
)
from .codes import build_defining_set, d_mode_params, expected_weights, summarize, closed_length_dimension
from .cyclo import CycInt, quad_to_cyc
from .ghw import gaussian_binomial, ghw_closed, ghw_hyperplane, ghw_subcode_bf, rref_blocks
from .gf import build_field

PASS = "PASS"
FAIL = "FAIL"
EXPECTED = "EXPECTED_DISCREPANCY"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status in (PASS, EXPECTED)


def _status(cond: bool) -> str:
    return PASS if cond else FAIL


# --- individual checks (each returns (status, detail)) ----------------------


def check_example(p, m, mode, n, k, hierarchy, methods, mds=None, plotkin=None, griesmer=None):
    a = analyze(AnalysisConfig(p, m, mode, methods=tuple(methods)))
    got = {meth: a.ghw.hierarchy(meth) for meth in methods}
    ok = a.summary.n == n and a.summary.k == k and all(h == list(hierarchy) for h in got.values())
    ok = ok and a.ghw.agreement
    b = a.bounds
    if mds is not None:
        ok = ok and b.mds_ranks == list(mds)
    if plotkin is not None:
        ok = ok and set(plotkin) <= set(b.plotkin_ranks)
    if griesmer is not None:
        ok = ok and set(griesmer) <= set(b.griesmer_ranks)
    detail = f"[n,k]=[{a.summary.n},{a.summary.k}] " + " ".join(f"{mm}={h}" for mm, h in got.items())
    if b is not None:
        detail += f" mds={b.mds_ranks} plotkin={b.plotkin_ranks} griesmer={b.griesmer_ranks}"
    return _status(ok), detail


def check_degenerate(p=5, m=2):
    ctx = build_field(p, m)
    params = d_mode_params(p, m, "special")
    # direct count over all nonzero x, independent of build_defining_set
    d = params.d
    n_direct = sum(1 for c in range(1, ctx.q) if ctx.trace(ctx.pow(ctx.elem(c), d)) == 0)
    D = build_defining_set(ctx, params)
    s = summarize(ctx, D)
    b = evaluate_bounds(s.n, s.k, p, [])
    ok = n_direct == 0 and s.n == 0 and s.k == 0 and b.degenerate
    return _status(ok), f"direct n={n_direct} over {ctx.q - 1} elements, k={s.k}, degenerate={b.degenerate}"


def probe_36_special():
    """(3, 6) special mode: the brute-force length against the closed-form 364 and the analytic 728."""
    ctx = build_field(3, 6)
    params = d_mode_params(3, 6, "special")
    D = build_defining_set(ctx, params)
    s = summarize(ctx, D)
    tn, _ = closed_length_dimension(params)
    hier = [ghw_hyperplane(ctx, D, r) for r in range(1, s.k + 1)]
    closed = [ghw_closed_quiet(params, r) for r in range(1, 7)]
    cite = "; ".join(params.hypothesis_warnings())
    detail = (
        f"brute n={s.n} k={s.k} hierarchy={hier}; closed-form n={tn} hierarchy={closed}; "
        f"analytic n=728; violated: {cite}"
    )
    if s.n != tn:
        return EXPECTED, detail
    return PASS, detail


def ghw_closed_quiet(params, r):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return ghw_closed(params, r)


def check_quadratic_periods(grid):
    bad = []
    count = 0
    for p, m in grid:
        ctx = build_field(p, m)
        periods = [gaussian_period_bf(ctx, 2, i) for i in (0, 1)]
        for i in (0, 1):
            count += 1
            if quad_to_cyc(p, gaussian_period_closed_N2(p, m, i)) != periods[i]:
                bad.append((p, m, i))
        if periods[0] + periods[1] != CycInt.integer(p, -1):
            bad.append((p, m, "sum"))
    return _status(not bad), f"{count} periods over {len(grid)} fields; mismatches: {bad}"


def quadratic_grid(q_max=20_000):
    return [(p, m) for p in (3, 5, 7, 11, 13) for m in range(1, 5) if p**m <= q_max]


def check_omega(cases):
    bad = []
    pairs = 0
    for p, m, M in cases:
        ctx = build_field(p, m)
        params = omega_params(p, m, M)
        for a in range(1, ctx.q):
            row = omega_bf_all_b(ctx, a, M)
            for b in range(ctx.q):
                pairs += 1
                if omega_closed(ctx, params, a, b).to_cyc(ctx) != row[b]:
                    bad.append((p, m, M, a, b))
    return _status(not bad), f"{pairs} (a,b) pairs over {cases}; mismatches: {len(bad)}"


def check_period_sum(cases):
    bad = [(p, m) for p, m in cases if (lambda s: s[0] != s[1])(period_sum_sides(p, m))]
    detail = ", ".join(f"({p},{m}): {period_sum_sides(p, m)[0]}" for p, m in cases)
    return _status(not bad), detail + (f"; mismatches {bad}" if bad else "")


AGREEMENT_GRID = [
    (3, 2, "one"),
    (3, 3, "one"),
    (3, 4, "one"),
    (3, 5, "one"),
    (5, 2, "one"),
    (5, 3, "one"),
    (7, 2, "one"),
    (7, 3, "one"),
    (3, 2, "special"),
    (7, 2, "special"),
    (11, 2, "special"),
    (19, 2, "special"),
    (23, 2, "special"),
]


def check_agreement(grid=AGREEMENT_GRID):
    bad = []
    for p, m, mode in grid:
        a = analyze(AnalysisConfig(p, m, mode))
        closed = a.ghw.hierarchy("closed")
        ref = a.ghw.hierarchy("subcode")
        weights = sorted(expected_weights(a.defining_set.params))
        if not a.ghw.agreement or closed != ref or a.summary.nonzero_weights != weights:
            bad.append((p, m, mode))
    return _status(not bad), f"{len(grid)} instances, 4 methods each; failures: {bad}"


def check_subspace_counts(ps=(3, 5), m_max=6):
    bad = []
    total = 0
    for p in ps:
        for m in range(0, m_max + 1):
            for r in range(0, m + 1):
                c = sum(len(b) for b in rref_blocks(p, m, r))
                total += c
                if c != gaussian_binomial(m, r, p):
                    bad.append((p, m, r, c))
    return _status(not bad), f"{total} subspaces enumerated; mismatches: {bad}"


def check_field_sweeps(fields=((3, 6), (5, 4), (7, 3), (11, 2))):
    problems = []
    for p, m in fields:
        ctx = build_field(p, m)
        q = ctx.q
        codes = np.arange(q)
        tr = ctx.trace_table
        if not np.all(np.bincount(tr, minlength=p) == p ** (m - 1)):
            problems.append((p, m, "fiber balance"))
        if not np.all(tr[ctx.pow_codes(codes, p)] == tr):
            problems.append((p, m, "frobenius"))
        nz = codes[1:]
        x, y = np.meshgrid(nz[:: max(1, len(nz) // 200)], nz)
        prod = ctx.mul_codes(x, y)
        if not np.all(ctx.log_table[prod] == (ctx.log_table[x] + ctx.log_table[y]) % (q - 1)):
            problems.append((p, m, "dlog"))
        s = ctx.add_codes(x, y)
        if not np.all(tr[s] == (tr[x] + tr[y]) % p):
            problems.append((p, m, "trace additivity"))
    return _status(not problems), f"fields {list(fields)}; problems: {problems}"


def check_partial_76():
    """(7, 6) special (s = 3, gcd(m, p) = 1): d_1 by subcode; d_5 and d_6 by hyperplane; all against the closed form."""
    ctx = build_field(7, 6)
    params = d_mode_params(7, 6, "special")
    D = build_defining_set(ctx, params)
    n_ok = D.n == closed_length_dimension(params)[0]
    got = {1: ghw_subcode_bf(ctx, D, 1), 5: ghw_hyperplane(ctx, D, 5), 6: ghw_hyperplane(ctx, D, 6)}
    want = {r: ghw_closed(params, r) for r in got}
    return _status(n_ok and got == want), f"n={D.n} brute {got} closed {want}"


def _cases(suite: str) -> list[tuple[str, Callable[[], tuple[str, str]]]]:
    all4 = ("closed", "hyperplane", "charsum", "subcode")
    core = [
        ("(3,3) d=1: [8,2] (6,8)", lambda: check_example(3, 3, "one", 8, 2, (6, 8), all4, [2], [1, 2], [1, 2])),
        (
            "(3,6) d=1: [242,5]",
            lambda: check_example(
                3, 6, "one", 242, 5, (162, 216, 234, 240, 242), ("closed", "hyperplane", "subcode"), [5], range(1, 6), range(1, 6)
            ),
        ),
        ("(3,2) special: [4,2] (2,4)", lambda: check_example(3, 2, "special", 4, 2, (2, 4), all4, [2], [2])),
        ("(7,2) special: [12,2] (6,12)", lambda: check_example(7, 2, "special", 12, 2, (6, 12), all4)),
        ("(11,2) special: [20,2] (10,20)", lambda: check_example(11, 2, "special", 20, 2, (10, 20), all4)),
        ("(5,2) special: empty defining set", check_degenerate),
        ("probe: (3,6) special vs [364,6]", probe_36_special),
        ("Omega closed form: (3,4),(7,8),(11,12)", lambda: check_omega([(3, 2, 4), (7, 2, 8), (11, 2, 12)])),
        ("period-sum identity: p in 3,7,11", lambda: check_period_sum([(3, 2), (7, 2), (11, 2)])),
        ("method agreement grid", check_agreement),
        ("quadratic periods: fields with q <= 2000", lambda: check_quadratic_periods(quadratic_grid(2000))),
    ]
    if suite == "core":
        return core
    extended = [
        ("quadratic periods: full grid q <= 2*10^4", lambda: check_quadratic_periods(quadratic_grid())),
        ("Omega closed form: second-branch cases", lambda: check_omega([(3, 2, 2), (5, 2, 3), (7, 2, 4), (3, 4, 2), (3, 4, 5)])),
        ("subspace counts p in 3,5, m <= 6", check_subspace_counts),
        ("field sweeps (trace, Frobenius, dlog)", check_field_sweeps),
        ("partial hierarchy (7,6) special", check_partial_76),
    ]
    return core + extended


def run_suite(suite: str = "core", progress: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    if suite not in ("core", "extended"):
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for name, fn in _cases(suite):
        t = time.perf_counter()
        try:
            status, detail = fn()
        except Exception as exc:  # a crash is a failed check, not an aborted suite
            status, detail = FAIL, f"{type(exc).__name__}: {exc}"
        res = CheckResult(name, status, detail, time.perf_counter() - t)
        results.append(res)
        if progress:
            progress(res)
    return results


def format_result(res: CheckResult) -> str:
    return f"{res.status:<20} {res.name:<42} {res.seconds:7.2f}s  {res.detail}"
