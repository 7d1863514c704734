"""Defining-set trace codes C_D = {(Tr(a x))_{x in D} : a in F_q}.

Two defining sets are supported, D = {x != 0 : Tr(x^d) = 0} with

* ``mode="one"``:     d = 1 (the trace-zero hyperplane minus 0);
* ``mode="special"``: d = (q-1)/(p+1), m even.

Brute-force results (length, dimension, weights) are always authoritative.
The closed-form length and dimension are computed alongside and any mismatch
or failed hypothesis is reported as a warning string.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import InvalidDMode
from .gf import FieldCtx, FqElem

MODES = ("one", "special")


@dataclass(frozen=True)
class HypothesisFlags:
    gcd_m_p_is_1: bool
    s_is_odd: bool | None
    p_mod_4: int


@dataclass(frozen=True)
class DModeParams:
    p: int
    m: int
    mode: str
    d: int
    s: int | None
    flags: HypothesisFlags

    @property
    def q(self) -> int:
        return self.p**self.m

    def hypothesis_warnings(self) -> list[str]:
        out = []
        if not self.flags.gcd_m_p_is_1:
            out.append(f"hypothesis gcd(m, p) = 1 fails: gcd({self.m}, {self.p}) = {math.gcd(self.m, self.p)}")
        if self.mode == "special":
            if not self.flags.s_is_odd:
                out.append(f"hypothesis 's = m/2 odd' fails: s = {self.s}")
            if self.flags.p_mod_4 == 1:
                out.append("p = 1 mod 4: the defining set is empty (degenerate code)")
        return out

    @property
    def hypotheses_hold(self) -> bool:
        f = self.flags
        if self.mode == "one":
            return f.gcd_m_p_is_1
        return f.gcd_m_p_is_1 and bool(f.s_is_odd)


def d_mode_params(p: int, m: int, mode: str) -> DModeParams:
    q = p**m
    flags_gcd = math.gcd(m, p) == 1
    if mode == "one":
        return DModeParams(p, m, "one", 1, None, HypothesisFlags(flags_gcd, None, p % 4))
    if mode == "special":
        if m % 2:
            raise InvalidDMode(f"special mode needs even m, got m={m}")
        s = m // 2
        d = (q - 1) // (p + 1)
        assert d * (p + 1) == q - 1
        return DModeParams(p, m, "special", d, s, HypothesisFlags(flags_gcd, s % 2 == 1, p % 4))
    raise InvalidDMode(f"unknown d-mode {mode!r}; expected one of {MODES}")


def closed_length_dimension(params: DModeParams) -> tuple[int, int]:
    """(n, k) as predicted in closed form for the two families."""
    p, m, q = params.p, params.m, params.q
    if params.mode == "one":
        return p ** (m - 1) - 1, m - 1
    if p % 4 == 1:
        return 0, 0
    return 2 * (q - 1) // (p + 1), m


@dataclass(frozen=True, eq=False)
class DefiningSet:
    ctx: FieldCtx
    params: DModeParams | None
    codes: np.ndarray  # element codes, ascending discrete log

    @property
    def n(self) -> int:
        return len(self.codes)

    @property
    def elements(self) -> list[FqElem]:
        return [self.ctx.elem(c) for c in self.codes]

    def __len__(self) -> int:
        return self.n

    def __contains__(self, x) -> bool:
        return bool(self.presence[self.ctx.code(x)])

    @functools.cached_property
    def presence(self) -> np.ndarray:
        mask = np.zeros(self.ctx.q, dtype=bool)
        mask[self.codes] = True
        return mask

    @functools.cached_property
    def generator_matrix(self) -> np.ndarray:
        """m x n matrix whose row i is the codeword of the monomial x^i."""
        ctx = self.ctx
        mono = ctx.powers
        return ctx.trace_table[ctx.mul_codes(mono[:, None], self.codes[None, :])]

    @functools.cached_property
    def span_basis(self) -> np.ndarray:
        """Digit rows of an RREF basis of the F_p-span of D."""
        if self.n == 0:
            return np.zeros((0, self.ctx.m), dtype=np.int64)
        return linalg.rref(self.ctx.digits_of(self.codes), self.ctx.p)[0]

    @functools.cached_property
    def kernel_basis(self) -> np.ndarray:
        """Digit rows spanning {a : c(a) = 0}."""
        return linalg.nullspace(self.generator_matrix.T, self.ctx.p)

    @functools.cached_property
    def message_basis(self) -> np.ndarray:
        """Digit rows spanning a complement of the kernel; c is injective on it."""
        return linalg.complement(self.kernel_basis, self.ctx.p, self.ctx.m)

    @property
    def k(self) -> int:
        return self.ctx.m - len(self.kernel_basis)


def build_defining_set(ctx: FieldCtx, params: DModeParams) -> DefiningSet:
    if (params.p, params.m) != (ctx.p, ctx.m):
        raise InvalidDMode(f"d-mode built for {params.p}^{params.m}, field is {ctx.p}^{ctx.m}")
    q1 = ctx.q - 1
    j = np.arange(q1, dtype=np.int64)
    xd = ctx.antilog_table[(j * params.d) % q1]
    keep = ctx.trace_table[xd] == 0
    codes = ctx.antilog_table[j[keep]]
    codes.setflags(write=False)
    return DefiningSet(ctx, params, codes)


def defining_set_from_codes(ctx: FieldCtx, codes) -> DefiningSet:
    codes = np.unique(np.asarray(codes, dtype=np.int64))
    codes = codes[codes != 0]
    codes = codes[np.argsort(ctx.log_table[codes], kind="stable")]
    codes.setflags(write=False)
    return DefiningSet(ctx, None, codes)


def codeword(ctx: FieldCtx, D: DefiningSet, a: FqElem | int) -> tuple[int, ...]:
    """(Tr(a x))_{x in D} in the order of D."""
    ca = ctx.code(a)
    return tuple(int(t) for t in ctx.trace_table[ctx.mul_codes(ca, D.codes)])


def codewords(ctx: FieldCtx, D: DefiningSet, message_codes) -> np.ndarray:
    """Codewords of many messages at once, one row each."""
    digits = ctx.digits_of(message_codes)
    return (digits @ D.generator_matrix) % ctx.p


@dataclass
class CodeSummary:
    n: int
    k: int
    kernel_dim: int
    weight_distribution: dict[int, int]
    closed_n: int | None = None
    closed_k: int | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w in self.weight_distribution if w)

    @property
    def min_distance(self) -> int | None:
        nz = self.nonzero_weights
        return nz[0] if nz else None


def summarize(ctx: FieldCtx, D: DefiningSet, chunk: int = 4096) -> CodeSummary:
    """Weight distribution over all q messages, with k taken from the kernel sweep."""
    q, p = ctx.q, ctx.p
    hist: dict[int, int] = {}
    zero_words = 0
    for start in range(0, q, chunk):
        msgs = np.arange(start, min(q, start + chunk), dtype=np.int64)
        if D.n == 0:
            w = np.zeros(len(msgs), dtype=np.int64)
        else:
            w = np.count_nonzero(codewords(ctx, D, msgs), axis=1)
        vals, counts = np.unique(w, return_counts=True)
        for v, c in zip(vals.tolist(), counts.tolist()):
            hist[v] = hist.get(v, 0) + c
        zero_words += int(np.count_nonzero(w == 0))

    kernel_dim = round(math.log(zero_words, p))
    if p**kernel_dim != zero_words:
        raise AssertionError(f"{zero_words} zero codewords is not a power of {p}")
    summary = CodeSummary(
        n=D.n,
        k=ctx.m - kernel_dim,
        kernel_dim=kernel_dim,
        weight_distribution=dict(sorted(hist.items())),
    )
    if summary.k != D.k:
        raise AssertionError("kernel sweep and nullspace rank disagree")

    if D.params is not None:
        tn, tk = closed_length_dimension(D.params)
        summary.closed_n, summary.closed_k = tn, tk
        summary.warnings.extend(D.params.hypothesis_warnings())
        if (tn, tk) != (summary.n, summary.k):
            summary.warnings.append(
                f"closed-form [n, k] = [{tn}, {tk}] differs from brute force [{summary.n}, {summary.k}]"
            )
    return summary


def expected_weights(params: DModeParams) -> set[int]:
    """Nonzero weights predicted in closed form (empty for degenerate codes)."""
    p, m = params.p, params.m
    if params.mode == "one":
        return {p ** (m - 1) - p ** (m - 2)} if m >= 2 else set()
    if p % 4 == 1:
        return set()
    s = params.s
    w0 = p ** (s - 1) * (2 * p**s - p + 1) * (p - 1) // (p + 1)
    w1 = 2 * p ** (s - 1) * (p**s + 1) * (p - 1) // (p + 1)
    return {w0, w1}
