"""Weight hierarchies d_1 < ... < d_k of defining-set codes, four ways.

``closed``      the closed formulas for the two families;
``hyperplane``  n - max |D cap H| over (k - r)-dimensional subspaces H of span(D);
``charsum``     n - max N(H_r), N(H_r) = (n + sum_{a in H_r^*} sum_{x in D} chi(a x)) / p^r;
``subcode``     min |Supp(U)| over r-dimensional subcodes U, straight from codewords.

The three brute-force routes enumerate subspaces as canonical RREF matrices
in batches so the inner work runs in numpy. Message-space enumerations
(``charsum``, ``subcode``) run over a complement of the kernel of a -> c(a),
which is injective there; for d = 1 this is the "same principle" adaptation
(the kernel is F_p), for the special family the kernel is trivial.
"""

from __future__ import annotations

import itertools
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from .codes import DefiningSet, DModeParams
from .errors import NonIntegerN, RankOutOfRange, TooLarge
from .gf import FieldCtx, FqElem
from .linalg import rank

METHODS = ("closed", "hyperplane", "charsum", "subcode")
DEFAULT_CEILING = 10**7
BLOCK_ELEMENTS = 1 << 21  # rough cap on array entries materialised per batch


class HypothesisWarning(UserWarning):
    pass


def feasibility_ceiling(ceiling: int | None = None) -> int:
    if ceiling is not None:
        return ceiling
    env = os.environ.get("GHWLAB_CEILING")
    return int(env) if env else DEFAULT_CEILING


def gaussian_binomial(m: int, r: int, p: int) -> int:
    """Number of r-dimensional subspaces of F_p^m."""
    if r < 0 or r > m:
        return 0
    num = den = 1
    for i in range(r):
        num *= p ** (m - i) - 1
        den *= p ** (r - i) - 1
    return num // den


# --- subspace enumeration ----------------------------------------------------


def _all_vectors(p: int, length: int) -> np.ndarray:
    """All p^length vectors over F_p as rows (first coordinate most significant)."""
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.arange(p**length, dtype=np.int64)
    return (idx[:, None] // p ** np.arange(length - 1, -1, -1, dtype=np.int64)) % p


def rref_blocks(p: int, dim: int, r: int, max_block: int = 1 << 14) -> Iterator[np.ndarray]:
    """Yield every r x dim RREF matrix of rank r over F_p, in batches (B, r, dim).

    Each r-dimensional subspace of F_p^dim has exactly one such matrix.
    """
    if not 0 <= r <= dim:
        raise RankOutOfRange(f"r={r} outside [0, {dim}]")
    if r == 0:
        yield np.zeros((1, 0, dim), dtype=np.int64)
        return
    for pivots in itertools.combinations(range(dim), r):
        template = np.zeros((r, dim), dtype=np.int64)
        free = []
        for i, pc in enumerate(pivots):
            template[i, pc] = 1
            free.extend((i, j) for j in range(pc + 1, dim) if j not in pivots)
        if not free:
            yield template[None]
            continue
        rows = np.array([f[0] for f in free])
        cols = np.array([f[1] for f in free])
        total = p ** len(free)
        weights = p ** np.arange(len(free) - 1, -1, -1, dtype=np.int64)
        for start in range(0, total, max_block):
            idx = np.arange(start, min(total, start + max_block), dtype=np.int64)
            vals = (idx[:, None] // weights) % p
            block = np.broadcast_to(template, (len(idx), r, dim)).copy()
            block[:, rows, cols] = vals
            yield block


class SubspaceIter:
    """All r-dimensional F_p-subspaces of the span of ``basis`` (elements of F_q).

    Iterating yields each subspace once, as a list of r basis elements.
    ``blocks()`` yields the same subspaces as digit arrays (B, r, m).
    """

    def __init__(self, ctx: FieldCtx, basis: Sequence[FqElem] | np.ndarray, r: int):
        if isinstance(basis, np.ndarray):
            digits = np.asarray(basis, dtype=np.int64).reshape(-1, ctx.m)
        else:
            digits = ctx.digits_of([ctx.code(b) for b in basis]).reshape(-1, ctx.m)
        if len(digits) and rank(digits, ctx.p) != len(digits):
            raise ValueError("ambient basis is not linearly independent")
        if not 0 <= r <= len(digits):
            raise RankOutOfRange(f"r={r} outside [0, {len(digits)}]")
        self.ctx = ctx
        self.ambient = digits
        self.r = r

    @property
    def ambient_dim(self) -> int:
        return len(self.ambient)

    def __len__(self) -> int:
        return gaussian_binomial(self.ambient_dim, self.r, self.ctx.p)

    def coefficient_blocks(self, max_block: int = 1 << 14) -> Iterator[np.ndarray]:
        return rref_blocks(self.ctx.p, self.ambient_dim, self.r, max_block)

    def blocks(self, max_block: int = 1 << 14) -> Iterator[np.ndarray]:
        for blk in self.coefficient_blocks(max_block):
            yield (blk @ self.ambient) % self.ctx.p

    def __iter__(self) -> Iterator[list[FqElem]]:
        for blk in self.blocks():
            for basis in self.ctx.codes_of(blk):
                yield [self.ctx.elem(c) for c in basis]


def enumerate_subspaces(ctx: FieldCtx, basis, r: int) -> SubspaceIter:
    return SubspaceIter(ctx, basis, r)


def span_codes(ctx: FieldCtx, digit_blocks: np.ndarray) -> np.ndarray:
    """All element codes of each spanned subspace: (B, r, m) -> (B, p^r)."""
    r = digit_blocks.shape[1]
    combos = _all_vectors(ctx.p, r)
    return ctx.codes_of(np.einsum("vr,brm->bvm", combos, digit_blocks))


# --- batched max/min over subspaces -----------------------------------------


def _check_cost(what: str, count: int, per: int, ceiling: int | None) -> None:
    limit = feasibility_ceiling(ceiling)
    if count * per > limit:
        raise TooLarge(f"{what}: {count} subspaces x {per} = {count * per} exceeds ceiling {limit}")


def _block_size(per_subspace_entries: int) -> int:
    return max(1, BLOCK_ELEMENTS // max(1, per_subspace_entries))


def _reduce(fn: Callable[[np.ndarray], int], blocks: Iterator[np.ndarray], reducer, threads: int) -> int:
    if threads <= 1:
        return reducer(fn(b) for b in blocks)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return reducer(pool.map(fn, blocks))


def _check_rank(D: DefiningSet, r: int) -> None:
    if not 1 <= r <= D.k:
        raise RankOutOfRange(f"r={r} outside [1, k={D.k}]")


def ghw_subcode_bf(ctx: FieldCtx, D: DefiningSet, r: int, ceiling: int | None = None, threads: int = 1) -> int:
    """min |Supp(U)| over r-dimensional subcodes, from codeword supports."""
    _check_rank(D, r)
    p, k = ctx.p, D.k
    _check_cost("subcode", gaussian_binomial(k, r, p), p**r, ceiling)
    gens = (D.message_basis @ D.generator_matrix) % p  # k x n, injective image

    def block_min(coeffs: np.ndarray) -> int:
        words = np.einsum("brk,kn->brn", coeffs, gens) % p
        return int(np.count_nonzero(words.any(axis=1), axis=1).min())

    blocks = rref_blocks(p, k, r, _block_size(r * max(D.n, k)))
    return _reduce(block_min, blocks, min, threads)


def max_intersection(ctx: FieldCtx, D: DefiningSet, t: int, ceiling: int | None = None, threads: int = 1) -> int:
    """max |D cap H| over t-dimensional subspaces H of span(D)."""
    p, k = ctx.p, D.k
    if not 0 <= t <= k:
        raise RankOutOfRange(f"t={t} outside [0, {k}]")
    _check_cost("hyperplane", gaussian_binomial(k, t, p), p**t, ceiling)
    ambient = D.span_basis
    presence = D.presence

    def block_max(coeffs: np.ndarray) -> int:
        digits = np.einsum("btk,km->btm", coeffs, ambient) % p
        return int(presence[span_codes(ctx, digits)].sum(axis=1).max())

    blocks = rref_blocks(p, k, t, _block_size(p**t * ctx.m))
    return _reduce(block_max, blocks, max, threads)


def ghw_hyperplane(ctx: FieldCtx, D: DefiningSet, r: int, ceiling: int | None = None, threads: int = 1) -> int:
    _check_rank(D, r)
    return D.n - max_intersection(ctx, D, D.k - r, ceiling, threads)


def character_sums(ctx: FieldCtx, D: DefiningSet, chunk: int = 1 << 20) -> np.ndarray:
    """S(a) = sum_{x in D} chi(a x) for every a, as integers indexed by code.

    Raises NonIntegerN if some S(a) is not a rational integer.
    """
    p, q, n = ctx.p, ctx.q, D.n
    out = np.empty(q, dtype=np.int64)
    out[0] = n
    rows_per = max(1, chunk // max(1, n))
    for start in range(1, q, rows_per):
        a = np.arange(start, min(q, start + rows_per), dtype=np.int64)
        tr = ctx.trace_table[ctx.mul_codes(a[:, None], D.codes[None, :])]
        offs = np.arange(len(a), dtype=np.int64)[:, None] * p
        counts = np.bincount((offs + tr).ravel(), minlength=len(a) * p).reshape(-1, p)
        # canonical Z[zeta_p] form is rational iff counts[1:] are all equal
        if np.any(counts[:, 1:] != counts[:, 1:2]):
            raise NonIntegerN("a character sum over D is not rational")
        out[a] = counts[:, 0] - counts[:, 1]
    return out


def ghw_charsum(ctx: FieldCtx, D: DefiningSet, r: int, ceiling: int | None = None, threads: int = 1) -> int:
    """n - max N(H_r) over r-dimensional H_r in the message space."""
    _check_rank(D, r)
    p, k, n = ctx.p, D.k, D.n
    _check_cost("charsum", gaussian_binomial(k, r, p), p**r, ceiling)
    sums = character_sums(ctx, D)
    msg = D.message_basis
    pr = p**r

    def block_max(coeffs: np.ndarray) -> int:
        digits = np.einsum("brk,km->brm", coeffs, msg) % p
        # n + sum over H^* equals the sum over all of H, since S(0) = n
        num = sums[span_codes(ctx, digits)].sum(axis=1)
        if np.any(num % pr) or np.any(num < 0):
            raise NonIntegerN(f"N(H_{r}) is not a nonnegative integer")
        return int((num // pr).max())

    blocks = rref_blocks(p, k, r, _block_size(pr * ctx.m))
    return n - _reduce(block_max, blocks, max, threads)


def ghw_closed(params: DModeParams, r: int) -> int:
    """Closed-form d_r for the two families.

    Emits :class:`HypothesisWarning` when the parameters fall outside the
    hypotheses under which the formula was derived.
    """
    p, m = params.p, params.m
    for msg in params.hypothesis_warnings():
        warnings.warn(msg, HypothesisWarning, stacklevel=2)
    if params.mode == "one":
        if not 1 <= r <= m - 1:
            raise RankOutOfRange(f"r={r} outside [1, {m - 1}]")
        return p ** (m - 1) - p ** (m - 1 - r)
    if p % 4 != 3:
        raise RankOutOfRange("special family with p = 1 mod 4 has k = 0")
    if not 1 <= r <= m:
        raise RankOutOfRange(f"r={r} outside [1, {m}]")
    s, q = params.s, params.q
    low = high = None
    if r <= s:
        num = p ** (s - r) * (2 * p**s + 1 - p) * (p**r - 1)
        if num % (p + 1):
            raise ArithmeticError("closed form is not integral")
        low = num // (p + 1)
    if r >= s:
        high = 2 * (q - 1) // (p + 1) + 1 - p ** (m - r)
    if low is not None and high is not None and low != high:
        raise AssertionError(f"the two branches disagree at r = s: {low} != {high}")
    return low if low is not None else high


# --- reports -----------------------------------------------------------------


@dataclass
class GhwReport:
    n: int
    k: int
    values: dict[int, dict[str, int]]
    agreement: bool
    advisory: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    skipped: dict[str, str] = field(default_factory=dict)

    def hierarchy(self, method: str) -> list[int] | None:
        vals = [self.values.get(r, {}).get(method) for r in sorted(self.values)]
        return None if any(v is None for v in vals) or not vals else vals

    @property
    def authoritative(self) -> str | None:
        for m in ("subcode", "hyperplane", "charsum", "closed"):
            if self.hierarchy(m) is not None and m not in self.advisory:
                return m
        for m in METHODS:
            if self.hierarchy(m) is not None:
                return m
        return None


_BF = {"subcode": ghw_subcode_bf, "hyperplane": ghw_hyperplane, "charsum": ghw_charsum}


def weight_hierarchy(
    ctx: FieldCtx,
    D: DefiningSet,
    methods: Sequence[str] = METHODS,
    r_max: int | None = None,
    ceiling: int | None = None,
    threads: int = 1,
) -> GhwReport:
    """Run the requested methods for r = 1..min(k, r_max) and cross-check them.

    Brute-force methods that exceed the ceiling propagate :class:`TooLarge`.
    The closed form becomes advisory (excluded from the agreement verdict)
    when its hypotheses fail; mismatches are then reported as warnings.
    """
    unknown = set(methods) - set(METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}")
    k = D.k
    top = k if r_max is None else min(k, r_max)
    values: dict[int, dict[str, int]] = {r: {} for r in range(1, top + 1)}
    report = GhwReport(n=D.n, k=k, values=values, agreement=True)
    params = D.params

    for method in METHODS:
        if method not in methods:
            continue
        if method == "closed":
            if params is None:
                report.skipped["closed"] = "no closed form for a custom defining set"
                continue
            if not params.hypotheses_hold:
                report.advisory.append("closed")
            for r in values:
                try:
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore", HypothesisWarning)
                        values[r]["closed"] = ghw_closed(params, r)
                except RankOutOfRange as exc:
                    report.warnings.append(f"closed form unavailable at r={r}: {exc}")
            continue
        try:
            computed = {r: _BF[method](ctx, D, r, ceiling, threads) for r in values}
        except NonIntegerN as exc:
            report.skipped[method] = str(exc)
            continue
        for r, v in computed.items():
            values[r][method] = v

    for r, per in values.items():
        binding = {m: v for m, v in per.items() if m not in report.advisory}
        if len(set(binding.values())) > 1:
            report.agreement = False
            report.warnings.append(f"methods disagree at r={r}: {binding}")
        for m in report.advisory:
            if m in per and binding and per[m] not in binding.values():
                report.warnings.append(
                    f"advisory {m} value {per[m]} at r={r} differs from brute force {sorted(set(binding.values()))}"
                )
        for m, v in per.items():
            if not r <= v <= D.n - k + r:
                report.warnings.append(f"{m}: d_{r} = {v} outside the Singleton range [{r}, {D.n - k + r}]")
                if m not in report.advisory:
                    report.agreement = False

    for m in METHODS:
        h = report.hierarchy(m)
        if h and any(a >= b for a, b in zip(h, h[1:])):
            report.warnings.append(f"{m}: hierarchy {h} is not strictly increasing")
            if m not in report.advisory:
                report.agreement = False
    return report
