"""Cyclotomic classes, Gaussian periods and the sum Omega(a, b).

Every sum here is exact: brute-force versions count trace fibers and return a
:class:`~ghwlab.cyclo.CycInt`; closed forms return quadratic or symbolic values
that :func:`~ghwlab.cyclo.quad_to_cyc` (or :meth:`OmegaClosed.to_cyc`) renders
into the same ring for bit-exact comparison.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .cyclo import CycInt, QuadVal, cyc_from_counts, quad_to_cyc
from .errors import InconsistentParams, LogOfZero, NotADivisor, ZeroA
from .gf import FieldCtx, FqElem, build_field, trace_fiber_counts


def _check_order(ctx: FieldCtx, N: int) -> None:
    if N < 1 or (ctx.q - 1) % N:
        raise NotADivisor(f"N={N} does not divide q-1={ctx.q - 1}")


def class_index(ctx: FieldCtx, N: int, x: FqElem | int) -> int:
    """The i with x in C_i^{(N,q)}, i.e. dlog(x) mod N."""
    _check_order(ctx, N)
    c = ctx.code(x)
    if c == 0:
        raise LogOfZero("zero lies in no cyclotomic class")
    return int(ctx.log_table[c]) % N


@dataclass(frozen=True)
class CycloClass:
    ctx: FieldCtx
    N: int
    i: int

    def __post_init__(self):
        _check_order(self.ctx, self.N)
        if not 0 <= self.i < self.N:
            raise ValueError(f"class index {self.i} outside [0, {self.N})")

    def codes(self) -> np.ndarray:
        return self.ctx.antilog_table[self.i :: self.N]

    def __len__(self) -> int:
        return (self.ctx.q - 1) // self.N

    def __iter__(self) -> Iterator[FqElem]:
        for c in self.codes():
            yield self.ctx.elem(c)


def gaussian_period_bf(ctx: FieldCtx, N: int, i: int) -> CycInt:
    """eta_i^{(N,q)} = sum of zeta^{Tr(x)} over the class C_i^{(N,q)}."""
    return _period_bf(ctx, N, i % N)


@functools.lru_cache(maxsize=4096)
def _period_bf(ctx: FieldCtx, N: int, i: int) -> CycInt:
    return cyc_from_counts(ctx.p, trace_fiber_counts(ctx, CycloClass(ctx, N, i).codes()))


def gaussian_period_closed_N2(p: int, m: int, i: int) -> QuadVal:
    """Quadratic Gaussian periods of F_{p^m} in closed form."""
    if i not in (0, 1):
        raise ValueError("order-2 periods have index 0 or 1")
    sign = (-1) ** (m - 1)
    if p % 4 == 1:
        # sqrt(q) = p^{m/2}, or p^{(m-1)/2} sqrt(p) for odd m
        if m % 2 == 0:
            eta0 = QuadVal(p, -1 + sign * p ** (m // 2), 0)
        else:
            eta0 = QuadVal(p, -1, sign * p ** ((m - 1) // 2))
    else:
        # (sqrt(-1))^m sqrt(q): rational for even m, a multiple of sqrt(-p) for odd m
        if m % 2 == 0:
            eta0 = QuadVal(p, -1 + sign * (-1) ** (m // 2) * p ** (m // 2), 0)
        else:
            eta0 = QuadVal(p, -1, sign * (-1) ** ((m - 1) // 2) * p ** ((m - 1) // 2))
    return eta0 if i == 0 else -1 - eta0


# --- Omega(a, b) = sum_{x != 0} chi(a x^{(q-1)/M} + b x) ----------------------


def _omega_counts(ctx: FieldCtx, a: int, b_codes: np.ndarray, M: int) -> np.ndarray:
    """Trace-fiber counts of a x^d + b x over x != 0, one row per b."""
    q1 = ctx.q - 1
    d = q1 // M
    j = np.arange(q1, dtype=np.int64)
    la = int(ctx.log_table[a])
    t_a = ctx.trace_table[ctx.antilog_table[(la + j * d) % q1]]
    lb = ctx.log_table[b_codes]
    t_b = ctx.trace_table[ctx.antilog_table[(lb[:, None] + j[None, :]) % q1]]
    t_b[b_codes == 0] = 0
    vals = (t_a[None, :] + t_b) % ctx.p
    rows = np.arange(len(b_codes), dtype=np.int64)[:, None] * ctx.p
    return np.bincount((rows + vals).ravel(), minlength=len(b_codes) * ctx.p).reshape(-1, ctx.p)


def omega_bf(ctx: FieldCtx, a: FqElem | int, b: FqElem | int, M: int) -> CycInt:
    _check_order(ctx, M)
    ca, cb = ctx.code(a), ctx.code(b)
    if ca == 0:
        raise ZeroA("Omega needs a != 0")
    counts = _omega_counts(ctx, ca, np.array([cb], dtype=np.int64), M)[0]
    return cyc_from_counts(ctx.p, counts)


def omega_bf_all_b(ctx: FieldCtx, a: FqElem | int, M: int) -> list[CycInt]:
    """Omega(a, b) for every b, indexed by the code of b."""
    _check_order(ctx, M)
    ca = ctx.code(a)
    if ca == 0:
        raise ZeroA("Omega needs a != 0")
    counts = _omega_counts(ctx, ca, np.arange(ctx.q, dtype=np.int64), M)
    return [cyc_from_counts(ctx.p, row) for row in counts]


@dataclass(frozen=True)
class OmegaParams:
    p: int
    m: int
    M: int
    f: int
    h: int
    d: int
    first_case: bool  # p, h and (p^f + 1)/M all odd

    @property
    def sqrt_q(self) -> int:
        return self.p ** (self.f * self.h)


def omega_params(p: int, m: int, M: int) -> OmegaParams:
    """Derive f, h, d and the parity case for q = p^m; q must equal p^{2fh}."""
    if M < 2:
        raise InconsistentParams("M must be at least 2")
    f = next((e for e in range(1, M + 1) if (p**e + 1) % M == 0), None)
    if f is None:
        raise InconsistentParams(f"no f with {p}^f = -1 mod {M}")
    if m % (2 * f):
        raise InconsistentParams(f"m={m} is not a multiple of 2f={2 * f}")
    h = m // (2 * f)
    if math.gcd(h, p) != 1:
        raise InconsistentParams(f"gcd(h={h}, p={p}) != 1")
    q = p**m
    first = p % 2 == 1 and h % 2 == 1 and ((p**f + 1) // M) % 2 == 1
    return OmegaParams(p=p, m=m, M=M, f=f, h=h, d=(q - 1) // M, first_case=first)


@dataclass(frozen=True)
class OmegaClosed:
    """period_coeff * eta_t^{(d,q)} + spike_coeff * zeta^spike_exp."""

    params: OmegaParams
    period_coeff: int
    t: int
    spike_coeff: int = 0
    spike_exp: int = 0

    def period(self, ctx: FieldCtx) -> CycInt:
        d = self.params.d
        if d == 2:
            return quad_to_cyc(ctx.p, gaussian_period_closed_N2(ctx.p, ctx.m, self.t))
        return gaussian_period_bf(ctx, d, self.t)

    def to_cyc(self, ctx: FieldCtx) -> CycInt:
        out = self.period(ctx).scale(self.period_coeff)
        if self.spike_coeff:
            out = out + CycInt.zeta(ctx.p, self.spike_exp).scale(self.spike_coeff)
        return out


def omega_closed(ctx: FieldCtx, params: OmegaParams, a: FqElem | int, b: FqElem | int) -> OmegaClosed:
    if (params.p, params.m) != (ctx.p, ctx.m):
        raise InconsistentParams(f"params for {params.p}^{params.m} used with {ctx.p}^{ctx.m}")
    ca, cb = ctx.code(a), ctx.code(b)
    if ca == 0:
        raise ZeroA("Omega needs a != 0")
    d, M = params.d, params.M
    t = class_index(ctx, d, ca)
    if cb == 0:
        return OmegaClosed(params, period_coeff=d, t=t)

    delta = class_index(ctx, M, cb)
    sq = params.sqrt_q
    # a * alpha^{-d delta}
    shifted = int(ctx.antilog_table[(int(ctx.log_table[ca]) - d * delta) % (ctx.q - 1)])
    tr = int(ctx.trace_table[shifted])
    if params.first_case:
        num, spike, exp = -(sq + 1), sq, -tr
    else:
        num, spike, exp = (-1) ** params.h * sq - 1, (-1) ** (params.h - 1) * sq, tr
    if num % M:
        raise InconsistentParams(f"{num} is not divisible by M={M}")
    return OmegaClosed(params, period_coeff=num // M, t=t, spike_coeff=spike, spike_exp=exp % ctx.p)


def period_sum_sides(p: int, m: int) -> tuple[CycInt, CycInt]:
    """Both sides of sum_{y in F_p^*} eta_{t(y)}^{(d,q)} = 2 eta_0^{(2,p^2)}, d = (q-1)/(p+1).

    The left side lives in F_{p^m}, the right side in F_{p^2}; both are
    brute-force sums in Z[zeta_p].
    """
    ctx = build_field(p, m)
    d = (ctx.q - 1) // (p + 1)
    lhs = CycInt.integer(p, 0)
    for y in range(1, p):
        lhs = lhs + gaussian_period_bf(ctx, d, class_index(ctx, d, y))
    rhs = gaussian_period_bf(build_field(p, 2), 2, 0).scale(2)
    return lhs, rhs
