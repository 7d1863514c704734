"""Finite fields F_{p^m} for odd p, backed by dense log/antilog tables.

Elements have two interchangeable forms:

* :class:`FqElem`: the coefficient vector (c_0, ..., c_{m-1}) of a polynomial
  in x modulo the field modulus, low degree first;
* an integer *code* ``sum(c_i * p**i)`` in ``[0, q)``, used by the vectorised
  helpers (``*_codes``) that the code and character-sum modules run on.

The modulus is the lexicographically smallest monic irreducible polynomial of
degree m and the primitive element is the lexicographically smallest
generator of F_q^*. In both cases coefficient tuples are compared from the
constant term upwards (plain tuple order on ``(c_0, c_1, ...)``).
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    LogOfZero,
    NotADivisor,
    NotPrime,
)

DEFAULT_FIELD_CEILING = 2_000_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over F_p (lists, low degree first) -------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial f."""
    a = [c % p for c in a]
    _trim(a)
    df = len(f) - 1
    while len(a) - 1 >= df:
        lead = a[-1]
        shift = len(a) - 1 - df
        for i, c in enumerate(f):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, f, p) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod(prod, f, p)


def _poly_powmod(a, e: int, f, p) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        inv = pow(b[-1], -1, p)
        monic = [(c * inv) % p for c in b]
        a, b = b, _poly_mod(a, monic, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Root test first, then gcd(x^{p^i} - x, f) = 1 for every i <= deg/2.
    """
    f = list(f)
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    for c in range(1, p):
        if sum(coef * pow(c, i, p) for i, coef in enumerate(f)) % p == 0:
            return False
    xp = [0, 1]
    for _ in range(1, m // 2 + 1):
        xp = _poly_powmod(xp, p, f, p)
        g = list(xp) + [0] * max(0, 2 - len(xp))
        g[1] -= 1
        if len(_poly_gcd(g, f, p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=m):
        f = low + (1,)
        if is_irreducible(f, p):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {m} over F_{p}")


# --- field elements ----------------------------------------------------------


@dataclass(frozen=True)
class FqElem:
    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c if c != 1 else ''}x" + (f"^{i}" if i > 1 else ""))
        return " + ".join(reversed(terms)) or "0"

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable description of F_{p^m}.

    ``log_table`` and ``antilog_table`` are indexed by element code; the log of
    zero is stored as -1. ``trace_table[c]`` is Tr_{q/p} of the element with
    code c, as a residue mod p.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    alpha: FqElem
    log_table: np.ndarray
    antilog_table: np.ndarray
    trace_table: np.ndarray

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def powers(self) -> np.ndarray:
        return self.p ** np.arange(self.m, dtype=np.int64)

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={self.modulus}, alpha={self.alpha.coeffs})"

    # conversions

    def elem(self, code: int) -> FqElem:
        code = int(code)
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} outside [0, {self.q})")
        out = []
        for _ in range(self.m):
            code, c = divmod(code, self.p)
            out.append(c)
        return FqElem(tuple(out))

    def code(self, x: FqElem | int) -> int:
        if isinstance(x, (int, np.integer)):
            return int(x)
        if len(x.coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(x.coeffs)}")
        return sum((c % self.p) * self.p**i for i, c in enumerate(x.coeffs))

    def from_int(self, c: int) -> FqElem:
        """Embed the residue c mod p as a constant."""
        return self.elem(c % self.p)

    @property
    def zero(self) -> FqElem:
        return FqElem((0,) * self.m)

    @property
    def one(self) -> FqElem:
        return self.elem(1)

    def elements(self) -> list[FqElem]:
        return [self.elem(c) for c in range(self.q)]

    # vectorised helpers on codes

    def digits_of(self, codes) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[..., None] // self.powers) % self.p

    def codes_of(self, digits) -> np.ndarray:
        digits = np.asarray(digits, dtype=np.int64) % self.p
        return digits @ self.powers

    def add_codes(self, a, b) -> np.ndarray:
        return self.codes_of(self.digits_of(a) + self.digits_of(b))

    def mul_codes(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la = self.log_table[a]
        lb = self.log_table[b]
        out = self.antilog_table[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_codes(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        la = self.log_table[a]
        out = self.antilog_table[(la * (e % (self.q - 1))) % (self.q - 1)]
        return np.where(a == 0, 0 if e > 0 else 1, out)

    # arithmetic on FqElem

    def add(self, x: FqElem, y: FqElem) -> FqElem:
        return FqElem(tuple((a + b) % self.p for a, b in zip(x.coeffs, y.coeffs)))

    def sub(self, x: FqElem, y: FqElem) -> FqElem:
        return FqElem(tuple((a - b) % self.p for a, b in zip(x.coeffs, y.coeffs)))

    def neg(self, x: FqElem) -> FqElem:
        return FqElem(tuple((-a) % self.p for a in x.coeffs))

    def mul(self, x: FqElem, y: FqElem) -> FqElem:
        cx, cy = self.code(x), self.code(y)
        if cx == 0 or cy == 0:
            return self.zero
        e = (int(self.log_table[cx]) + int(self.log_table[cy])) % (self.q - 1)
        return self.elem(self.antilog_table[e])

    def mul_poly(self, x: FqElem, y: FqElem) -> FqElem:
        """Multiplication by schoolbook product and reduction (no tables)."""
        r = _poly_mulmod(list(x.coeffs), list(y.coeffs), self.modulus, self.p)
        return FqElem(tuple(r + [0] * (self.m - len(r))))

    def inv(self, x: FqElem) -> FqElem:
        c = self.code(x)
        if c == 0:
            raise DivisionByZero("inverse of zero")
        return self.elem(self.antilog_table[(-int(self.log_table[c])) % (self.q - 1)])

    def div(self, x: FqElem, y: FqElem) -> FqElem:
        return self.mul(x, self.inv(y))

    def pow(self, x: FqElem, e: int) -> FqElem:
        c = self.code(x)
        if c == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return self.one if e == 0 else self.zero
        return self.elem(self.antilog_table[(int(self.log_table[c]) * e) % (self.q - 1)])

    def dlog(self, x: FqElem | int) -> int:
        c = self.code(x)
        if c == 0:
            raise LogOfZero("discrete log of zero")
        return int(self.log_table[c])

    def alpha_pow(self, e: int) -> FqElem:
        return self.elem(self.antilog_table[e % (self.q - 1)])

    # subfields and traces

    def _check_divisor(self, e: int) -> None:
        if e < 1 or self.m % e:
            raise NotADivisor(f"{e} does not divide m={self.m}")

    def trace(self, x: FqElem, e: int = 1) -> FqElem | int:
        """Tr^m_e(x) = sum of x^{p^{e i}} for i < m/e.

        For ``e == 1`` the value is returned as a residue mod p, otherwise as
        the embedded element of F_{p^e} inside F_q.
        """
        self._check_divisor(e)
        c = self.code(x)
        if e == 1:
            return int(self.trace_table[c])
        if c == 0:
            return self.zero
        lx = int(self.log_table[c])
        conj = [
            self.antilog_table[(lx * self.p ** (e * i)) % (self.q - 1)] for i in range(self.m // e)
        ]
        return self.elem(self.codes_of(self.digits_of(conj).sum(axis=0)))

    def subfield_codes(self, e: int) -> np.ndarray:
        self._check_divisor(e)
        step = (self.q - 1) // (self.p**e - 1)
        return np.concatenate(([0], self.antilog_table[::step]))

    def embed_subfield(self, e: int) -> list[FqElem]:
        """The p^e elements of F_{p^e} as embedded in F_q (zero first)."""
        return [self.elem(c) for c in self.subfield_codes(e)]


# --- construction ------------------------------------------------------------


def _mult_matrix(b: Sequence[int], f: Sequence[int], p: int, m: int) -> np.ndarray:
    """Matrix of y -> y*b on coefficient row vectors."""
    rows = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        r = _poly_mulmod([0] * i + [1], list(b), f, p)
        rows[i, : len(r)] = r
    return rows


def _field_ceiling() -> int:
    env = os.environ.get("GHWLAB_FIELD_CEILING")
    return int(env) if env else DEFAULT_FIELD_CEILING


def build_field(p: int, m: int, ceiling: int | None = None) -> FieldCtx:
    """Construct F_{p^m} deterministically (cached)."""
    if not isinstance(p, (int, np.integer)) or p == 2 or not is_prime(int(p)):
        raise NotPrime(f"p={p} is not an odd prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    limit = _field_ceiling() if ceiling is None else ceiling
    if p**m > limit:
        raise FieldTooLarge(f"q = {p}^{m} = {p**m} exceeds the table ceiling {limit}")
    return _build_field(int(p), int(m))


@functools.lru_cache(maxsize=32)
def _build_field(p: int, m: int) -> FieldCtx:
    q = p**m
    f = smallest_irreducible(p, m)
    group_order = q - 1
    cofactors = [group_order // ell for ell in prime_factors(group_order)]

    alpha = None
    for cand in itertools.product(range(p), repeat=m):
        if not any(cand):
            continue
        if all(_poly_powmod(list(cand), e, f, p) != [1] for e in cofactors):
            alpha = cand
            break
    assert alpha is not None

    # antilog by doubling: rows [L, 2L) = rows [0, L) * alpha^L
    table = np.zeros((group_order, m), dtype=np.int64)
    table[0, 0] = 1
    power = list(alpha)
    filled = 1
    while filled < group_order:
        take = min(filled, group_order - filled)
        mat = _mult_matrix(power, f, p, m)
        table[filled : filled + take] = (table[:take] @ mat) % p
        filled += take
        power = _poly_mulmod(power, power, f, p)
    pw = p ** np.arange(m, dtype=np.int64)
    antilog = table @ pw
    log = np.full(q, -1, dtype=np.int64)
    log[antilog] = np.arange(group_order, dtype=np.int64)
    if np.count_nonzero(log >= 0) != group_order:
        raise AssertionError("alpha is not primitive")

    # Tr is F_p-linear: tabulate it on the monomial basis, then extend
    basis_trace = np.zeros(m, dtype=np.int64)
    for i in range(m):
        li = int(log[p**i])
        conj = antilog[[(li * p**k) % group_order for k in range(m)]]
        s = ((conj[:, None] // pw) % p).sum(axis=0) % p
        if np.any(s[1:]):
            raise AssertionError("trace does not land in the prime field")
        basis_trace[i] = s[0]
    trace = np.empty(q, dtype=np.int64)
    chunk = 1 << 18
    for start in range(0, q, chunk):
        codes = np.arange(start, min(q, start + chunk), dtype=np.int64)
        trace[start : start + len(codes)] = (((codes[:, None] // pw) % p) @ basis_trace) % p

    for arr in (log, antilog, trace):
        arr.setflags(write=False)
    return FieldCtx(
        p=p,
        m=m,
        modulus=tuple(f),
        alpha=FqElem(tuple(alpha)),
        log_table=log,
        antilog_table=antilog,
        trace_table=trace,
    )


def trace_fiber_counts(ctx: FieldCtx, codes: Iterable[int] | np.ndarray) -> np.ndarray:
    """How many of the given elements have trace j, for j in [0, p)."""
    codes = np.asarray(codes, dtype=np.int64)
    return np.bincount(ctx.trace_table[codes].ravel(), minlength=ctx.p)
