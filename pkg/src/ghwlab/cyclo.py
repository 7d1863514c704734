"""Exact arithmetic in Z[zeta_p] and in (1/2) Z[sqrt(p*)], p* = (-1)^((p-1)/2) p.

A :class:`CycInt` is stored by its p coefficients on 1, zeta, ..., zeta^{p-1}
with the last one forced to zero (subtract it from every coordinate, using
1 + zeta + ... + zeta^{p-1} = 0). Since 1, ..., zeta^{p-2} is a Z-basis this
form is unique, so equality is tuple equality.

Character sums are built from trace-fiber counts: sum_x zeta^{Tr(x)} is
``cyc_from_counts(p, counts)`` with ``counts[j] = #{x : Tr(x) = j}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FieldMismatch, LengthMismatch, NotDivisibleByTwo


def _canonical(coeffs: Sequence[int]) -> tuple[int, ...]:
    last = coeffs[-1]
    return tuple(int(c) - last for c in coeffs)


@dataclass(frozen=True)
class CycInt:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p:
            raise LengthMismatch(f"need {self.p} coefficients, got {len(self.coeffs)}")
        if self.coeffs[-1] != 0:
            object.__setattr__(self, "coeffs", _canonical(self.coeffs))

    @classmethod
    def integer(cls, p: int, n: int) -> "CycInt":
        return cls(p, (int(n),) + (0,) * (p - 1))

    @classmethod
    def zeta(cls, p: int, e: int = 1) -> "CycInt":
        c = [0] * p
        c[e % p] = 1
        return cls(p, tuple(c))

    def _check(self, other: "CycInt") -> None:
        if other.p != self.p:
            raise FieldMismatch(f"Z[zeta_{self.p}] vs Z[zeta_{other.p}]")

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        self._check(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % p] += a * b
        return CycInt(p, tuple(out))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, k: int) -> "CycInt":
        return CycInt(self.p, tuple(k * a for a in self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def halve(self) -> "CycInt":
        if any(c % 2 for c in self.coeffs):
            raise NotDivisibleByTwo(f"{self} is not divisible by 2 in Z[zeta_{self.p}]")
        return CycInt(self.p, tuple(c // 2 for c in self.coeffs))

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if j == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def cyc_from_counts(p: int, counts: Sequence[int]) -> CycInt:
    """sum_j counts[j] * zeta^j, canonicalised."""
    if len(counts) != p:
        raise LengthMismatch(f"expected {p} counts, got {len(counts)}")
    return CycInt(p, tuple(int(c) for c in counts))


def cyc_add(x: CycInt, y: CycInt) -> CycInt:
    return x + y


def cyc_sub(x: CycInt, y: CycInt) -> CycInt:
    return x - y


def cyc_mul(x: CycInt, y: CycInt) -> CycInt:
    return x * y


def cyc_scale(x: CycInt, k: int) -> CycInt:
    return x.scale(k)


def p_star(p: int) -> int:
    return p if p % 4 == 1 else -p


def gauss_sum(p: int) -> CycInt:
    """The quadratic Gauss sum sum_{x in F_p} zeta^{x^2}; it squares to p*."""
    counts = [0] * p
    for x in range(p):
        counts[x * x % p] += 1
    return cyc_from_counts(p, counts)


@dataclass(frozen=True)
class QuadVal:
    """The number (u + v sqrt(p*)) / 2.

    sqrt(p*) means the Gauss sum, i.e. sqrt(p) for p = 1 mod 4 and
    i*sqrt(p) for p = 3 mod 4.
    """

    p: int
    u: int
    v: int = 0

    @classmethod
    def integer(cls, p: int, n: int) -> "QuadVal":
        return cls(p, 2 * n, 0)

    def _check(self, other: "QuadVal") -> None:
        if other.p != self.p:
            raise FieldMismatch(f"sqrt({p_star(self.p)}) vs sqrt({p_star(other.p)})")

    def __add__(self, other):
        if isinstance(other, int):
            other = QuadVal.integer(self.p, other)
        self._check(other)
        return QuadVal(self.p, self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return QuadVal(self.p, -self.u, -self.v)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QuadVal.integer(self.p, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadVal(self.p, other * self.u, other * self.v)
        self._check(other)
        ps = p_star(self.p)
        u2 = self.u * other.u + ps * self.v * other.v
        v2 = self.u * other.v + self.v * other.u
        if u2 % 2 or v2 % 2:
            raise NotDivisibleByTwo("product leaves (1/2) Z[sqrt(p*)]")
        return QuadVal(self.p, u2 // 2, v2 // 2)

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return self.v == 0

    def rational(self) -> Fraction:
        if self.v:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.u, 2)

    def __str__(self) -> str:
        if self.v == 0:
            return str(self.rational())
        return f"({self.u} {'+' if self.v >= 0 else '-'} {abs(self.v)}*sqrt({p_star(self.p)}))/2"


def quad_to_cyc(p: int, x: QuadVal) -> CycInt:
    """(u + v * gauss_sum(p)) / 2 as an element of Z[zeta_p]."""
    if x.p != p:
        raise FieldMismatch(f"QuadVal over p={x.p} rendered with p={p}")
    return (CycInt.integer(p, x.u) + gauss_sum(p).scale(x.v)).halve()
