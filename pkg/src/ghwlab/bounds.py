"""Singleton-type, Plotkin-like and Griesmer-like bounds on a weight hierarchy."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BoundViolation


def singleton_upper(n: int, k: int, r: int) -> int:
    return n - k + r


def plotkin_like(n: int, k: int, p: int, r: int) -> int:
    return n * (p**r - 1) * p ** (k - r) // (p**k - 1)


def griesmer_like(d1: int, p: int, r: int) -> int:
    return sum(-(-d1 // p**i) for i in range(r))


@dataclass
class BoundRow:
    r: int
    d: int
    singleton_upper: int
    plotkin_like: int
    griesmer_like: int

    @property
    def is_r_mds(self) -> bool:
        return self.d == self.singleton_upper

    @property
    def meets_plotkin(self) -> bool:
        return self.d == self.plotkin_like

    @property
    def meets_griesmer(self) -> bool:
        return self.d == self.griesmer_like

    @property
    def flags(self) -> list[str]:
        return [
            name
            for name, on in (("mds", self.is_r_mds), ("plotkin", self.meets_plotkin), ("griesmer", self.meets_griesmer))
            if on
        ]


@dataclass
class BoundReport:
    n: int
    k: int
    p: int
    rows: list[BoundRow] = field(default_factory=list)
    degenerate: bool = False

    @property
    def mds_ranks(self) -> list[int]:
        return [row.r for row in self.rows if row.is_r_mds]

    @property
    def plotkin_ranks(self) -> list[int]:
        return [row.r for row in self.rows if row.meets_plotkin]

    @property
    def griesmer_ranks(self) -> list[int]:
        return [row.r for row in self.rows if row.meets_griesmer]

    def violations(self) -> list[str]:
        """Plotkin-like or Griesmer-like inequalities that fail (should be none)."""
        out = []
        for row in self.rows:
            if row.d > row.plotkin_like:
                out.append(f"d_{row.r} = {row.d} > Plotkin-like {row.plotkin_like}")
            if row.d < row.griesmer_like:
                out.append(f"d_{row.r} = {row.d} < Griesmer-like {row.griesmer_like}")
        return out


def evaluate_bounds(n: int, k: int, p: int, hierarchy: Sequence[int]) -> BoundReport:
    """Evaluate all three bounds at every rank of ``hierarchy`` (d_1, ..., d_j).

    A hierarchy outside the Singleton sandwich r <= d_r <= n - k + r, or not
    strictly increasing, raises :class:`BoundViolation`. A k = 0 code gives an
    empty report marked ``degenerate``.
    """
    if k == 0:
        return BoundReport(n, k, p, degenerate=True)
    hierarchy = list(hierarchy)
    if len(hierarchy) > k:
        raise BoundViolation(f"{len(hierarchy)} weights given for a code of dimension {k}")
    for a, b in zip(hierarchy, hierarchy[1:]):
        if a >= b:
            raise BoundViolation(f"hierarchy {hierarchy} is not strictly increasing")
    report = BoundReport(n, k, p)
    for r, d in enumerate(hierarchy, start=1):
        up = singleton_upper(n, k, r)
        if not r <= d <= up:
            raise BoundViolation(f"d_{r} = {d} outside [{r}, {up}]")
        report.rows.append(BoundRow(r, d, up, plotkin_like(n, k, p, r), griesmer_like(hierarchy[0], p, r)))
    return report
