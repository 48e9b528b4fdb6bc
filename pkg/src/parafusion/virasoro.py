"""Discrete-series Virasoro data: central charges, Kac-table weights, fusion.

Labels live in the Kac table of level m: 1 <= r <= m+1, 1 <= s <= m+2, with
the symmetry (r, s) ~ (m+2-r, m+3-s) identifying labels in pairs.  The
representative with s <= r is taken as canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fusion import FusionSum

__all__ = [
    "VirasoroLabel",
    "central_charge",
    "highest_weight",
    "kac_canonical",
    "virasoro_vacuum",
    "all_virasoro_labels",
    "fuse_virasoro",
]


@dataclass(frozen=True, order=True)
class VirasoroLabel:
    """A Kac-table label (m; r, s), not necessarily canonical."""

    m: int
    r: int
    s: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"level m must be >= 1, got {self.m}")
        if not (1 <= self.r <= self.m + 1 and 1 <= self.s <= self.m + 2):
            raise ValueError(f"indices ({self.r},{self.s}) outside the level-{self.m} table")

    @property
    def is_canonical(self) -> bool:
        return self.s <= self.r

    def kac_partner(self) -> "VirasoroLabel":
        return VirasoroLabel(self.m, self.m + 2 - self.r, self.m + 3 - self.s)

    def __str__(self) -> str:
        return f"Vir({self.m};{self.r},{self.s})"


def central_charge(m: int) -> Fraction:
    """Central charge c_m = 1 - 6/((m+2)(m+3)) of the level-m minimal model."""
    if m < 1:
        raise ValueError(f"level m must be >= 1, got {m}")
    return 1 - Fraction(6, (m + 2) * (m + 3))


def highest_weight(m: int, r: int, s: int) -> Fraction:
    """Kac-table highest weight h_{r,s} = ((r(m+3) - s(m+2))^2 - 1) / (4(m+2)(m+3))."""
    label = VirasoroLabel(m, r, s)  # range check
    num = (label.r * (m + 3) - label.s * (m + 2)) ** 2 - 1
    return Fraction(num, 4 * (m + 2) * (m + 3))


def kac_canonical(m: int, r: int, s: int) -> VirasoroLabel:
    """The canonical representative (s <= r) of the class of (m; r, s)."""
    label = VirasoroLabel(m, r, s)
    return label if label.is_canonical else label.kac_partner()


def virasoro_vacuum(m: int) -> VirasoroLabel:
    return VirasoroLabel(m, 1, 1)


def all_virasoro_labels(m: int) -> tuple[VirasoroLabel, ...]:
    """All (m+1)(m+2)/2 canonical labels at level m, sorted."""
    if m < 1:
        raise ValueError(f"level m must be >= 1, got {m}")
    return tuple(
        VirasoroLabel(m, r, s) for r in range(1, m + 2) for s in range(1, r + 1)
    )


def fuse_virasoro(a: VirasoroLabel, b: VirasoroLabel) -> FusionSum:
    """Minimal-model fusion product, as a multiset of canonical labels.

    The double sum runs over 1 <= i <= min{r1, r2, m+2-r1, m+2-r2} and
    1 <= j <= min{s1, s2, m+3-s1, m+3-s2}, contributing the label
    (|r1-r2| + 2i - 1, |s1-s2| + 2j - 1).  Output terms are canonicalized
    and merged.
    """
    if a.m != b.m:
        raise ValueError(f"cannot fuse labels at different levels {a.m} and {b.m}")
    m = a.m
    r1, s1, r2, s2 = a.r, a.s, b.r, b.s
    i_max = min(r1, r2, m + 2 - r1, m + 2 - r2)
    j_max = min(s1, s2, m + 3 - s1, m + 3 - s2)
    terms = [
        kac_canonical(m, abs(r1 - r2) + 2 * i - 1, abs(s1 - s2) + 2 * j - 1)
        for i in range(1, i_max + 1)
        for j in range(1, j_max + 1)
    ]
    return FusionSum(terms)
