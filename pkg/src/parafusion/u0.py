"""The fusion ring of the rank-one extended parafermion algebra.

Irreducible modules are labeled U(i, l) with 0 <= i <= k-1 and l mod 2k,
subject to the identification (i, l) ~ (k-1-i, l+k); there are exactly k^2
classes.  Each module decomposes into summands X(i, j, l), 0 <= j < k-1,
given by a level-(k-1) parafermion factor tensored with a rank-one lattice
coset of offset -l/2k + (i-2j)/2(k-1) (in units of a generator of squared
norm 2(k-1)k).  Weights, the fusion product, simple currents, and the two
fusion-ring symmetries are computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .arith import mod1
from .fusion import FusionSum
from .parafermion import canonicalize_pf, pf_weight

__all__ = [
    "U0Label",
    "SummandLabel",
    "SummandWeight",
    "TopLevel",
    "canonicalize_u0",
    "u0_vacuum",
    "all_u0_labels",
    "fuse_u0",
    "simple_currents",
    "summand_weight",
    "top_level",
    "top_level_closed_form",
    "weight_mod1",
    "b_form_u0",
    "theta_u0",
    "phi_grade",
    "stabilizing_currents",
    "verify_weight_difference",
]


@dataclass(frozen=True, order=True)
class U0Label:
    """A label (k; i, l) with 0 <= i <= k-1; l is stored reduced mod 2k."""

    k: int
    i: int
    l: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"level k must be >= 2, got {self.k}")
        if not (0 <= self.i <= self.k - 1):
            raise ValueError(f"index i must lie in [0, {self.k - 1}], got {self.i}")
        object.__setattr__(self, "l", self.l % (2 * self.k))

    def partner(self) -> "U0Label":
        return U0Label(self.k, self.k - 1 - self.i, self.l + self.k)

    @property
    def is_canonical(self) -> bool:
        other = self.k - 1 - self.i
        if self.i != other:
            return self.i < other
        return self.l < self.k

    def __str__(self) -> str:
        return f"U({self.i},{self.l})"


def canonicalize_u0(k: int, i: int, l: int) -> U0Label:
    """Canonical class representative: smaller i, and l in [0, k) on the
    self-paired row 2i = k-1."""
    label = U0Label(k, i, l)
    return label if label.is_canonical else label.partner()


def u0_vacuum(k: int) -> U0Label:
    return U0Label(k, 0, 0)


def all_u0_labels(k: int) -> tuple[U0Label, ...]:
    """All k^2 canonical labels, sorted."""
    if k < 2:
        raise ValueError(f"level k must be >= 2, got {k}")
    labels = []
    for i in range(k):
        if i < k - 1 - i:
            labels.extend(U0Label(k, i, l) for l in range(2 * k))
        elif i == k - 1 - i:
            labels.extend(U0Label(k, i, l) for l in range(k))
    return tuple(labels)


@lru_cache(maxsize=None)
def _fuse_u0_terms(k: int, i1: int, l1: int, i2: int, l2: int) -> tuple[U0Label, ...]:
    lo = abs(i1 - i2)
    hi = min(i1 + i2, 2 * (k - 1) - i1 - i2)
    l3 = l1 + l2
    return tuple(
        canonicalize_u0(k, r, l3)
        for r in range(lo, hi + 1)
        if (i1 + i2 + r) % 2 == 0
    )


def fuse_u0(a: U0Label, b: U0Label) -> FusionSum:
    """Fusion product: sum over r with |i1-i2| <= r <= min{i1+i2, 2(k-1)-i1-i2}
    and i1+i2+r even of the class of (r, l1+l2)."""
    if a.k != b.k:
        raise ValueError(f"cannot fuse labels at different levels {a.k} and {b.k}")
    return FusionSum(_fuse_u0_terms(a.k, a.i, a.l, b.i, b.l))


def simple_currents(k: int) -> tuple[U0Label, ...]:
    """The 2k simple currents U(0, l), l = 0..2k-1; fusion-invertible and
    closed under the group law l + l' mod 2k."""
    if k < 2:
        raise ValueError(f"level k must be >= 2, got {k}")
    return tuple(U0Label(k, 0, l) for l in range(2 * k))


@dataclass(frozen=True, order=True)
class SummandLabel:
    """A summand label X(i, j, l): parafermion factor (i, j) at level k-1
    on a lattice coset of offset -l/2k + (i-2j)/2(k-1)."""

    k: int
    i: int
    j: int
    l: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"level k must be >= 2, got {self.k}")
        if not (0 <= self.i <= self.k - 1):
            raise ValueError(f"index i must lie in [0, {self.k - 1}], got {self.i}")
        object.__setattr__(self, "j", self.j % max(self.k - 1, 1))
        object.__setattr__(self, "l", self.l % (2 * self.k))

    @property
    def lattice_offset(self) -> Fraction:
        return -Fraction(self.l, 2 * self.k) + Fraction(self.i - 2 * self.j, 2 * (self.k - 1))

    def __str__(self) -> str:
        return f"X({self.i},{self.j},{self.l})"


class SummandWeight(NamedTuple):
    weight: Fraction
    minimizers: int  # number of minimizing lattice points (1 or 2)


class TopLevel(NamedTuple):
    weight: Fraction
    dimension: int


def _coset_min(lam: Fraction) -> tuple[Fraction, int]:
    """min_n (n + lam)^2 over integers n, and how many n attain it."""
    # the candidates bracket -lam: floor(-lam), ceil(-lam) lie among these
    n0 = -(lam.numerator // lam.denominator) - 1
    best = None
    count = 0
    for n in (n0, n0 + 1, n0 + 2):
        v = (n + lam) ** 2
        if best is None or v < best:
            best = v
            count = 1
        elif v == best:
            count += 1
    return best, count


def _pf_factor_weight(k: int, i: int, j: int) -> Fraction:
    # level k-1 parafermion; at k = 2 that factor is the trivial algebra
    if k == 2:
        return Fraction(0)
    return pf_weight(canonicalize_pf(k - 1, i, j))


def summand_weight(x: SummandLabel) -> SummandWeight:
    """Exact conformal weight of X(i, j, l) and its lattice top-level size.

    The lattice part contributes (k-1)k * min_n (n + lam)^2 with
    lam = -l/2k + (i-2j)/2(k-1); the parafermion part is weight
    pf_weight(k-1; i, j) with a one-dimensional top level.
    """
    k = x.k
    lattice_min, count = _coset_min(x.lattice_offset)
    weight = _pf_factor_weight(k, x.i, x.j) + (k - 1) * k * lattice_min
    return SummandWeight(weight, count)


def top_level(a: U0Label) -> TopLevel:
    """Weight and dimension of the top level, by exact minimization over
    the k-1 summands X(i, j, l)."""
    k = a.k
    best: Fraction | None = None
    dim = 0
    for j in range(max(k - 1, 1)):
        w, count = summand_weight(SummandLabel(k, a.i, j, a.l))
        if best is None or w < best:
            best, dim = w, count
        elif w == best:
            dim += count
    return TopLevel(best, dim)


def top_level_closed_form(k: int, l: int) -> TopLevel:
    """Closed form for the top level of the simple current U(0, l):
    (0, 1) for l = 0; (l(2k-l)/4k - 1/4, 1) for odd l;
    (l(2k-l)/4k, 2) for even l != 0."""
    if k < 2:
        raise ValueError(f"level k must be >= 2, got {k}")
    l = l % (2 * k)
    if l == 0:
        return TopLevel(Fraction(0), 1)
    base = Fraction(l * (2 * k - l), 4 * k)
    if l % 2:
        return TopLevel(base - Fraction(1, 4), 1)
    return TopLevel(base, 2)


def weight_mod1(a: U0Label) -> Fraction:
    """Conformal weight mod 1, read off the summand X(i, 0, l)."""
    return mod1(summand_weight(SummandLabel(a.k, a.i, 0, a.l)).weight)


def b_form_u0(p: int, a: U0Label) -> Fraction:
    """b(U(0,p), U(i,l)) = p((k-1)l - ki)/2k mod 1."""
    k = a.k
    return mod1(Fraction(p * ((k - 1) * a.l - k * a.i), 2 * k))


def theta_u0(a: U0Label) -> U0Label:
    """The order-two symmetry (i, l) -> (i, -l), canonicalized."""
    return canonicalize_u0(a.k, a.i, -a.l)


def phi_grade(a: U0Label) -> int:
    """Grade of the order-k fusion-algebra symmetry: l mod k (well defined
    on classes, since l and l+k agree mod k)."""
    return a.l % a.k


def stabilizing_currents(a: U0Label) -> tuple[int, ...]:
    """All p with U(0,p) x U(i,l) = U(i,l): {0} generically, {0, k} exactly
    when k is odd and i = (k-1)/2."""
    c = canonicalize_u0(a.k, a.i, a.l)
    return tuple(
        p for p in range(2 * a.k) if canonicalize_u0(a.k, c.i, c.l + p) == c
    )


def verify_weight_difference(k: int, i: int, j: int, s: int) -> bool:
    """Check that the exact weight difference of the summand pair
    (i, p) on offsets s/2(k-1)k - p/(k-1), p = 0 and p = j, is congruent
    to j(i-s)/(k-1) mod 1."""
    if not (0 <= i <= k - 1):
        raise ValueError(f"index i must lie in [0, {k - 1}], got {i}")
    if not (0 <= j < max(k - 1, 1)):
        raise ValueError(f"index j must lie in [0, {k - 1}), got {j}")
    if not (0 <= s < 2 * (k - 1) * k):
        raise ValueError(f"offset s must lie in [0, {2 * (k - 1) * k}), got {s}")

    def weight(p: int) -> Fraction:
        lam = Fraction(s, 2 * (k - 1) * k) - Fraction(p, k - 1)
        lattice_min, _ = _coset_min(lam)
        return _pf_factor_weight(k, i, p) + (k - 1) * k * lattice_min

    expected = mod1(Fraction(j * (i - s), k - 1))
    return mod1(weight(j) - weight(0)) == expected
