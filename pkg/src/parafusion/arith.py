"""Exact integer and rational primitives shared by every other module.

All values are Python ints or :class:`fractions.Fraction`; nothing in this
package touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "mod1",
    "ResidueVector",
    "standard_inner",
    "IntegerMatrix",
    "SingularMatrixError",
    "smith_normal_form",
]

# Arbitrary-precision exact rational: always lowest terms, positive denominator.
Rational = Fraction


def mod1(q: Fraction | int) -> Fraction:
    """Canonical representative of q + Z in [0, 1)."""
    q = Fraction(q)
    return q - Fraction(q.numerator // q.denominator)


@dataclass(frozen=True, order=True)
class ResidueVector:
    """A vector over Z_n, entries stored reduced into [0, n)."""

    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if len(self.entries) < 1:
            raise ValueError("residue vector must have length >= 1")
        object.__setattr__(
            self, "entries", tuple(int(e) % self.modulus for e in self.entries)
        )

    @classmethod
    def zero(cls, modulus: int, length: int) -> "ResidueVector":
        return cls(modulus, (0,) * length)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, r: int) -> int:
        return self.entries[r]

    def _check_compatible(self, other: "ResidueVector") -> None:
        if self.modulus != other.modulus or len(self) != len(other):
            raise ValueError(
                f"incompatible residue vectors: mod {self.modulus} len {len(self)} "
                f"vs mod {other.modulus} len {len(other)}"
            )

    def __add__(self, other: "ResidueVector") -> "ResidueVector":
        self._check_compatible(other)
        return ResidueVector(
            self.modulus, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "ResidueVector") -> "ResidueVector":
        self._check_compatible(other)
        return ResidueVector(
            self.modulus, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "ResidueVector":
        return ResidueVector(self.modulus, tuple(-a for a in self.entries))

    def scaled(self, c: int) -> "ResidueVector":
        return ResidueVector(self.modulus, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)


def standard_inner(xi: ResidueVector, eta: ResidueVector) -> int:
    """(xi | eta) = sum_r xi_r eta_r reduced mod n."""
    xi._check_compatible(eta)
    return sum(a * b for a, b in zip(xi.entries, eta.entries)) % xi.modulus


@dataclass(frozen=True)
class IntegerMatrix:
    """A rectangular matrix with exact integer entries."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) == 0 or len(self.entries[0]) == 0:
            raise ValueError("matrix must be nonempty")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("matrix rows must all have the same length")
        object.__setattr__(
            self, "entries", tuple(tuple(int(e) for e in row) for row in self.entries)
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])


class SingularMatrixError(ValueError):
    """Raised when an operation requires a nonsingular matrix."""


def _min_abs_pivot(a: list[list[int]], t: int, n: int) -> tuple[int, int] | None:
    best = None
    best_val = None
    for i in range(t, n):
        for j in range(t, n):
            v = a[i][j]
            if v != 0 and (best_val is None or abs(v) < best_val):
                best = (i, j)
                best_val = abs(v)
    return best


def smith_normal_form(matrix) -> tuple[int, ...]:
    """Elementary divisors d_1 | d_2 | ... | d_n of a square integer matrix.

    Uses integer row/column reduction, always pivoting on the entry of
    smallest nonzero absolute value.  Only the divisor chain is computed;
    the unimodular transforms are discarded.  Raises
    :class:`SingularMatrixError` if the matrix is singular.
    """
    if isinstance(matrix, IntegerMatrix):
        rows = [list(r) for r in matrix.entries]
    else:
        rows = [[int(e) for e in r] for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("smith_normal_form requires a square matrix")
    a = rows
    divisors: list[int] = []
    for t in range(n):
        while True:
            pivot = _min_abs_pivot(a, t, n)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            pi, pj = pivot
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            if a[t][t] < 0:
                a[t] = [-v for v in a[t]]
            p = a[t][t]
            # clear the pivot column and row; leftover remainders are
            # strictly smaller than |p|, so the pivot search loops around
            dirty = False
            for i in range(t + 1, n):
                q, r = divmod(a[i][t], p)
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if r:
                    dirty = True
            for j in range(t + 1, n):
                q, r = divmod(a[t][j], p)
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if r:
                    dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the submatrix for the chain
            fix = next(
                (
                    i
                    for i in range(t + 1, n)
                    for j in range(t + 1, n)
                    if a[i][j] % p
                ),
                None,
            )
            if fix is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[fix])]
        divisors.append(a[t][t])
    return tuple(divisors)
