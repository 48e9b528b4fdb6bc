"""Representation inventory of the code extension algebra U_D.

Irreducible modules of the ell-fold tensor power of the base algebra are
labeled by pairs (mu, nu) with 0 <= mu_r <= k-1 and nu in (Z_2k)^ell,
each component canonicalized as a U(i, l) class.  A code D acts by
translating nu; the orbit, stabilizer, and character data of that action
determine the inventory of irreducible (twisted) U_D-modules.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import isqrt

from .arith import ResidueVector, mod1, standard_inner
from .codes import Classification, Code, CodeTooLargeError, dual_code, split_even_odd, \
    enumerate_code, generating_subset
from .u0 import U0Label, all_u0_labels, canonicalize_u0

__all__ = [
    "IrrU0Label",
    "CharacterLabel",
    "OrbitInfo",
    "InducedModuleReport",
    "CaseBEntry",
    "CaseBInventory",
    "canonicalize_irr",
    "all_irr_labels",
    "act",
    "b_form_vec",
    "character_of",
    "character_from_eta",
    "trivial_character",
    "stabilizer",
    "orbits",
    "induce",
    "count_twisted",
    "weight_mod1_uxi",
    "case_b_inventory",
]

DEFAULT_MAX_LABELS = 2**20


@dataclass(frozen=True, order=True)
class IrrU0Label:
    """A tensor label (mu, nu): component r names the class of U(mu_r, nu_r)."""

    k: int
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"level k must be >= 2, got {self.k}")
        if len(self.mu) != len(self.nu) or len(self.mu) < 1:
            raise ValueError("mu and nu must have equal positive length")
        if any(not (0 <= m <= self.k - 1) for m in self.mu):
            raise ValueError(f"mu entries must lie in [0, {self.k - 1}]")
        object.__setattr__(self, "mu", tuple(int(m) for m in self.mu))
        object.__setattr__(self, "nu", tuple(int(n) % (2 * self.k) for n in self.nu))

    @property
    def length(self) -> int:
        return len(self.mu)

    def components(self) -> tuple[U0Label, ...]:
        return tuple(U0Label(self.k, m, n) for m, n in zip(self.mu, self.nu))

    @property
    def is_canonical(self) -> bool:
        return all(c.is_canonical for c in self.components())

    def __str__(self) -> str:
        return " x ".join(str(c) for c in self.components())


def canonicalize_irr(k: int, mu, nu) -> IrrU0Label:
    """Canonicalize componentwise."""
    comps = [canonicalize_u0(k, m, n) for m, n in zip(mu, nu)]
    return IrrU0Label(k, tuple(c.i for c in comps), tuple(c.l for c in comps))


def all_irr_labels(
    k: int, length: int, max_labels: int = DEFAULT_MAX_LABELS
) -> tuple[IrrU0Label, ...]:
    """All k^(2*length) canonical labels, in lexicographic component order."""
    if k ** (2 * length) > max_labels:
        raise CodeTooLargeError(
            f"label space of size {k ** (2 * length)} exceeds max_labels={max_labels}"
        )
    singles = all_u0_labels(k)
    return tuple(
        IrrU0Label(k, tuple(c.i for c in combo), tuple(c.l for c in combo))
        for combo in product(singles, repeat=length)
    )


def _check_code_label(code: Code, x: IrrU0Label) -> None:
    if code.k != x.k or code.length != x.length:
        raise ValueError(
            f"code (k={code.k}, length={code.length}) does not match label "
            f"(k={x.k}, length={x.length})"
        )


def act(xi: ResidueVector, x: IrrU0Label) -> IrrU0Label:
    """Translation action of a codeword: nu -> nu + xi, canonicalized."""
    if xi.modulus != 2 * x.k or len(xi) != x.length:
        raise ValueError("codeword shape does not match the label")
    return canonicalize_irr(x.k, x.mu, tuple(n + c for n, c in zip(x.nu, xi)))


def b_form_vec(xi: ResidueVector, x: IrrU0Label) -> Fraction:
    """(xi | (k-1)nu - k*mu)/2k mod 1."""
    if xi.modulus != 2 * x.k or len(xi) != x.length:
        raise ValueError("codeword shape does not match the label")
    k = x.k
    total = sum(
        c * ((k - 1) * n - k * m) for c, m, n in zip(xi, x.mu, x.nu)
    )
    return mod1(Fraction(total, 2 * k))


@dataclass(frozen=True)
class CharacterLabel:
    """A character of D, named by eta mod the dual code; eta is stored as
    the lexicographically least representative of its dual-code coset."""

    code: Code
    eta: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.eta)

    def value_exponent(self, xi: ResidueVector) -> Fraction:
        """The character value is exp(2 pi i t) for t = (xi | eta)/2k mod 1."""
        inner = standard_inner(xi, ResidueVector(2 * self.code.k, self.eta))
        return mod1(Fraction(inner, 2 * self.code.k))

    def __str__(self) -> str:
        return "chi[" + ",".join(str(e) for e in self.eta) + "]"


@lru_cache(maxsize=None)
def _canonical_eta(code: Code, eta: tuple[int, ...]) -> tuple[int, ...]:
    vec = ResidueVector(2 * code.k, eta)
    return min((vec + delta).entries for delta in dual_code(code).elements)


def character_of(x: IrrU0Label, code: Code) -> CharacterLabel:
    """The character xi -> exp(2 pi i (xi | (k-1)nu - k mu)/2k) of D."""
    _check_code_label(code, x)
    k = x.k
    eta = tuple(((k - 1) * n - k * m) % (2 * k) for m, n in zip(x.mu, x.nu))
    return CharacterLabel(code, _canonical_eta(code, eta))


def character_from_eta(code: Code, eta) -> CharacterLabel:
    """The character named by an arbitrary eta vector, canonicalized."""
    eta = tuple(int(e) % (2 * code.k) for e in eta)
    if len(eta) != code.length:
        raise ValueError(f"eta must have length {code.length}")
    return CharacterLabel(code, _canonical_eta(code, eta))


def trivial_character(code: Code) -> CharacterLabel:
    return CharacterLabel(code, (0,) * code.length)


def stabilizer(code: Code, x: IrrU0Label) -> tuple[ResidueVector, ...]:
    """The subgroup of codewords fixing the label."""
    _check_code_label(code, x)
    x = canonicalize_irr(x.k, x.mu, x.nu)
    return tuple(xi for xi in code.elements if act(xi, x) == x)


def _isotropic_part(code: Code, stab: tuple[ResidueVector, ...]) -> tuple[ResidueVector, ...]:
    """D_X intersected with its own dual inside (Z_2k)^ell."""
    return tuple(
        xi for xi in stab if all(standard_inner(xi, eta) == 0 for eta in stab)
    )


@dataclass(frozen=True)
class OrbitInfo:
    representative: IrrU0Label  # lexicographically least member
    members: tuple[IrrU0Label, ...]
    stabilizer: tuple[ResidueVector, ...]
    isotropic: tuple[ResidueVector, ...]
    character: CharacterLabel

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def stabilizer_order(self) -> int:
        return len(self.stabilizer)

    @property
    def isotropic_order(self) -> int:
        return len(self.isotropic)


def _orbit_of(code: Code, x: IrrU0Label) -> OrbitInfo:
    members = sorted({act(xi, x) for xi in code.elements})
    rep = members[0]
    stab = stabilizer(code, rep)
    return OrbitInfo(
        representative=rep,
        members=tuple(members),
        stabilizer=stab,
        isotropic=_isotropic_part(code, stab),
        character=character_of(rep, code),
    )


def orbits(
    code: Code,
    restrict_to_character: CharacterLabel | None = None,
    max_labels: int = DEFAULT_MAX_LABELS,
) -> tuple[OrbitInfo, ...]:
    """The orbit census of the code action on all canonical labels.

    Orbits are listed by their lexicographically least member.  Characters
    are class functions only when every code pairing is integral, so
    Invalid codes are rejected.
    """
    if code.classification is Classification.INVALID:
        raise ValueError("orbit census requires a Case A or Case B code")
    census = []
    visited: set[IrrU0Label] = set()
    for x in all_irr_labels(code.k, code.length, max_labels):
        if x in visited:
            continue
        info = _orbit_of(code, x)
        visited.update(info.members)
        census.append(info)
    if restrict_to_character is not None:
        census = [o for o in census if o.character == restrict_to_character]
    return tuple(census)


@dataclass(frozen=True)
class InducedModuleReport:
    """Structure of the induced module over one orbit, per the stabilizer
    branching: `summand_count` irreducibles, each appearing with
    multiplicity `multiplicity`, each decomposing over the orbit members
    with that same multiplicity."""

    orbit: OrbitInfo
    character: CharacterLabel
    stabilizer_order: int
    summand_count: int
    multiplicity: int
    u0_decomposition: tuple[tuple[IrrU0Label, int], ...]


def induce(code: Code, x: IrrU0Label) -> InducedModuleReport:
    """Induce from an irreducible label over a Case A code."""
    if code.classification is not Classification.CASE_A:
        raise ValueError(
            f"induction requires a Case A code, got {code.classification.value}"
        )
    _check_code_label(code, x)
    info = _orbit_of(code, canonicalize_irr(x.k, x.mu, x.nu))
    k = code.k
    if info.stabilizer_order == 1:
        summands, mult = 1, 1
    elif k % 4 == 1:
        summands, mult = info.stabilizer_order, 1
    else:  # k % 4 == 3; even k admits no nontrivial stabilizer
        index = info.stabilizer_order // info.isotropic_order
        mult = isqrt(index)
        if mult * mult != index:
            raise AssertionError(
                f"stabilizer index {index} is not a perfect square"
            )
        summands = info.isotropic_order
    # total length over the base algebra matches the code size
    assert summands * mult * mult * info.size == code.size
    return InducedModuleReport(
        orbit=info,
        character=info.character,
        stabilizer_order=info.stabilizer_order,
        summand_count=summands,
        multiplicity=mult,
        u0_decomposition=tuple((w, mult) for w in info.members),
    )


def count_twisted(code: Code, chi: CharacterLabel) -> int:
    """Number of inequivalent irreducible chi-twisted modules of U_D."""
    if code.classification is not Classification.CASE_A:
        raise ValueError(
            f"twisted-module counting requires a Case A code, got {code.classification.value}"
        )
    total = 0
    for info in orbits(code, restrict_to_character=chi):
        if info.stabilizer_order == 1:
            total += 1
        elif code.k % 4 == 1:
            total += info.stabilizer_order
        else:
            total += info.isotropic_order
    return total


def weight_mod1_uxi(xi: ResidueVector) -> Fraction:
    """Conformal weight mod 1 of the simple current U_xi: (k-1)(xi.xi)/4k."""
    if xi.modulus % 2:
        raise ValueError("codewords live over an even modulus 2k")
    k = xi.modulus // 2
    return mod1(Fraction((k - 1) * sum(c * c for c in xi), 4 * k))


@dataclass(frozen=True)
class CaseBEntry:
    """One irreducible module of the even part, with the decomposition of
    the object it induces over the whole superalgebra."""

    orbit_representative: IrrU0Label
    summand_index: int
    multiplicity: int
    u0_decomposition: tuple[tuple[IrrU0Label, int], ...]
    flag: str


@dataclass(frozen=True)
class CaseBInventory:
    code: Code
    even_part: Code
    odd_representative: ResidueVector
    entries: tuple[CaseBEntry, ...]


UNDETERMINED_FLAG = "irreducible or splits into two irreducibles (undetermined)"


def case_b_inventory(code: Code, max_labels: int = DEFAULT_MAX_LABELS) -> CaseBInventory:
    """Inventory of irreducible modules of a Case B superalgebra code.

    The even-diagonal subgroup D0 is Case A; every irreducible module of
    the even part U_{D0} comes from a trivial-character orbit there, and
    induces over U_D an object that is either irreducible or a direct sum
    of two irreducibles (not decided here).
    """
    if code.classification is not Classification.CASE_B:
        raise ValueError(
            f"Case B inventory requires a Case B code, got {code.classification.value}"
        )
    d0, d1 = split_even_odd(code)
    gens0 = generating_subset(code.k, code.length, d0)
    even = enumerate_code(code.k, code.length, gens0)
    assert even.elements == d0 and even.classification is Classification.CASE_A
    xi1 = d1[0]
    entries = []
    for info in orbits(even, restrict_to_character=trivial_character(even),
                       max_labels=max_labels):
        report = induce(even, info.representative)
        decomp: Counter = Counter()
        for w, mult in report.u0_decomposition:
            decomp[w] += mult
            decomp[act(xi1, w)] += mult
        decomposition = tuple(sorted(decomp.items()))
        for s in range(report.summand_count):
            entries.append(
                CaseBEntry(
                    orbit_representative=info.representative,
                    summand_index=s,
                    multiplicity=report.multiplicity,
                    u0_decomposition=decomposition,
                    flag=UNDETERMINED_FLAG,
                )
            )
    return CaseBInventory(
        code=code, even_part=even, odd_representative=xi1, entries=tuple(entries)
    )
