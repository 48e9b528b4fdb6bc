import random
from fractions import Fraction

import pytest

from parafusion.arith import ResidueVector, mod1
from parafusion.codes import (
    Classification,
    all_codes,
    dual_code,
    enumerate_code,
    random_code,
    split_even_odd,
)
from parafusion.u0 import U0Label, b_form_u0
from parafusion.ud import (
    IrrU0Label,
    act,
    all_irr_labels,
    b_form_vec,
    canonicalize_irr,
    case_b_inventory,
    character_of,
    count_twisted,
    induce,
    orbits,
    stabilizer,
    trivial_character,
    weight_mod1_uxi,
)


def test_label_validation_and_count():
    with pytest.raises(ValueError):
        IrrU0Label(3, (3,), (0,))
    with pytest.raises(ValueError):
        IrrU0Label(3, (1, 1), (0,))
    assert len(all_irr_labels(2, 2)) == 16
    assert len(all_irr_labels(3, 1)) == 9
    assert all(x.is_canonical for x in all_irr_labels(3, 2))


def test_act_examples():
    X = IrrU0Label(2, (0, 0), (0, 0))
    zero = ResidueVector(4, (0, 0))
    assert act(zero, X) == X
    # componentwise (0, 2) is already the canonical representative at k=2
    assert act(ResidueVector(4, (2, 2)), X) == IrrU0Label(2, (0, 0), (2, 2))


def test_act_is_a_group_action():
    rng = random.Random(5)
    for k, ell in ((2, 2), (3, 1), (3, 2)):
        labels = all_irr_labels(k, ell)
        for _ in range(30):
            xi = ResidueVector(2 * k, tuple(rng.randrange(2 * k) for _ in range(ell)))
            eta = ResidueVector(2 * k, tuple(rng.randrange(2 * k) for _ in range(ell)))
            X = labels[rng.randrange(len(labels))]
            assert act(xi + eta, X) == act(xi, act(eta, X))


def test_b_form_vec_examples():
    X = IrrU0Label(2, (0,), (1,))
    assert b_form_vec(ResidueVector(4, (0,)), X) == 0
    assert b_form_vec(ResidueVector(4, (2,)), X) == Fraction(1, 2)


@pytest.mark.parametrize("k, ell", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_b_form_vec_is_componentwise(k, ell):
    from itertools import product

    for X in all_irr_labels(k, ell):
        for entries in product(range(2 * k), repeat=ell):
            xi = ResidueVector(2 * k, entries)
            expected = mod1(
                sum(
                    (b_form_u0(p, U0Label(k, m, n))
                     for p, m, n in zip(entries, X.mu, X.nu)),
                    Fraction(0),
                )
            )
            assert b_form_vec(xi, X) == expected


def test_b_form_vec_constant_on_canonicalization_fiber():
    k, ell = 3, 2
    for X in all_irr_labels(k, ell):
        raw = IrrU0Label(
            k,
            (k - 1 - X.mu[0],) + X.mu[1:],
            (X.nu[0] + k,) + X.nu[1:],
        )
        assert canonicalize_irr(k, raw.mu, raw.nu) == X
        for entries in ((1, 0), (2, 3), (5, 4)):
            xi = ResidueVector(2 * k, entries)
            assert b_form_vec(xi, raw) == b_form_vec(xi, X)


def test_character_examples():
    code = enumerate_code(2, 2, [(2, 2)])
    vac = IrrU0Label(2, (0, 0), (0, 0))
    assert character_of(vac, code).is_trivial
    ch = character_of(IrrU0Label(2, (0, 0), (1, 0)), code)
    assert not ch.is_trivial
    assert ch.value_exponent(ResidueVector(4, (2, 2))) == Fraction(1, 2)


@pytest.mark.parametrize("k, ell", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_character_trivial_iff_eta_in_dual(k, ell):
    for code in all_codes(k, ell):
        if code.classification is Classification.INVALID:
            continue
        dual = set(dual_code(code).elements)
        for X in all_irr_labels(k, ell):
            eta = ResidueVector(
                2 * k, tuple((k - 1) * n - k * m for m, n in zip(X.mu, X.nu))
            )
            assert character_of(X, code).is_trivial == (eta in dual)


@pytest.mark.parametrize("k, ell", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_character_surjectivity_and_orbit_invariance(k, ell):
    for code in all_codes(k, ell):
        if code.classification is Classification.INVALID:
            continue
        census = orbits(code)
        # characters are constant on orbits
        for info in census:
            chars = {character_of(member, code) for member in info.members}
            assert chars == {info.character}
        # every character of D is realized
        assert len({info.character for info in census}) == code.size


def test_stabilizer_examples():
    code = enumerate_code(3, 2, [(3, 3)])
    full = stabilizer(code, IrrU0Label(3, (1, 1), (0, 0)))
    assert len(full) == 2
    only_zero = stabilizer(code, IrrU0Label(3, (0, 1), (0, 0)))
    assert only_zero == (ResidueVector(6, (0, 0)),)


@pytest.mark.parametrize("k, ell", [(2, 2), (3, 1), (3, 2), (4, 1), (5, 1)])
def test_stabilizer_closed_form(k, ell):
    for code in all_codes(k, ell):
        if code.classification is Classification.INVALID:
            continue
        for X in all_irr_labels(k, ell):
            stab = set(stabilizer(code, X))
            if k % 2 == 0:
                expected = {code.zero()}
            else:
                expected = {
                    xi
                    for xi in code.elements
                    if all(c in (0, k) for c in xi)
                    and all(
                        X.mu[r] == (k - 1) // 2
                        for r in range(ell)
                        if xi[r] == k
                    )
                }
            assert stab == expected, (code, X)


def test_orbit_census_shapes():
    trivial = enumerate_code(2, 2, [])
    census = orbits(trivial)
    assert len(census) == 16 and all(o.size == 1 for o in census)

    code = enumerate_code(2, 2, [(2, 2)])
    census = orbits(code)
    assert len(census) == 8 and all(o.size == 2 for o in census)
    assert sum(o.size for o in census) == 16
    # representatives are the least members, orbits partition the labels
    seen = set()
    for o in census:
        assert o.representative == min(o.members)
        assert not (seen & set(o.members))
        seen.update(o.members)
    assert len(seen) == 16


def test_orbits_reject_invalid_codes():
    with pytest.raises(ValueError):
        orbits(enumerate_code(3, 1, [(1,)]))


def test_induce_free_orbit():
    code = enumerate_code(2, 2, [(2, 2)])
    report = induce(code, IrrU0Label(2, (0, 0), (0, 0)))
    assert report.summand_count == 1 and report.multiplicity == 1
    assert sum(m for _, m in report.u0_decomposition) == 2


def test_induce_stabilized_orbit_k3():
    # k = 3 mod 4: two summands, multiplicity one
    code = enumerate_code(3, 2, [(3, 3)])
    report = induce(code, IrrU0Label(3, (1, 1), (0, 0)))
    assert report.stabilizer_order == 2
    assert report.summand_count == 2 and report.multiplicity == 1
    assert report.u0_decomposition == ((IrrU0Label(3, (1, 1), (0, 0)), 1),)


def test_induce_stabilized_orbit_k5():
    # k = 1 mod 4: |D_X| summands, multiplicity one
    code = enumerate_code(5, 1, [(5,)])
    assert code.classification is Classification.CASE_A
    report = induce(code, IrrU0Label(5, (2,), (0,)))
    assert report.stabilizer_order == 2
    assert report.summand_count == 2 and report.multiplicity == 1


def test_induce_multiplicity_two():
    # k = 3 mod 4 with a rank-two stabilizer pairing: m = 2
    gens = [(3, 3, 0, 0), (0, 3, 3, 0)]
    code = enumerate_code(3, 4, gens)
    assert code.classification is Classification.CASE_A and code.size == 4
    X = IrrU0Label(3, (1, 1, 1, 1), (0, 0, 0, 0))
    report = induce(code, X)
    assert report.stabilizer_order == 4
    assert report.summand_count == 1 and report.multiplicity == 2
    assert report.u0_decomposition == ((X, 2),)


def test_induce_requires_case_a():
    with pytest.raises(ValueError):
        induce(enumerate_code(3, 1, [(3,)]), IrrU0Label(3, (0,), (0,)))


def test_count_twisted_trivial_code():
    code = enumerate_code(3, 1, [])
    assert count_twisted(code, trivial_character(code)) == 9


def test_count_twisted_sum_rule():
    for k, ell in ((2, 1), (2, 2), (3, 1), (3, 2), (4, 1)):
        for code in all_codes(k, ell):
            if code.classification is not Classification.CASE_A:
                continue
            census = orbits(code)
            chars = {o.character for o in census}
            assert len(chars) == code.size  # nonempty fiber over every character
            total = sum(count_twisted(code, chi) for chi in chars)
            expected = 0
            for o in census:
                if o.stabilizer_order == 1:
                    expected += 1
                elif k % 4 == 1:
                    expected += o.stabilizer_order
                else:
                    expected += o.isotropic_order
            assert total == expected
            if k % 2 == 0:
                assert total == k ** (2 * ell) // code.size


def test_count_twisted_requires_case_a():
    code = enumerate_code(3, 1, [(3,)])
    with pytest.raises(ValueError):
        count_twisted(code, trivial_character(code))


def test_weight_mod1_uxi_examples():
    assert weight_mod1_uxi(ResidueVector(6, (0,))) == 0
    assert weight_mod1_uxi(ResidueVector(6, (3,))) == Fraction(1, 2)


def test_weight_mod1_uxi_on_codes():
    rng = random.Random(19)
    seen_b = 0
    for _ in range(40):
        code = random_code(rng.randint(2, 5), rng.randint(1, 3), rng)
        if code.classification is Classification.CASE_A:
            assert all(weight_mod1_uxi(xi) == 0 for xi in code.elements)
        elif code.classification is Classification.CASE_B:
            seen_b += 1
            d0, d1 = split_even_odd(code)
            assert all(weight_mod1_uxi(xi) == 0 for xi in d0)
            assert all(weight_mod1_uxi(xi) == Fraction(1, 2) for xi in d1)
    assert seen_b > 0


def test_case_b_inventory_trivial_even_part():
    code = enumerate_code(3, 1, [(3,)])
    inventory = case_b_inventory(code)
    assert inventory.even_part.size == 1
    assert len(inventory.entries) == 9
    reps = [e.orbit_representative for e in inventory.entries]
    assert len(set(reps)) == 9
    for entry in inventory.entries:
        assert entry.multiplicity == 1
        assert sum(m for _, m in entry.u0_decomposition) == 2
        assert "undetermined" in entry.flag


def test_case_b_inventory_nontrivial_even_part():
    code = enumerate_code(2, 2, [(2, 0), (0, 2)])
    assert code.classification is Classification.CASE_B
    inventory = case_b_inventory(code)
    assert inventory.even_part.size == 2
    assert len(inventory.entries) == 4
    for entry in inventory.entries:
        # each induced object has base-algebra length |D|
        assert sum(m for _, m in entry.u0_decomposition) == 4


def test_case_b_inventory_requires_case_b():
    with pytest.raises(ValueError):
        case_b_inventory(enumerate_code(3, 2, [(3, 3)]))
