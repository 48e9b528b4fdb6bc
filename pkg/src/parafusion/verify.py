"""Named verification suites: each runs a batch of exact checks and
returns per-check verdicts with a counterexample on failure."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .arith import ResidueVector
from .codes import Classification, all_codes
from .fusion import FusionSum
from .lattice import (
    discriminant_group,
    verify_coset_index,
    verify_coset_inner_congruence,
    verify_coset_inner_congruence_vec,
    verify_pairing_matches_b_form,
)
from .u0 import (
    U0Label,
    all_u0_labels,
    fuse_u0,
    simple_currents,
    theta_u0,
    top_level,
    top_level_closed_form,
    u0_vacuum,
)
from .ud import count_twisted, induce, orbits

__all__ = ["CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _fuse_sum_with_label(s: FusionSum, c: U0Label) -> Counter:
    out: Counter = Counter()
    for label, mult in s.items():
        for t, m in fuse_u0(label, c).items():
            out[t] += mult * m
    return out


def suite_fusion_axioms(k: int, seed: int = 0) -> list[CheckResult]:
    labels = all_u0_labels(k)
    results = []

    bad = next(
        (a for a in labels if fuse_u0(u0_vacuum(k), a) != FusionSum([a])), None
    )
    results.append(CheckResult(
        "unit-law", bad is None, "" if bad is None else f"vacuum failed on {bad}"))

    bad = next(
        ((a, b) for a in labels for b in labels if fuse_u0(a, b) != fuse_u0(b, a)),
        None,
    )
    results.append(CheckResult(
        "commutativity", bad is None,
        "" if bad is None else f"{bad[0]} x {bad[1]} is not symmetric"))

    bad = None
    for a in labels:
        for b in labels:
            ab = fuse_u0(a, b)
            for c in labels:
                left = _fuse_sum_with_label(ab, c)
                right: Counter = Counter()
                for t, m in fuse_u0(b, c).items():
                    for u, n in fuse_u0(a, t).items():
                        right[u] += m * n
                if left != right:
                    bad = (a, b, c)
                    break
            if bad:
                break
        if bad:
            break
    results.append(CheckResult(
        "associativity", bad is None,
        "" if bad is None else f"triple {bad[0]}, {bad[1]}, {bad[2]}"))

    vac = u0_vacuum(k)
    bad = None
    for a in labels:
        duals = [b for b in labels if vac in fuse_u0(a, b)]
        target = theta_u0(a)
        if duals != [target] or fuse_u0(a, target).multiplicity(vac) != 1:
            bad = (a, duals)
            break
    results.append(CheckResult(
        "unique-dual", bad is None,
        "" if bad is None else f"{bad[0]} has dual candidates {bad[1]}"))

    currents = simple_currents(k)
    group_ok = all(
        fuse_u0(currents[p], currents[q]) == FusionSum([currents[(p + q) % (2 * k)]])
        for p in range(2 * k)
        for q in range(2 * k)
    )
    results.append(CheckResult(
        "simple-current-group", group_ok,
        "" if group_ok else "simple currents do not realize the cyclic group law"))
    return results


def suite_appendix_a(k_max: int, seed: int = 0) -> list[CheckResult]:
    results = []
    for k in range(2, k_max + 1):
        bad = None
        for l in range(2 * k):
            oracle = top_level(U0Label(k, 0, l))
            closed = top_level_closed_form(k, l)
            if oracle != closed:
                bad = (l, oracle, closed)
                break
        results.append(CheckResult(
            f"top-level-closed-form-k{k}", bad is None,
            "" if bad is None else
            f"l={bad[0]}: oracle {bad[1]} vs closed form {bad[2]}"))
    return results


def suite_lattice_lemmas(k: int, seed: int = 0, samples: int = 20) -> list[CheckResult]:
    results = []
    rng = random.Random(seed)

    bad = next(
        ((p, q) for p in range(2 * k) for q in range(2 * k)
         if not verify_coset_inner_congruence(k, p, q, samples, rng.randrange(2**30))),
        None,
    )
    results.append(CheckResult(
        "scalar-coset-congruence", bad is None,
        "" if bad is None else f"failed at (p, q) = {bad}"))

    bad = None
    for ell in (1, 2, 3):
        for _ in range(5):
            xi = ResidueVector(2 * k, tuple(rng.randrange(2 * k) for _ in range(ell)))
            eta = ResidueVector(2 * k, tuple(rng.randrange(2 * k) for _ in range(ell)))
            if not verify_coset_inner_congruence_vec(xi, eta, samples, rng.randrange(2**30)):
                bad = (xi, eta)
                break
        if bad:
            break
    results.append(CheckResult(
        "vector-coset-congruence", bad is None,
        "" if bad is None else f"failed at xi={bad[0].entries}, eta={bad[1].entries}"))

    bad = None
    for ell in (1, 2, 3):
        for _ in range(5):
            xi = ResidueVector(2 * k, tuple(rng.randrange(2 * k) for _ in range(ell)))
            mu = tuple(rng.randrange(k) for _ in range(ell))
            nu = ResidueVector(2 * k, tuple(rng.randrange(2 * k) for _ in range(ell)))
            if not verify_pairing_matches_b_form(xi, mu, nu, samples, rng.randrange(2**30)):
                bad = (xi, mu, nu)
                break
        if bad:
            break
    results.append(CheckResult(
        "coset-pairing-matches-b-form", bad is None,
        "" if bad is None else
        f"failed at xi={bad[0].entries}, mu={bad[1]}, nu={bad[2].entries}"))

    ok = verify_coset_index(k)
    results.append(CheckResult(
        "coset-index", ok, "" if ok else f"index bookkeeping failed at k={k}"))
    return results


def suite_discriminant(k_max: int, seed: int = 0) -> list[CheckResult]:
    results = []
    for k in range(2, k_max + 1):
        divisors = discriminant_group(k)
        expected = (2,) * (k - 2) + (2 * k,)
        results.append(CheckResult(
            f"discriminant-k{k}", divisors == expected,
            "" if divisors == expected else f"got {divisors}, expected {expected}"))
    return results


def suite_counting(k: int, seed: int = 0, length_max: int = 2,
                   size_max: int = 64) -> list[CheckResult]:
    results = []
    for ell in range(1, length_max + 1):
        bad = None
        checked = 0
        for code in all_codes(k, ell):
            if code.classification is not Classification.CASE_A or code.size > size_max:
                continue
            checked += 1
            census = orbits(code)
            chars = sorted({o.character for o in census}, key=lambda c: c.eta)
            if len(chars) != code.size:
                bad = (code, f"character count {len(chars)} != |D| = {code.size}")
                break
            total = sum(count_twisted(code, chi) for chi in chars)
            census_total = 0
            for o in census:
                if o.stabilizer_order == 1:
                    census_total += 1
                elif k % 4 == 1:
                    census_total += o.stabilizer_order
                else:
                    census_total += o.isotropic_order
            if total != census_total:
                bad = (code, f"count sum {total} != census total {census_total}")
                break
            if k % 2 == 0 and total != k ** (2 * ell) // code.size:
                bad = (code, f"count sum {total} != free-orbit total")
                break
            mismatch = next(
                (o for o in census
                 if induce(code, o.representative).summand_count != (
                     1 if o.stabilizer_order == 1
                     else o.stabilizer_order if k % 4 == 1
                     else o.isotropic_order)),
                None,
            )
            if mismatch is not None:
                bad = (code, f"induce summand count disagrees on orbit of "
                             f"{mismatch.representative}")
                break
        results.append(CheckResult(
            f"counting-length-{ell}", bad is None,
            f"checked {checked} Case A codes" if bad is None
            else f"{bad[0]}: {bad[1]}"))
    return results


SUITES = {
    "fusion-axioms": suite_fusion_axioms,
    "appendix-a": suite_appendix_a,
    "lattice-lemmas": suite_lattice_lemmas,
    "discriminant": suite_discriminant,
    "counting": suite_counting,
}


def run_suite(name: str, k: int, seed: int = 0) -> list[CheckResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](k, seed=seed)
