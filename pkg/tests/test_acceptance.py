"""Acceptance gate: the thirteen exit criteria, one test each.

Every test prints a single pass/fail line; tolerances and counts are pinned
here and never loosened.  The shared sampling seed keeps runs reproducible.
"""

import random
from fractions import Fraction

from symgroupoid.suites import build_suite

RNG_SEED = 42

_cache = {}


def checks_for(suite: str) -> dict:
    if suite not in _cache:
        _cache[suite] = {c.id: c for c in build_suite(suite, RNG_SEED)}
    return _cache[suite]


def run(suite: str, *ids, label: str):
    table = checks_for(suite)
    for cid in ids:
        outcome = table[cid].run()
        ok, witness = outcome if isinstance(outcome, tuple) else (outcome, None)
        status = "PASS" if ok else "FAIL"
        print(f"[acceptance] {label} :: {cid}: {status}" + (f" ({witness})" if witness else ""))
        assert ok, f"{label}: {cid} failed: {witness}"


def test_criterion_01_path_sum_term_counts():
    run(
        "reflection",
        "network_term_counts_n4",
        "network_long_entry_verbatim",
        label="1 path-sum term counts",
    )


def test_criterion_02_casimir_counts():
    for cid, check in checks_for("casimirs").items():
        outcome = check.run()
        ok = outcome[0] if isinstance(outcome, tuple) else outcome
        print(f"[acceptance] 2 casimir counts :: {cid}: {'PASS' if ok else 'FAIL'}")
        assert ok, cid


def test_criterion_03_groupoid_theorem():
    run(
        "groupoid",
        "groupoid_upper_A_n2",
        "groupoid_upper_At_n2",
        "groupoid_conjugation_n2",
        "groupoid_upper_A_n3",
        "groupoid_upper_At_n3",
        "groupoid_conjugation_n3",
        "groupoid_numeric_n4",
        label="3 groupoid compatibility",
    )


def test_criterion_04_unique_unipotent():
    run("groupoid", "groupoid_unique_unipotent", label="4 unique unipotent solution")


def test_criterion_05_reflection_structure():
    run(
        "reflection",
        "reflection_twin_commutation_n3",
        "reflection_equation_n3",
        "reflection_equation_n4",
        "reflection_twin_commutation_n4",
        label="5 reflection structure",
    )


def test_criterion_06_markov_element():
    run("genus2", "genus2_markov_forms", label="6 separating element")


def test_criterion_07_twist_identities():
    run("genus2", "genus2_twist_identities", label="7 twist identities")


def test_criterion_08_modular_relations():
    run("braid", "braid_modular_relations", "braid_generator_basics", label="8 modular relations")


def test_criterion_09_braid_lemma():
    run("genus3", "genus3_braid_lemma", label="9 mutation twist lemma")


def test_criterion_10_genus3_pair_and_rank():
    run(
        "genus3",
        "genus3_markov_pair",
        "genus3_rank_locus",
        label="10 genus-three pair and rank locus",
    )


def test_criterion_11_genus4_reduction():
    run(
        "genus4",
        "genus4_chiral_toy",
        "genus4_det_ansatz",
        "genus4_twist_realization",
        label="11 genus-four reduction",
    )


def test_criterion_12_sl2_reconstruction():
    run("sl2", "sl2_reconstruction", label="12 transport reconstruction")


def test_criterion_13_property_suites():
    run(
        "genus2",
        "genus2_mutation_properties",
        "genus2_telescopic_positivity",
        label="13 property suites",
    )
    run("reflection", "network_entry_bound", label="13 property suites")

    # bracket antisymmetry and the Jacobi identity on sampled data
    from symgroupoid.laurent import LaurentPoly, RationalFn
    from symgroupoid.quiver import poisson_bracket
    from symgroupoid import surfaces

    q = surfaces.genus2_x7_quiver()
    from symgroupoid.quiver import initial_table

    t = initial_table(q.vertices)
    rng = random.Random(RNG_SEED)

    def rand_fn():
        terms = {}
        for _ in range(3):
            exps = tuple(rng.randint(-2, 2) for _ in range(len(t)))
            terms[exps] = Fraction(rng.randint(1, 5))
        return RationalFn.from_poly(LaurentPoly(t, terms))

    for _ in range(5):
        x, y = rand_fn(), rand_fn()
        assert poisson_bracket(x, y, q) == -poisson_bracket(y, x, q)
    for _ in range(8):
        monos = [
            RationalFn.from_poly(
                LaurentPoly(t, {tuple(rng.randint(-2, 2) for _ in range(len(t))): Fraction(1)})
            )
            for _ in range(3)
        ]
        x, y, z = monos
        jac = (
            poisson_bracket(x, poisson_bracket(y, z, q), q)
            + poisson_bracket(y, poisson_bracket(z, x, q), q)
            + poisson_bracket(z, poisson_bracket(x, y, q), q)
        )
        assert jac.is_zero()
    print("[acceptance] 13 property suites :: bracket antisymmetry and Jacobi: PASS")
