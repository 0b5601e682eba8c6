"""Surface charts: telescopic values, twists, skein completion, braid action."""

import pytest

from symgroupoid import surfaces
from symgroupoid.laurent import Q, RationalFn
from symgroupoid.quiver import apply_sequence, mutate, poisson_bracket, wname
from symgroupoid.suites import unit_count
from symgroupoid.teich import (
    SkeinInconsistency,
    braid_twist,
    build_surface,
    catalog_value,
    locate_flanking,
    markov,
    matrix_braid,
    skein_complete,
    skein_product,
    telescopic,
)


def ones(table):
    return {name: Q(1) for name in table.names}


def test_telescopic_four_letter_example():
    model = build_surface("genus2_k33")
    val = telescopic(["d", "e", "f", "a"], model.seed)
    assert val.num.term_count() == 5
    assert val.evaluate(ones(model.seed.frame)) == 5


def test_telescopic_single_letter_at_one():
    model = build_surface("genus2_k33")
    val = telescopic(["a"], model.seed)
    assert val.evaluate(ones(model.seed.frame)) == 2


def test_telescopic_unbound_name():
    model = build_surface("genus2_k33")
    with pytest.raises(KeyError):
        telescopic(["nope"], model.seed)


def test_grouped_slot_semantics():
    model = build_surface("genus3_extended")
    word = ["a1", ("a2", "a3"), "at"]
    val = telescopic(word, model.seed)
    # 1, 1/a1, then three group terms, then the full reciprocal
    assert val.num.term_count() == 6


def test_quiver_chain_genus2():
    orig = surfaces.genus2_original_quiver()
    assert surfaces.genus2_k33_quiver() == orig.mutate_matrix("f")
    assert surfaces.genus2_papillon_quiver() == orig.mutate_matrix("e")
    x7 = surfaces.genus2_x7_quiver()
    assert len(x7.vertices) == 7
    # the two-wing pattern plus the new wing through g
    assert x7.b("g", "f") == 4 and x7.b("e", "g") == 2


def test_x7_casimir_and_model():
    model = build_surface("genus2_x7")
    from symgroupoid.quiver import corank, monomial_is_casimir

    exps, value = model.casimir_constraint
    assert value == 1
    assert monomial_is_casimir(model.quiver, exps)
    assert corank(model.quiver) == 1


def test_markov_unit_counts_and_forms():
    k33 = build_surface("genus2_k33")
    m = markov(k33, "product_G")
    assert m == markov(k33, "product_Gtilde")
    assert unit_count(m) == 50
    x7 = build_surface("genus2_x7")
    mx = markov(x7, "product_G")
    assert mx == markov(x7, "product_Gtilde") == markov(x7, "via_GB")
    assert unit_count(mx) == 46


def test_markov_needs_dual_for_gb_form():
    k33 = build_surface("genus2_k33")
    with pytest.raises(ValueError):
        markov(k33, "via_GB")


def test_genus3_mutation_image_example():
    model = build_surface("genus3_original")
    seed = model.seed
    g12 = telescopic(["b3", "a3", "d2", "c3"], seed)
    assert telescopic(["b3", "d2", "c3"], mutate(seed, "a3")) == g12


def test_skein_complete_chain_and_k_independence():
    model = build_surface("genus2_x7")
    chain = [catalog_value(model, lbl) for lbl in model.chains["braid"]]
    u = skein_complete(chain, model.quiver)  # raises on split dependence
    assert u.rows == 6
    assert u.is_unipotent_upper()
    # base case: length-two chain gives a single derived entry
    small = skein_complete(chain[:2], model.quiver)
    assert small.rows == 3
    assert small[0, 2] == skein_product(chain[0], chain[1], model.quiver)


def test_skein_inconsistency_detected():
    # a scrambled chain fails the split-independence check
    model = build_surface("genus2_x7")
    bogus = [catalog_value(model, l) for l in ("G_B", "G_{1,2}", "G_{2,3}")]
    with pytest.raises(SkeinInconsistency):
        skein_complete(bogus, model.quiver)


def test_matrix_braid_involution_and_shape():
    model = build_surface("genus2_x7")
    chain = [catalog_value(model, lbl) for lbl in model.chains["braid"]]
    u = skein_complete(chain, model.quiver, check_k_independence=False)
    pt = {name: Q(k + 2, k + 1) for k, name in enumerate(model.seed.frame.names)}
    upt = u.evaluate(pt)
    for i in (1, 3, 5):
        tw = matrix_braid(upt, i)
        assert tw.is_unipotent_upper()
        assert matrix_braid(tw, i, "-") == upt
    with pytest.raises(IndexError):
        matrix_braid(upt, 6)


def test_braid_twist_modes_small():
    model = build_surface("genus2_k33")
    chain = ["d", "e", "f", "a"]
    flank = locate_flanking(model.seed, chain)
    assert flank[1] == "c" and flank[2] == "b" and flank["twist"] is None
    sm = braid_twist(model.seed, chain, "mutation_sequence")
    sc = braid_twist(model.seed, chain, "closed_form")
    assert sm.quiver == model.seed.quiver
    for v in model.quiver.vertices:
        assert sm.values[v].as_rational() == sc.values[v].as_rational()
    g = telescopic(chain, model.seed)
    assert telescopic(chain, sm) == g


def test_extended_mutation_values():
    model = build_surface("genus2_x7")
    seed = model.seed
    t = seed.frame
    gen = lambda v, p=1: RationalFn.generator(t, wname(v), p)
    one = RationalFn.constant(t, 1)
    s2 = apply_sequence(seed, ["g", ("f", "g")])
    assert s2.quiver == model.quiver
    assert s2.value("f") == gen("g", 2).inverse()
    assert s2.value("g") == gen("f", 2) * (one + gen("g", 2).inverse()) ** -2
    assert s2.value("e") == gen("e", 2) * (one + gen("g", 2))


def test_genus4_model_g45():
    model = build_surface("genus4_n5")
    g45 = catalog_value(model, "G_{4,5}")
    assert g45.is_laurent()
    assert unit_count(g45) == 16
    gb = catalog_value(model, "G_B")
    assert poisson_bracket(gb, catalog_value(model, "G_{1,2}"), model.quiver).is_zero()


def test_build_surface_unknown():
    with pytest.raises(ValueError):
        build_surface("genus9_mystery")
