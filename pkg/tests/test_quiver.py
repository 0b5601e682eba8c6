"""Mutation mechanics, log-canonical brackets, and their compatibility."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symgroupoid.laurent import LaurentPoly, Q, RationalFn
from symgroupoid.quiver import (
    FrozenVertexError,
    HalfIntegerMutationError,
    Quiver,
    Seed,
    apply_sequence,
    bracket_value_at,
    corank,
    initial_table,
    monomial_casimirs,
    mutate,
    poisson_bracket,
    wname,
)

# the five-vertex exchange pattern: single arrow out, double out, single in, double in
PATTERN = Quiver.from_arrows(
    ["f", "a", "b", "c", "d"],
    [("f", "a", 2), ("f", "b", 4), ("c", "f", 2), ("d", "f", 4)],
)


def test_mutation_value_rule():
    seed = Seed.initial(PATTERN)
    mutated = mutate(seed, "f")
    t = seed.frame
    f = RationalFn.generator(t, wname("f"), 2)
    a = RationalFn.generator(t, wname("a"), 2)
    b = RationalFn.generator(t, wname("b"), 2)
    c = RationalFn.generator(t, wname("c"), 2)
    d = RationalFn.generator(t, wname("d"), 2)
    one = RationalFn.constant(t, 1)
    assert mutated.value("f") == f.inverse()
    assert mutated.value("a") == a * (one + f.inverse()).inverse()
    assert mutated.value("b") == b * (one + f.inverse()).inverse() ** 2
    assert mutated.value("c") == c * (one + f)
    assert mutated.value("d") == d * (one + f) ** 2


def test_mutation_involution():
    seed = Seed.initial(PATTERN)
    back = mutate(mutate(seed, "f"), "f")
    assert back == seed


def test_mutation_matrix_rule():
    q = Quiver.from_arrows(["x", "y", "z"], [("x", "y", 2), ("y", "z", 2)])
    m = q.mutate_matrix("y")
    # arrows reverse at y and the composite x->z appears
    assert m.b("y", "x") == 2
    assert m.b("z", "y") == 2
    assert m.b("x", "z") == 2
    assert q.mutate_matrix("y").mutate_matrix("y") == q


def test_frozen_vertex_rejected():
    q = Quiver.from_arrows(["x", "y"], [("x", "y", 2)], frozen={"y"})
    with pytest.raises(FrozenVertexError):
        mutate(Seed.initial(q), "y")


def test_half_integer_vertex_rejected():
    q = Quiver.from_arrows(["x", "y"], [("x", "y", 1)])
    with pytest.raises(HalfIntegerMutationError):
        mutate(Seed.initial(q), "x")


def test_apply_sequence_empty_and_swap():
    seed = Seed.initial(PATTERN)
    assert apply_sequence(seed, []) == seed
    swapped = apply_sequence(seed, [("a", "b")])
    assert swapped.quiver.b("f", "a") == 4
    assert swapped.quiver.b("f", "b") == 2
    assert swapped.value("a") == RationalFn.generator(seed.frame, wname("b"), 2)
    assert apply_sequence(swapped, [("a", "b")]) == seed


def test_bracket_base_case():
    seed = Seed.initial(PATTERN)
    t = seed.frame
    f = RationalFn.generator(t, wname("f"), 2)
    b = RationalFn.generator(t, wname("b"), 2)
    br = poisson_bracket(f, b, PATTERN)
    assert br == Fraction(2) * f * b  # eps(f, b) = 2 for a double arrow


def test_bracket_antisymmetry_and_leibniz():
    rng = random.Random(3)
    seed = Seed.initial(PATTERN)
    t = seed.frame

    def rand_fn():
        terms = {}
        for _ in range(3):
            exps = tuple(rng.randint(-2, 2) for _ in range(len(t)))
            terms[exps] = Fraction(rng.randint(1, 5))
        return RationalFn.from_poly(LaurentPoly(t, terms))

    for _ in range(4):
        x, y, z = rand_fn(), rand_fn(), rand_fn()
        assert poisson_bracket(x, y, PATTERN) == -poisson_bracket(y, x, PATTERN)
        lhs = poisson_bracket(x, y * z, PATTERN)
        rhs = poisson_bracket(x, y, PATTERN) * z + y * poisson_bracket(x, z, PATTERN)
        assert lhs == rhs


@given(
    st.lists(st.integers(min_value=-2, max_value=2), min_size=5, max_size=5),
    st.lists(st.integers(min_value=-2, max_value=2), min_size=5, max_size=5),
    st.lists(st.integers(min_value=-2, max_value=2), min_size=5, max_size=5),
)
@settings(max_examples=40, deadline=None)
def test_jacobi_identity_on_monomials(e1, e2, e3):
    t = initial_table(PATTERN.vertices)
    ms = [RationalFn.from_poly(LaurentPoly(t, {tuple(e): Q(1)})) for e in (e1, e2, e3)]
    x, y, z = ms

    def br(a, b):
        return poisson_bracket(a, b, PATTERN)

    jac = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))
    assert jac.is_zero()


def test_bracket_value_at_matches_symbolic():
    seed = Seed.initial(PATTERN)
    t = seed.frame
    f = RationalFn.generator(t, wname("f"), 2)
    a = RationalFn.generator(t, wname("a"), 2)
    one = RationalFn.constant(t, 1)
    x = (f + a) / (one + f * a)
    y = a ** 2 - f.inverse()
    point = {name: Fraction(k + 2, 3) for k, name in enumerate(t.names)}
    sym = poisson_bracket(x, y, PATTERN).evaluate(point)
    assert bracket_value_at(x, y, PATTERN, point) == sym


def test_poisson_compatibility_of_mutation():
    # brackets of mutated variables reproduce the mutated exchange matrix
    seed = Seed.initial(PATTERN)
    mutated = mutate(seed, "f")
    for u in PATTERN.vertices:
        for v in PATTERN.vertices:
            lhs = poisson_bracket(mutated.value(u), mutated.value(v), PATTERN)
            rhs = mutated.quiver.eps(u, v) * mutated.value(u) * mutated.value(v)
            assert lhs == rhs


def test_mutation_sequence_on_lattice_quiver():
    # mutating any interior vertex of the amalgamated n=3 quiver twice returns the seed
    from symgroupoid.squares import amalgamated_quiver

    q = amalgamated_quiver(3)
    seed = Seed.initial(q)
    for v in q.vertices:
        if v in q.frozen:
            continue
        assert mutate(mutate(seed, v), v) == seed


def test_seed_json_round_trip_after_mutations():
    seed = Seed.initial(PATTERN)
    s = mutate(mutate(seed, "f"), "a")
    back = Seed.from_json(s.to_json())
    assert back == s
    # omitting values yields the initial seed
    data = s.quiver.to_json()
    assert Seed.from_json(data) == Seed.initial(s.quiver)


def test_casimirs_commute_with_all_variables():
    q = Quiver.from_arrows(["x", "y", "z"], [("x", "y", 2), ("y", "z", 2)])
    monos = monomial_casimirs(q)
    assert len(monos) == corank(q) == 1
    t = initial_table(q.vertices)
    for mono in monos:
        f = RationalFn.from_poly(mono)
        for v in q.vertices:
            zv = RationalFn.generator(t, wname(v), 2)
            assert poisson_bracket(f, zv, q).is_zero()
