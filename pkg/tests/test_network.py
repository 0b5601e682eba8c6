"""Square-network path sums against their independent path-enumeration oracle."""

import pytest

from symgroupoid.laurent import Q
from symgroupoid.network import (
    SquareNetwork,
    build_square_network,
    casimir_suite_checks,
    enumerate_paths_dfs,
    path_sum_bruteforce,
)
from symgroupoid.quiver import poisson_bracket


def test_unsupported_size_rejected():
    with pytest.raises(ValueError):
        SquareNetwork(6)
    with pytest.raises(ValueError):
        SquareNetwork(2)


def test_published_term_counts_n4():
    net = SquareNetwork(4)
    assert net.path_sum_entry(1, 2).num.term_count() == 5
    assert net.path_sum_entry(2, 3).num.term_count() == 6
    assert net.path_sum_entry(2, 4).num.term_count() == 17
    assert net.path_sum_entry(3, 4).num.term_count() == 7


def test_face_labels_n4():
    net = SquareNetwork(4)
    assert sorted(net.face_names) == sorted(
        ["a", "b", "c", "p", "q", "r", "s1", "s2", "s3", "f1", "f2", "f3"]
    )
    assert len(net.face_names) == 12  # n(n-1) inner faces


def test_entry_rejects_bad_indices():
    net = SquareNetwork(3)
    with pytest.raises(ValueError):
        net.path_sum_entry(2, 2)
    with pytest.raises(ValueError):
        net.path_sum_entry(3, 1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_oracle_agreement(n):
    net = SquareNetwork(n)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            entry = net.path_sum_entry(i, j)
            assert entry == path_sum_bruteforce(net, i, j)
            assert entry.num.term_count() == len(enumerate_paths_dfs(net, i, j))
            assert all(c == 1 for c in entry.num.terms.values())


def test_n5_path_count_specific():
    net = SquareNetwork(5)
    entry = net.path_sum_entry(2, 4)
    assert entry.num.term_count() == len(enumerate_paths_dfs(net, 2, 4))


def test_evaluation_at_unit_point():
    net = SquareNetwork(4)
    ones = {name: Q(1) for name in net.table.names}
    assert net.path_sum_entry(1, 2).evaluate(ones) == 5
    assert net.path_sum_entry(2, 3).evaluate(ones) == 6


def test_assembled_matrices_shape_and_signs():
    net = SquareNetwork(3)
    a, at = net.assemble_A()
    ones = {name: Q(1) for name in net.table.names}
    for m in (a, at):
        assert m.is_upper_triangular()
        for i in range(3):
            assert m[i, i].evaluate(ones) == 1
    # off-diagonal signs alternate with i+j
    assert a[0, 1].evaluate(ones) < 0
    assert a[0, 2].evaluate(ones) > 0


def test_twin_sides_commute_n3():
    net = SquareNetwork(3)
    a12 = net.path_sum_entry(1, 2)
    t13 = net.path_sum_entry(1, 3, "Atilde")
    assert poisson_bracket(a12, t13, net.quiver).is_zero()


def test_network_json_dump():
    net, family = build_square_network(3)
    data = net.to_json()
    assert data["n"] == 3
    assert {f["name"] for f in data["faces"]} >= {"s1", "s2", "f1", "f2"}
    assert "1,3" in data["regions"]
    assert len(family.q_square.vertices) == 16
    assert len(family.q_amalgamated.vertices) == 12
    assert len(family.q_transport.vertices) == 9


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_casimir_suite(n):
    for check in casimir_suite_checks(n):
        outcome = check.run()
        ok = outcome[0] if isinstance(outcome, tuple) else outcome
        assert ok, f"{check.id}: {outcome}"
