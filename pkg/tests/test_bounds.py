import pytest

from linarb.bounds import BoundReport, GraphSummary, chain_check, lower_bound, lower_bound_report, product_bound_interval
from linarb.graph import ParameterError, complete_graph, cycle_graph, empty_graph, path_graph, petersen_graph
from linarb.products import product


def test_lower_bound_examples():
    assert lower_bound(cycle_graph(5), 1) == 3
    assert lower_bound(petersen_graph(), 1) == 3
    assert lower_bound(complete_graph(4), 2) == 3
    assert lower_bound(empty_graph(4), 3) == 0


def test_cycle_raises_lower_bound_to_two():
    rep = lower_bound_report(cycle_graph(6), 5)
    assert rep.lower == 2
    assert "cyclic" in rep.tags("lower")
    assert lower_bound(path_graph(6), 5) == 1


def test_lower_bound_rejects_k_zero():
    with pytest.raises(ParameterError):
        lower_bound(path_graph(3), 0)


@pytest.mark.parametrize(
    "kind,expected",
    [("cartesian", (2, 2)), ("lexicographic", (4, 4)), ("direct", (2, 2)), ("strong", (4, 4))],
)
def test_grid_intervals_at_large_k(kind, expected):
    g, h = path_graph(4), path_graph(3)
    rep = product_bound_interval([g, h], [3, 3], kind, [1, 1])
    if kind in ("direct", "strong"):
        # the closed-form upper bounds are 2pq and p+q+2pq; the construction is what closes them
        assert rep.lower == expected[0]
    else:
        assert (rep.lower, rep.upper) == expected
    assert rep.k == 3
    assert all(v is not None for _, _, v in rep.provenance)


def test_direct_and_strong_formula_uppers():
    g, h = path_graph(4), path_graph(3)
    assert product_bound_interval([g, h], [3, 3], "direct", [1, 1]).upper == 2
    assert product_bound_interval([g, h], [3, 3], "strong", [1, 1]).upper == 4


def test_interval_inputs_use_matching_sides():
    g, h = cycle_graph(5), cycle_graph(4)
    rep = product_bound_interval([g, h], [1, 1], "cartesian", [(3, 3), BoundReport(1, 2, 2)])
    assert (rep.lower, rep.upper) == (3, 5)
    rep = product_bound_interval([g, h], [1, 2], "cartesian", [(2, None), 2])
    assert rep.upper is None and rep.k == 2


def test_join_uses_padded_side():
    rep = product_bound_interval([path_graph(3), complete_graph(1)], [2, 1], "join", [1, 0])
    assert rep.upper == 1 + 0 + 3
    assert rep.lower == 2  # the fan has a cycle and a degree-3 hub


def test_arity_errors():
    g = path_graph(3)
    with pytest.raises(ParameterError):
        product_bound_interval([g], [1], "cartesian", [1])
    with pytest.raises(ParameterError):
        product_bound_interval([g, g, g], [1, 1, 1], "direct", [1, 1, 1])
    with pytest.raises(ParameterError):
        product_bound_interval([g, g], [1], "direct", [1, 1])


def test_three_factor_cartesian():
    fs = [path_graph(2), path_graph(3), cycle_graph(3)]
    rep = product_bound_interval(fs, [1, 2, 2], "cartesian", [1, 1, 2])
    assert (rep.lower, rep.upper) == (2, 4)


def test_report_rejects_inverted_interval():
    with pytest.raises(ValueError):
        BoundReport(1, 3, 2)


def test_chain_check_examples():
    assert chain_check([4, 3, 3, 2, 2, 2, 2, 2, 2], max_degree=3) is None
    assert chain_check([2, 3]) == 2
    assert chain_check([5], max_degree=3) == 1


@pytest.mark.parametrize("kind", ["cartesian", "lexicographic", "direct", "strong", "join"])
@pytest.mark.parametrize("pair", [(path_graph(3), cycle_graph(4)), (complete_graph(3), path_graph(2)), (petersen_graph(), path_graph(1))])
def test_summary_arithmetic_matches_built_product(kind, pair):
    from linarb.bounds import product_summary

    g, h = pair
    built = product(kind, g, h)
    s = product_summary(kind, GraphSummary.of(g), GraphSummary.of(h))
    assert s == GraphSummary.of(built)
