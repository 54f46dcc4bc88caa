import itertools

import pytest
from hypothesis import given, settings, strategies as st

from linarb.graph import Graph, complete_graph, cycle_graph, path_graph, petersen_graph
from linarb.products import ProductKind, layer_embed, product


def by_definition(kind: str, g: Graph, h: Graph) -> set:
    """Edge set straight from the adjacency rules, checking every vertex pair."""
    if kind == "join":
        n = g.n
        verts = list(range(n + h.n))

        def adj(x, y):
            if x < n and y < n:
                return g.has_edge(x, y)
            if x >= n and y >= n:
                return h.has_edge(x - n, y - n)
            return True

    else:
        verts = list(range(g.n * h.n))

        def adj(x, y):
            (u, v), (u2, v2) = divmod(x, h.n), divmod(y, h.n)
            gu, hv = g.has_edge(u, u2), h.has_edge(v, v2)
            cart = (u == u2 and hv) or (v == v2 and gu)
            if kind == "cartesian":
                return cart
            if kind == "direct":
                return gu and hv
            if kind == "strong":
                return cart or (gu and hv)
            return gu or (u == u2 and hv)

    return {(x, y) for x, y in itertools.combinations(verts, 2) if adj(x, y)}


def test_cartesian_square_is_c4():
    g = product("cartesian", path_graph(2), path_graph(2))
    assert (g.n, g.m) == (4, 4)
    assert all(g.degree(v) == 2 for v in range(4)) and g.components() == [[0, 1, 2, 3]]


def test_direct_two_edges():
    g = product("direct", path_graph(2), path_graph(2))
    assert set(g.edges) == {(0, 3), (1, 2)}


def test_strong_p2_p2_is_k4():
    assert product("strong", path_graph(2), path_graph(2)).edges == complete_graph(4).edges


def test_lexicographic_p3_p3_has_24_edges():
    g = product("lexicographic", path_graph(3), path_graph(3))
    assert len(by_definition("lexicographic", path_graph(3), path_graph(3))) == 24
    assert (g.n, g.m) == (9, 24)


def test_join_k1_k1():
    assert product("join", complete_graph(1), complete_graph(1)).edges == ((0, 1),)


def test_layer_embedding():
    g, h = path_graph(3), path_graph(2)
    assert layer_embed(g, h, "G", 0) == {0: 0, 1: 2, 2: 4}
    assert layer_embed(g, h, "H", 2) == {0: 4, 1: 5}
    prod_g = product("cartesian", g, h)
    for which, index, factor in [("G", 0, g), ("G", 1, g), ("H", 0, h), ("H", 2, h)]:
        emb = layer_embed(g, h, which, index)
        assert all(prod_g.has_edge(emb[a], emb[b]) for a, b in factor.edges)
    with pytest.raises(ValueError):
        layer_embed(g, h, "G", 2)
    with pytest.raises(ValueError):
        layer_embed(g, h, "H", 3)


small_graphs = st.integers(1, 4).flatmap(
    lambda n: st.sets(st.sampled_from([(u, v) for u in range(n) for v in range(u + 1, n)] or [None]), max_size=6).map(
        lambda es: Graph.from_edges(n, [e for e in es if e is not None])
    )
)


@settings(max_examples=60, deadline=None)
@given(small_graphs, small_graphs, st.sampled_from([k.value for k in ProductKind]))
def test_products_match_definitions(g, h, kind):
    assert set(product(kind, g, h).edges) == by_definition(kind, g, h)


@settings(max_examples=60, deadline=None)
@given(small_graphs, small_graphs)
def test_edge_count_identities(g, h):
    cart = product("cartesian", g, h)
    direct = product("direct", g, h)
    strong = product("strong", g, h)
    assert cart.m == g.m * h.n + g.n * h.m
    assert direct.m == 2 * g.m * h.m
    assert strong.m == cart.m + direct.m
    assert set(strong.edges) == set(cart.edges) | set(direct.edges)
    assert not set(cart.edges) & set(direct.edges)
    assert product("lexicographic", g, h).m == g.n * h.m + g.m * h.n**2
    assert product("join", g, h).m == g.m + h.m + g.n * h.n


@pytest.mark.parametrize("g,h", [(cycle_graph(5), path_graph(3)), (petersen_graph(), complete_graph(3)), (cycle_graph(4), cycle_graph(3))])
def test_degree_identities_on_regular_factors(g, h):
    dg, dh, nh = g.max_degree(), h.max_degree(), h.n
    assert product("lexicographic", g, h).max_degree() == dh + nh * dg
    assert product("direct", g, h).max_degree() == dg * dh
    assert product("strong", g, h).max_degree() == dg * dh + dg + dh


def test_unknown_kind():
    with pytest.raises(ValueError, match="unknown product"):
        product("tensor", path_graph(2), path_graph(2))


@pytest.mark.parametrize("kind", [k.value for k in ProductKind])
@pytest.mark.parametrize("pair", [(path_graph(4), cycle_graph(3)), (petersen_graph(), path_graph(2)), (complete_graph(3), cycle_graph(4))])
def test_products_match_networkx(kind, pair):
    nx = pytest.importorskip("networkx")
    g, h = pair
    G, H = nx.Graph(list(g.edges)), nx.Graph(list(h.edges))
    G.add_nodes_from(range(g.n))
    H.add_nodes_from(range(h.n))
    if kind == "join":
        ref = nx.full_join(G, H, rename=("g", "h"))
        relabel = lambda x: int(x[1:]) + (g.n if x[0] == "h" else 0)  # noqa: E731
    else:
        ref = {
            "cartesian": nx.cartesian_product,
            "direct": nx.tensor_product,
            "strong": nx.strong_product,
            "lexicographic": nx.lexicographic_product,
        }[kind](G, H)
        relabel = lambda x: x[0] * h.n + x[1]  # noqa: E731
    expected = {tuple(sorted((relabel(a), relabel(b)))) for a, b in ref.edges}
    assert set(product(kind, g, h).edges) == expected
