import pytest

from linarb.expr import ProductSpec, build, decompose, parse_expr
from linarb.forests import verify_decomposition
from linarb.graph import FamilySpec, ParameterError, hypercube_graph, petersen_graph
from linarb.products import ProductKind, product


def test_parse_family_and_product():
    assert parse_expr("petersen") == FamilySpec("petersen")
    assert parse_expr("complete_bipartite:2,3") == FamilySpec("complete_bipartite", (2, 3))
    spec = parse_expr("strong(path:4, cycle:5)")
    assert spec == ProductSpec(ProductKind.STRONG, FamilySpec("path", (4,)), FamilySpec("cycle", (5,)))
    assert str(spec) == "strong(path:4,cycle:5)"


def test_nested_build():
    g = build(parse_expr("cartesian(cartesian(path:2,path:2),path:2)"))
    assert g == hypercube_graph(3)


@pytest.mark.parametrize("text", ["", "path:", "strong(path:2)", "strong(path:2,path:3", "path:2 extra", "path:-1", "wheel:5"])
def test_bad_expressions(text):
    with pytest.raises(ParameterError):
        parse_expr(text)


@pytest.mark.parametrize(
    "text",
    [
        "petersen",
        "hypercube:3",
        "hypercube:0",
        "complete_bipartite:3,4",
        "empty:3",
        "lexicographic(cycle:5,complete:3)",
        "join(petersen,path:3)",
        "direct(petersen,path:2)",
        "strong(cycle:4,path:3)",
    ],
)
@pytest.mark.parametrize("k", [1, 2, 4])
def test_constructive_decompositions_verify(text, k):
    spec = parse_expr(text)
    d = decompose(spec, k)
    assert d.target == build(spec)
    assert verify_decomposition(d.target, d) is None


def test_bipartite_matches_join_of_empties():
    d = decompose(parse_expr("complete_bipartite:3,3"), 1)
    assert len(d) == 3
