from __future__ import annotations

import pytest

from supertrees.errors import (
    DuplicateEdge,
    EdgeNotFound,
    EdgeTooSmall,
    HGTFormatError,
    NotASupertree,
    NotATree,
    VertexOutOfRange,
)
from supertrees.enumeration import are_isomorphic
from supertrees.generators import hyperpath, superstar
from supertrees.hypergraph import (
    Hypergraph,
    components,
    degree_profile,
    from_edge_list,
    incidence_tree,
    induced_component,
    is_connected,
    is_supertree,
    power_k,
    power_root,
    read_hgt,
    write_hgt,
)


def test_construction_normalizes_edges():
    H = from_edge_list(5, [[2, 1, 0], [4, 2, 3]])
    assert H.edges == ((0, 1, 2), (2, 3, 4))
    assert H.m == 2 and H.uniformity() == 3


@pytest.mark.parametrize(
    "n, edges, error",
    [
        (3, [[0, 1, 2], [2, 1, 0]], DuplicateEdge),
        (3, [[0]], EdgeTooSmall),
        (3, [[0, 1, 3]], VertexOutOfRange),
        (3, [[0, 1, 1]], DuplicateEdge),
    ],
)
def test_construction_errors(n, edges, error):
    with pytest.raises(error):
        from_edge_list(n, edges)


def test_degree_profiles():
    single = degree_profile(from_edge_list(3, [[0, 1, 2]]))
    assert single.degrees == (1, 1, 1) and single.delta == single.Delta == 1 and single.regular
    path = degree_profile(hyperpath(3, 2))
    assert path.degrees == (1, 1, 2, 1, 1) and (path.delta, path.Delta) == (1, 2)
    star = degree_profile(superstar(3, 3))
    assert star.degrees[0] == 3 and set(star.degrees[1:]) == {1}


def test_connectivity():
    assert is_connected(hyperpath(3, 2))
    assert not is_connected(from_edge_list(6, [[0, 1, 2], [3, 4, 5]]))
    assert is_connected(Hypergraph(1, ()))
    assert components(from_edge_list(7, [[0, 1, 2], [3, 4, 5]])) == [[0, 1, 2], [3, 4, 5], [6]]


def test_induced_component_relabels_densely():
    H = from_edge_list(6, [[0, 1, 2], [3, 4, 5]])
    sub, back = induced_component(H, [3, 4, 5])
    assert sub.edges == ((0, 1, 2),) and back == [3, 4, 5]


def test_supertree_predicate():
    assert is_supertree(superstar(3, 4))
    assert is_supertree(hyperpath(3, 2))
    assert not is_supertree(from_edge_list(6, [[0, 1, 2], [2, 3, 4], [4, 5, 0]]))
    assert not is_supertree(from_edge_list(5, [[0, 1, 2], [0, 1, 3], [3, 4, 2]]))
    assert not is_supertree(Hypergraph(1, ()))


def test_incidence_tree_shapes():
    t = incidence_tree(from_edge_list(3, [[0, 1, 2]]))
    assert t.node_count == 4 and t.adjacency[3] == (0, 1, 2)
    p = incidence_tree(hyperpath(3, 2))
    assert p.node_count == 7 and p.edge_count == 6
    s = incidence_tree(superstar(3, 2))
    assert 0 in s.adjacency[s.n] and 0 in s.adjacency[s.n + 1]
    with pytest.raises(NotASupertree):
        incidence_tree(from_edge_list(6, [[0, 1, 2], [3, 4, 5]]))


def test_power_of_ordinary_trees():
    assert are_isomorphic(power_k([(0, 1), (0, 2), (0, 3)], 3), superstar(3, 3))
    assert are_isomorphic(power_k([(0, 1), (1, 2), (2, 3)], 3), hyperpath(3, 3))
    assert power_k([(0, 1)], 4).edges == ((0, 1, 2, 3),)
    with pytest.raises(NotATree):
        power_k([(0, 1), (1, 2), (2, 0)], 3)
    with pytest.raises(NotATree):
        power_k([(0, 1), (2, 3)], 3)


def test_power_root_recovers_tree():
    tree = [(0, 1), (1, 2), (1, 3), (3, 4)]
    H = power_k(tree, 4)
    root = power_root(H)
    assert root is not None and are_isomorphic(power_k(root, 4), H)
    # three vertices of degree >= 2 inside one edge: not a power
    three_branch = from_edge_list(9, [[0, 1, 2], [0, 3, 4], [1, 5, 6], [2, 7, 8]])
    assert power_root(three_branch) is None


def test_hgt_round_trip():
    text = "5 2\n0 1 2\n2 3 4\n"
    assert write_hgt(read_hgt(text)) == text
    commented = "# a comment\n5 2\n0 1 2\n\n2 3 4\n"
    assert read_hgt(commented) == read_hgt(text)
    assert write_hgt(hyperpath(3, 2), comment="x") == "# x\n" + text


@pytest.mark.parametrize("text", ["", "5\n0 1 2\n", "5 2\n0 1 2\n", "5 1\n0 a 2\n"])
def test_hgt_errors(text):
    with pytest.raises(HGTFormatError):
        read_hgt(text)


def test_edge_editing():
    H = hyperpath(3, 2)
    assert H.add_edge((4, 5, 6)).n == 7
    assert H.remove_edges([(2, 3, 4)]).m == 1
    with pytest.raises(EdgeNotFound):
        H.remove_edges([(0, 3, 4)])
    assert H.relabel([4, 3, 2, 1, 0]).edges == ((2, 3, 4), (0, 1, 2))
