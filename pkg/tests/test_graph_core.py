import itertools

import networkx as nx
import pytest

from forcing_lab.graph_core import (
    CanonicalForm,
    Graph,
    InputError,
    TreeCert,
    VertexSet,
    canonical_form,
    diameter,
    format_edge_list,
    induced_subgraph,
    is_connected,
    is_tree,
    leaves,
    parse_edge_list,
    parse_graph6,
    support_vertices,
    to_graph6,
    tree_centers,
)
from forcing_lab.generate import named, random_tree

from helpers import brute_isomorphic, mixed_corpus, prufer_tree_classes, tree


def test_degree_examples():
    p3 = named("path", [3])
    assert p3.degree(1) == 2
    k4 = named("complete", [4])
    assert all(k4.degree(v) == 3 for v in range(4))
    ds = named("double_star", [2, 2])
    assert ds.degree(0) == 3 and ds.degree(1) == 3


def test_degree_out_of_range():
    with pytest.raises(InputError):
        named("path", [3]).degree(3)


def test_leaves_examples():
    assert leaves(named("path", [2])).members() == (0, 1)
    assert leaves(named("star", [3])).members() == (1, 2, 3)
    assert leaves(named("cycle", [4])).members() == ()


def test_support_vertices_examples():
    sup, strong = support_vertices(named("double_star", [2, 2]))
    assert sup.members() == (0, 1) and strong.members() == (0, 1)
    sup, strong = support_vertices(named("path", [4]))
    assert sup.members() == (1, 2) and strong.members() == ()
    sup, strong = support_vertices(named("star", [3]))
    assert sup.members() == (0,) and strong.members() == (0,)


def test_diameter_examples():
    assert diameter(TreeCert(named("path", [5]))) == 4
    assert diameter(TreeCert(named("star", [4]))) == 2
    assert diameter(TreeCert(named("double_star", [2, 2]))) == 3


def test_degree_sum_is_twice_m():
    for g in mixed_corpus(6):
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


def test_graph_validation():
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 2)])


def test_from_labeled_edges_compacts_in_first_appearance_order():
    g = Graph.from_labeled_edges([("c", "a"), ("a", "b")])
    assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]


def test_vertex_set_bounds():
    with pytest.raises(InputError):
        VertexSet(1 << 4, 4)
    s = VertexSet.from_vertices([0, 2], 4)
    assert 2 in s and 1 not in s and len(s) == 2


def test_tree_cert_rejects_non_trees():
    with pytest.raises(InputError):
        TreeCert(named("cycle", [4]))
    with pytest.raises(InputError):
        TreeCert(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(InputError):
        TreeCert(Graph.from_edges(0, []))


def test_is_tree_and_connectivity():
    assert is_tree(named("path", [1]))
    assert not is_connected(Graph.from_edges(3, [(0, 1)]))


def test_tree_centers():
    assert tree_centers(TreeCert(named("path", [5]))) == (2,)
    assert tree_centers(TreeCert(named("path", [4]))) == (1, 2)
    assert tree_centers(TreeCert(named("star", [5]))) == (0,)


def test_canonical_form_relabel_invariant():
    p4 = TreeCert(named("path", [4]))
    relabeled = tree(4, [(0, 2), (2, 1), (1, 3)])
    assert canonical_form(p4) == canonical_form(relabeled)
    assert canonical_form(p4) != canonical_form(TreeCert(named("star", [3])))


def test_canonical_form_partitions_labeled_trees_on_4_vertices():
    # All 16 labeled trees on 4 vertices fall into exactly 2 classes, agreeing
    # with the brute-force isomorphism partition.
    classes = prufer_tree_classes(4)
    assert len(classes) == 2
    reps = list(classes.values())
    for a, b in itertools.combinations(reps, 2):
        assert not brute_isomorphic(a.graph, b.graph)


def test_canonical_form_invariant_under_all_permutations():
    from forcing_lab.generate import all_trees

    for n in range(2, 7):
        for cert in all_trees(n):
            base = canonical_form(cert)
            edges = cert.graph.edges()
            for perm in itertools.permutations(range(n)):
                permuted = tree(n, [(perm[u], perm[v]) for u, v in edges])
                assert canonical_form(permuted) == base


def test_canonical_equality_matches_brute_isomorphism():
    from forcing_lab.generate import all_trees

    certs = [cert for n in range(2, 7) for cert in all_trees(n)]
    for a, b in itertools.combinations(certs, 2):
        same_code = canonical_form(a) == canonical_form(b)
        assert same_code == brute_isomorphic(a.graph, b.graph)


def test_canonical_form_ordering_is_usable():
    a = canonical_form(TreeCert(named("path", [4])))
    b = canonical_form(TreeCert(named("star", [3])))
    assert isinstance(a, CanonicalForm) and (a < b or b < a)
    assert len(a.hex()) == 2 * len(a.code)


def test_induced_subgraph():
    ds = named("double_star", [2, 2])
    sub, old = induced_subgraph(ds, [0, 1, 2])
    assert old == (0, 1, 2)
    assert sub.edges() == [(0, 1), (0, 2)]


# --- edge-list format ---


def test_edge_list_round_trip():
    for g in mixed_corpus(6):
        assert parse_edge_list(format_edge_list(g)).edges() == g.edges()


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n",
        "2 1\n1 0\n",          # u < v violated
        "2 1\n0 0\n",          # self-loop shape
        "2 2\n0 1\n0 1\n",     # duplicate
        "2 1\n0 2\n",          # out of range
        "2 2\n0 1\n",          # wrong edge count
        "x y\n",
    ],
)
def test_edge_list_rejects(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


# --- graph6 ---


def test_graph6_known_encodings():
    assert to_graph6(named("complete", [4])) == "C~"
    assert to_graph6(named("path", [4])) == "Ch"
    assert parse_graph6("Ch").edges() == [(0, 1), (1, 2), (2, 3)]
    assert parse_graph6(">>graph6<<C~").m == 6


def test_graph6_round_trip_bit_exact():
    graphs = list(mixed_corpus(6))
    graphs.append(random_tree(40, 7))
    graphs.append(random_tree(62, 11))
    for g in [x.graph if isinstance(x, TreeCert) else x for x in graphs]:
        s = to_graph6(g)
        h = parse_graph6(s)
        assert h.edges() == g.edges() and h.n == g.n
        assert to_graph6(h) == s


def test_graph6_matches_networkx():
    for g in mixed_corpus(6):
        via_nx = nx.from_graph6_bytes(to_graph6(g).encode())
        assert sorted(tuple(sorted(e)) for e in via_nx.edges()) == g.edges()
        mine = parse_graph6(nx.to_graph6_bytes(via_nx, header=False).decode().strip())
        assert mine.edges() == g.edges()


def test_graph6_rejects_garbage():
    with pytest.raises(InputError):
        parse_graph6("")
    with pytest.raises(InputError):
        parse_graph6("C\x1f")
    with pytest.raises(InputError):
        parse_graph6("C~~")  # body too long for n=4
