import json

import pytest

from zdgenus import (
    IdealSet,
    canonical_certificate,
    catalog_ring,
    clique_number,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cyclic_ideal,
    diameter,
    expand,
    export_dot,
    export_json,
    find_biclique,
    find_complete_subgraph,
    girth,
    graph_iso,
    ideal_zero_divisor_graph,
    induced_subgraph,
    is_connected,
    make_graph,
    zero_divisor_graph,
)
from zdgenus.errors import InvalidSpec

INF = float("inf")


def test_make_graph_rejects_self_loop():
    with pytest.raises(InvalidSpec):
        make_graph(2, [(0, 0)])


def test_zero_divisor_graph_z6():
    g = zero_divisor_graph(catalog_ring("Z_6"))
    assert g.labels == ("2", "3", "4")
    assert sorted(g.edges()) == [(0, 1), (1, 2)]  # the path 2 - 3 - 4


def test_zero_divisor_graph_z8(z8):
    g = zero_divisor_graph(z8)
    assert g.labels == ("2", "4", "6")
    assert sorted(g.edges()) == [(0, 1), (1, 2)]


def test_zero_divisor_graph_z9():
    g = zero_divisor_graph(catalog_ring("Z_9"))
    assert g.labels == ("3", "6") and g.m == 1


def test_zero_divisor_graph_z16():
    g = zero_divisor_graph(catalog_ring("Z_16"))
    assert (g.n, g.m) == (7, 7)
    edges = sorted((g.labels[u], g.labels[v]) for u, v in g.edges())
    assert edges == [("2", "8"), ("4", "12"), ("4", "8"), ("6", "8"),
                     ("8", "10"), ("8", "12"), ("8", "14")]


def test_zero_divisor_graph_includes_square_zero_vertex():
    g = zero_divisor_graph(catalog_ring("Z_4"))
    assert g.labels == ("2",) and g.m == 0


def test_field_graph_empty():
    g = zero_divisor_graph(catalog_ring("F_9"))
    assert g.n == 0 and g.m == 0
    assert diameter(g) == 0 and girth(g) == INF
    assert clique_number(g) == 0 and is_connected(g)


def test_ideal_graph_z8(z8):
    g = ideal_zero_divisor_graph(z8, cyclic_ideal(z8, 4))
    assert g.labels == ("2", "6")
    assert g.m == 1  # 2*6 = 12 lies in (4)


def test_ideal_graph_zero_ideal_matches_gamma(z8):
    g0 = ideal_zero_divisor_graph(z8, IdealSet(z8, 1 << z8.zero))
    g = zero_divisor_graph(z8)
    assert g0.labels == g.labels and sorted(g0.edges()) == sorted(g.edges())


def test_ideal_graph_vertices_grouped_by_coset(z12):
    i = cyclic_ideal(z12, 6)
    g = ideal_zero_divisor_graph(z12, i)
    assert g.n == 6
    # fibers over the quotient path 2 - 3 - 4: cosets listed contiguously
    assert g.labels == ("2", "8", "3", "9", "4", "10")


def test_ideal_graph_order_law(z12):
    from zdgenus import quotient

    for i in [cyclic_ideal(z12, 6), cyclic_ideal(z12, 4)]:
        g = ideal_zero_divisor_graph(z12, i)
        q = quotient(z12, i)
        assert g.n == i.size * zero_divisor_graph(q.table).n


def test_expand_bipartite():
    k2 = complete_graph(2)
    g = expand(k2, 3)
    cert_g = canonical_certificate(g)
    assert cert_g == canonical_certificate(complete_bipartite(3, 3))
    assert g.labels == ("0#1", "0#2", "0#3", "1#1", "1#2", "1#3")


def test_expand_no_fiber_edges():
    g = expand(complete_graph(3), 4)
    for j in range(3):
        for a in range(4):
            for b in range(a + 1, 4):
                assert not g.has_edge(j * 4 + a, j * 4 + b)
    assert g.m == 3 * 16


def test_expand_identity():
    p3 = make_graph(3, [(0, 1), (1, 2)])
    g = expand(p3, 1)
    assert g.n == 3 and sorted(g.edges()) == [(0, 1), (1, 2)]


def test_standard_graphs():
    assert complete_graph(5).m == 10
    assert complete_bipartite(3, 4).m == 12
    assert complete_multipartite(2, 2, 2).m == 12


def test_girth_values():
    assert girth(complete_graph(3)) == 3
    assert girth(complete_bipartite(2, 2)) == 4
    assert girth(make_graph(4, [(0, 1), (1, 2), (2, 3)])) == INF


def test_diameter_values():
    assert diameter(make_graph(4, [(0, 1), (1, 2), (2, 3)])) == 3
    assert diameter(complete_graph(4)) == 1
    assert diameter(make_graph(2, [])) == INF
    assert not is_connected(make_graph(2, []))


def test_clique_number():
    assert clique_number(complete_graph(6)) == 6
    assert clique_number(complete_bipartite(3, 3)) == 2
    assert clique_number(complete_multipartite(2, 2, 2)) == 3


def test_subgraph_search():
    g = complete_multipartite(2, 2, 2)
    assert find_complete_subgraph(g, 3) is not None
    assert find_complete_subgraph(g, 4) is None
    assert find_biclique(g, 2, 3) is not None
    assert find_biclique(complete_bipartite(2, 5), 3, 3) is None


def test_induced_subgraph():
    g = complete_graph(5)
    h = induced_subgraph(g, [0, 2, 4])
    assert h.n == 3 and h.m == 3
    assert h.labels == (g.labels[0], g.labels[2], g.labels[4])


def test_export_dot_golden():
    g = zero_divisor_graph(catalog_ring("Z_6"))
    assert export_dot(g) == (
        "graph G {\n"
        '  n0 [label="2"];\n'
        '  n1 [label="3"];\n'
        '  n2 [label="4"];\n'
        "  n0 -- n1;\n"
        "  n1 -- n2;\n"
        "}\n"
    )


def test_export_json_round_trip():
    g = complete_bipartite(2, 3)
    data = json.loads(export_json(g))
    assert data["n"] == 5
    assert len(data["edges"]) == 6
    back = make_graph(data["n"], [tuple(e) for e in data["edges"]],
                      tuple(data["labels"]))
    assert sorted(back.edges()) == sorted(g.edges())


def test_canonical_certificate_distinguishes():
    assert canonical_certificate(complete_bipartite(2, 2)) != \
        canonical_certificate(complete_graph(4))
    assert canonical_certificate(expand(complete_graph(2), 2)) == \
        canonical_certificate(complete_bipartite(2, 2))


def test_graph_iso():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    h = make_graph(4, [(3, 2), (2, 0), (0, 1)])
    assert graph_iso(g, h)
    assert not graph_iso(g, complete_graph(4))
    assert not graph_iso(g, make_graph(4, [(0, 1), (0, 2), (0, 3)]))
