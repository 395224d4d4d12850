import pytest

from zdg.graphs import Graph, add_vertex, canonical_form, degree, max_degree
from zdg.conditions import check_star_condition
from zdg.semigroup import find_realization, verify_witness
from zdg.enumeration import enumerate_connected
from zdg.fixtures import get_fixture
from zdg import patterns as pat
from conftest import DGSW_SIX, G319, cycle, path, star, complete


def test_star_refinement_recognizer():
    table = pat.recognize_star_refinement(star(6))
    assert table is not None
    ok, why = verify_witness(star(6), table)
    assert ok, why

    # a star plus extra edges among the leaves is still recognized
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
    table = pat.recognize_star_refinement(g)
    assert table is not None and verify_witness(g, table)[0]

    assert pat.recognize_star_refinement(cycle(6)) is None


def test_double_star_recognizer():
    g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    table = pat.recognize_double_star(g)
    assert table is not None
    ok, why = verify_witness(g, table)
    assert ok, why

    assert pat.recognize_double_star(star(6)) is None
    assert pat.recognize_double_star(cycle(6)) is None
    assert pat.recognize_double_star(path(4)) is not None  # smallest double star


def test_bipartite_recognizer_realizable():
    verdict = pat.recognize_complete_bipartite_plus_ends(G319)
    assert verdict.family == pat.FAMILY_BIPARTITE_ONE_VERTEX
    assert verdict.realizable
    ok, why = verify_witness(G319, verdict.table)
    assert ok, why

    # pure complete bipartite, no ends
    k23 = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    verdict = pat.recognize_complete_bipartite_plus_ends(k23)
    assert verdict.realizable and verify_witness(k23, verdict.table)[0]


def test_bipartite_recognizer_refutation():
    fx = get_fixture("G322")
    verdict = pat.recognize_complete_bipartite_plus_ends(fx.graph)
    assert verdict.family == pat.FAMILY_BIPARTITE_TWO_VERTICES
    assert verdict.realizable is False
    assert verdict.table is None

    assert not pat.recognize_complete_bipartite_plus_ends(complete(4)).recognized


def test_complete_recognizer():
    fx = get_fixture("G474")
    verdict = pat.recognize_complete_plus_ends(fx.graph)
    assert verdict.family == pat.FAMILY_COMPLETE_AT_MOST_TWO
    assert verdict.realizable
    ok, why = verify_witness(fx.graph, verdict.table)
    assert ok, why

    fx = get_fixture("G475")
    verdict = pat.recognize_complete_plus_ends(fx.graph)
    assert verdict.family == pat.FAMILY_COMPLETE_THREE_PLUS
    assert verdict.realizable is False

    net = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
    verdict = pat.recognize_complete_plus_ends(net)
    assert verdict.family == pat.FAMILY_K3_THREE_ENDS
    assert verdict.realizable and verify_witness(net, verdict.table)[0]


def test_recognizers_agree_with_search_up_to_six_vertices():
    for n in range(2, 7):
        for g in enumerate_connected(n):
            if not check_star_condition(g).star_ok:
                continue
            verdict = pat.recognize(g)
            if not verdict.recognized or verdict.realizable is None:
                continue
            assert verdict.realizable == find_realization(g).sat, g


def test_duplicate_vertex_square_zero():
    # null semigroup on one edge: duplicating under a zero square gives a
    # closed twin, here the triangle with the all-zero table
    k2 = Graph.from_edges(2, [(0, 1)])
    cert = find_realization(k2)
    g2, t2 = pat.duplicate_vertex(k2, cert.table, 0)
    assert g2 == complete(3)
    assert all(e == 0 for row in t2.rows for e in row)


def test_duplicate_vertex_square_nonzero():
    # a star leaf with nonzero square duplicates to an open twin: a new leaf
    g = star(3)
    t = pat.recognize_star_refinement(g)
    leaf = 1
    assert t.product(leaf + 1, leaf + 1) != 0
    g2, t2 = pat.duplicate_vertex(g, t, leaf)
    assert canonical_form(g2) == canonical_form(star(4))
    ok, why = verify_witness(g2, t2)
    assert ok, why


def test_duplicate_vertex_rejects_bad_witness():
    k2 = Graph.from_edges(2, [(0, 1)])
    cert = find_realization(k2)
    bad = cert.table.copy()
    bad.set_product(1, 2, 1)
    with pytest.raises(ValueError):
        pat.duplicate_vertex(k2, bad, 0)


def test_duplication_preserves_witnesses_at_five_vertices():
    for g in enumerate_connected(5):
        cert = find_realization(g)
        if not cert.sat:
            continue
        for x in range(g.n):
            g2, t2 = pat.duplicate_vertex(g, cert.table, x)
            ok, why = verify_witness(g2, t2)
            assert ok, why


def test_duplication_preserves_star_failure_up_to_six_vertices():
    # extending by either kind of twin never repairs a star-condition failure
    for n in range(2, 7):
        for g in enumerate_connected(n):
            if check_star_condition(g).star_ok:
                continue
            for x in range(g.n):
                open_twin = add_vertex(g, g.adj[x])
                closed_twin = add_vertex(g, g.adj[x] | (1 << x))
                assert not check_star_condition(open_twin).star_ok
                assert not check_star_condition(closed_twin).star_ok


def test_find_duplication_parent():
    assert pat.find_duplication_parent(G319) == (1, 2, "open")
    assert pat.find_duplication_parent(complete(3)) == (0, 1, "closed")
    assert pat.find_duplication_parent(path(4)) is None


def test_emanate_end():
    g = pat.emanate_end(star(3), 0)
    assert canonical_form(g) == canonical_form(star(4))
    g = pat.emanate_end(Graph.from_edges(2, [(0, 1)]), 0)
    assert canonical_form(g) == canonical_form(path(3))
    with pytest.raises(ValueError):
        pat.emanate_end(star(3), 9)


def test_lemma_end_preserves_star():
    assert pat.lemma_end_preserves_star(star(6), 0)
    for name in ("G145", "G163"):
        g = DGSW_SIX[name]
        x = next(v for v in range(g.n) if degree(g, v) == max_degree(g))
        assert pat.lemma_end_preserves_star(g, x)
    with pytest.raises(ValueError):
        pat.lemma_end_preserves_star(star(6), 1)  # leaf is not max degree
    with pytest.raises(ValueError):
        pat.lemma_end_preserves_star(cycle(6), 0)  # star condition fails


def test_recognize_priority_and_serialization():
    verdict = pat.recognize(G319)
    assert verdict.family == pat.FAMILY_BIPARTITE_ONE_VERTEX
    assert pat.recognize(cycle(6)).family == pat.FAMILY_NONE
