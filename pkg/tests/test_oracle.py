import numpy as np
import pytest
from conftest import ORACLE_INSTANCES

from altrank import bounds as B
from altrank.altforms import count_rank
from altrank.oracle import (
    DenseGraph,
    GraphTooLarge,
    build_graph,
    closed_walks,
    exact_alpha_k,
    recover_intersection_numbers,
    validate_witness,
    verify_basic,
    verify_distance_regularity,
    verify_geodesic_rank,
    verify_spectrum,
    verify_walk_regular,
)
from altrank.spectra import SpectrumTable, delta_walks, intersection_array, spectrum


def test_build_examples(graph):
    g = graph(2, 2)
    assert (g.N, g.degree) == (2, 1)
    assert (graph(4, 2).N, graph(4, 2).degree) == (64, 35)
    assert (graph(5, 2).N, graph(5, 2).degree) == (1024, 155)


def test_size_guard():
    with pytest.raises(GraphTooLarge):
        build_graph(8, 2)
    with pytest.raises(GraphTooLarge):
        build_graph(4, 2, max_vertices=63)


def test_adjacency_matches_rank_definition(graph):
    # neighbours by translation against rank(decode(i) - decode(j)) = 2 directly
    from altrank.altforms import decode

    g = graph(3, 3)
    mats = [decode(i, 3, g.spec) for i in range(g.N)]
    direct = np.array([[int((a - b).rank() == 2) for b in mats] for a in mats])
    assert (direct == g.adjacency()).all()


@pytest.mark.parametrize("n,q", ORACLE_INSTANCES)
def test_structural_checks(n, q, graph):
    g = graph(n, q)
    assert verify_basic(g)
    assert verify_geodesic_rank(g)
    res = verify_distance_regularity(g)
    assert res, res.detail
    assert verify_spectrum(g, spectrum(n, q))


def test_geodesic_histogram(graph):
    g = graph(4, 2)
    dist = g.bfs(0)
    assert dict(zip(*np.unique(dist, return_counts=True))) == {0: 1, 1: 35, 2: 28}
    assert dist[0] == 0


def test_recovered_array(graph):
    g = graph(4, 2)
    found, failure = recover_intersection_numbers(g, range(g.N))
    assert failure is None
    ia = intersection_array(4, 2)
    c1, a1, _ = found[1]
    assert c1 == 1 and found[0][2] == 35
    assert a1 == 35 - ia.b[1] - ia.c[1]


def test_sampled_distance_regularity(graph):
    g = graph(5, 2)
    assert verify_distance_regularity(g, sources=[0, 17, 400, 1023])


def test_wrong_spectrum_is_rejected(graph):
    g = graph(4, 2)
    bad = SpectrumTable(4, 2, (35, 3, -5), (1, 34, 29))
    assert not verify_spectrum(g, bad)
    bad = SpectrumTable(4, 2, (35, 5, -5), (1, 35, 28))
    assert not verify_spectrum(g, bad)


def test_non_distance_regular_graph_is_rejected(graph):
    # rewire one edge pair of Alt_4(F_2): the degree stays 35 but c_1 breaks
    g = graph(4, 2)
    nb = g.neighbors.copy()
    u, v = 0, int(nb[0, 0])
    x = next(w for w in range(g.N) if w not in nb[0] and w != 0 and u not in nb[w])
    y = next(int(z) for z in nb[x] if z not in nb[v] and z != v and int(z) != 0)
    # replace edges u-v, x-y by u-x, v-y
    for a, old, new in ((u, v, x), (v, u, y), (x, y, u), (y, x, v)):
        row = nb[a]
        row[np.flatnonzero(row == old)[0]] = new
    h = DenseGraph(g.n, g.q, g.spec, nb, g.ranks)
    assert verify_basic(h)
    assert not verify_distance_regularity(h)


def test_closed_walks(graph):
    g = graph(4, 2)
    assert closed_walks(g, 0) == 1
    assert closed_walks(g, 2) == 35
    assert closed_walks(g, 3) == delta_walks(4, 2)
    assert verify_walk_regular(g, 3)
    assert verify_walk_regular(graph(5, 2), 4, seed=3)


def test_alpha_examples(graph):
    g = graph(4, 2)
    res = exact_alpha_k(g, 1)
    assert res.size == 8 and res.proven and not res.flags
    assert validate_witness(g, res.witness, 1)
    assert exact_alpha_k(g, 0).size == 64
    for n, q in ORACLE_INSTANCES:
        assert exact_alpha_k(graph(n, q), n // 2).size == 1


def test_alpha_budget_flag(graph):
    res = exact_alpha_k(graph(5, 2), 1, budget=500)
    assert not res.proven and res.flags == ["not-proven-optimal"]
    assert validate_witness(graph(5, 2), res.witness, 1)
    assert res.size <= 32


def test_witness_validation_catches_bad_sets(graph):
    g = graph(4, 2)
    assert not validate_witness(g, [0, int(g.neighbors[0, 0])], 1)


@pytest.mark.parametrize("n,q", ORACLE_INSTANCES)
def test_alpha_below_every_bound(n, q, graph):
    g = graph(n, q)
    for d in range(1, n // 2 + 1):
        res = exact_alpha_k(g, d - 1, budget=3000)
        assert validate_witness(g, res.witness, d - 1)
        rep = B.full_report(q, n, d)
        for name, e in rep.entries.items():
            if isinstance(e, B.BoundValue):
                assert res.size <= e.value, (name, d)
        if res.proven and d == 2 and n % 2 == 0:
            # even n: MRD codes exist and the search reaches the Singleton-like value
            assert res.size == B.singleton_like(q, n, d)


def test_rank_distribution_of_graph(graph):
    g = graph(4, 3)
    assert np.bincount(g.ranks, minlength=5).tolist() == [count_rank(4, 3, i) for i in range(5)]
