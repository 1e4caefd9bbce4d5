from collections import deque
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import lattice
from noncrossing.coxeter import CoxeterSpec, compose, coxeter_element, is_reduced, parse_word, reduced_words_of
from noncrossing.errors import IntegrityError, ResourceError, UsageError
from noncrossing.hurwitz import (
    HurwitzGraph,
    bfs_distances,
    build_hurwitz_graph,
    chamber_graph_nc,
    distance,
    hurwitz_orbit,
    metrics,
    metrics_report,
    sigma,
    sigma_move_graph,
    sigma_moves_are_edges,
    sigma_prime,
    to_dot,
)
from noncrossing.lattice import maximal_chains, word_to_chain

A, B = CoxeterSpec.A, CoxeterSpec.B
_graphs = {}


def graph(fam, deg):
    if (fam, deg) not in _graphs:
        L = lattice(fam, deg)
        _graphs[fam, deg] = build_hurwitz_graph(L.spec, L)
    return _graphs[fam, deg]


def words(fam, deg):
    return reduced_words_of(coxeter_element(lattice(fam, deg).spec))


def product(word):
    w = word.spec.identity()
    for t in word.letters:
        w = compose(w, t.element)
    return w


def brute_adjacency(L):
    """Chains as sets; adjacent iff they differ in exactly one element."""
    chains = maximal_chains(L)
    sets = [set(c) for c in chains]
    return [
        tuple(v for v in range(len(chains)) if v != u and len(sets[u] - sets[v]) == 1)
        for u in range(len(chains))
    ]


def eccentricity_oracle(G):
    out = []
    for s in range(len(G)):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in G.adjacency[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        assert len(dist) == len(G)
        out.append(max(dist.values()))
    return out


# -- shifts -----------------------------------------------------------------------------

def test_sigma_examples():
    s = A(3)
    assert str(sigma(1, parse_word(s, "(1,2)(2,3)"))) == "(1,3)(1,2)"
    assert str(sigma_prime(1, parse_word(s, "(1,3)(1,2)"))) == "(1,2)(2,3)"
    s4 = A(4)
    assert str(sigma(1, parse_word(s4, "(1,2)(3,4)"))) == "(3,4)(1,2)"


@pytest.mark.parametrize("i", [0, 3])
def test_sigma_index_range(i):
    w = parse_word(A(4), "(1,2)(2,3)(3,4)")
    with pytest.raises(UsageError):
        sigma(i, w)
    with pytest.raises(UsageError):
        sigma_prime(i, w)


@pytest.mark.parametrize("fam,deg", [("A", 4), ("A", 5), ("B", 3)])
def test_shifts_are_inverse_and_preserve_product(fam, deg):
    c = coxeter_element(lattice(fam, deg).spec)
    for w in words(fam, deg):
        for i in range(1, len(w)):
            for v in (sigma(i, w), sigma_prime(i, w)):
                assert product(v) == c and is_reduced(v.letters)
            assert sigma_prime(i, sigma(i, w)) == w
            assert sigma(i, sigma_prime(i, w)) == w


@pytest.mark.parametrize("fam,deg", [("A", 4), ("A", 5), ("B", 3)])
def test_braid_relations(fam, deg):
    for w in words(fam, deg):
        for i in range(1, len(w) - 1):
            assert sigma(i, sigma(i + 1, sigma(i, w))) == sigma(i + 1, sigma(i, sigma(i + 1, w)))
        for i in range(1, len(w)):
            for j in range(i + 2, len(w)):
                assert sigma(i, sigma(j, w)) == sigma(j, sigma(i, w))


def shift_order(i, w):
    v, k = sigma(i, w), 1
    while v != w:
        v, k = sigma(i, v), k + 1
    return k


@pytest.mark.parametrize("m", [4, 5])
def test_shift_orders_type_a(m):
    for w in words("A", m):
        for i in range(1, len(w)):
            a, b = w.letters[i - 1], w.letters[i]
            assert shift_order(i, w) == (2 if a.commutes_with(b) else 3)


def test_shift_orders_signed_degree_three():
    # a flip next to a pair it does not commute with generates a group of order 8
    tally = {}
    for w in words("B", 3):
        for i in range(1, 3):
            k = shift_order(i, w)
            tally[k] = tally.get(k, 0) + 1
    assert tally == {2: 12, 3: 18, 4: 24}
    order4 = [w for w in words("B", 3) if shift_order(1, w) == 4]
    assert all(w.letters[0].is_flip != w.letters[1].is_flip for w in order4)


# -- the graph ---------------------------------------------------------------------------

def test_small_graphs():
    G = graph("A", 3)
    assert len(G) == 3 and G.adjacency == ((1, 2), (0, 2), (0, 1))
    assert len(graph("A", 4)) == 16
    assert len(graph("B", 3)) == len(words("B", 3)) == 27


@pytest.mark.parametrize("fam,deg", [("A", 3), ("A", 4), ("A", 5), ("B", 2), ("B", 3)])
def test_adjacency_matches_set_difference(fam, deg):
    G = graph(fam, deg)
    assert list(G.adjacency) == brute_adjacency(lattice(fam, deg))
    for u, nb in enumerate(G.adjacency):
        assert u not in nb
        assert all(u in G.adjacency[v] for v in nb)


def test_chain_budget():
    L = lattice("A", 5)
    with pytest.raises(ResourceError):
        build_hurwitz_graph(L.spec, L, max_chains=100)


@pytest.mark.parametrize("fam,deg,rad,diam", [("A", 3, 1, 1), ("A", 4, 3, 3), ("A", 5, 6, 7), ("B", 2, 1, 1), ("B", 3, 3, 4)])
def test_metrics(fam, deg, rad, diam):
    m = metrics(graph(fam, deg))
    assert (m.radius, m.diameter) == (rad, diam)


@pytest.mark.parametrize("fam,deg", [("A", 4), ("A", 5), ("B", 3), ("B", 4)])
def test_bit_parallel_eccentricities_match_queue_bfs(fam, deg):
    G = graph(fam, deg)
    m = metrics(G)
    assert list(m.eccentricities) == eccentricity_oracle(G)
    assert m.radius <= m.diameter <= 2 * m.radius
    assert m.eccentricities[m.center] == m.radius
    u, v = m.diameter_pair
    assert distance(G, u, v) == m.diameter


@pytest.mark.parametrize("fam,deg", [("A", 4), ("A", 5), ("B", 2), ("B", 3), ("B", 4)])
def test_radius_lower_bound(fam, deg):
    L = lattice(fam, deg)
    assert metrics(graph(fam, deg)).radius >= comb(L.spec.rank(), 2)


def test_signed_degree_four_radius():
    assert metrics(graph("B", 4)).radius == 6


def test_more_than_64_sources():
    # 125 vertices straddle two bit words
    G = graph("A", 5)
    assert len(G) > 64
    assert list(metrics(G).eccentricities) == eccentricity_oracle(G)


def test_disconnected_graph_rejected():
    G = HurwitzGraph(A(3), (0, 1, 2), ((1,), (0,), ()), ("a", "b", "c"))
    with pytest.raises(IntegrityError):
        metrics(G)
    G = HurwitzGraph(A(3), (0, 1, 2, 3), ((1,), (0,), (3,), (2,)), ("a", "b", "c", "d"))
    with pytest.raises(IntegrityError):
        metrics(G)
    with pytest.raises(IntegrityError):
        distance(G, 0, 3)
    assert bfs_distances(G, 0) == [0, 1, -1, -1]


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_distance_is_a_metric(data):
    G = graph("A", 5)
    u, v, w = (data.draw(st.integers(0, len(G) - 1)) for _ in range(3))
    assert distance(G, u, v) == distance(G, v, u)
    assert distance(G, u, w) <= distance(G, u, v) + distance(G, v, w)
    assert (distance(G, u, v) == 0) == (u == v)


# -- orbits and chamber graphs -------------------------------------------------------------

def test_orbit_of_single_letter():
    w = parse_word(A(4), "(1,3)")
    assert hurwitz_orbit(w) == {w}


@pytest.mark.parametrize("fam,deg", [("A", 4), ("A", 5), ("B", 2), ("B", 3)])
def test_orbit_is_transitive(fam, deg):
    all_words = set(words(fam, deg))
    for w in list(all_words)[:5]:
        assert hurwitz_orbit(w) == all_words


def test_orbit_budget():
    w = words("A", 5)[0]
    with pytest.raises(ResourceError):
        hurwitz_orbit(w, max_size=10)


@pytest.mark.parametrize("fam,deg", [("A", 3), ("A", 4), ("A", 5), ("B", 3)])
def test_chamber_graph_isomorphic(fam, deg):
    L = lattice(fam, deg)
    H = graph(fam, deg)
    C, to_h = chamber_graph_nc(L.spec, L)
    assert sorted(to_h) == list(range(len(H)))
    assert C.edge_count == H.edge_count
    for u, nb in enumerate(C.adjacency):
        assert sorted(to_h[v] for v in nb) == list(H.adjacency[to_h[u]])


@pytest.mark.parametrize("fam,deg", [("A", 4), ("A", 5), ("B", 3)])
def test_sigma_moves_are_edges(fam, deg):
    L = lattice(fam, deg)
    assert sigma_moves_are_edges(L.spec, graph(fam, deg), L)


def test_sigma_move_graph_is_a_subgraph():
    L = lattice("B", 3)
    G = graph("B", 3)
    S = sigma_move_graph(G, L)
    assert all(set(a) <= set(b) for a, b in zip(S.adjacency, G.adjacency))
    assert 0 < S.edge_count <= G.edge_count


# -- reports ---------------------------------------------------------------------------

def test_metrics_report_and_dot():
    G = graph("A", 3)
    rep = metrics_report(G)
    assert rep["vertex_count"] == 3 and rep["edge_count"] == 3
    assert rep["radius"] == rep["diameter"] == 1
    assert set(rep["witness_pairs"]) == {"center", "diameter"}
    dot = to_dot(G, "H")
    assert dot.startswith("graph H {") and dot.count(" -- ") == 3
    assert '"(1,2)(2,3)"' in dot


# -- named witnesses ------------------------------------------------------------------

def test_type_a_far_pair():
    L = lattice("A", 5)
    G = graph("A", 5)
    index = G.vertex_index()
    u = index[word_to_chain(L, parse_word(L.spec, "(1,3)(4,5)(1,2)(3,5)"))]
    v = index[word_to_chain(L, parse_word(L.spec, "(2,4)(1,5)(2,3)(1,4)"))]
    assert distance(G, u, v) == 7


def test_signed_far_pair_second_word_is_not_for_c():
    # the second listed word multiplies to something other than [1,2,3]
    L = lattice("B", 3)
    first = parse_word(L.spec, "<<1,-2>><<2,3>>[1]")
    second = parse_word(L.spec, "[1]<<2,3>><<1,-2>>")
    assert product(first) == coxeter_element(L.spec)
    assert product(second) != coxeter_element(L.spec)
    with pytest.raises(UsageError):
        word_to_chain(L, second)


def test_signed_far_vertex_of_first_word():
    L = lattice("B", 3)
    G = graph("B", 3)
    index = G.vertex_index()
    u = index[word_to_chain(L, parse_word(L.spec, "<<1,-2>><<2,3>>[1]"))]
    dist = bfs_distances(G, u)
    assert max(dist) == 4
    far = [G.labels[v] for v, d in enumerate(dist) if d == 4]
    assert "[3]<<1,2>><<2,-3>>" in far
    # reading the second word with the left factor applied first lands 3 steps away
    v = index[word_to_chain(L, parse_word(L.spec, "[1]<<2,3>><<1,3>>"))]
    assert dist[v] == 3
