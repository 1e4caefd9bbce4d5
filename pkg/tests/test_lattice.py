from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import lattice
from noncrossing.coxeter import CoxeterSpec, coxeter_element, parse_element, parse_word, reduced_words_of
from noncrossing.errors import ResourceError, UsageError
from noncrossing.lattice import (
    boolean_from_word,
    boolean_sublattices,
    build_nc,
    chain_to_word,
    is_left_modular,
    is_supersolvable,
    join,
    left_modular_elements,
    leq_direct,
    maximal_chains,
    meet,
    word_to_chain,
)

SMALL = [("A", 3), ("A", 4), ("A", 5), ("B", 2), ("B", 3)]


def catalan(m):
    return comb(2 * m, m) // (m + 1)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_type_a_size_is_catalan(m):
    assert len(lattice("A", m)) == catalan(m)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_b_size(n):
    assert len(lattice("B", n)) == comb(2 * n, n)


@pytest.mark.parametrize("fam,deg,count", [("A", 3, 3), ("A", 4, 16), ("A", 5, 125), ("B", 2, 4), ("B", 3, 27), ("B", 4, 256)])
def test_maximal_chain_counts(fam, deg, count):
    assert len(maximal_chains(lattice(fam, deg))) == count


@pytest.mark.parametrize("fam,deg", SMALL)
def test_order_matches_direct_check(fam, deg):
    L = lattice(fam, deg)
    for x in range(len(L)):
        for y in range(len(L)):
            assert L.leq(x, y) == leq_direct(L, x, y)


@pytest.mark.parametrize("fam,deg", SMALL)
def test_join_and_meet_are_least_and_greatest_bounds(fam, deg):
    L = lattice(fam, deg)
    n = len(L)
    leq = np.array([[leq_direct(L, x, y) for y in range(n)] for x in range(n)])
    for x in range(n):
        for y in range(n):
            uppers = np.flatnonzero(leq[x] & leq[y])
            least = [z for z in uppers if all(leq[z, u] for u in uppers)]
            assert least == [join(L, x, y)]
            lowers = np.flatnonzero(leq[:, x] & leq[:, y])
            greatest = [z for z in lowers if all(leq[l, z] for l in lowers)]
            assert greatest == [meet(L, x, y)]


@pytest.mark.parametrize("fam,deg", SMALL + [("B", 4), ("A", 6)])
def test_lattice_identities(fam, deg):
    L = lattice(fam, deg)
    J, M = L.join_table, L.meet_table
    idx = np.arange(len(L))
    x, y = np.meshgrid(idx, idx, indexing="ij")
    assert (J == J.T).all() and (M == M.T).all()
    assert (J[x, M[x, y]] == x).all()
    assert (M[x, J[x, y]] == x).all()
    assert (J[idx, L.bottom] == idx).all() and (M[idx, L.top] == idx).all()
    rng = np.random.default_rng(7)
    a, b, c = rng.integers(0, len(L), size=(3, 2000))
    assert (J[J[a, b], c] == J[a, J[b, c]]).all()
    assert (M[M[a, b], c] == M[a, M[b, c]]).all()


def test_rank_is_reflection_length_and_covers_raise_rank():
    L = lattice("B", 3)
    assert L.height == 3 and L.rank_of[L.bottom] == 0
    for x, ups in enumerate(L.covers):
        assert all(L.rank_of[y] == L.rank_of[x] + 1 for y in ups)


def test_rank_symmetric_counts():
    # Narayana numbers for type A
    L = lattice("A", 5)
    counts = [L.rank_of.count(k) for k in range(5)]
    assert counts == [1, 10, 20, 10, 1]
    L = lattice("B", 3)
    assert [L.rank_of.count(k) for k in range(4)] == [1, 9, 9, 1]


def test_join_examples():
    L = lattice("A", 4)
    s = L.spec
    i = lambda text: L.index_of(parse_element(s, text))
    assert join(L, i("(1,2)"), i("(3,4)")) == i("(1,2)(3,4)")
    assert join(L, i("(1,3)"), i("(2,4)")) == L.top
    assert meet(L, i("(1,2,3)"), i("(2,3,4)")) == i("(2,3)")
    assert meet(L, i("(1,2)"), i("(3,4)")) == L.bottom


def test_crossing_pair_is_not_below_c():
    L = lattice("A", 4)
    with pytest.raises(UsageError):
        L.index_of(parse_element(L.spec, "(1,3)(2,4)"))


def test_degree_cap():
    with pytest.raises(ResourceError):
        build_nc(CoxeterSpec.A(9))
    assert len(build_nc(CoxeterSpec.A(3), max_degree=3)) == 5


def test_degree_cap_env_override(monkeypatch):
    monkeypatch.setenv("NC_BUDGET", "2")
    with pytest.raises(ResourceError):
        build_nc(CoxeterSpec.A(3))


@pytest.mark.parametrize("fam,deg", SMALL)
def test_word_chain_round_trip(fam, deg):
    L = lattice(fam, deg)
    words = reduced_words_of(coxeter_element(L.spec))
    chains = maximal_chains(L)
    assert len(words) == len(chains)
    assert sorted(word_to_chain(L, w) for w in words) == chains
    for ch in chains:
        assert word_to_chain(L, chain_to_word(L, ch)) == ch


def test_word_to_chain_rejects_other_words():
    L = lattice("A", 4)
    s = L.spec
    with pytest.raises(UsageError):
        word_to_chain(L, parse_word(s, "(2,3)(1,2)(3,4)"))
    with pytest.raises(UsageError):
        word_to_chain(L, parse_word(s, "(1,2)(2,3)"))
    with pytest.raises(UsageError):
        chain_to_word(L, (L.bottom, L.top))


def test_boolean_from_word():
    L = lattice("A", 4)
    B = boolean_from_word(L, parse_word(L.spec, "(1,2)(2,3)(3,4)"))
    assert len(B.members) == 8
    assert L.bottom in B.members and L.top in B.members
    assert {str(t) for t in B.generators} == {"(1,2)", "(2,3)", "(3,4)"}


@pytest.mark.parametrize("fam,deg,count", [("A", 3, 3), ("A", 4, 12), ("A", 5, 55), ("A", 6, 273), ("B", 2, 6), ("B", 3, 35), ("B", 4, 210)])
def test_boolean_sublattice_counts(fam, deg, count):
    assert len(boolean_sublattices(lattice(fam, deg))) == count


@pytest.mark.parametrize("fam,deg", [("A", 4), ("B", 3)])
def test_boolean_sublattices_are_boolean(fam, deg):
    L = lattice(fam, deg)
    n = L.height
    for B in boolean_sublattices(L):
        members = sorted(B.members)
        assert len(members) == 2**n
        for x in members:
            for y in members:
                assert join(L, x, y) in B.members and meet(L, x, y) in B.members
        atoms = [x for x in members if L.rank_of[x] == 1]
        assert len(atoms) == n


@pytest.mark.parametrize("fam,deg", [("A", 4), ("A", 5), ("B", 3)])
def test_every_word_lies_in_a_boolean_sublattice(fam, deg):
    L = lattice(fam, deg)
    apts = {B.generators: B.members for B in boolean_sublattices(L)}
    for w in reduced_words_of(coxeter_element(L.spec)):
        B = boolean_from_word(L, w)
        assert apts.get(B.generators) == B.members


def brute_left_modular(L, x):
    n = len(L)
    for y in range(n):
        for z in range(n):
            if L.leq(y, z) and meet(L, join(L, y, x), z) != join(L, y, meet(L, x, z)):
                return False
    return True


@pytest.mark.parametrize("fam,deg", [("A", 4), ("B", 3)])
def test_left_modular_matches_loops(fam, deg):
    L = lattice(fam, deg)
    flags = left_modular_elements(L)
    assert flags == [brute_left_modular(L, x) for x in range(len(L))]
    assert flags[L.bottom] and flags[L.top]


@pytest.mark.parametrize("fam,deg", [("A", 3), ("A", 4), ("A", 5), ("A", 6), ("B", 2), ("B", 3)])
def test_supersolvable(fam, deg):
    L = lattice(fam, deg)
    ok, chain = is_supersolvable(L)
    assert ok
    assert chain in maximal_chains(L)
    assert all(is_left_modular(L, x) for x in chain)


def test_signed_degree_four_not_supersolvable():
    L = lattice("B", 4)
    assert is_supersolvable(L) == (False, None)
    flags = left_modular_elements(L)
    assert not any(flags[x] for x in range(len(L)) if L.rank_of[x] == 2)


def test_every_atom_left_modular_in_rank_two():
    for fam, deg in [("A", 3), ("B", 2)]:
        L = lattice(fam, deg)
        assert all(is_left_modular(L, x) for x in L.reflection_indices())


def test_json_shape():
    L = lattice("A", 3)
    data = L.to_json()
    assert data["schema_version"] == 1
    assert len(data["elements"]) == 5 and len(data["covers"]) == 6
    assert data["labels"][data["top"]] == "(1,2,3)"


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_distributive_only_on_boolean_sublattices(data):
    L = lattice("A", 5)
    apts = boolean_sublattices(L)
    B = data.draw(st.sampled_from(apts))
    members = sorted(B.members)
    x, y, z = (data.draw(st.sampled_from(members)) for _ in range(3))
    assert meet(L, x, join(L, y, z)) == join(L, meet(L, x, y), meet(L, x, z))
