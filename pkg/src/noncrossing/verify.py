"""Registry of the acceptance claims and a runner shared by the CLI and tests.

Each claim computes its values from scratch, compares them with the expected
ones and returns a :class:`Outcome`.  A :class:`Workbench` caches lattices,
graphs and metrics so overlapping claims build each object once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from math import comb
from typing import Callable

from .building import (
    building_chamber_graph,
    check_b1_small,
    enumerate_subspaces,
    nc_b1_witness,
    verify_embedding,
    words_agree,
)
from .coxeter import CoxeterSpec, coxeter_element, count_reduced_words, parse_word, reduced_words_of
from .errors import NCError, UsageError
from .hurwitz import (
    GraphMetrics,
    HurwitzGraph,
    build_hurwitz_graph,
    distance,
    hurwitz_orbit,
    metrics,
    sigma,
)
from .lattice import (
    NCLattice,
    build_nc,
    chain_to_word,
    is_left_modular,
    is_supersolvable,
    join,
    maximal_chains,
    meet,
    word_to_chain,
)
from .pictorial import (
    count_apartments,
    element_to_partition,
    generalized_catalan,
    is_universal_chamber,
    nc_join,
    nc_meet,
    noncrossing_spanning_trees,
    tree_from_word,
    tree_slide,
    union_of_apartments_is_all,
)

A, B = CoxeterSpec.A, CoxeterSpec.B


@dataclass
class Workbench:
    """Per-run cache.  ``fault`` corrupts one join entry of every lattice so
    that the failure path can be exercised."""

    fault: bool = False
    _lattices: dict = field(default_factory=dict)
    _graphs: dict = field(default_factory=dict)
    _metrics: dict = field(default_factory=dict)

    def lattice(self, spec: CoxeterSpec) -> NCLattice:
        if spec not in self._lattices:
            L = build_nc(spec)
            if self.fault:
                L = _corrupt(L)
            self._lattices[spec] = L
        return self._lattices[spec]

    def graph(self, spec: CoxeterSpec) -> HurwitzGraph:
        if spec not in self._graphs:
            self._graphs[spec] = build_hurwitz_graph(spec, self.lattice(spec))
        return self._graphs[spec]

    def metrics(self, spec: CoxeterSpec) -> GraphMetrics:
        if spec not in self._metrics:
            self._metrics[spec] = metrics(self.graph(spec))
        return self._metrics[spec]


def _corrupt(L: NCLattice) -> NCLattice:
    atoms = L.reflection_indices()
    if len(atoms) < 2:
        return L
    table = L.join_table.copy()
    a, b = atoms[0], atoms[1]
    table[a, b] = table[b, a] = L.bottom
    return replace(L, join_table=table)


@dataclass(frozen=True)
class Outcome:
    passed: bool
    expected: object
    computed: object
    detail: str = ""


@dataclass(frozen=True)
class Claim:
    number: int
    key: str
    title: str
    source: str  # "published" values or "recomputed" by an independent route
    check: Callable[[Workbench], Outcome]


# -- individual claims --------------------------------------------------------------

def _radius_diameter(wb, specs):
    return {str(s): [wb.metrics(s).radius, wb.metrics(s).diameter] for s in specs}


def _c1(wb):
    expected = {"A4": [3, 3], "A5": [6, 7]}
    got = _radius_diameter(wb, [A(4), A(5)])
    return Outcome(got == expected, expected, got)


def _c2(wb):
    expected = {"B3": [3, 4]}
    got = _radius_diameter(wb, [B(3)])
    return Outcome(got == expected, expected, got)


def _c3(wb):
    specs = [A(m) for m in range(4, 8)] + [B(n) for n in range(2, 5)]
    bound = {str(s): comb(s.rank(), 2) for s in specs}
    got = {str(s): wb.metrics(s).radius for s in specs}
    ok = all(got[k] >= bound[k] for k in bound)
    return Outcome(ok, {k: f">= {v}" for k, v in bound.items()}, got)


def _c4(wb):
    specs = [A(m) for m in range(2, 8)]
    expected = {str(s): comb(s.degree - 1, 2) for s in specs}
    got = {str(s): wb.metrics(s).radius for s in specs}
    return Outcome(got == expected, expected, got)


def _c5(wb):
    specs = [A(m) for m in range(2, 7)] + [B(n) for n in range(2, 5)]
    expected, got, notes = {}, {}, []
    for s in specs:
        expected[str(s)] = "injective, rank/order preserving, not surjective"
        try:
            r = verify_embedding(wb.lattice(s))
            got[str(s)] = f"ok: {r.image_size} of {r.total_subspaces} subspaces"
        except NCError as exc:
            got[str(s)] = f"failed: {exc}"
            notes.append(str(s))
    detail = f"failing groups: {', '.join(notes)}" if notes else ""
    return Outcome(not notes, expected, got, detail)


def _c6(wb):
    got = {str(s): words_agree(s, wb.lattice(s)) for s in (A(5), B(3))}
    return Outcome(all(got.values()), {k: True for k in got}, got)


def _left_modular_chain(L, text):
    """Whether the chain ``id < ... < c`` through the given elements is made of
    left modular elements."""
    spec = L.spec
    word = parse_word(spec, text)
    chain = word_to_chain(L, word)
    return all(is_left_modular(L, x) for x in chain)


def _c7(wb):
    expected, got = {}, {}
    for m in range(2, 8):
        expected[f"A{m}"] = True
        got[f"A{m}"] = is_supersolvable(wb.lattice(A(m)))[0]
    L3 = wb.lattice(B(3))
    expected["B3"] = True
    got["B3"] = is_supersolvable(L3)[0]
    # <<1,2>> followed by the letter taking it to [1,2], then up to c
    expected["B3 chain <<1,2>> < [1,2]"] = True
    got["B3 chain <<1,2>> < [1,2]"] = _left_modular_chain(L3, "<<1,2>>[2]<<2,3>>")
    for n in (4, 5):
        expected[f"B{n}"] = False
        got[f"B{n}"] = is_supersolvable(wb.lattice(B(n)))[0]
    return Outcome(got == expected, expected, got)


def _c8(wb):
    L = wb.lattice(B(4))
    rank2 = [x for x in range(len(L)) if L.rank_of[x] == 2]
    lm = [str(L.elements[x]) for x in rank2 if is_left_modular(L, x)]
    return Outcome(not lm, {"rank-2 left modular": []}, {"rank-2 left modular": lm, "checked": len(rank2)})


def _c9(wb):
    listed = {3: 3, 4: 12, 5: 55, 6: 273, 7: 1428, 8: 7752}
    got = {m: count_apartments(m) for m in listed}
    closed = {m: generalized_catalan(m) for m in listed}
    return Outcome(got == listed == closed, listed, got)


def _c10(wb):
    got = {}
    for m in (4, 5):
        spec = A(m)
        L = wb.lattice(spec)
        trees = noncrossing_spanning_trees(m)
        bad = [
            str(w)
            for w in reduced_words_of(coxeter_element(spec))
            if union_of_apartments_is_all(w, L, trees) != is_universal_chamber(w)
        ]
        got[f"NCP{m} mismatches"] = bad
    return Outcome(not any(got.values()), {k: [] for k in got}, got)


def _c11(wb):
    got = {}
    for m in range(3, 7):
        bad = 0
        for w in reduced_words_of(coxeter_element(A(m))):
            T = tree_from_word(w)
            bad += sum(tree_slide(i, T) != tree_from_word(sigma(i, w)) for i in range(1, len(w)))
        got[f"A{m}"] = bad
    return Outcome(not any(got.values()), {k: 0 for k in got}, got)


def _shift_order(i, w):
    v, k = sigma(i, w), 1
    while v != w:
        v, k = sigma(i, v), k + 1
    return k


def _move_orders(spec):
    """Tally of shift orders, and positions where the order is not 2 for
    commuting letters or 3 otherwise."""
    tally, bad = {}, 0
    for w in reduced_words_of(coxeter_element(spec)):
        for i in range(1, len(w)):
            k = _shift_order(i, w)
            tally[f"order {k}"] = tally.get(f"order {k}", 0) + 1
            bad += k != (2 if w[i - 1].commutes_with(w[i]) else 3)
    return dict(sorted(tally.items()), failures=bad)


def _c12(wb):
    got = {str(s): _move_orders(s) for s in (A(5), B(3))}
    ok = not any(v["failures"] for v in got.values())
    return Outcome(ok, {k: {"failures": 0} for k in got}, got)


def _c13(wb):
    got = {}
    for s in [A(m) for m in range(3, 7)] + [B(n) for n in range(2, 5)]:
        words = reduced_words_of(coxeter_element(s))
        got[str(s)] = hurwitz_orbit(words[0]) == set(words)
    return Outcome(all(got.values()), {k: True for k in got}, got)


def _c14(wb):
    expected, got = {}, {}
    for m in range(2, 8):
        spec = A(m)
        L = wb.lattice(spec)
        words = reduced_words_of(coxeter_element(spec))
        chains = maximal_chains(L)
        chambers = {frozenset(word_to_chain(L, w)[1:-1]) for w in words}
        round_trip = all(chain_to_word(L, word_to_chain(L, w)) == w for w in words)
        round_trip &= all(word_to_chain(L, chain_to_word(L, ch)) == ch for ch in chains)
        expected[str(spec)] = [m ** (m - 2)] * 4 + [True]
        got[str(spec)] = [len(words), count_reduced_words(coxeter_element(spec)), len(chains), len(chambers), round_trip]
    return Outcome(got == expected, expected, got)


def _c15(wb):
    S = enumerate_subspaces(2, 3)
    G3, G4 = building_chamber_graph(2, 3), building_chamber_graph(2, 4)
    m3, m4 = metrics(G3), metrics(G4)
    expected = {"F2^3 lines": 7, "F2^3 planes": 7, "F2^3 chambers": 21, "F2^3 diameter": 3, "F2^4 diameter": 6}
    got = {
        "F2^3 lines": sum(U.dim == 1 for U in S),
        "F2^3 planes": sum(U.dim == 2 for U in S),
        "F2^3 chambers": len(G3),
        "F2^3 diameter": m3.diameter,
        "F2^4 diameter": m4.diameter,
    }
    ok = got == expected and m3.radius == m3.diameter and m4.radius == m4.diameter
    return Outcome(ok, expected, got)


def _c16(wb):
    witness = nc_b1_witness(wb.lattice(A(4)))
    got = {
        "F2^3": check_b1_small(2, 3),
        "F3^3": check_b1_small(3, 3),
        "NCP4 witness": None if witness is None else [str(w) for w in witness],
    }
    crossing = False
    if witness is not None:
        (a, b), (c, d) = (sorted(next(iter(w.cycles()))) for w in witness)
        crossing = len(set((a, b, c, d))) == 4 and ((a < c < b < d) or (c < a < d < b))
    ok = got["F2^3"] and got["F3^3"] and crossing
    expected = {"F2^3": True, "F3^3": True, "NCP4 witness": "two crossing transpositions"}
    return Outcome(ok, expected, got)


WITNESSES = {
    "A5": ("(1,3)(4,5)(1,2)(3,5)", "(2,4)(1,5)(2,3)(1,4)", 7),
    "B3": ("<<1,-2>><<2,3>>[1]", "[1]<<2,3>><<1,-2>>", 4),
}


def _c17(wb):
    expected, got, notes = {}, {}, []
    for name, (u, v, d) in WITNESSES.items():
        spec = A(5) if name == "A5" else B(3)
        L, G = wb.lattice(spec), wb.graph(spec)
        index = G.vertex_index()
        expected[name] = d
        try:
            a = index[word_to_chain(L, parse_word(spec, u))]
            b = index[word_to_chain(L, parse_word(spec, v))]
            got[name] = distance(G, a, b)
        except UsageError as exc:
            got[name] = None
            notes.append(f"{name}: {exc}")
    return Outcome(got == expected, expected, got, "; ".join(notes))


def _c18(wb):
    got = {}
    for s in (A(5), B(3)):
        L = wb.lattice(s)
        P = [element_to_partition(w) for w in L.elements]
        bad = 0
        for x in range(len(L)):
            for y in range(x, len(L)):
                bad += nc_join(P[x], P[y]) != P[join(L, x, y)]
                bad += nc_meet(P[x], P[y]) != P[meet(L, x, y)]
        got[str(s)] = bad
    return Outcome(not any(got.values()), {k: 0 for k in got}, got)


CLAIMS: tuple[Claim, ...] = (
    Claim(1, "radius-a", "Hurwitz radius and diameter, S_4 and S_5", "published", _c1),
    Claim(2, "radius-b", "Hurwitz radius and diameter, B_3", "published", _c2),
    Claim(3, "radius-bound", "radius >= C(rank, 2) for S_4..S_7, B_2..B_4", "published", _c3),
    Claim(4, "radius-equality-a", "radius = C(m-1, 2) for S_m, m <= 7", "published", _c4),
    Claim(5, "embedding", "embedding injective, rank/order preserving, not onto", "published", _c5),
    Claim(6, "word-independence", "all reduced words give the same subspace", "recomputed", _c6),
    Claim(7, "supersolvable", "left modular maximal chains in NCP_m and NCB_n", "published", _c7),
    Claim(8, "rank2-left-modular", "no rank-2 left modular element in NCB_4", "published", _c8),
    Claim(9, "apartment-count", "non-crossing spanning trees vs generalized Catalan", "published", _c9),
    Claim(10, "universal-chambers", "union of apartments through D is everything iff D universal", "recomputed", _c10),
    Claim(11, "tree-slide", "tree slides commute with shifts for S_m, m <= 6", "recomputed", _c11),
    Claim(12, "move-orders", "shift orders 2 and 3 on S_5 and B_3", "recomputed", _c12),
    Claim(13, "transitivity", "the shift orbit of a word for c is all of R_T(c)", "recomputed", _c13),
    Claim(14, "word-count", "m^(m-2) words, chains and chambers with exact round trips", "recomputed", _c14),
    Claim(15, "building", "subspace counts and chamber-graph diameters over F_2", "published", _c15),
    Claim(16, "axiom-b1", "B1 in L(F_2^3), L(F_3^3) and its failure in NCP_4", "published", _c16),
    Claim(17, "eccentricity-witnesses", "distance between the listed far-apart chains", "published", _c17),
    Claim(18, "partition-isomorphism", "partitions preserve joins and meets on S_5 and B_3", "recomputed", _c18),
)


def select(only: str | None = None) -> list[Claim]:
    """The claim numbered ``only``, or the claims whose key contains it."""
    if not only:
        return list(CLAIMS)
    if only.isdigit():
        chosen = [c for c in CLAIMS if c.number == int(only)]
    else:
        chosen = [c for c in CLAIMS if only in c.key]
    if not chosen:
        raise UsageError(f"no claim matches {only!r}")
    return chosen


def run_claim(claim: Claim, wb: Workbench) -> dict:
    start = time.perf_counter()
    try:
        out = claim.check(wb)
    except NCError as exc:
        out = Outcome(False, None, None, f"{type(exc).__name__}: {exc}")
    return {
        "id": claim.key,
        "number": claim.number,
        "title": claim.title,
        "source": claim.source,
        "expected": _jsonable(out.expected),
        "computed": _jsonable(out.computed),
        "passed": bool(out.passed),
        "detail": out.detail,
        "seconds": round(time.perf_counter() - start, 3),
    }


def run_all(only: str | None = None, stable: bool = False, fault: bool = False) -> dict:
    wb = Workbench(fault=fault)
    results = [run_claim(c, wb) for c in select(only)]
    if stable:
        for r in results:
            del r["seconds"]
    return {
        "schema_version": 1,
        "claims": results,
        "passed": sum(r["passed"] for r in results),
        "failed": sum(not r["passed"] for r in results),
    }


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value
