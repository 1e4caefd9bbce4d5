"""Polygon pictures: non-crossing partitions, labeled trees, and B_n-graphs.

Type A uses the ``m``-gon with vertices ``1..m`` clockwise.  Type B uses the
``2n``-gon with vertices ``1, ..., n, -1, ..., -n`` clockwise, so ``-i`` sits
at position ``n + i`` and ``i, -i`` are antipodal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from .coxeter import (
    CoxeterSpec,
    Element,
    Family,
    Reflection,
    ReducedWord,
    absolute_leq,
    all_reflections,
    compose,
    coxeter_element,
    reduced_words_of,
)
from .errors import ResourceError, UsageError, budget
from .lattice import NCLattice, boolean_sublattices, build_nc, maximal_chains, word_to_chain

__all__ = [
    "PartitionDiagram",
    "LabeledTree",
    "BnGraph",
    "BnCorrespondence",
    "parse_partition",
    "parse_tree",
    "is_noncrossing",
    "nc_join",
    "nc_meet",
    "element_to_partition",
    "bn_rank",
    "induced_partition",
    "restrict_partition",
    "tree_from_word",
    "tree_slide",
    "noncrossing_spanning_trees",
    "count_apartments",
    "generalized_catalan",
    "is_universal_chamber",
    "apartment_chambers",
    "product_labelings",
    "union_of_apartments_is_all",
    "graph_of_reflections",
    "is_bn_graph",
    "bn_apartment_correspondence",
]

DEFAULT_TREE_BUDGET = 10**5


# -- polygon geometry ----------------------------------------------------------

def _position(x: int, n: int, signed: bool) -> int:
    return x if x > 0 or not signed else n - x


def _cyclic_runs(labels: list) -> int:
    """Number of maximal runs of equal labels around a circle."""
    runs = sum(1 for a, b in zip(labels, labels[1:] + labels[:1]) if a != b)
    return max(runs, 1)


def _sets_cross(a, b, pos) -> bool:
    # two disjoint point sets on a circle cross iff the labels alternate at least twice
    merged = sorted([(pos(x), 0) for x in a] + [(pos(x), 1) for x in b])
    return _cyclic_runs([lab for _, lab in merged]) >= 4


def _chords_cross(e, f, pos) -> bool:
    if set(e) & set(f):
        return False
    return _sets_cross(e, f, pos)


# -- partitions ----------------------------------------------------------------

@dataclass(frozen=True)
class PartitionDiagram:
    """A set partition of the polygon vertices (singletons included)."""

    family: Family
    degree: int
    blocks: frozenset  # of frozenset[int]

    def __post_init__(self):
        blocks = frozenset(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if any(not b for b in blocks):
            raise UsageError("empty block")
        seen = [x for b in blocks for x in b]
        if len(seen) != len(set(seen)) or set(seen) != set(self.ground()):
            raise UsageError("blocks do not partition the vertex set")
        if self.signed:
            if any(frozenset(-x for x in b) not in blocks for b in blocks):
                raise UsageError("type B blocks must be closed under negation")
            if len(self.zero_blocks()) > 1:
                raise UsageError("at most one block may equal its negative")

    @property
    def signed(self) -> bool:
        return self.family is Family.B

    def ground(self) -> list[int]:
        n = self.degree
        if self.signed:
            return list(range(1, n + 1)) + [-i for i in range(1, n + 1)]
        return list(range(1, n + 1))

    def position(self, x: int) -> int:
        return _position(x, self.degree, self.signed)

    def zero_blocks(self) -> list[frozenset]:
        return [b for b in self.blocks if frozenset(-x for x in b) == b]

    def sorted_blocks(self) -> list[list[int]]:
        """Blocks in clockwise order of their first vertex, members clockwise."""
        out = [sorted(b, key=self.position) for b in self.blocks]
        return sorted(out, key=lambda b: self.position(b[0]))

    def __str__(self):
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.sorted_blocks())


_BLOCK = re.compile(r"\{([^{}]*)\}")


def parse_partition(text: str, spec: CoxeterSpec | None = None) -> PartitionDiagram:
    """Parse ``{1,2,5}{3,4}`` or ``{1,2,-1,-2}{3}{-3}``.

    Without ``spec`` the family is B exactly when a negative vertex occurs, and
    the degree is the largest absolute value.
    """
    text = text.strip()
    if _BLOCK.sub("", text).strip():
        raise UsageError(f"cannot parse partition {text!r}")
    try:
        blocks = [[int(x) for x in body.split(",")] for body in _BLOCK.findall(text)]
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    if not blocks:
        raise UsageError("no blocks")
    points = [x for b in blocks for x in b]
    if spec is None:
        family = Family.B if any(x < 0 for x in points) else Family.A
        degree = max(abs(x) for x in points)
    else:
        family, degree = spec.family, spec.degree
    return PartitionDiagram(family, degree, frozenset(frozenset(b) for b in blocks))


def is_noncrossing(d: PartitionDiagram) -> bool:
    return not any(_sets_cross(a, b, d.position) for a, b in combinations(d.blocks, 2))


def _merge(d: PartitionDiagram, groups) -> PartitionDiagram:
    return PartitionDiagram(d.family, d.degree, frozenset(frozenset(g) for g in groups))


def nc_join(a: PartitionDiagram, b: PartitionDiagram) -> PartitionDiagram:
    """Finest non-crossing partition coarser than both inputs."""
    if (a.family, a.degree) != (b.family, b.degree):
        raise UsageError("partitions live on different polygons")
    parent = {x: x for x in a.ground()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for block in list(a.blocks) + list(b.blocks):
        first, *rest = block
        for x in rest:
            union(first, x)
    while True:
        groups = {}
        for x in a.ground():
            groups.setdefault(find(x), set()).add(x)
        crossing = next(
            ((g, h) for g, h in combinations(groups.values(), 2) if _sets_cross(g, h, a.position)),
            None,
        )
        if crossing is None:
            return _merge(a, groups.values())
        union(next(iter(crossing[0])), next(iter(crossing[1])))


def nc_meet(a: PartitionDiagram, b: PartitionDiagram) -> PartitionDiagram:
    """Common refinement (blockwise intersections)."""
    if (a.family, a.degree) != (b.family, b.degree):
        raise UsageError("partitions live on different polygons")
    return _merge(a, [x & y for x in a.blocks for y in b.blocks if x & y])


def element_to_partition(w: Element) -> PartitionDiagram:
    """Blocks are the orbits of ``w`` on the polygon vertices."""
    spec = w.spec
    if not absolute_leq(w, coxeter_element(spec)):
        raise UsageError(f"{w} is not below the Coxeter element")
    ground = _ground(spec)
    seen = set()
    blocks = []
    for x in ground:
        if x in seen:
            continue
        orbit = {x}
        y = w(x)
        while y != x:
            orbit.add(y)
            y = w(y)
        seen |= orbit
        blocks.append(frozenset(orbit))
    return PartitionDiagram(spec.family, spec.degree, frozenset(blocks))


def _ground(spec: CoxeterSpec) -> list[int]:
    n = spec.degree
    return list(range(1, n + 1)) + ([-i for i in range(1, n + 1)] if spec.signed else [])


def bn_rank(d: PartitionDiagram) -> int:
    if not d.signed:
        raise UsageError("rank formula applies to type B partitions")
    return d.degree - len(d.blocks) // 2


def restrict_partition(d: PartitionDiagram, M) -> list[frozenset]:
    """Non-empty intersections of the blocks with ``M``, on the original labels."""
    M = set(M)
    if not M:
        raise UsageError("restriction to an empty vertex set")
    if not M <= set(d.ground()):
        raise UsageError(f"{sorted(M - set(d.ground()))} are not polygon vertices")
    parts = [b & M for b in d.blocks if b & M]
    return sorted(parts, key=lambda b: min(d.position(x) for x in b))


def induced_partition(d: PartitionDiagram, M) -> PartitionDiagram:
    """Restriction to ``M``, relabeled ``1..|M|`` along the clockwise order."""
    parts = restrict_partition(d, M)
    order = sorted(set(M), key=d.position)
    relabel = {x: k + 1 for k, x in enumerate(order)}
    return PartitionDiagram(Family.A, len(order), frozenset(frozenset(relabel[x] for x in b) for b in parts))


def _is_arc(points, m: int) -> bool:
    """Whether ``points`` (on ``1..m``) are circularly consecutive."""
    pts = set(points)
    if len(pts) == m:
        return True
    starts = [x for x in pts if (x - 2) % m + 1 not in pts]
    return len(starts) == 1


# -- labeled trees -----------------------------------------------------------------

@dataclass(frozen=True)
class LabeledTree:
    """A non-crossing spanning tree on the ``m``-gon; ``edges[k]`` carries label ``k + 1``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        m = self.vertex_count
        edges = tuple(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) != m - 1 or len(set(edges)) != len(edges):
            raise UsageError(f"a spanning tree on {m} vertices has {m - 1} distinct edges")
        if any(not (1 <= a < b <= m) for a, b in edges):
            raise UsageError("edge endpoints must be distinct polygon vertices")
        if not _is_spanning_tree(m, edges):
            raise UsageError("edges do not form a spanning tree")
        pos = lambda x: x  # noqa: E731
        if any(_chords_cross(e, f, pos) for e, f in combinations(edges, 2)):
            raise UsageError("tree has crossing edges")

    def shape(self) -> frozenset:
        return frozenset(self.edges)

    def label_of(self, edge) -> int:
        return self.edges.index(tuple(sorted(edge))) + 1

    def __str__(self):
        return ";".join(f"{k + 1}:({a},{b})" for k, (a, b) in enumerate(self.edges))


def _is_spanning_tree(m: int, edges) -> bool:
    parent = list(range(m + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return len(edges) == m - 1


_EDGE = re.compile(r"\s*(\d+)\s*:\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*")


def parse_tree(text: str) -> LabeledTree:
    """Parse ``1:(1,3);2:(3,5);...``; labels may appear in any order."""
    by_label = {}
    for part in text.strip().split(";"):
        m = _EDGE.fullmatch(part)
        if not m:
            raise UsageError(f"cannot parse tree edge {part!r}")
        label, a, b = map(int, m.groups())
        if label in by_label:
            raise UsageError(f"label {label} used twice")
        by_label[label] = (a, b)
    if sorted(by_label) != list(range(1, len(by_label) + 1)):
        raise UsageError("labels must be 1..k")
    edges = tuple(by_label[k] for k in range(1, len(by_label) + 1))
    return LabeledTree(len(edges) + 1, edges)


def _check_word_for_c(word: ReducedWord):
    spec = word.spec
    if spec.family is not Family.A:
        raise UsageError("labeled trees describe type A words")
    if word.product() != coxeter_element(spec) or len(word) != spec.rank():
        raise UsageError(f"{word} is not a reduced word for the Coxeter element")


def tree_from_word(word: ReducedWord) -> LabeledTree:
    """Letter ``(i, j)`` in position ``k`` becomes the edge ``{i, j}`` labeled ``k``."""
    _check_word_for_c(word)
    return LabeledTree(word.spec.degree, tuple((t.i, t.j) for t in word.letters))


def word_from_tree(spec: CoxeterSpec, tree: LabeledTree) -> ReducedWord:
    return ReducedWord(spec, tuple(Reflection(spec, a, b) for a, b in tree.edges))


def tree_slide(i: int, tree: LabeledTree) -> LabeledTree:
    """Move edge ``i + 1`` around edge ``i``.

    Disjoint edges trade labels.  If edge ``i`` is ``{j, k}`` and edge ``i + 1``
    is ``{k, l}``, the new edge ``i`` is ``{j, l}`` and ``{j, k}`` takes label
    ``i + 1``.
    """
    if not 1 <= i < len(tree.edges):
        raise UsageError(f"slide index {i} out of range for {len(tree.edges)} edges")
    edges = list(tree.edges)
    e, f = edges[i - 1], edges[i]
    shared = set(e) & set(f)
    if not shared:
        edges[i - 1], edges[i] = f, e
    else:
        (k,) = shared
        (j,) = set(e) - shared
        (l,) = set(f) - shared
        edges[i - 1], edges[i] = (j, l), e
    return LabeledTree(tree.vertex_count, tuple(edges))


def noncrossing_spanning_trees(m: int, max_trees: int | None = None) -> list[frozenset]:
    """All unlabeled non-crossing spanning trees on the ``m``-gon.

    Backtracking over the chords in lexicographic order, pruning chords that
    cross a chosen one or close a cycle.
    """
    if m < 2:
        raise UsageError("a polygon needs at least two vertices")
    cap = budget(DEFAULT_TREE_BUDGET) if max_trees is None else max_trees
    chords = [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)]
    conflicts = [
        {g for g, f in enumerate(chords) if _chords_cross(e, f, lambda x: x)} for e in chords
    ]
    out = []
    comp = list(range(m + 1))
    chosen = []

    def walk(start, blocked):
        if len(chosen) == m - 1:
            out.append(frozenset(chords[g] for g in chosen))
            if len(out) > cap:
                raise ResourceError(f"more than {cap} trees on the {m}-gon")
            return
        # not enough chords left to finish the tree
        if len(chords) - start < m - 1 - len(chosen):
            return
        for g in range(start, len(chords)):
            if g in blocked:
                continue
            a, b = chords[g]
            ca, cb = comp[a], comp[b]
            if ca == cb:
                continue
            saved = comp[:]
            for v in range(1, m + 1):
                if comp[v] == ca:
                    comp[v] = cb
            chosen.append(g)
            walk(g + 1, blocked | conflicts[g])
            chosen.pop()
            comp[:] = saved

    walk(0, frozenset())
    return sorted(out, key=sorted)


def generalized_catalan(m: int) -> int:
    """``C(3m - 3, m - 1) / (2m - 1)``."""
    num = comb(3 * m - 3, m - 1)
    if num % (2 * m - 1):
        raise ArithmeticError(f"closed form is not integral at m={m}")
    return num // (2 * m - 1)


def count_apartments(m: int) -> int:
    if m < 3:
        raise UsageError("apartment count is defined for m >= 3")
    return len(noncrossing_spanning_trees(m))


# -- chambers and apartments in type A ---------------------------------------------

def is_universal_chamber(word: ReducedWord) -> bool:
    """Each non-trivial prefix product has one non-singleton block, and that
    block is a circular arc."""
    _check_word_for_c(word)
    m = word.spec.degree
    w = word.spec.identity()
    for t in word.letters:
        w = compose(w, t.element)
        big = [b for b in element_to_partition(w).blocks if len(b) > 1]
        if len(big) != 1 or not _is_arc(big[0], m):
            return False
    return True


def apartment_chambers(L: NCLattice, atoms) -> set[tuple[int, ...]]:
    """Maximal chains of the Boolean sublattice generated by ``atoms``, one per
    ordering of the atoms: the ``k``-th element is the join of the first ``k``."""
    idx = [L.index_of(t.element) for t in atoms]
    chains = set()
    for order in permutations(idx):
        x = L.bottom
        chain = [x]
        for a in order:
            x = int(L.join_table[x, a])
            chain.append(x)
        chains.add(tuple(chain))
    return chains


def product_labelings(spec: CoxeterSpec, shape) -> list[ReducedWord]:
    """Orderings of the tree's edges whose ordered product is ``c``."""
    c = coxeter_element(spec)
    refl = [Reflection(spec, a, b) for a, b in sorted(shape)]
    out = []
    for order in permutations(refl):
        w = spec.identity()
        for t in order:
            w = compose(w, t.element)
        if w == c:
            out.append(ReducedWord._trusted(spec, order))
    return out


def union_of_apartments_is_all(word: ReducedWord, L: NCLattice | None = None, trees=None) -> bool:
    """Whether every chamber shares an apartment with the chamber of ``word``.

    The apartment of a non-crossing spanning tree is the Boolean sublattice
    generated by its edges; its chambers come from all orderings of the edges.
    """
    _check_word_for_c(word)
    spec = word.spec
    if spec.degree > 6:
        raise ResourceError("chamber/apartment double enumeration is limited to m <= 6")
    L = build_nc(spec) if L is None else L
    trees = noncrossing_spanning_trees(spec.degree) if trees is None else trees
    target = word_to_chain(L, word)
    covered = set()
    for shape in trees:
        chambers = apartment_chambers(L, [Reflection(spec, a, b) for a, b in shape])
        if target in chambers:
            covered |= chambers
    return covered == set(maximal_chains(L))


# -- type B graphs -----------------------------------------------------------------

@dataclass(frozen=True)
class BnGraph:
    """A graph on the ``2n``-gon; edges are frozensets of two vertices."""

    n: int
    edges: frozenset

    def __post_init__(self):
        edges = frozenset(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        verts = set(range(1, self.n + 1)) | set(range(-self.n, 0))
        for e in edges:
            if len(e) != 2 or not e <= verts:
                raise UsageError(f"bad edge {sorted(e)} on the {2 * self.n}-gon")

    def position(self, x: int) -> int:
        return _position(x, self.n, True)

    def vertices(self) -> list[int]:
        return list(range(1, self.n + 1)) + [-i for i in range(1, self.n + 1)]

    def __str__(self):
        es = sorted((sorted(e, key=self.position) for e in self.edges), key=lambda e: [self.position(x) for x in e])
        return " ".join(f"({a},{b})" for a, b in es)


def graph_of_reflections(spec: CoxeterSpec, reflections) -> BnGraph:
    """``<<i,j>>`` gives edges ``(i,j), (-i,-j)``; ``[i]`` gives ``(i,-i)``."""
    if spec.family is not Family.B:
        raise UsageError("B_n-graphs are defined in type B")
    edges = set()
    for t in reflections:
        edges.add(frozenset((t.i, t.j)))
        edges.add(frozenset((-t.i, -t.j)))
    return BnGraph(spec.degree, frozenset(edges))


def _zero_polygons(g: BnGraph) -> list[frozenset]:
    """Symmetric vertex sets ``B`` (``|B| >= 4``) whose boundary polygon lies in ``g``."""
    found = []
    for k in range(2, g.n + 1):
        for half in combinations(range(1, g.n + 1), k):
            B = frozenset(half) | frozenset(-x for x in half)
            if _boundary(g, B) <= g.edges:
                found.append(B)
    return found


def _boundary(g: BnGraph, B) -> set[frozenset]:
    order = sorted(B, key=g.position)
    return {frozenset((order[k], order[(k + 1) % len(order)])) for k in range(len(order))}


def _zero_part(g: BnGraph, max_zero_edges: int):
    """The unique zero part as a set of edges, or ``None``.

    Candidates are the zero edges ``(i, -i)`` taken together (if there are
    between 1 and ``max_zero_edges``) and each symmetric polygon whose boundary
    is present.  A graph with zero edges and a polygon has two zero parts.
    """
    zero_edges = {e for e in g.edges if sum(e) == 0}
    parts = []
    if zero_edges:
        if len(zero_edges) > max_zero_edges:
            return None
        parts.append(zero_edges)
    parts.extend(_boundary(g, B) for B in _zero_polygons(g))
    return parts[0] if len(parts) == 1 else None


def is_bn_graph(g: BnGraph, max_zero_edges: int | None = None, connected: bool = False) -> bool:
    """Conditions for a graph to encode a type-B apartment.

    (a) symmetric under ``x -> -x``; (b) exactly one zero part ``Z``; (c) the
    remaining edges cross neither each other nor ``Z`` and form a forest once
    the vertices of ``Z`` are identified; (d) every polygon vertex is used.
    ``max_zero_edges`` defaults to ``n - 1``.  With ``connected`` the forest
    must be a single tree after identifying the vertices of ``Z``.
    """
    cap = g.n - 1 if max_zero_edges is None else max_zero_edges
    if any(frozenset(-x for x in e) not in g.edges for e in g.edges):
        return False
    if {x for e in g.edges for x in e} != set(g.vertices()):
        return False
    Z = _zero_part(g, cap)
    if Z is None:
        return False
    rest = [tuple(e) for e in g.edges - Z]
    if any(_chords_cross(e, f, g.position) for e, f in combinations(rest, 2)):
        return False
    if any(_chords_cross(e, tuple(z), g.position) for e in rest for z in Z):
        return False
    zero_vertices = {x for z in Z for x in z}
    parent = {v: v for v in g.vertices()}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    anchor = min(zero_vertices)
    for v in zero_vertices:
        parent[find(v)] = find(anchor)
    for a, b in rest:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return not connected or len({find(v) for v in g.vertices()}) == 1


@dataclass(frozen=True)
class BnCorrespondence:
    """Outcome of matching Boolean apartments against B_n-graphs."""

    spec: str
    max_zero_edges: int
    connected: bool
    apartments: int
    graphs: int
    apartments_without_graph: tuple[str, ...]  # generator lists
    graphs_without_apartment: tuple[str, ...]
    nonconsecutive_zero_edges: int  # valid graphs whose zero edges are not adjacent diameters

    @property
    def bijection(self) -> bool:
        return not self.apartments_without_graph and not self.graphs_without_apartment

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "max_zero_edges": self.max_zero_edges,
            "connected": self.connected,
            "apartments": self.apartments,
            "graphs": self.graphs,
            "bijection": self.bijection,
            "apartments_without_graph": list(self.apartments_without_graph),
            "graphs_without_apartment": list(self.graphs_without_apartment),
            "nonconsecutive_zero_edges": self.nonconsecutive_zero_edges,
        }


def _consecutive_zero_edges(g: BnGraph) -> bool:
    # diameters i and i+1 are neighbours, and so are n and 1
    if not any(sum(e) == 0 for e in g.edges):
        return True
    return _is_arc({abs(x) for e in g.edges if sum(e) == 0 for x in e}, g.n)


def bn_apartment_correspondence(
    spec: CoxeterSpec,
    L: NCLattice | None = None,
    max_zero_edges: int | None = None,
    connected: bool = False,
) -> BnCorrespondence:
    """Compare apartments (maximal Boolean sublattices) with B_n-graphs.

    Every symmetric graph is the translation of a unique set of reflections, so
    the candidate graphs are the subsets of ``T``.  A graph passing the test
    has at most ``2n`` edges (a forest on the ``2n - |Z| + 1`` vertices left
    after collapsing ``Z``, plus ``Z``), hence comes from at most ``n``
    reflections; larger subsets are skipped.  Mismatches in either direction
    are returned, not repaired.
    """
    if spec.family is not Family.B:
        raise UsageError("B_n-graphs are defined in type B")
    if spec.degree > 4:
        raise ResourceError("graph enumeration is limited to n <= 4")
    n = spec.degree
    cap = n - 1 if max_zero_edges is None else max_zero_edges
    L = build_nc(spec) if L is None else L
    apartments = {B.generators for B in boolean_sublattices(L)}
    refl = all_reflections(spec)
    graphs = set()
    nonconsecutive = 0
    for size in range(1, n + 1):
        for subset in map(frozenset, combinations(refl, size)):
            g = graph_of_reflections(spec, subset)
            if is_bn_graph(g, cap, connected):
                graphs.add(subset)
                nonconsecutive += not _consecutive_zero_edges(g)

    def names(sets):
        return tuple(sorted(" ".join(str(t) for t in sorted(s, key=lambda t: t.sort_key)) for s in sets))

    return BnCorrespondence(
        spec=str(spec),
        max_zero_edges=cap,
        connected=connected,
        apartments=len(apartments),
        graphs=len(graphs),
        apartments_without_graph=names(apartments - graphs),
        graphs_without_apartment=names(graphs - apartments),
        nonconsecutive_zero_edges=nonconsecutive,
    )


def words_for_apartment(spec: CoxeterSpec, generators) -> list[ReducedWord]:
    """Reduced words for ``c`` whose letter set is ``generators``."""
    gens = frozenset(generators)
    return [w for w in reduced_words_of(coxeter_element(spec)) if frozenset(w.letters) == gens]
