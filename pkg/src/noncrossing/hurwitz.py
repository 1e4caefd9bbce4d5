"""Hurwitz moves, the Hurwitz graph on maximal chains, and exact graph metrics."""

from __future__ import annotations

import json
from collections import defaultdict, deque
from dataclasses import dataclass

import numpy as np

from .coxeter import CoxeterSpec, ReducedWord, coxeter_element, reduced_words_of
from .errors import IntegrityError, ResourceError, UsageError, budget
from .lattice import NCLattice, build_nc, chain_to_word, maximal_chains, word_to_chain

__all__ = [
    "HurwitzGraph",
    "GraphMetrics",
    "sigma",
    "sigma_prime",
    "build_hurwitz_graph",
    "graph_from_chains",
    "metrics",
    "bfs_distances",
    "distance",
    "hurwitz_orbit",
    "chamber_graph_nc",
    "sigma_moves_are_edges",
    "sigma_move_graph",
    "metrics_report",
    "to_dot",
]

DEFAULT_CHAIN_BUDGET = 10**5
_WORDS_PER_PASS = 32  # 64-bit words of sources advanced together


def _check_index(i: int, word: ReducedWord):
    if not 1 <= i < len(word):
        raise UsageError(f"shift index {i} out of range for a word of length {len(word)}")


def sigma(i: int, word: ReducedWord) -> ReducedWord:
    """Replace letters ``i, i+1`` (1-based) by ``(t_i t_{i+1} t_i, t_i)``."""
    _check_index(i, word)
    letters = list(word.letters)
    a, b = letters[i - 1], letters[i]
    letters[i - 1] = b.conjugate(a.element)
    letters[i] = a
    return ReducedWord._trusted(word.spec, letters)


def sigma_prime(i: int, word: ReducedWord) -> ReducedWord:
    """Replace letters ``i, i+1`` (1-based) by ``(t_{i+1}, t_{i+1} t_i t_{i+1})``."""
    _check_index(i, word)
    letters = list(word.letters)
    a, b = letters[i - 1], letters[i]
    letters[i - 1] = b
    letters[i] = a.conjugate(b.element)
    return ReducedWord._trusted(word.spec, letters)


@dataclass(frozen=True, eq=False)
class HurwitzGraph:
    """An undirected graph on chains (or chambers) with sorted adjacency lists."""

    spec: CoxeterSpec
    vertices: tuple
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __len__(self):
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def vertex_index(self) -> dict:
        return {v: k for k, v in enumerate(self.vertices)}

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` of the adjacency lists."""
        degrees = np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=len(self))
        indptr = np.concatenate(([0], np.cumsum(degrees)))
        indices = np.fromiter((v for a in self.adjacency for v in a), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices


@dataclass(frozen=True)
class GraphMetrics:
    eccentricities: tuple[int, ...]
    radius: int
    diameter: int
    center: int  # first vertex of minimal eccentricity
    diameter_pair: tuple[int, int]  # first pair at maximal distance


def graph_from_chains(spec, vertices, labels, faces_of) -> HurwitzGraph:
    """Join vertices that share a face; ``faces_of(v)`` yields hashable faces."""
    groups = defaultdict(list)
    for k, v in enumerate(vertices):
        for face in faces_of(v):
            groups[face].append(k)
    nbrs = [set() for _ in vertices]
    for members in groups.values():
        for u in members:
            nbrs[u].update(members)
    adjacency = tuple(tuple(sorted(nb - {u})) for u, nb in enumerate(nbrs))
    return HurwitzGraph(spec, tuple(vertices), adjacency, tuple(labels))


def _chain_faces(chain):
    # chains differing in exactly one element agree off one interior position
    for k in range(1, len(chain) - 1):
        yield (k, chain[:k] + chain[k + 1 :])


def build_hurwitz_graph(spec: CoxeterSpec, L: NCLattice | None = None, max_chains: int | None = None) -> HurwitzGraph:
    """Vertices: maximal chains of ``NC(W, c)``; edges: chains differing in one element."""
    cap = budget(DEFAULT_CHAIN_BUDGET) if max_chains is None else max_chains
    L = build_nc(spec) if L is None else L
    chains = maximal_chains(L)
    if len(chains) > cap:
        raise ResourceError(f"{len(chains)} maximal chains exceed the budget {cap}")
    labels = [str(chain_to_word(L, ch)) for ch in chains]
    return graph_from_chains(spec, chains, labels, _chain_faces)


def bfs_distances(G: HurwitzGraph, source: int) -> list[int]:
    """Plain breadth-first search; ``-1`` marks unreachable vertices."""
    dist = [-1] * len(G)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in G.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(G: HurwitzGraph, u: int, v: int) -> int:
    d = bfs_distances(G, u)[v]
    if d < 0:
        raise IntegrityError(f"vertices {u} and {v} are disconnected", witness=(u, v))
    return d


def _eccentricities(G: HurwitzGraph) -> np.ndarray:
    """Eccentricity of every vertex by bit-parallel breadth-first search.

    Bit ``s`` of ``reached[v]`` records that ``v`` has been reached from source
    ``s``; one pass advances 64 * ``_WORDS_PER_PASS`` sources level by level.
    """
    n = len(G)
    ecc = np.zeros(n, dtype=np.int64)
    if n == 1:
        return ecc
    indptr, indices = G.csr()
    if (np.diff(indptr) == 0).any():
        v = int(np.argmin(np.diff(indptr)))
        raise IntegrityError("graph is disconnected", witness=(v,))
    starts = indptr[:-1]
    nwords = (n + 63) // 64
    for w0 in range(0, nwords, _WORDS_PER_PASS):
        w1 = min(nwords, w0 + _WORDS_PER_PASS)
        sources = np.arange(64 * w0, min(n, 64 * w1))
        reached = np.zeros((n, w1 - w0), dtype=np.uint64)
        cols = sources // 64 - w0
        reached[sources, cols] = np.left_shift(np.uint64(1), (sources % 64).astype(np.uint64))
        frontier = reached.copy()
        level = 0
        while True:
            nxt = np.bitwise_or.reduceat(frontier[indices], starts, axis=0)
            new = nxt & ~reached
            if not new.any():
                break
            level += 1
            reached |= new
            frontier = new
            hit = np.bitwise_or.reduce(new, axis=0)
            bits = np.unpackbits(hit.view(np.uint8), bitorder="little")[: len(sources)]
            ecc[sources[bits.astype(bool)]] = level
        full = np.full(w1 - w0, np.iinfo(np.uint64).max, dtype=np.uint64)
        if 64 * w1 > n:
            full[-1] = np.uint64((1 << (n - 64 * (w1 - 1))) - 1)
        if not (reached == full).all():
            v, k = map(int, np.argwhere(reached != full)[0])
            raise IntegrityError("graph is disconnected", witness=(v, 64 * (w0 + k)))
    return ecc


def metrics(G: HurwitzGraph) -> GraphMetrics:
    """Exact eccentricities, radius and diameter of a connected graph."""
    if len(G) == 0:
        raise UsageError("empty graph")
    ecc = _eccentricities(G)
    center = int(np.argmin(ecc))
    far = int(np.argmax(ecc))
    dist = bfs_distances(G, far)
    pair = (far, dist.index(max(dist)))
    return GraphMetrics(tuple(int(e) for e in ecc), int(ecc[center]), int(ecc[far]), center, pair)


def hurwitz_orbit(word: ReducedWord, max_size: int | None = None) -> set[ReducedWord]:
    """Closure of ``{word}`` under all shifts and inverse shifts."""
    cap = budget(DEFAULT_CHAIN_BUDGET) if max_size is None else max_size
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(1, len(w)):
            for nxt in (sigma(i, w), sigma_prime(i, w)):
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise ResourceError(f"orbit exceeds the budget {cap}")
                    queue.append(nxt)
    return seen


def chamber_graph_nc(spec: CoxeterSpec, L: NCLattice | None = None) -> tuple[HurwitzGraph, list[int]]:
    """Chamber graph of the order complex, built from reduced words of ``c``.

    Chambers are the sets ``{t1, t1t2, ..., t1...t_{n-1}}``; two chambers are
    adjacent when they share a codimension-one face.  Also returns, for each
    chamber, the index of the corresponding vertex of the Hurwitz graph.
    """
    L = build_nc(spec) if L is None else L
    words = reduced_words_of(coxeter_element(spec))
    chambers = []
    for w in words:
        prefix = spec.identity()
        verts = []
        for t in w.letters[:-1]:
            prefix = prefix * t.element
            verts.append(prefix)
        chambers.append(frozenset(verts))

    def faces(ch):
        for v in ch:
            yield ch - {v}

    graph = graph_from_chains(spec, chambers, [str(w) for w in words], faces)
    H_index = {ch: k for k, ch in enumerate(maximal_chains(L))}
    bijection = [H_index[word_to_chain(L, w)] for w in words]
    return graph, bijection


def sigma_moves_are_edges(spec: CoxeterSpec, G: HurwitzGraph | None = None, L: NCLattice | None = None) -> bool:
    """Every non-trivial power of every shift moves a chain to a neighbour."""
    L = build_nc(spec) if L is None else L
    G = build_hurwitz_graph(spec, L) if G is None else G
    index = G.vertex_index()
    for w in reduced_words_of(coxeter_element(spec)):
        u = index[word_to_chain(L, w)]
        nb = set(G.adjacency[u])
        for i in range(1, len(w)):
            for move in (sigma, sigma_prime):
                v = move(i, w)
                for _ in range(len(L)):
                    if v == w:
                        break
                    if index[word_to_chain(L, v)] not in nb:
                        return False
                    v = move(i, v)
                else:
                    raise IntegrityError("shift has no finite order", witness=str(w))
    return True


def sigma_move_graph(G: HurwitzGraph, L: NCLattice) -> HurwitzGraph:
    """Diagnostic subgraph: edges only between chains related by one shift."""
    index = G.vertex_index()
    nbrs = [set() for _ in G.vertices]
    for u, chain in enumerate(G.vertices):
        w = chain_to_word(L, chain)
        for i in range(1, len(w)):
            v = index[word_to_chain(L, sigma(i, w))]
            if v != u:
                nbrs[u].add(v)
                nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(nb)) for nb in nbrs)
    return HurwitzGraph(G.spec, G.vertices, adjacency, G.labels)


def metrics_report(G: HurwitzGraph, m: GraphMetrics | None = None) -> dict:
    m = metrics(G) if m is None else m
    u, v = m.diameter_pair
    return {
        "schema_version": 1,
        "spec": str(G.spec),
        "vertex_count": len(G),
        "edge_count": G.edge_count,
        "radius": m.radius,
        "diameter": m.diameter,
        "witness_pairs": {
            "center": G.labels[m.center],
            "diameter": [G.labels[u], G.labels[v]],
        },
    }


def to_dot(G: HurwitzGraph, name: str = "H") -> str:
    lines = [f"graph {name} {{"]
    for label in G.labels:
        lines.append(f'  "{label}";')
    for u, v in G.edges():
        lines.append(f'  "{G.labels[u]}" -- "{G.labels[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True)
