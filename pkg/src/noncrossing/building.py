"""Subspaces of F_p^d, flags and frames, and the embedding of NC(W, c).

Type A of degree ``m`` embeds over ``F_2`` into ``F_2^(m-1)``; type B of
degree ``n`` embeds over ``F_3`` into ``F_3^n``.  An element is sent to the sum
of the lines of the letters of any of its reduced words.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product

from .coxeter import CoxeterSpec, Family, Reflection, reduced_words_of
from .errors import IntegrityError, ResourceError, UsageError, budget
from .hurwitz import HurwitzGraph, graph_from_chains
from .lattice import NCLattice, _as_reflection, boolean_from_word, boolean_sublattices, maximal_chains
from .lattice import chain_to_word

__all__ = [
    "Subspace",
    "Frame",
    "EmbeddingReport",
    "rref",
    "subspace_sum",
    "subspace_intersect",
    "field_of",
    "embed_reflection",
    "embed_word",
    "embed_element",
    "verify_embedding",
    "enumerate_subspaces",
    "gaussian_binomial",
    "full_flags",
    "frames",
    "building_chamber_graph",
    "flag_label",
    "building_dot",
    "check_b1_small",
    "nc_b1_witness",
    "nc_apartment_check",
    "words_agree",
]

DEFAULT_FIELD_BUDGET = 3**5  # largest p**d enumerated without an override


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``F_p^d`` stored by its reduced row-echelon basis."""

    p: int
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.p not in (2, 3):
            raise UsageError(f"unsupported prime {self.p}")
        basis = tuple(tuple(r) for r in self.basis)
        object.__setattr__(self, "basis", basis)
        last = -1
        for r, row in enumerate(basis):
            if len(row) != self.ambient_dim or any(not 0 <= x < self.p for x in row):
                raise UsageError("basis rows must be vectors over F_p of the ambient length")
            piv = next((k for k, x in enumerate(row) if x), None)
            if piv is None or piv <= last or row[piv] != 1:
                raise UsageError("basis is not in reduced row-echelon form")
            if any(other[piv] for s, other in enumerate(basis) if s != r):
                raise UsageError("basis is not in reduced row-echelon form")
            last = piv

    @classmethod
    def _trusted(cls, p, d, basis):
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "ambient_dim", d)
        object.__setattr__(obj, "basis", basis)
        return obj

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __le__(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return subspace_sum(self, other) == other

    def __str__(self):
        return ";".join("".join(map(str, row)) for row in self.basis) or "0"


def rref(rows, p: int, ambient_dim: int | None = None) -> Subspace:
    """Row space of ``rows`` over ``F_p`` in canonical form."""
    mat = [[x % p for x in row] for row in rows]
    d = ambient_dim if ambient_dim is not None else (len(mat[0]) if mat else 0)
    if any(len(row) != d for row in mat):
        raise UsageError("rows have inconsistent lengths")
    r = 0
    for col in range(d):
        piv = next((k for k in range(r, len(mat)) if mat[k][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][col], -1, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][col]:
                f = mat[k][col]
                mat[k] = [(x - f * y) % p for x, y in zip(mat[k], mat[r])]
        r += 1
    return Subspace._trusted(p, d, tuple(tuple(row) for row in mat[:r]))


def _check_ambient(a: Subspace, b: Subspace):
    if (a.p, a.ambient_dim) != (b.p, b.ambient_dim):
        raise UsageError(f"subspaces of F_{a.p}^{a.ambient_dim} and F_{b.p}^{b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return rref(a.basis + b.basis, a.p, a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: reduce ``[a | a]`` over ``[b | 0]``; rows with a zero left
    half carry a basis of the intersection on the right."""
    _check_ambient(a, b)
    d = a.ambient_dim
    rows = [row + row for row in a.basis] + [row + (0,) * d for row in b.basis]
    reduced = rref(rows, a.p, 2 * d)
    meet = [row[d:] for row in reduced.basis if not any(row[:d])]
    return rref(meet, a.p, d)


# -- the embedding ------------------------------------------------------------------

def field_of(spec: CoxeterSpec) -> tuple[int, int]:
    """``(p, d)``: ``(2, m - 1)`` for type A, ``(3, n)`` for type B."""
    if spec.family is Family.A:
        return 2, spec.degree - 1
    return 3, spec.degree


def _unit(d: int, i: int) -> list[int]:
    v = [0] * d
    v[i - 1] = 1
    return v


def embed_reflection(t: Reflection) -> Subspace:
    spec = t.spec
    p, d = field_of(spec)
    v = _unit(d, t.i)
    if spec.family is Family.A:
        if t.j < spec.degree:
            v[t.j - 1] = 1
    elif not t.is_flip:
        v[abs(t.j) - 1] = 1 if t.j < 0 else p - 1
    return rref([v], p, d)


def embed_word(spec: CoxeterSpec, letters) -> Subspace:
    """Sum of the lines of the letters."""
    p, d = field_of(spec)
    rows = [row for t in letters for row in embed_reflection(t).basis]
    return rref(rows, p, d)


def _word_below(L: NCLattice, x: int) -> list[Reflection]:
    """Letters of a saturated chain from the bottom up to ``x``."""
    chain = [L.bottom]
    while chain[-1] != x:
        chain.append(next(y for y in L.covers[chain[-1]] if L.leq(y, x)))
    letters = []
    for a, b in zip(chain, chain[1:]):
        q = L.elements[a].inverse() * L.elements[b]
        letters.append(_as_reflection(q))
    return letters


def embed_element(L: NCLattice, x: int) -> Subspace:
    return embed_word(L.spec, _word_below(L, x))


@dataclass(frozen=True)
class EmbeddingReport:
    spec: str
    p: int
    ambient_dim: int
    injective: bool
    rank_preserving: bool
    order_preserving: bool
    join_compatible: bool  # f(x ∨ t) = f(x) + f(t) along every cover
    image_size: int
    total_subspaces: int

    @property
    def surjective(self) -> bool:
        return self.image_size == self.total_subspaces

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "p": self.p,
            "ambient_dim": self.ambient_dim,
            "injective": self.injective,
            "rank_preserving": self.rank_preserving,
            "order_preserving": self.order_preserving,
            "join_compatible": self.join_compatible,
            "image_size": self.image_size,
            "total_subspaces": self.total_subspaces,
        }


def verify_embedding(L: NCLattice) -> EmbeddingReport:
    """Check that ``embed_element`` is injective, rank and order preserving,
    compatible with joins of reflections, and not onto the subspace lattice.

    Raises :class:`IntegrityError` with a witness on the first failure.
    """
    p, d = field_of(L.spec)
    images = [embed_element(L, x) for x in range(len(L))]
    seen = {}
    for x, U in enumerate(images):
        if U in seen:
            raise IntegrityError("embedding is not injective", witness=(seen[U], x))
        seen[U] = x
        if U.dim != L.rank_of[x]:
            raise IntegrityError("embedding changes rank", witness=(x, U.dim))
    for x in range(len(L)):
        for y in range(len(L)):
            if L.leq(x, y) and not images[x] <= images[y]:
                raise IntegrityError("embedding is not order preserving", witness=(x, y))
    for x, ups in enumerate(L.covers):
        for y in ups:
            t = _as_reflection(L.elements[x].inverse() * L.elements[y])
            z = L.index[t.element]
            if images[int(L.join_table[x, z])] != subspace_sum(images[x], images[z]):
                raise IntegrityError("image of a join differs from the sum", witness=(x, z))
    total = sum(1 for _ in enumerate_subspaces(p, d))
    if len(seen) >= total:
        raise IntegrityError(
            f"embedding hits all {total} subspaces of F_{p}^{d}", witness=(len(seen), total)
        )
    return EmbeddingReport(str(L.spec), p, d, True, True, True, True, len(seen), total)


# -- the building of F_p^d ------------------------------------------------------------

def enumerate_subspaces(p: int, d: int, dims=None, max_size: int | None = None) -> list[Subspace]:
    """All subspaces (or those of the given dimensions), built directly as
    RREF matrices: choose pivot columns, then fill the free entries."""
    cap = budget(DEFAULT_FIELD_BUDGET) if max_size is None else max_size
    if p**d > cap:
        raise ResourceError(f"F_{p}^{d} exceeds the enumeration budget {cap}")
    dims = range(d + 1) if dims is None else dims
    out = []
    for k in dims:
        for pivots in combinations(range(d), k):
            free = [(r, c) for r, piv in enumerate(pivots) for c in range(piv + 1, d) if c not in pivots]
            for values in product(range(p), repeat=len(free)):
                rows = [[0] * d for _ in range(k)]
                for r, piv in enumerate(pivots):
                    rows[r][piv] = 1
                for (r, c), v in zip(free, values):
                    rows[r][c] = v
                out.append(Subspace._trusted(p, d, tuple(tuple(row) for row in rows)))
    return out


def gaussian_binomial(d: int, k: int, p: int) -> int:
    num = den = 1
    for i in range(k):
        num *= p ** (d - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def full_flags(p: int, d: int) -> list[tuple[Subspace, ...]]:
    """Chains ``U_1 < ... < U_(d-1)`` with ``dim U_i = i``."""
    by_dim = {k: enumerate_subspaces(p, d, [k]) for k in range(1, d)}
    flags = [()]
    for k in range(1, d):
        flags = [f + (U,) for f in flags for U in by_dim[k] if not f or f[-1] <= U]
    return flags


def flag_label(flag) -> str:
    return "|".join(str(U) for U in flag)


def building_chamber_graph(p: int, d: int) -> HurwitzGraph:
    """Full flags, adjacent when they differ in exactly one subspace."""
    flags = full_flags(p, d)

    def faces(f):
        for k in range(len(f)):
            yield (k, f[:k] + f[k + 1 :])

    return graph_from_chains(f"L(F_{p}^{d})", flags, [flag_label(f) for f in flags], faces)


def building_dot(G: HurwitzGraph, name: str = "Building") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  "{label}";' for label in G.labels]
    lines += [f'  "{G.labels[u]}" -- "{G.labels[v]}";' for u, v in G.edges()]
    return "\n".join(lines + ["}"]) + "\n"


@dataclass(frozen=True)
class Frame:
    """``d`` lines whose sum is the ambient space."""

    lines: frozenset

    def __post_init__(self):
        lines = frozenset(self.lines)
        object.__setattr__(self, "lines", lines)
        if not lines:
            raise UsageError("empty frame")
        first = next(iter(lines))
        total = rref([row for U in lines for row in U.basis], first.p, first.ambient_dim)
        if any(U.dim != 1 for U in lines) or total.dim != first.ambient_dim or len(lines) != total.dim:
            raise UsageError("lines do not form a direct sum decomposition")

    def apartment(self) -> frozenset:
        """All sums of subsets of the lines."""
        lines = list(self.lines)
        first = lines[0]
        out = set()
        for k in range(len(lines) + 1):
            for sub in combinations(lines, k):
                out.add(rref([row for U in sub for row in U.basis], first.p, first.ambient_dim))
        return frozenset(out)


def frames(p: int, d: int) -> list[Frame]:
    lines = enumerate_subspaces(p, d, [1])
    return [
        Frame(frozenset(sub))
        for sub in combinations(lines, d)
        if rref([U.basis[0] for U in sub], p, d).dim == d
    ]


def check_b1_small(p: int, d: int = 3) -> bool:
    """Every two chambers of the building lie in a common apartment.

    Simplices are faces of chambers, so chamber pairs suffice.
    """
    if d != 3 or p not in (2, 3):
        raise UsageError("the exhaustive apartment check runs for d = 3, p in {2, 3}")
    flags = full_flags(p, d)
    index = {f: k for k, f in enumerate(flags)}
    covered = set()
    for F in frames(p, d):
        members = F.apartment()
        inside = [index[f] for f in flags if all(U in members for U in f)]
        covered.update((a, b) for a in inside for b in inside)
    return len(covered) == len(flags) ** 2


def nc_b1_witness(L: NCLattice):
    """Two vertices of the order complex (proper elements) lying in no common
    apartment, or ``None``.  Apartments are the Boolean sublattices of ``L``."""
    proper = [x for x in range(len(L)) if x not in (L.bottom, L.top)]
    together = set()
    for B in boolean_sublattices(L):
        members = [x for x in proper if x in B.members]
        together.update((a, b) for a in members for b in members)
    for a, b in combinations(proper, 2):
        if (a, b) not in together:
            return L.elements[a], L.elements[b]
    return None


def nc_apartment_check(L: NCLattice) -> bool:
    """Each chamber lies in the apartment of its own word, and the lines of
    every word's letters form a frame."""
    p, d = field_of(L.spec)
    for chain in maximal_chains(L):
        word = chain_to_word(L, chain)
        if not set(chain) <= boolean_from_word(L, word).members:
            return False
        lines = [embed_reflection(t) for t in word.letters]
        if rref([U.basis[0] for U in lines], p, d).dim != d:
            return False
    return True


def words_agree(spec: CoxeterSpec, L: NCLattice) -> bool:
    """All reduced words of every element give the same subspace."""
    for w in L.elements:
        images = {embed_word(spec, word.letters) for word in reduced_words_of(w)}
        if len(images) != 1:
            return False
    return True


def dumps(report: EmbeddingReport) -> str:
    return json.dumps(report.to_json(), sort_keys=True)
