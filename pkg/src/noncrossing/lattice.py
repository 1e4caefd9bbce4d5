"""The interval ``[id, c]`` in absolute order as an explicit graded lattice."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

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
    reflection_length,
)
from .errors import IntegrityError, ResourceError, UsageError, budget

__all__ = [
    "NCLattice",
    "MaximalChain",
    "BooleanSublattice",
    "build_nc",
    "join",
    "meet",
    "maximal_chains",
    "word_to_chain",
    "chain_to_word",
    "boolean_from_word",
    "boolean_sublattices",
    "left_modular_elements",
    "is_left_modular",
    "is_supersolvable",
    "DEGREE_CAPS",
]

DEGREE_CAPS = {Family.A: 7, Family.B: 5}


MaximalChain = tuple  # element indices bottom = w_0 < w_1 < ... < w_rank = top


@dataclass(frozen=True)
class BooleanSublattice:
    generators: frozenset  # of Reflection
    members: frozenset  # of element indices


@dataclass(frozen=True, eq=False)
class NCLattice:
    """``NC(W, c)`` with precomputed order, join and meet tables.

    ``covers[x]`` lists the upper covers of ``x``.  ``join_table`` and
    ``meet_table`` are ``N x N`` integer arrays of element indices.
    """

    spec: CoxeterSpec
    elements: tuple[Element, ...]
    rank_of: tuple[int, ...]
    covers: tuple[tuple[int, ...], ...]
    top: int
    bottom: int
    index: dict
    up_sets: tuple[int, ...]  # bitmask of indices y with x <= y
    join_table: np.ndarray
    meet_table: np.ndarray

    def __len__(self):
        return len(self.elements)

    @property
    def height(self) -> int:
        return self.rank_of[self.top]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up_sets[x] >> y & 1)

    def index_of(self, w: Element) -> int:
        try:
            return self.index[w]
        except KeyError:
            raise UsageError(f"{w} is not below the Coxeter element") from None

    def reflection_indices(self) -> list[int]:
        return [x for x, r in enumerate(self.rank_of) if r == 1]

    def comparable_pairs(self) -> np.ndarray:
        """Array of all pairs ``(y, z)`` with ``y <= z``."""
        pairs = [(y, z) for y in range(len(self)) for z in _bits(self.up_sets[y])]
        return np.array(pairs, dtype=np.int64).reshape(-1, 2)

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "spec": str(self.spec),
            "elements": [list(w.images) for w in self.elements],
            "labels": [str(w) for w in self.elements],
            "rank": list(self.rank_of),
            "covers": [[x, y] for x, ups in enumerate(self.covers) for y in ups],
            "bottom": self.bottom,
            "top": self.top,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _bits(mask: int):
    k = 0
    while mask:
        if mask & 1:
            yield k
        mask >>= 1
        k += 1


def build_nc(spec: CoxeterSpec, max_degree: int | None = None) -> NCLattice:
    """Enumerate ``W``, keep ``π <= c``, and build covers, join and meet."""
    cap = budget(DEGREE_CAPS[spec.family]) if max_degree is None else max_degree
    if spec.degree > cap:
        raise ResourceError(f"{spec} exceeds the degree cap {cap}")
    c = coxeter_element(spec)
    lc = reflection_length(c)
    elements = []
    ranks = []
    for w in spec.elements():
        lw = reflection_length(w)
        if lw + reflection_length(compose(w.inverse(), c)) == lc:
            elements.append(w)
            ranks.append(lw)
    index = {w: k for k, w in enumerate(elements)}
    refl = all_reflections(spec)
    covers = []
    for x, w in enumerate(elements):
        ups = set()
        for t in refl:
            y = index.get(compose(w, t.element))
            if y is not None and ranks[y] == ranks[x] + 1:
                ups.add(y)
        covers.append(tuple(sorted(ups)))

    n = len(elements)
    order = sorted(range(n), key=lambda x: -ranks[x])
    up = [0] * n
    for x in order:
        mask = 1 << x
        for y in covers[x]:
            mask |= up[y]
        up[x] = mask
    down = [0] * n
    for x in range(n):
        for y in _bits(up[x]):
            down[y] |= 1 << x

    join_table = _bound_table(up, "join")
    meet_table = _bound_table(down, "meet")
    return NCLattice(
        spec=spec,
        elements=tuple(elements),
        rank_of=tuple(ranks),
        covers=tuple(covers),
        top=index[c],
        bottom=index[spec.identity()],
        index=index,
        up_sets=tuple(up),
        join_table=join_table,
        meet_table=meet_table,
    )


def _bound_table(cones: list[int], what: str) -> np.ndarray:
    # x∨y is the unique z whose up-set equals up(x) ∩ up(y); dually for meets.
    by_cone = {mask: z for z, mask in enumerate(cones)}
    n = len(cones)
    table = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            z = by_cone.get(cones[x] & cones[y])
            if z is None:
                raise IntegrityError(f"no unique {what} of elements {x} and {y}", witness=(x, y))
            table[x, y] = table[y, x] = z
    return table


def join(L: NCLattice, x: int, y: int) -> int:
    return int(L.join_table[x, y])


def meet(L: NCLattice, x: int, y: int) -> int:
    return int(L.meet_table[x, y])


def maximal_chains(L: NCLattice) -> list[MaximalChain]:
    """All maximal chains, in lexicographic order of their index tuples."""
    out = []

    def walk(chain):
        last = chain[-1]
        if last == L.top:
            out.append(tuple(chain))
            return
        for y in L.covers[last]:
            chain.append(y)
            walk(chain)
            chain.pop()

    walk([L.bottom])
    return out


def _word_for_c(L: NCLattice, word) -> tuple[Reflection, ...]:
    letters = tuple(word.letters) if isinstance(word, ReducedWord) else tuple(word)
    if len(letters) != L.height:
        raise UsageError(f"a word for c has {L.height} letters, got {len(letters)}")
    return letters


def word_to_chain(L: NCLattice, word) -> MaximalChain:
    """``id < t1 < t1t2 < ... < t1...tn``, as element indices."""
    letters = _word_for_c(L, word)
    w = L.spec.identity()
    chain = [L.bottom]
    for t in letters:
        w = compose(w, t.element)
        x = L.index.get(w)
        if x is None or L.rank_of[x] != len(chain):
            raise UsageError("word is not a reduced word for the Coxeter element")
        chain.append(x)
    if chain[-1] != L.top:
        raise UsageError("word does not multiply to the Coxeter element")
    return tuple(chain)


def chain_to_word(L: NCLattice, chain: MaximalChain) -> ReducedWord:
    """Recover the letters ``w_{i-1}⁻¹ w_i`` of a maximal chain."""
    if len(chain) != L.height + 1 or chain[0] != L.bottom or chain[-1] != L.top:
        raise UsageError("not a maximal chain")
    letters = []
    for a, b in zip(chain, chain[1:]):
        if b not in L.covers[a]:
            raise UsageError(f"{a} is not covered by {b}")
        q = compose(L.elements[a].inverse(), L.elements[b])
        letters.append(_as_reflection(q))
    return ReducedWord._trusted(L.spec, tuple(letters))


def _as_reflection(w: Element) -> Reflection:
    moved = [x for x in range(1, w.spec.degree + 1) if w(x) != x]
    if not moved:
        raise IntegrityError(f"{w} is not a reflection")
    t = Reflection.through(w.spec, moved[0], w(moved[0]))
    if t.element != w:
        raise IntegrityError(f"{w} is not a reflection")
    return t


def boolean_from_word(L: NCLattice, word) -> BooleanSublattice:
    """The sublattice of all joins of subsets of the letters of ``word``."""
    letters = _word_for_c(L, word)
    word_to_chain(L, letters)
    atoms = [L.index[t.element] for t in letters]
    members = set()
    for k in range(len(atoms) + 1):
        for subset in combinations(atoms, k):
            x = L.bottom
            for a in subset:
                x = int(L.join_table[x, a])
            members.add(x)
    return BooleanSublattice(frozenset(letters), frozenset(members))


def _subset_joins(L: NCLattice, atoms: list[int]) -> list[int] | None:
    """Joins of all subsets of ``atoms`` (bit ``k`` selects ``atoms[k]``), or
    ``None`` as soon as some join has rank different from the subset size."""
    joins = [L.bottom]
    for mask in range(1, 1 << len(atoms)):
        k = mask.bit_length() - 1
        x = int(L.join_table[joins[mask ^ (1 << k)], atoms[k]])
        if L.rank_of[x] != mask.bit_count():
            return None
        joins.append(x)
    return joins


def boolean_sublattices(L: NCLattice) -> list[BooleanSublattice]:
    """Every Boolean sublattice of ``L`` with ``height`` atoms.

    A set of atoms qualifies when the join of each ``k``-subset has rank ``k``
    (which forces all joins to be distinct) and meets of joins are joins of
    intersections.  Output is ordered by the sorted atom lists.
    """
    n = L.height
    atoms = sorted(L.reflection_indices(), key=lambda x: L.elements[x].images)
    out = []
    for chosen in combinations(atoms, n):
        joins = _subset_joins(L, list(chosen))
        if joins is None:
            continue
        if any(
            int(L.meet_table[joins[I], joins[J]]) != joins[I & J]
            for I in range(1, len(joins))
            for J in range(I + 1, len(joins))
        ):
            continue
        gens = frozenset(_as_reflection(L.elements[a]) for a in chosen)
        out.append(BooleanSublattice(gens, frozenset(joins)))
    out.sort(key=lambda B: sorted(t.sort_key for t in B.generators))
    return out


def left_modular_elements(L: NCLattice) -> list[bool]:
    """Flags ``x`` with ``(y ∨ x) ∧ z == y ∨ (x ∧ z)`` for all ``y <= z``."""
    pairs = L.comparable_pairs()
    ys, zs = pairs[:, 0], pairs[:, 1]
    J, M = L.join_table, L.meet_table
    out = []
    for x in range(len(L)):
        lhs = M[J[ys, x], zs]
        rhs = J[ys, M[x, zs]]
        out.append(bool(np.array_equal(lhs, rhs)))
    return out


def is_left_modular(L: NCLattice, x: int) -> bool:
    pairs = L.comparable_pairs()
    ys, zs = pairs[:, 0], pairs[:, 1]
    J, M = L.join_table, L.meet_table
    return bool(np.array_equal(M[J[ys, x], zs], J[ys, M[x, zs]]))


def is_supersolvable(L: NCLattice) -> tuple[bool, MaximalChain | None]:
    """Search for a maximal chain of left modular elements.

    Returns ``(True, chain)`` for the lexicographically least such chain, or
    ``(False, None)``.
    """
    lm = left_modular_elements(L)

    def walk(chain):
        last = chain[-1]
        if last == L.top:
            return tuple(chain)
        for y in L.covers[last]:
            if lm[y]:
                found = walk(chain + [y])
                if found:
                    return found
        return None

    if not lm[L.bottom]:
        return False, None
    chain = walk([L.bottom])
    return (chain is not None), chain


def leq_direct(L: NCLattice, x: int, y: int) -> bool:
    """Absolute order straight from reflection lengths (no tables)."""
    return absolute_leq(L.elements[x], L.elements[y])
