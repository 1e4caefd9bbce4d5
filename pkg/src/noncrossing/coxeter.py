"""Group arithmetic for Coxeter groups of types A and B.

Type ``A`` of degree ``m`` is the symmetric group on ``1..m`` (Coxeter rank
``m - 1``).  Type ``B`` of degree ``n`` is the group of signed permutations of
``±1..±n`` (Coxeter rank ``n``).  An element is stored by its images of
``1..degree``; for type B the images of negative letters follow from
``w(-i) = -w(i)``.

Products apply the right factor first, so ``compose(a, b)(x) == a(b(x))`` and
a word ``t1 t2 ... tk`` acts with ``tk`` first.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import ResourceError, UsageError, budget

__all__ = [
    "Family",
    "CoxeterSpec",
    "Element",
    "Reflection",
    "Root",
    "ReducedWord",
    "compose",
    "all_reflections",
    "coxeter_element",
    "root_of",
    "reflection_length",
    "absolute_leq",
    "is_reduced",
    "moved_space_basis",
    "reduced_words_of",
    "count_reduced_words",
    "rational_rank",
    "parse_element",
    "parse_word",
]

DEFAULT_WORD_BUDGET = 10**6


class Family(str, enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class CoxeterSpec:
    family: Family
    degree: int

    def __post_init__(self):
        try:
            object.__setattr__(self, "family", Family(self.family))
        except ValueError:
            raise UsageError(f"unknown family {self.family!r}") from None
        if not isinstance(self.degree, int) or self.degree < 2:
            raise UsageError(f"degree must be an integer >= 2, got {self.degree!r}")

    @classmethod
    def A(cls, m: int) -> "CoxeterSpec":
        return cls(Family.A, m)

    @classmethod
    def B(cls, n: int) -> "CoxeterSpec":
        return cls(Family.B, n)

    @property
    def signed(self) -> bool:
        return self.family is Family.B

    def rank(self) -> int:
        return self.degree - 1 if self.family is Family.A else self.degree

    def order(self) -> int:
        n = self.degree
        fact = 1
        for k in range(2, n + 1):
            fact *= k
        return fact * (2**n if self.signed else 1)

    def identity(self) -> "Element":
        return Element(self, tuple(range(1, self.degree + 1)))

    def elements(self) -> list["Element"]:
        """All group elements, sorted lexicographically by images."""
        n = self.degree
        out = []
        for perm in itertools.permutations(range(1, n + 1)):
            if not self.signed:
                out.append(Element._trusted(self, perm))
                continue
            for signs in itertools.product((-1, 1), repeat=n):
                out.append(Element._trusted(self, tuple(s * x for s, x in zip(signs, perm))))
        if self.signed:
            out.sort(key=lambda e: e.images)
        return out

    def __str__(self):
        return f"{self.family.value}{self.degree}"


def _check_same(a: CoxeterSpec, b: CoxeterSpec):
    if a != b:
        raise UsageError(f"group mismatch: {a} vs {b}")


@dataclass(frozen=True)
class Element:
    spec: CoxeterSpec
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = self.spec.degree
        if len(images) != n:
            raise UsageError(f"expected {n} images, got {len(images)}")
        if self.spec.signed:
            ok = sorted(abs(x) for x in images) == list(range(1, n + 1))
        else:
            ok = sorted(images) == list(range(1, n + 1))
        if not ok:
            raise UsageError(f"{images} is not a valid permutation for {self.spec}")

    @classmethod
    def _trusted(cls, spec, images):
        obj = object.__new__(cls)
        object.__setattr__(obj, "spec", spec)
        object.__setattr__(obj, "images", images)
        return obj

    def __call__(self, x: int) -> int:
        if x < 0:
            return -self.images[-x - 1]
        return self.images[x - 1]

    def __mul__(self, other: "Element") -> "Element":
        return compose(self, other)

    def inverse(self) -> "Element":
        inv = [0] * self.spec.degree
        for i, x in enumerate(self.images, start=1):
            if x > 0:
                inv[x - 1] = i
            else:
                inv[-x - 1] = -i
        return Element._trusted(self.spec, tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def matrix(self) -> list[list[int]]:
        """The (signed) permutation matrix: column j carries the image of e_j."""
        n = self.spec.degree
        rows = [[0] * n for _ in range(n)]
        for j, x in enumerate(self.images):
            rows[abs(x) - 1][j] = 1 if x > 0 else -1
        return rows

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles of the action on ``1..m`` (type A) or ``±1..±n`` (type B).

        Each cycle starts at its smallest positive entry, or at the entry of
        least absolute value when it contains only negative letters.
        """
        n = self.spec.degree
        letters = list(range(1, n + 1))
        if self.spec.signed:
            letters += [-i for i in range(1, n + 1)]
        seen = set()
        out = []
        for x in letters:
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self(y)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({self.spec}, {self.images})"


def compose(a: Element, b: Element) -> Element:
    """The product ``a·b``; ``b`` acts first."""
    _check_same(a.spec, b.spec)
    return Element._trusted(a.spec, tuple(a(x) for x in b.images))


@dataclass(frozen=True)
class Reflection:
    """A reflection, named by one pair of letters it swaps.

    Type A: the transposition ``(i, j)`` with ``i < j``.  Type B: ``j == -i``
    is the sign change ``[i]``; otherwise ``1 <= i < |j|`` and the reflection
    is ``<<i, j>> = (i, j)(-i, -j)``.
    """

    spec: CoxeterSpec
    i: int
    j: int

    def __post_init__(self):
        i, j, n = self.i, self.j, self.spec.degree
        if self.spec.signed:
            ok = (j == -i and 1 <= i <= n) or (1 <= i < abs(j) <= n)
        else:
            ok = 1 <= i < j <= n
        if not ok:
            raise UsageError(f"invalid reflection ({i}, {j}) for {self.spec}")

    @classmethod
    def through(cls, spec: CoxeterSpec, a: int, b: int) -> "Reflection":
        """The reflection exchanging letters ``a`` and ``b``."""
        if a == b:
            raise UsageError("a reflection needs two distinct letters")
        if not spec.signed:
            return cls(spec, min(a, b), max(a, b))
        if a == -b:
            return cls(spec, abs(a), -abs(a))
        if abs(a) > abs(b):
            a, b = b, a
        if a < 0:
            a, b = -a, -b
        return cls(spec, a, b)

    @property
    def is_flip(self) -> bool:
        return self.j == -self.i

    @cached_property
    def element(self) -> Element:
        n = self.spec.degree
        images = list(range(1, n + 1))
        i, j = self.i, self.j
        if self.is_flip:
            images[i - 1] = -i
        else:
            images[i - 1] = j
            if j > 0:
                images[j - 1] = i
            else:
                images[-j - 1] = -i
        return Element._trusted(self.spec, tuple(images))

    def conjugate(self, w: Element) -> "Reflection":
        """``w · self · w⁻¹``."""
        return Reflection.through(self.spec, w(self.i), w(self.j))

    def commutes_with(self, other: "Reflection") -> bool:
        return compose(self.element, other.element) == compose(other.element, self.element)

    @property
    def sort_key(self) -> tuple:
        return (self.i, abs(self.j), self.j < 0)

    def __str__(self):
        if not self.spec.signed:
            return f"({self.i},{self.j})"
        if self.is_flip:
            return f"[{self.i}]"
        return f"<<{self.i},{self.j}>>"

    def __repr__(self):
        return f"Reflection({self.spec}, {self})"


@dataclass(frozen=True)
class Root:
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        nz = sorted(abs(c) for c in coords if c)
        if nz not in ([1], [1, 1]):
            raise UsageError(f"{coords} is not a root of type A or B")


def all_reflections(spec: CoxeterSpec) -> list[Reflection]:
    n = spec.degree
    if not spec.signed:
        return [Reflection(spec, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = []
    for i in range(1, n + 1):
        out.append(Reflection(spec, i, -i))
        for j in range(i + 1, n + 1):
            out.append(Reflection(spec, i, j))
            out.append(Reflection(spec, i, -j))
    return sorted(out, key=lambda t: t.sort_key)


def coxeter_element(spec: CoxeterSpec) -> Element:
    """``(1,2,...,m)`` in type A; ``[1,...,n]`` (``n ↦ -1``) in type B."""
    n = spec.degree
    images = list(range(2, n + 1)) + [-1 if spec.signed else 1]
    return Element(spec, tuple(images))


def root_of(t: Reflection) -> Root:
    coords = [0] * t.spec.degree
    coords[t.i - 1] = 1
    if not t.is_flip:
        coords[abs(t.j) - 1] = -1 if t.j > 0 else 1
    return Root(tuple(coords))


def rational_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, by fraction-free integer elimination."""
    mat = []
    for row in rows:
        if all(isinstance(x, int) for x in row):
            mat.append(list(row))
            continue
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        mat.append([int(x * den) for x in fr])
    mat = [row for row in mat if any(row)]
    rank = 0
    while mat:
        prow = mat.pop()
        col = next(k for k, a in enumerate(prow) if a)
        p = prow[col]
        rest = []
        for row in mat:
            f = row[col]
            if f:
                row = [p * a - f * b for a, b in zip(row, prow)]
                g = 0
                for a in row:
                    g = gcd(g, a)
                if g == 0:
                    continue
                if g > 1:
                    row = [a // g for a in row]
            rest.append(row)
        mat = rest
        rank += 1
    return rank


def reflection_length(w: Element) -> int:
    """Rank of ``M - I`` over the rationals, ``M`` the (signed) permutation matrix."""
    m = w.matrix()
    for k in range(len(m)):
        m[k][k] -= 1
    return rational_rank(m)


def absolute_leq(v: Element, w: Element) -> bool:
    _check_same(v.spec, w.spec)
    return reflection_length(w) == reflection_length(v) + reflection_length(compose(v.inverse(), w))


def _letters(word) -> tuple[Reflection, ...]:
    return tuple(word.letters) if isinstance(word, ReducedWord) else tuple(word)


def is_reduced(word: Iterable[Reflection]) -> bool:
    """Carter's criterion: the letters' roots are linearly independent."""
    letters = _letters(word)
    if not letters:
        return True
    spec = letters[0].spec
    for t in letters:
        _check_same(spec, t.spec)
    return rational_rank([root_of(t).coords for t in letters]) == len(letters)


def _product(spec: CoxeterSpec, letters: Iterable[Reflection]) -> Element:
    w = spec.identity()
    for t in letters:
        w = compose(w, t.element)
    return w


@dataclass(frozen=True)
class ReducedWord:
    spec: CoxeterSpec
    letters: tuple[Reflection, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for t in letters:
            _check_same(self.spec, t.spec)
        if not is_reduced(letters):
            raise UsageError(f"word {format_word(letters)} is not reduced")

    @classmethod
    def _trusted(cls, spec, letters):
        obj = object.__new__(cls)
        object.__setattr__(obj, "spec", spec)
        object.__setattr__(obj, "letters", tuple(letters))
        return obj

    def product(self) -> Element:
        return _product(self.spec, self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    @property
    def sort_key(self) -> tuple:
        return tuple(t.sort_key for t in self.letters)

    def __str__(self):
        return format_word(self.letters)

    def __repr__(self):
        return f"ReducedWord({self.spec}, {self})"


def moved_space_basis(word) -> list[Root]:
    letters = _letters(word)
    if not is_reduced(letters):
        raise UsageError(f"word {format_word(letters)} is not reduced")
    return [root_of(t) for t in letters]


def _descent_table(w: Element, refl: list[Reflection]):
    """Map each element u below ``w`` to the reflections t with ℓ(t·u) = ℓ(u) - 1."""
    table = {}
    stack = [w]
    while stack:
        u = stack.pop()
        if u in table:
            continue
        lu = reflection_length(u)
        firsts = []
        if lu:
            for t in refl:
                v = compose(t.element, u)
                if reflection_length(v) == lu - 1:
                    firsts.append((t, v))
                    stack.append(v)
        table[u] = firsts
    return table


def count_reduced_words(w: Element) -> int:
    table = _descent_table(w, all_reflections(w.spec))
    counts = {}

    def count(u):
        if u not in counts:
            counts[u] = 1 if not table[u] else sum(count(v) for _, v in table[u])
        return counts[u]

    return count(w)


def reduced_words_of(w: Element, max_words: int | None = None) -> list[ReducedWord]:
    """All T-reduced expressions of ``w``, sorted lexicographically by letters.

    Words are generated by peeling off admissible first letters.  Raises
    :class:`ResourceError` if the count exceeds ``max_words``.
    """
    cap = budget(DEFAULT_WORD_BUDGET) if max_words is None else max_words
    refl = all_reflections(w.spec)
    table = _descent_table(w, refl)
    total = count_reduced_words(w)
    if total > cap:
        raise ResourceError(f"{total} reduced words of {w} exceed the budget {cap}")
    memo: dict[Element, list[tuple[Reflection, ...]]] = {}

    def words(u):
        if u not in memo:
            if not table[u]:
                memo[u] = [()]
            else:
                memo[u] = [(t,) + rest for t, v in table[u] for rest in words(v)]
        return memo[u]

    spec = w.spec
    return [ReducedWord._trusted(spec, letters) for letters in words(w)]


# -- text forms ---------------------------------------------------------------

def format_element(w: Element) -> str:
    if w.is_identity():
        return "id"
    if not w.spec.signed:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in w.cycles())
    parts = []
    done = set()
    for cyc in w.cycles():
        if cyc[0] in done:
            continue
        done.update(cyc)
        neg = tuple(-x for x in cyc)
        if set(neg) == set(cyc):
            parts.append("[" + ",".join(map(str, cyc[: len(cyc) // 2])) + "]")
        else:
            done.update(neg)
            # start at the letter of least absolute value, made positive
            start = min(range(len(cyc)), key=lambda k: abs(cyc[k]))
            rot = cyc[start:] + cyc[:start]
            if rot[0] < 0:
                rot = tuple(-x for x in rot)
            parts.append("<<" + ",".join(map(str, rot)) + ">>")
    return "".join(parts)


def format_word(letters: Iterable[Reflection]) -> str:
    text = "".join(str(t) for t in letters)
    return text or "e"


_TOKEN = re.compile(r"\s*(<<[^>]*>>|\[[^\]]*\]|\([^)]*\))\s*")


def _tokens(text: str) -> list[tuple[str, list[int]]]:
    text = text.strip()
    if text in ("", "id", "e"):
        return []
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"cannot parse {text!r} at position {pos}")
        tok = m.group(1)
        if tok.startswith("<<"):
            kind, body = "pair", tok[2:-2]
        elif tok.startswith("["):
            kind, body = "zero", tok[1:-1]
        else:
            kind, body = "cycle", tok[1:-1]
        try:
            nums = [int(x) for x in body.split(",")]
        except ValueError:
            raise UsageError(f"bad token {tok!r}") from None
        out.append((kind, nums))
        pos = m.end()
    return out


def _cycle_element(spec: CoxeterSpec, kind: str, nums: list[int]) -> Element:
    if kind == "cycle" and spec.signed:
        raise UsageError("type B elements use <<...>> and [...] notation")
    if kind != "cycle" and not spec.signed:
        raise UsageError("type A elements use (...) notation")
    if len(set(abs(x) for x in nums)) != len(nums) or not all(1 <= abs(x) <= spec.degree for x in nums):
        raise UsageError(f"bad cycle {nums} for {spec}")
    cycles = [nums]
    if kind == "pair":
        cycles.append([-x for x in nums])
    elif kind == "zero":
        cycles = [nums + [-x for x in nums]]
    mapping = {}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            mapping[a] = b
    images = []
    for i in range(1, spec.degree + 1):
        if i in mapping:
            images.append(mapping[i])
        elif -i in mapping:
            images.append(-mapping[-i])
        else:
            images.append(i)
    return Element(spec, tuple(images))


def parse_element(spec: CoxeterSpec, text: str) -> Element:
    """Parse cycle notation: ``(1,2,3)(4,5)``, ``<<1,-2>>[3]``, ``id``."""
    w = spec.identity()
    for kind, nums in _tokens(text):
        w = compose(w, _cycle_element(spec, kind, nums))
    return w


def parse_word(spec: CoxeterSpec, text: str) -> ReducedWord:
    """Parse a reduced word such as ``(1,2)(2,3)`` or ``[1]<<2,3>>``."""
    letters = []
    for kind, nums in _tokens(text):
        if kind == "zero" and len(nums) == 1:
            letters.append(Reflection(spec, abs(nums[0]), -abs(nums[0])))
        elif len(nums) == 2 and kind in ("pair", "cycle"):
            letters.append(Reflection.through(spec, nums[0], nums[1]))
        else:
            raise UsageError(f"token {kind}{nums} is not a reflection")
        if kind == "cycle" and spec.signed or kind != "cycle" and not spec.signed:
            raise UsageError(f"notation does not match {spec}")
    return ReducedWord(spec, tuple(letters))
