"""
Permutations in one-line notation, the Bruhat covering relation, descent
subwords, flattening, and the partition attached to a Grassmannian
permutation.

Positions and values are 1-indexed everywhere in the public API.

>>> w = Permutation.parse("314972658")
>>> descents(w)
[1, 4, 5, 7]
>>> descent_subword(w, 5)[1]
(1, 4, 7, 2, 6, 8)
>>> flatten([1, 4, 7, 2, 6, 8])
Permutation(word=(1, 3, 5, 2, 4, 6))
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

__all__ = [
    "PermutationError", "Permutation", "PermLike", "InnerCorner",
    "RectPartition", "AntiDiagonal", "Mixed", "FrakI",
    "as_word", "length", "descents", "is_cover", "covers", "flatten",
    "descent_subword", "grassmannian_descent", "grassmannian_partition",
    "inner_corners_from_covers", "frak_I", "grassmannian_from_partition",
]


class PermutationError(ValueError):
    """Malformed permutation input or violated precondition."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        _check_bijection(word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """
        Parse ``"3 1 4 9 7 2 6 5 8"`` (any n) or the compact ``"314972658"``
        (n <= 9 only). Commas and surrounding brackets are tolerated.

        >>> Permutation.parse("[3, 1, 2]")
        Permutation(word=(3, 1, 2))
        """
        body = text.strip()
        if body[:1] in "[(" and body[-1:] in "])":
            body = body[1:-1]
        tokens = [t for t in re.split(r"[\s,]+", body) if t]
        if not tokens:
            raise PermutationError("empty permutation")
        if len(tokens) == 1 and len(tokens[0]) > 1:
            token = tokens[0]
            if not token.isdigit():
                raise PermutationError(f"not a permutation literal: {text!r}")
            if len(token) > 9:
                raise PermutationError(
                    f"compact digit form only allowed for n <= 9, got {len(token)} digits; "
                    "use space-separated entries")
            tokens = list(token)
        try:
            word = tuple(int(t) for t in tokens)
        except ValueError:
            raise PermutationError(f"not a permutation literal: {text!r}") from None
        return cls(word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __call__(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= len(self.word):
            raise IndexError(f"position {i} out of range 1..{len(self.word)}")
        return self.word[i - 1]

    def __str__(self):
        if len(self.word) <= 9:
            return "".join(map(str, self.word))
        return " ".join(map(str, self.word))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.word)
        for pos, val in enumerate(self.word, 1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def swap(self, i: int, j: int) -> "Permutation":
        """Right multiplication by the transposition of positions i and j."""
        word = list(self.word)
        word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
        return Permutation(tuple(word))


PermLike = Union[Permutation, Sequence[int]]


def _check_bijection(word: Sequence[int]) -> None:
    n = len(word)
    if n == 0:
        raise PermutationError("empty permutation")
    counts = Counter(word)
    dup = sorted(v for v, c in counts.items() if c > 1)
    missing = [v for v in range(1, n + 1) if v not in counts]
    if dup or missing:
        parts = []
        if dup:
            parts.append("duplicated value(s) " + ", ".join(map(str, dup)))
        if missing:
            parts.append("missing value(s) " + ", ".join(map(str, missing)))
        raise PermutationError(f"not a permutation of 1..{n}: " + "; ".join(parts))


def as_word(w: PermLike) -> tuple[int, ...]:
    """Validated one-line word of a permutation or a plain sequence."""
    if isinstance(w, Permutation):
        return w.word
    word = tuple(int(x) for x in w)
    _check_bijection(word)
    return word


def length(w: PermLike) -> int:
    """
    Number of inversions, i.e. the Coxeter length.

    >>> length([4, 3, 2, 1])
    6
    """
    word = as_word(w)
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def _descents(word: Sequence[int]) -> list[int]:
    return [d for d in range(1, len(word)) if word[d - 1] > word[d]]


def descents(w: PermLike) -> list[int]:
    """Positions d with w(d) > w(d+1), ascending."""
    return _descents(as_word(w))


def _is_cover(word: Sequence[int], i: int, j: int) -> bool:
    # 1-based positions, i < j assumed
    lo, hi = word[i - 1], word[j - 1]
    if lo > hi:
        return False
    for k in range(i, j - 1):
        if lo < word[k] < hi:
            return False
    return True


def is_cover(w: PermLike, i: int, j: int) -> bool:
    """
    True iff w·(i↔j) covers w in Bruhat order.

    >>> is_cover([6, 3, 1, 4, 7, 2, 5], 3, 4)
    True
    """
    word = as_word(w)
    if not (1 <= i < j <= len(word)):
        raise PermutationError(f"need 1 <= i < j <= {len(word)}, got ({i}, {j})")
    return _is_cover(word, i, j)


def _covers(word: Sequence[int]) -> list[tuple[int, int]]:
    n = len(word)
    out = []
    for i in range(n):
        lo = word[i]
        hi = n + 1
        # scanning j rightwards, a cover needs lo < word[j] below every
        # value seen so far in (lo, ...), so track the running ceiling
        for j in range(i + 1, n):
            x = word[j]
            if lo < x < hi:
                out.append((i + 1, j + 1))
                hi = x
    return out


def covers(w: PermLike) -> list[tuple[int, int]]:
    """
    All (i, j) such that w·(i↔j) covers w, in lexicographic order.

    >>> covers([6, 3, 1, 4, 7, 2, 5])
    [(1, 5), (2, 4), (3, 4), (3, 6), (4, 5), (4, 7), (6, 7)]
    """
    return _covers(as_word(w))


def _flatten(word: Sequence[int]) -> tuple[int, ...]:
    rank = {v: r for r, v in enumerate(sorted(word), 1)}
    return tuple(rank[v] for v in word)


def flatten(word: Iterable[int]) -> Permutation:
    """The permutation order-isomorphic to a word of distinct integers."""
    word = tuple(int(x) for x in word)
    if len(set(word)) != len(word):
        dup = sorted(v for v, c in Counter(word).items() if c > 1)
        raise PermutationError(f"cannot flatten word with repeated entries {dup}")
    return Permutation(_flatten(word))


def _subword_indices(word: Sequence[int], d: int) -> list[int]:
    # right-to-left minima of word[1..d], then left-to-right maxima of word[d+1..n]
    left = []
    low = None
    for pos in range(d, 0, -1):
        x = word[pos - 1]
        if low is None or x < low:
            left.append(pos)
            low = x
    left.reverse()
    right = []
    high = None
    for pos in range(d + 1, len(word) + 1):
        x = word[pos - 1]
        if high is None or x > high:
            right.append(pos)
            high = x
    return left + right


def descent_subword(w: PermLike, d: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Positions and values of the subword v_d(w) attached to the descent d.

    The subword is the right-to-left minima of w(1..d) followed by the
    left-to-right maxima of w(d+1..n).

    >>> descent_subword([3, 1, 4, 9, 7, 2, 6, 5, 8], 1)
    ((1, 2, 3, 4), (3, 1, 4, 9))
    """
    word = as_word(w)
    if not (1 <= d < len(word)) or word[d - 1] < word[d]:
        raise PermutationError(f"{d} is not a descent of {Permutation(word)}")
    idx = _subword_indices(word, d)
    return tuple(idx), tuple(word[p - 1] for p in idx)


@dataclass(frozen=True)
class InnerCorner:
    """An inner corner: offsets from the top and left edges of the rectangle."""
    row: int
    col: int

    @property
    def distance(self) -> int:
        return self.row + self.col


@dataclass(frozen=True)
class RectPartition:
    """A partition inside an ``e`` x ``width`` rectangle."""
    e: int
    width: int
    parts: tuple[int, ...]
    inner_corners: tuple[InnerCorner, ...]

    def __post_init__(self):
        if len(self.parts) != self.e:
            raise ValueError(f"expected {self.e} parts, got {len(self.parts)}")
        if any(not 0 <= p <= self.width for p in self.parts):
            raise ValueError(f"parts {self.parts} do not fit in width {self.width}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts {self.parts} are not weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def distances(self) -> list[int]:
        return [c.distance for c in self.inner_corners]


def grassmannian_descent(w: PermLike) -> int:
    """The unique descent of a Grassmannian permutation."""
    word = as_word(w)
    ds = _descents(word)
    if len(ds) != 1:
        raise PermutationError(
            f"{Permutation(word)} is not Grassmannian ({len(ds)} descents)")
    return ds[0]


def _corners_from_path(word: Sequence[int], e: int) -> list[InnerCorner]:
    m = len(word)
    inv = [0] * (m + 1)
    for pos, val in enumerate(word, 1):
        inv[val] = pos
    corners = []
    x = y = 0  # horizontal / vertical steps taken so far
    for a in range(1, m + 1):
        vertical = inv[a] <= e
        if vertical:
            y += 1
            if a < m and inv[a + 1] > e:
                corners.append(InnerCorner(row=e - y, col=x))
        else:
            x += 1
    return corners


def grassmannian_partition(v: PermLike) -> RectPartition:
    """
    The partition λ(v) in the e x (m-e) rectangle, with its inner corners.

    >>> lam = grassmannian_partition([3, 5, 8, 9, 11, 1, 2, 4, 6, 7, 10, 12])
    >>> lam.parts, lam.distances
    ((6, 5, 5, 3, 2), [6, 6, 6, 6])
    """
    word = as_word(v)
    e = grassmannian_descent(word)
    m = len(word)
    # t-th smallest entry left of the bar has word[t-1] - t horizontal steps before it
    parts = tuple(word[t - 1] - t for t in range(e, 0, -1))
    corners = _corners_from_path(word, e)
    lam = RectPartition(e=e, width=m - e, parts=parts, inner_corners=tuple(corners))
    assert sorted(lam.distances) == sorted(inner_corners_from_covers(word)), \
        "lattice-path corners disagree with cover transpositions"
    return lam


def inner_corners_from_covers(v: PermLike) -> list[int]:
    """
    Corner distances j - i - 1 read off the covers (i, j) with i <= e < j.
    """
    word = as_word(v)
    e = grassmannian_descent(word)
    return [j - i - 1 for i, j in _covers(word) if i <= e < j]


@dataclass(frozen=True)
class AntiDiagonal:
    """All inner corners share one distance (0 if there are none)."""
    distance: int


@dataclass(frozen=True)
class Mixed:
    """Inner corners at different distances."""
    distances: tuple[int, ...]


FrakI = Union[AntiDiagonal, Mixed]


def _frak_I_of_distances(dists: Sequence[int]) -> FrakI:
    if not dists:
        return AntiDiagonal(0)
    first = dists[0]
    if all(d == first for d in dists):
        return AntiDiagonal(first)
    return Mixed(tuple(dists))


def frak_I(v: PermLike) -> FrakI:
    """
    Common inner-corner distance of a Grassmannian permutation.

    >>> frak_I([2, 4, 1, 3, 5])
    AntiDiagonal(distance=2)
    >>> frak_I([1, 3, 4, 6, 2, 5])
    Mixed(distances=(3, 2))
    """
    return _frak_I_of_distances(grassmannian_partition(v).distances)


def grassmannian_from_partition(parts: Sequence[int], e: int, width: int) -> Permutation:
    """
    Rebuild the permutation with descent at ``e`` whose partition is ``parts``.

    Returns the identity when ``parts`` is empty (no descent at all).

    >>> grassmannian_from_partition((6, 5, 5, 3, 2), 5, 7)
    Permutation(word=(3, 5, 8, 9, 11, 1, 2, 4, 6, 7, 10, 12))
    """
    parts = [int(p) for p in parts]
    if e < 1 or width < 1:
        raise PermutationError(f"rectangle {e}x{width} must have positive sides")
    if len(parts) > e:
        raise PermutationError(f"partition {tuple(parts)} has more than {e} rows")
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise PermutationError(f"{tuple(parts)} is not a partition")
    if parts and parts[0] > width:
        raise PermutationError(f"partition {tuple(parts)} overflows width {width}")
    parts = parts + [0] * (e - len(parts))
    left = [parts[e - t] + t for t in range(1, e + 1)]
    rest = sorted(set(range(1, e + width + 1)) - set(left))
    return Permutation(tuple(left + rest))
