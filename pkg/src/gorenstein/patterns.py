"""
Classical and Bruhat-restricted pattern containment.

A restricted pattern is a permutation ``v`` together with pairs of positions
(m, n) such that v·(m↔n) covers v. An embedding i_1 < ... < i_l of ``v`` in a
host ``w`` is restricted when w·(i_m↔i_n) covers w for every such pair.

>>> p = RestrictedPattern.parse("31524:(1,5)(2,3)")
>>> contains_restricted([3, 1, 5, 2, 4], p)
(1, 2, 3, 4, 5)
>>> contains_restricted([3, 7, 1, 4, 8, 2, 6, 5], p) is None
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .permcore import Permutation, PermLike, PermutationError, _is_cover, as_word

__all__ = [
    "RestrictedPattern", "embeddings", "first_embedding", "contains",
    "contains_restricted", "is_restricted_embedding", "gorenstein_patterns",
    "smooth_patterns",
]

Embedding = tuple[int, ...]


@dataclass(frozen=True)
class RestrictedPattern:
    v: Permutation
    restrictions: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        v = self.v if isinstance(self.v, Permutation) else Permutation(tuple(self.v))
        object.__setattr__(self, "v", v)
        pairs = frozenset((int(a), int(b)) for a, b in self.restrictions)
        object.__setattr__(self, "restrictions", pairs)
        for a, b in sorted(pairs):
            if not (1 <= a < b <= v.n) or not _is_cover(v.word, a, b):
                raise PermutationError(
                    f"({a},{b}) is not a Bruhat transposition of pattern {v}")

    @classmethod
    def parse(cls, text: str) -> "RestrictedPattern":
        """
        Parse ``"31524:(1,5)(2,3)"`` or ``"[3 1 5 2 4]:(1,5)(2,3)"``.

        The colon and pair list may be omitted for an unrestricted pattern.
        """
        word_part, _, pair_part = text.strip().partition(":")
        word_part = word_part.strip()
        if word_part.startswith("["):
            if not word_part.endswith("]"):
                raise PermutationError(f"unbalanced bracket in pattern {text!r}")
            v = Permutation.parse(word_part[1:-1])
        elif word_part.isdigit():
            v = Permutation.parse(word_part)
        else:
            raise PermutationError(f"bad pattern word in {text!r}")
        pair_part = pair_part.strip()
        pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", pair_part)
        if re.sub(r"\(\s*\d+\s*,\s*\d+\s*\)", "", pair_part).strip():
            raise PermutationError(f"bad restriction list in {text!r}")
        return cls(v, frozenset((int(a), int(b)) for a, b in pairs))

    def __str__(self):
        word = str(self.v) if self.v.n <= 9 else "[" + " ".join(map(str, self.v.word)) + "]"
        if not self.restrictions:
            return word
        return word + ":" + "".join(f"({a},{b})" for a, b in sorted(self.restrictions))


def _search(pattern: Sequence[int], host: Sequence[int]) -> Iterator[list[int]]:
    # depth-first over host positions (0-based), lexicographic order
    l, n = len(pattern), len(host)
    chosen: list[int] = []

    def extend(start: int) -> Iterator[list[int]]:
        a = len(chosen)
        if a == l:
            yield chosen
            return
        pa = pattern[a]
        for pos in range(start, n - (l - a) + 1):
            x = host[pos]
            for b in range(a):
                if (host[chosen[b]] > x) != (pattern[b] > pa):
                    break
            else:
                chosen.append(pos)
                yield from extend(pos + 1)
                chosen.pop()

    return extend(0)


def embeddings(v: PermLike, w: PermLike) -> Iterator[Embedding]:
    """
    Every classical embedding of ``v`` in ``w`` as 1-based positions,
    lexicographically.

    >>> list(embeddings([2, 1], [2, 1, 3]))
    [(1, 2)]
    """
    pattern, host = as_word(v), as_word(w)
    if len(pattern) > len(host):
        raise PermutationError(f"pattern of size {len(pattern)} longer than host of size {len(host)}")
    for idx in _search(pattern, host):
        yield tuple(p + 1 for p in idx)


def first_embedding(v: PermLike, w: PermLike) -> Optional[Embedding]:
    return next(embeddings(v, w), None)


def contains(w: PermLike, v: PermLike) -> bool:
    """Classical containment of ``v`` in ``w``."""
    pattern, host = as_word(v), as_word(w)
    if len(pattern) > len(host):
        return False
    return next(_search(pattern, host), None) is not None


def _restricted(host: Sequence[int], pattern: Sequence[int],
                pairs: Sequence[tuple[int, int]]) -> Optional[Embedding]:
    if len(pattern) > len(host):
        return None
    for idx in _search(pattern, host):
        if all(_is_cover(host, idx[a - 1] + 1, idx[b - 1] + 1) for a, b in pairs):
            return tuple(p + 1 for p in idx)
    return None


def contains_restricted(w: PermLike, p: RestrictedPattern) -> Optional[Embedding]:
    """
    Lexicographically least restricted embedding of ``p`` in ``w``, or None
    when ``w`` avoids it.
    """
    if not isinstance(p, RestrictedPattern):
        raise TypeError("expected a RestrictedPattern")
    return _restricted(as_word(w), p.v.word, sorted(p.restrictions))


def is_restricted_embedding(w: PermLike, p: RestrictedPattern, idx: Sequence[int]) -> bool:
    """Check a candidate embedding from scratch, independent of the search."""
    host = as_word(w)
    v = p.v.word
    if len(idx) != len(v) or list(idx) != sorted(set(idx)):
        return False
    if not all(1 <= i <= len(host) for i in idx):
        return False
    vals = [host[i - 1] for i in idx]
    for a in range(len(v)):
        for b in range(a + 1, len(v)):
            if (vals[a] > vals[b]) != (v[a] > v[b]):
                return False
    return all(_is_cover(host, idx[a - 1], idx[b - 1]) for a, b in p.restrictions)


_GORENSTEIN = (
    RestrictedPattern(Permutation((3, 1, 5, 2, 4)), frozenset({(1, 5), (2, 3)})),
    RestrictedPattern(Permutation((2, 4, 1, 5, 3)), frozenset({(1, 5), (3, 4)})),
)
_SMOOTH = (Permutation((1, 3, 2, 4)), Permutation((2, 1, 4, 3)))


def gorenstein_patterns() -> list[RestrictedPattern]:
    """31524 with {(1,5),(2,3)} and 24153 with {(1,5),(3,4)}."""
    return list(_GORENSTEIN)


def smooth_patterns() -> list[Permutation]:
    """1324 and 2143, unrestricted."""
    return list(_SMOOTH)
