"""
Verdicts for a Schubert variety X_w: Gorenstein, smooth, locally factorial
and Fano, plus the reductions from partial flag varieties, Grassmannians and
matrix Schubert varieties to the complete flag case.

>>> is_gorenstein([3, 7, 1, 4, 8, 2, 6, 5])
True
>>> check_gorenstein([1, 3, 4, 6, 2, 5])[1]
InnerCornerFailure(descent=4, distances=(3, 2))
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .divisor import _descent_distances, canonical_weight, is_factorial
from .patterns import RestrictedPattern, _restricted, _search, gorenstein_patterns
from .permcore import Permutation, PermLike, PermutationError, _descents, as_word

__all__ = [
    "InnerCornerFailure", "PatternFailure", "Certificate", "ClassificationReport",
    "Composition", "check_gorenstein", "is_gorenstein", "is_smooth", "is_fano",
    "classify", "min_coset_rep", "coset_gorenstein", "matrix_schubert_embed",
]


@dataclass(frozen=True)
class InnerCornerFailure:
    descent: int
    distances: tuple[int, ...]

    def to_dict(self):
        return {"kind": "inner_corner", "descent": self.descent,
                "distances": list(self.distances)}


@dataclass(frozen=True)
class PatternFailure:
    pattern: RestrictedPattern
    embedding: tuple[int, ...]

    def to_dict(self):
        return {"kind": "pattern", "pattern": str(self.pattern),
                "embedding": list(self.embedding)}


Certificate = Union[InnerCornerFailure, PatternFailure]

_PATTERNS = [(p.v.word, sorted(p.restrictions), p) for p in gorenstein_patterns()]
_SMOOTH = ((1, 3, 2, 4), (2, 1, 4, 3))


def _gorenstein_word(word: Sequence[int]) -> Optional[Certificate]:
    # inner-corner condition first, it is the cheap one
    for d in _descents(word):
        dists = _descent_distances(word, d)
        if dists and any(x != dists[0] for x in dists):
            return InnerCornerFailure(d, tuple(dists))
    for v, pairs, p in _PATTERNS:
        emb = _restricted(word, v, pairs)
        if emb is not None:
            return PatternFailure(p, emb)
    return None


def check_gorenstein(w: PermLike) -> tuple[bool, Optional[Certificate]]:
    """
    Decide Gorensteinness combinatorially: every ṽ_d(w) has its inner corners
    on one antidiagonal, and ``w`` avoids both restricted patterns. The
    certificate names the first failed condition, or is None.
    """
    cert = _gorenstein_word(as_word(w))
    return cert is None, cert


def is_gorenstein(w: PermLike) -> bool:
    return _gorenstein_word(as_word(w)) is None


def _smooth_word(word: Sequence[int]) -> bool:
    return all(next(_search(v, word), None) is None for v in _SMOOTH if len(v) <= len(word))


def is_smooth(w: PermLike) -> bool:
    """Avoids 1324 and 2143 classically."""
    return _smooth_word(as_word(w))


def _fano_word(word: Sequence[int]) -> bool:
    return all(max(_descent_distances(word, d), default=0) <= 1 for d in _descents(word))


def is_fano(w: PermLike) -> Optional[bool]:
    """
    None when X_w is not Gorenstein; otherwise whether every frak_I(ṽ_d(w))
    is at most 1.

    >>> is_fano([2, 1, 4, 3]), is_fano([3, 7, 1, 4, 8, 2, 6, 5]), is_fano([1, 3, 4, 6, 2, 5])
    (True, False, None)
    """
    word = as_word(w)
    if _gorenstein_word(word) is not None:
        return None
    return _fano_word(word)


@dataclass(frozen=True)
class ClassificationReport:
    w: Permutation
    gorenstein: bool
    smooth: bool
    factorial: bool
    fano: Optional[bool]
    weight: Optional[tuple[int, ...]] = None
    certificate: Optional[Certificate] = None

    def __post_init__(self):
        if self.smooth and not self.factorial:
            raise AssertionError(f"{self.w}: smooth but not factorial")
        if self.factorial and not self.gorenstein:
            raise AssertionError(f"{self.w}: factorial but not Gorenstein")
        if (self.fano is not None) != self.gorenstein:
            raise AssertionError(f"{self.w}: Fano verdict must be present iff Gorenstein")

    def to_dict(self) -> dict:
        return {
            "w": list(self.w.word),
            "gorenstein": self.gorenstein,
            "smooth": self.smooth,
            "factorial": self.factorial,
            "fano": self.fano,
            "weight": None if self.weight is None else list(self.weight),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        def yn(x):
            return "n/a" if x is None else ("yes" if x else "no")
        lines = [
            f"w          {self.w}",
            f"gorenstein {yn(self.gorenstein)}",
            f"smooth     {yn(self.smooth)}",
            f"factorial  {yn(self.factorial)}",
            f"fano       {yn(self.fano)}",
        ]
        if self.weight is not None:
            lines.append("weight     (" + ", ".join(map(str, self.weight)) + ")")
        cert = self.certificate
        if isinstance(cert, InnerCornerFailure):
            lines.append(f"reason     inner corners of descent {cert.descent} at distances "
                         + ", ".join(map(str, cert.distances)))
        elif isinstance(cert, PatternFailure):
            lines.append(f"reason     restricted pattern {cert.pattern} at positions "
                         + ", ".join(map(str, cert.embedding)))
        return "\n".join(lines)


def classify(w: PermLike) -> ClassificationReport:
    word = as_word(w)
    cert = _gorenstein_word(word)
    gor = cert is None
    return ClassificationReport(
        w=Permutation(word),
        gorenstein=gor,
        smooth=_smooth_word(word),
        factorial=is_factorial(word),
        fano=_fano_word(word) if gor else None,
        weight=canonical_weight(word) if gor else None,
        certificate=cert,
    )


@dataclass(frozen=True)
class Composition:
    """Dimension steps 0 = i_0 < i_1 < ... < i_k < i_{k+1} = n of a partial flag."""
    steps: tuple[int, ...]
    n: int = field(init=False)

    def __post_init__(self):
        steps = tuple(int(s) for s in self.steps)
        if len(steps) < 2 or steps[0] != 0:
            raise PermutationError(f"composition steps must start at 0, got {steps}")
        if any(a >= b for a, b in zip(steps, steps[1:])):
            raise PermutationError(f"composition steps must increase strictly, got {steps}")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "n", steps[-1])

    @classmethod
    def from_blocks(cls, sizes: Sequence[int]) -> "Composition":
        """``(2, 2, 3)`` -> steps ``(0, 2, 4, 7)``."""
        steps = [0]
        for s in sizes:
            steps.append(steps[-1] + int(s))
        return cls(tuple(steps))

    @property
    def blocks(self) -> list[tuple[int, int]]:
        """Position ranges (start, stop], 1-based inclusive stop."""
        return list(zip(self.steps, self.steps[1:]))


def min_coset_rep(w: PermLike, c: Composition) -> Permutation:
    """
    Minimal-length element of the coset wS for the Young subgroup S of ``c``:
    sort the values of ``w`` within each block of positions.

    >>> min_coset_rep([4, 3, 2, 1], Composition.from_blocks([2, 2]))
    Permutation(word=(3, 4, 1, 2))
    """
    word = as_word(w)
    if c.n != len(word):
        raise PermutationError(f"composition of {c.n} does not match permutation of size {len(word)}")
    out: list[int] = []
    for lo, hi in c.blocks:
        out.extend(sorted(word[lo:hi]))
    return Permutation(tuple(out))


def coset_gorenstein(w: PermLike, c: Composition) -> bool:
    """Gorensteinness of the partial-flag Schubert variety indexed by wS."""
    return is_gorenstein(min_coset_rep(w, c))


def matrix_schubert_embed(v: PermLike) -> Permutation:
    """
    v × id in S_{2n}; the matrix Schubert variety of ``v`` is Gorenstein
    exactly when the Schubert variety of this permutation is.

    >>> matrix_schubert_embed([2, 1])
    Permutation(word=(2, 1, 3, 4))
    """
    word = as_word(v)
    n = len(word)
    return Permutation(word + tuple(range(n + 1, 2 * n + 1)))
