"""
The cover-interval linear system whose integral solvability decides
Gorensteinness, the closed-form candidate solution, the factoriality lattice
test and the canonical weight.

Unknowns are α_1..α_{n-1}, one per gap between adjacent positions. Each cover
(i, j) of ``w`` contributes the constraint α_i + ... + α_{j-1} = 1.

>>> sys = build_system([6, 3, 1, 4, 7, 2, 5])
>>> solve_system(sys)
(-1, 0, 1, 1, -1, 1)
>>> solve_system(build_system([5, 3, 1, 7, 4, 2, 6])) is None
True
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .permcore import (
    AntiDiagonal, Permutation, PermLike, _covers, _descents, _flatten,
    _subword_indices, _corners_from_path, _frak_I_of_distances, as_word,
)

__all__ = [
    "InnerCornerViolation", "NotGorensteinError", "CoverSystem", "build_system",
    "descent_frak_I", "candidate_alpha", "first_violation", "verify_alpha",
    "solve_system", "solve", "rational_feasible", "interval_matrix", "smith_invariants",
    "is_factorial", "canonical_weight", "bar_diagram", "system_json",
]

AlphaVector = tuple[int, ...]


class InnerCornerViolation(ValueError):
    """The inner corners of ṽ_r(w) are not on one antidiagonal."""

    def __init__(self, descent: int, distances: Sequence[int]):
        self.descent = descent
        self.distances = tuple(distances)
        super().__init__(
            f"inner-corner condition violated at descent {descent}: "
            f"corner distances {sorted(set(self.distances), reverse=True)}")


class NotGorensteinError(ValueError):
    pass


@dataclass(frozen=True)
class CoverSystem:
    n: int
    covers: tuple[tuple[int, int], ...]
    word: Optional[tuple[int, ...]] = None

    @property
    def unknowns(self) -> int:
        return self.n - 1

    def rows(self) -> list[list[int]]:
        """Coefficient rows, one per cover, over the n-1 unknowns."""
        return [[1 if i <= r < j else 0 for r in range(1, self.n)] for i, j in self.covers]


def build_system(w: PermLike) -> CoverSystem:
    word = as_word(w)
    return CoverSystem(len(word), tuple(_covers(word)), word)


def _descent_distances(word: Sequence[int], d: int) -> list[int]:
    idx = _subword_indices(word, d)
    sub = _flatten([word[p - 1] for p in idx])
    e = sum(1 for p in idx if p <= d)
    return [c.distance for c in _corners_from_path(sub, e)]


def descent_frak_I(w: PermLike) -> dict:
    """Map each descent d to frak_I of the flattened subword ṽ_d(w)."""
    word = as_word(w)
    return {d: _frak_I_of_distances(_descent_distances(word, d)) for d in _descents(word)}


def _candidate(word: Sequence[int]) -> AlphaVector:
    alpha = [1] * (len(word) - 1)
    for d, fi in descent_frak_I(word).items():
        if not isinstance(fi, AntiDiagonal):
            raise InnerCornerViolation(d, fi.distances)
        alpha[d - 1] = 1 - fi.distance
    return tuple(alpha)


def candidate_alpha(w: PermLike) -> AlphaVector:
    """
    α_r = 1 - frak_I(ṽ_r(w)) at descents r and 1 elsewhere.

    Raises InnerCornerViolation at the first descent whose corners are mixed.

    >>> candidate_alpha([3, 7, 1, 4, 8, 2, 6, 5])
    (1, -1, 1, 1, -1, 1, 0)
    """
    return _candidate(as_word(w))


def first_violation(sys: CoverSystem, alpha: Sequence[int]) -> Optional[tuple[int, int]]:
    """First cover (lexicographic) whose interval sum differs from 1."""
    if len(alpha) != sys.unknowns:
        raise ValueError(f"expected {sys.unknowns} coefficients, got {len(alpha)}")
    prefix = [0]
    for a in alpha:
        prefix.append(prefix[-1] + a)
    for i, j in sys.covers:
        if prefix[j - 1] - prefix[i - 1] != 1:
            return (i, j)
    return None


def verify_alpha(sys: CoverSystem, alpha: Sequence[int]) -> bool:
    return first_violation(sys, alpha) is None


def solve_system(sys: CoverSystem, default: Optional[Sequence[int]] = None) -> Optional[AlphaVector]:
    """
    Integral solution of the cover system, or None if there is none.

    Works on prefix sums P_k = α_1 + ... + α_k, where every cover (i, j) is the
    difference constraint P_{j-1} - P_{i-1} = 1. Potentials are propagated
    breadth-first from the smallest node of each connected component, which is
    pinned using ``default`` relative to the node before it. Without ``default`` the
    candidate solution of the underlying permutation is used when it is
    defined, else all ones; either way every α_r crossed by no cover keeps its
    default value.
    """
    n = sys.n
    if default is None and sys.word is not None:
        try:
            default = _candidate(sys.word)
        except InnerCornerViolation:
            pass
    if default is None:
        default = (1,) * (n - 1)
    if len(default) != n - 1:
        raise ValueError(f"expected {n - 1} default coefficients, got {len(default)}")

    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, j in sys.covers:
        adj[i - 1].append((j - 1, 1))
        adj[j - 1].append((i - 1, -1))

    pot: list[Optional[int]] = [None] * n
    for root in range(n):
        if pot[root] is not None:
            continue
        # each new component starts one default step above its left neighbour
        pot[root] = 0 if root == 0 else pot[root - 1] + default[root - 1]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, delta in adj[u]:
                want = pot[u] + delta
                if pot[v] is None:
                    pot[v] = want
                    queue.append(v)
                elif pot[v] != want:
                    return None
    alpha = tuple(pot[k] - pot[k - 1] for k in range(1, n))
    bad = first_violation(sys, alpha)
    assert bad is None, f"solver produced a vector violating cover {bad}"
    return alpha


def solve(w: PermLike) -> Optional[AlphaVector]:
    """Shorthand for ``solve_system(build_system(w))``."""
    return solve_system(build_system(w))


def rational_feasible(sys: CoverSystem) -> bool:
    """Exact rational Gauss-Jordan elimination on [A | 1]; consistent or not."""
    rows = [[Fraction(x) for x in row] + [Fraction(1)] for row in sys.rows()]
    ncols = sys.unknowns
    pivot_row = 0
    for col in range(ncols):
        piv = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[pivot_row], rows[piv] = rows[piv], rows[pivot_row]
        p = rows[pivot_row][col]
        rows[pivot_row] = [x / p for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    # a zero row with nonzero right-hand side means 0 = c
    return all(row[-1] == 0 for row in rows[pivot_row:])


def interval_matrix(w: PermLike) -> list[list[int]]:
    """Rows r = 1..n-1, one column per cover (i, j), entry 1 iff i <= r < j."""
    word = as_word(w)
    cov = _covers(word)
    return [[1 if i <= r < j else 0 for i, j in cov] for r in range(1, len(word))]


def smith_invariants(matrix: Sequence[Sequence[int]]) -> list[int]:
    """
    Nonzero invariant factors of an integer matrix, in divisibility order.

    Plain Python integers throughout, so intermediates never overflow.

    >>> smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    [2, 6, 12]
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    ncols = len(a[0]) if m else 0

    def move_to_pivot(t, cells):
        i, j = min(cells, key=lambda ij: abs(a[ij[0]][ij[1]]))
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

    diag = []
    for t in range(min(m, ncols)):
        block = [(i, j) for i in range(t, m) for j in range(t, ncols) if a[i][j]]
        if not block:
            break
        move_to_pivot(t, block)
        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
            rest = [(i, t) for i in range(t + 1, m) if a[i][t]]
            rest += [(t, j) for j in range(t + 1, ncols) if a[t][j]]
            if rest:
                # remainders are smaller than the pivot
                move_to_pivot(t, rest)
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, ncols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
    return diag


def is_factorial(w: PermLike) -> bool:
    """
    True iff the rows of the interval matrix span the free abelian group on
    the covers, i.e. its Smith form has one unit invariant factor per cover.
    """
    word = as_word(w)
    ncov = len(_covers(word))
    if ncov == 0:
        return True
    if ncov > len(word) - 1:
        return False
    inv = smith_invariants(interval_matrix(word))
    return len(inv) == ncov and all(x == 1 for x in inv)


def canonical_weight(w: PermLike) -> tuple[int, ...]:
    """
    Coefficients of the canonical-sheaf weight Σ α̃_r Λ_{n-r}:
    α̃_r = -2 + frak_I(ṽ_r(w)) at descents, -2 elsewhere.

    >>> canonical_weight([3, 7, 1, 4, 8, 2, 6, 5])
    (-2, 0, -2, -2, 0, -2, -1)
    """
    word = as_word(w)
    weight = [-2] * (len(word) - 1)
    for d, fi in descent_frak_I(word).items():
        if not isinstance(fi, AntiDiagonal):
            raise NotGorensteinError(
                f"{Permutation(word)} is not Gorenstein: inner-corner condition fails "
                f"at descent {d} (distances {list(fi.distances)})")
        weight[d - 1] = -2 + fi.distance
    # the inner-corner condition alone is not enough; the candidate must solve the system
    alpha = tuple(-1 - x for x in weight)
    bad = first_violation(build_system(word), alpha)
    if bad is not None:
        raise NotGorensteinError(
            f"{Permutation(word)} is not Gorenstein: a forbidden restricted pattern "
            f"occurs (cover {bad} is violated by the candidate solution)")
    return tuple(weight)


def bar_diagram(w: PermLike, values: Optional[Sequence] = None) -> str:
    """
    ASCII drawing of the cover system: a column per entry of ``w``, a
    vertical bar per unknown, and one horizontal bar per cover.

    >>> print(bar_diagram([1, 2]))
      1   2
        |
      --+--
        |
       a1
    """
    word = as_word(w)
    n = len(word)
    step = 4
    width = step * (n - 1) + 3

    def centre(k):  # column k (1-based)
        return step * (k - 1) + 2

    def gap(r):  # vertical bar r between columns r and r+1
        return step * r

    def blank():
        line = [" "] * width
        for r in range(1, n):
            line[gap(r)] = "|"
        return line

    header = [" "] * (step * n + 2)
    for k, val in enumerate(word, 1):
        s = str(val)
        pos = centre(k) + 1 - len(s)
        header[pos:pos + len(s)] = s
    out = ["".join(header).rstrip(), "".join(blank()).rstrip()]
    for i, j in _covers(word):
        line = blank()
        for c in range(centre(i), centre(j) + 1):
            line[c] = "-"
        for r in range(i, j):
            line[gap(r)] = "+"
        out.append("".join(line).rstrip())
    out.append("".join(blank()).rstrip())

    def label_row(labels):
        row = [" "] * (width + 8)
        for r, lab in enumerate(labels, 1):
            s = str(lab)
            pos = gap(r) + 1 - len(s)
            row[max(pos, 0):max(pos, 0) + len(s)] = s
        return "".join(row).rstrip()

    if n > 1:
        out.append(label_row(f"a{r}" for r in range(1, n)))
        if values is not None:
            out.append(label_row(values))
    return "\n".join(out)


def system_json(w: PermLike) -> str:
    """``{"n", "covers", "alpha", "feasible"}`` for the system of ``w``."""
    word = as_word(w)
    sys = build_system(word)
    alpha = solve(word)
    return json.dumps({
        "n": sys.n,
        "covers": [list(c) for c in sys.covers],
        "alpha": None if alpha is None else list(alpha),
        "feasible": alpha is not None,
    })
