"""
Exhaustive counts over S_n of Gorenstein, smooth, factorial and Fano
Schubert varieties.

Permutations are generated in place in lexicographic order. S_n can be split
into prefix blocks (all permutations with a given first entry) and the
blocks farmed out to worker processes; counts merge by addition.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterator, Optional

from .verdicts import _fano_word, _gorenstein_word, _smooth_word
from .divisor import is_factorial, solve

__all__ = ["CensusRow", "OracleMismatch", "next_permutation", "permutations_lex",
           "census", "count_block", "format_row"]

MAX_N = 10


class OracleMismatch(RuntimeError):
    """Pattern classifier and linear-system solver disagree."""


@dataclass
class CensusRow:
    n: int
    total: int
    gorenstein: int
    smooth: int
    factorial: Optional[int] = None
    fano: Optional[int] = None
    seconds: float = 0.0

    def __post_init__(self):
        chain = [self.smooth, self.gorenstein, self.total]
        if self.factorial is not None:
            chain.insert(1, self.factorial)
        if any(a > b for a, b in zip(chain, chain[1:])):
            raise AssertionError(f"census counts out of order: {self}")


def next_permutation(a: list) -> bool:
    """Advance ``a`` to its lexicographic successor in place; False at the end."""
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def permutations_lex(n: int, first: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """S_n in lexicographic order, or only the block starting with ``first``."""
    if first is None:
        a = list(range(1, n + 1))
        yield tuple(a)
        while next_permutation(a):
            yield tuple(a)
        return
    rest = [x for x in range(1, n + 1) if x != first]
    yield (first, *rest)
    while next_permutation(rest):
        yield (first, *rest)


def count_block(n: int, first: Optional[int] = None, full: bool = False,
                oracle: bool = False) -> dict:
    """Counts over one prefix block (or the whole group when ``first`` is None)."""
    counts = {"total": 0, "gorenstein": 0, "smooth": 0, "factorial": 0, "fano": 0}
    for word in permutations_lex(n, first):
        counts["total"] += 1
        gor = _gorenstein_word(word) is None
        if oracle and gor != (solve(word) is not None):
            raise OracleMismatch(
                f"w={word}: classifier says {gor}, linear system says {not gor}")
        if gor:
            counts["gorenstein"] += 1
            if full and _fano_word(word):
                counts["fano"] += 1
        if _smooth_word(word):
            counts["smooth"] += 1
        if full and is_factorial(word):
            counts["factorial"] += 1
    return counts


def _block_job(args):
    return count_block(*args)


def census(n: int, full: bool = False, oracle: bool = False, workers: int = 1,
           allow_large: bool = False) -> CensusRow:
    """
    Count over all of S_n.

    >>> row = census(4)
    >>> row.total, row.gorenstein, row.smooth
    (24, 24, 22)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_N and not allow_large:
        raise ValueError(f"n={n} exceeds the guard of {MAX_N}; pass allow_large=True")
    start = time.perf_counter()
    if workers <= 1:
        parts = [count_block(n, None, full, oracle)]
    else:
        jobs = [(n, first, full, oracle) for first in range(1, n + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_block_job, jobs))
    total = {k: sum(p[k] for p in parts) for k in parts[0]}
    assert total["total"] == math.factorial(n)
    return CensusRow(
        n=n, total=total["total"], gorenstein=total["gorenstein"], smooth=total["smooth"],
        factorial=total["factorial"] if full else None,
        fano=total["fano"] if full else None,
        seconds=time.perf_counter() - start,
    )


def format_row(row: CensusRow, fmt: str = "text", header: bool = True) -> str:
    full = row.factorial is not None
    if fmt == "json":
        d = asdict(row)
        if not full:
            del d["factorial"], d["fano"]
        return json.dumps(d)
    if fmt == "csv":
        cols = ["n", "total", "gorenstein", "smooth"] + (["factorial", "fano"] if full else []) + ["seconds"]
        vals = [str(getattr(row, c)) if c != "seconds" else f"{row.seconds:.3f}" for c in cols]
        lines = [",".join(cols)] if header else []
        lines.append(",".join(vals))
        return "\n".join(lines)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    parts = [f"n={row.n}", f"total={row.total}", f"gorenstein={row.gorenstein}",
             f"smooth={row.smooth}"]
    if full:
        parts += [f"factorial={row.factorial}", f"fano={row.fano}"]
    parts.append(f"seconds={row.seconds:.3f}")
    return " ".join(parts)
