"""Brute-force reference implementations, deliberately naive and independent."""

from itertools import combinations, permutations, product


def inversions(word):
    n = len(word)
    count = 0
    for i in range(n):
        for j in range(n):
            if i < j and word[i] > word[j]:
                count += 1
    return count


def swap(word, i, j):
    w = list(word)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def covers_by_length(word):
    """Transpositions raising the inversion count by exactly one."""
    n = len(word)
    base = inversions(word)
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
            if inversions(swap(word, i, j)) == base + 1]


def covers_by_definition(word):
    n = len(word)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a, b = word[i - 1], word[j - 1]
            if a < b and all(word[k - 1] < a or word[k - 1] > b for k in range(i + 1, j)):
                out.append((i, j))
    return out


def is_cover_brute(word, i, j):
    return (i, j) in covers_by_definition(word)


def order_isomorphic(a, b):
    return all((a[x] > a[y]) == (b[x] > b[y])
               for x in range(len(a)) for y in range(len(a)))


def all_embeddings(v, w):
    return [tuple(i + 1 for i in idx) for idx in combinations(range(len(w)), len(v))
            if order_isomorphic([w[i] for i in idx], v)]


def contains_classical(w, v):
    return bool(all_embeddings(v, w))


def restricted_embeddings(w, v, pairs):
    return [idx for idx in all_embeddings(v, w)
            if all(is_cover_brute(w, idx[a - 1], idx[b - 1]) for a, b in pairs)]


def rank_by_value(word):
    return tuple(sorted(word).index(x) + 1 for x in word)


def sym(n):
    return list(permutations(range(1, n + 1)))


def interval_sums_hold(word, alpha):
    return all(sum(alpha[i - 1:j - 1]) == 1 for i, j in covers_by_definition(word))


def integer_feasible_boxed(word, bound=3):
    """Search α in [-bound, bound]^(n-1); only trustworthy for tiny n."""
    n = len(word)
    return any(interval_sums_hold(word, alpha)
               for alpha in product(range(-bound, bound + 1), repeat=n - 1))


def lattice_path_distances(word, e):
    """
    Walk the lattice path point by point and apply the corner definition
    literally: a path point with path points directly below and to its right.
    """
    inv = {val: pos for pos, val in enumerate(word, 1)}
    pts = [(0, 0)]
    for a in range(1, len(word) + 1):
        x, y = pts[-1]
        pts.append((x + 1, y) if inv[a] > e else (x, y + 1))
    on_path = set(pts)
    return [(e - y) + x for x, y in pts
            if (x, y - 1) in on_path and (x + 1, y) in on_path]


def partition_by_boxes(word, e):
    """Row lengths from the top: boxes above-left of the path in each row."""
    inv = {val: pos for pos, val in enumerate(word, 1)}
    rows = []
    x = 0
    for a in range(1, len(word) + 1):
        if inv[a] > e:
            x += 1
        else:
            rows.append(x)  # vertical step with x horizontal steps before it
    return tuple(reversed(rows))
