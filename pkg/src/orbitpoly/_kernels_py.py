"""Pure-Python implementations of the hot inner-loop kernels.

Mirrors the API of the compiled Cython module `_kernels`; `kernels` picks
whichever is available at import time.
"""

from __future__ import annotations

BACKEND = "python"


def reduce_to_dominant(cartan, w):
    """Reflect w into the dominant chamber.

    Returns (dominant weight, parity of the minimal reflection word).  Each
    reflection on a negative coordinate removes exactly one inversion, so the
    step count is the minimal word length.
    """
    n = len(w)
    v = list(w)
    steps = 0
    while True:
        for i in range(n):
            c = v[i]
            if c < 0:
                row = cartan[i]
                for k in range(n):
                    v[k] -= c * row[k]
                steps += 1
                break
        else:
            return tuple(v), steps & 1


def pair_counts_dominant(points_a, points_b):
    """Multiplicities of dominant pair sums a+b over two orbit point lists."""
    counts = {}
    n = len(points_a[0]) if points_a else 0
    rng = range(n)
    for a in points_a:
        for b in points_b:
            s = tuple(a[k] + b[k] for k in rng)
            for x in s:
                if x < 0:
                    break
            else:
                counts[s] = counts.get(s, 0) + 1
    return counts


def pair_counts_signed(points_a, par_a, points_b, par_b, strict):
    """Signed multiplicities of pair sums, kept at (strictly) dominant points."""
    counts = {}
    n = len(points_a[0]) if points_a else 0
    rng = range(n)
    lo = 1 if strict else 0
    for a, pa in zip(points_a, par_a):
        for b, pb in zip(points_b, par_b):
            s = tuple(a[k] + b[k] for k in rng)
            for x in s:
                if x < lo:
                    break
            else:
                counts[s] = counts.get(s, 0) + (1 if (pa + pb) % 2 == 0 else -1)
    return {k: v for k, v in counts.items() if v != 0}


def pair_counts_raw(points_a, par_a, points_b, par_b):
    """Full signed multiset of pair sums: point -> [positive, negative] tallies."""
    counts = {}
    n = len(points_a[0]) if points_a else 0
    rng = range(n)
    for a, pa in zip(points_a, par_a):
        for b, pb in zip(points_b, par_b):
            s = tuple(a[k] + b[k] for k in rng)
            slot = counts.setdefault(s, [0, 0])
            slot[(pa + pb) % 2] += 1
    return counts
