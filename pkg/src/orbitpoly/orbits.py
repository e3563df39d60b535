"""Weyl-group orbits of dominant weights, with parities and stabilizers."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .rootsys import RootSystem, is_dominant

DEFAULT_ORBIT_CAP = 10 ** 7


class OrbitCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Orbit:
    """One Weyl orbit: canonical-ordered points with reflection parities."""

    seed: tuple
    points: tuple            # ((weight, parity), ...) sorted lexicographically
    stabilizer_order: int

    def __len__(self):
        return len(self.points)

    @property
    def weights(self):
        return tuple(w for w, _ in self.points)

    @property
    def parities(self):
        return tuple(p for _, p in self.points)

    def to_json(self) -> str:
        return json.dumps(
            {"seed": list(self.seed),
             "points": [{"w": list(w), "p": p} for w, p in self.points]},
            sort_keys=True)


def _component_weyl_order(cartan, nodes):
    """|W| of one connected subdiagram, classified from its Cartan data."""
    from math import factorial

    n = len(nodes)
    if n == 1:
        return 2
    edges = {}
    for a in range(n):
        for b in range(a + 1, n):
            i, j = nodes[a], nodes[b]
            if cartan[i][j] != 0:
                edges[(a, b)] = cartan[i][j] * cartan[j][i]
    if any(s == 3 for s in edges.values()):
        return 12  # G2
    degree = [0] * n
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    if any(s == 2 for s in edges.values()):
        (a, b), = [e for e, s in edges.items() if s == 2]
        if n == 4 and degree[a] == 2 and degree[b] == 2:
            return 1152  # F4
        return 2 ** n * factorial(n)  # B_n / C_n
    if max(degree) <= 2:
        return factorial(n + 1)  # A_n
    # One branch node; classify by sorted arm lengths.
    hub = degree.index(3)
    arms = []
    for start in [a if b == hub else b for a, b in edges if hub in (a, b)]:
        length, prev, cur = 1, hub, start
        while True:
            nexts = [a if b == cur else b for a, b in edges
                     if cur in (a, b) and prev not in (a, b)]
            if not nexts:
                break
            prev, cur = cur, nexts[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return 2 ** (n - 1) * factorial(n)  # D_n
    return {(1, 2, 2): 51840, (1, 2, 3): 2903040, (1, 2, 4): 696729600}[tuple(arms)]


def stabilizer_order(rs: RootSystem, lam) -> int:
    """Order of the parabolic subgroup fixing the dominant weight lam."""
    zero = [i for i in range(rs.rank) if lam[i] == 0]
    if not zero:
        return 1
    # Split the zero-set into Dynkin-connected components.
    remaining = set(zero)
    order = 1
    while remaining:
        comp = [remaining.pop()]
        grow = list(comp)
        while grow:
            i = grow.pop()
            for j in list(remaining):
                if rs.cartan[i][j] != 0:
                    remaining.remove(j)
                    comp.append(j)
                    grow.append(j)
        order *= _component_weyl_order(rs.cartan, sorted(comp))
    return order


def orbit_size(rs: RootSystem, lam) -> int:
    """|W_lam| without enumeration: |W| over the stabilizer order."""
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    return rs.weyl_order // stabilizer_order(rs, lam)


@lru_cache(maxsize=4096)
def _orbit_cached(rs: RootSystem, lam, max_size):
    size = orbit_size(rs, lam)
    if size > max_size:
        raise OrbitCapExceeded(f"orbit of {lam} has {size} points (cap {max_size})")
    cartan = rs.cartan
    n = rs.rank
    parities = {lam: 0}
    frontier = [lam]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for w in frontier:
            for i in range(n):
                c = w[i]
                if c == 0:
                    continue
                row = cartan[i]
                r = tuple(w[k] - c * row[k] for k in range(n))
                if r not in parities:
                    parities[r] = depth & 1
                    nxt.append(r)
        frontier = nxt
    assert len(parities) == size
    pts = tuple(sorted(parities.items()))
    return Orbit(seed=lam, points=pts, stabilizer_order=rs.weyl_order // size)


def weyl_orbit(rs: RootSystem, lam, max_size: int = DEFAULT_ORBIT_CAP) -> Orbit:
    """BFS closure of a dominant weight under simple reflections.

    Parity of each point is its BFS depth mod 2, i.e. the length of the
    shortest reflection word reaching it from the seed.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    return _orbit_cached(rs, lam, max_size)
