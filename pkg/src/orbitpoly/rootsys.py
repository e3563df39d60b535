"""Exact root-system data for the simple Lie algebras.

Weights are plain integer tuples in the omega-basis (fundamental weights).
Evaluation points live in the dual alpha-check basis, so pairing a weight
with a point is the ordinary dot product.  Everything in this module is
exact: Cartan data are integers, Gram data are Fractions, and no floats
appear anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from ._exact import det, mat_inv, mat_solve, smith_normal_form

Weight = tuple  # length-n tuple of ints, omega-basis coordinates

_SERIES = "ABCDEFG"

_EXCEPTIONAL_WEYL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


class RankError(ValueError):
    """Raised for a series/rank combination outside the classification."""


@dataclass(frozen=True)
class AlgebraId:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _SERIES:
            raise RankError(f"unknown series {self.series!r}")
        n = self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[self.series]
        if not ok:
            raise RankError(f"rank {n} not supported for series {self.series}")

    @staticmethod
    def parse(spec) -> "AlgebraId":
        if isinstance(spec, AlgebraId):
            return spec
        s = str(spec).strip()
        if len(s) < 2 or s[0].upper() not in _SERIES:
            raise RankError(f"cannot parse algebra spec {spec!r}")
        try:
            rank = int(s[1:])
        except ValueError:
            raise RankError(f"cannot parse algebra spec {spec!r}") from None
        return AlgebraId(s[0].upper(), rank)

    def __str__(self):
        return f"{self.series}{self.rank}"


def _cartan_matrix(algebra: AlgebraId):
    """Cartan matrix M with rows = simple roots in the omega-basis.

    Convention M[j][k] = 2<a_j, a_k>/<a_k, a_k>.  Classical series use the
    Bourbaki numbering (B_n: last root short; C_n: last root long).  For G2
    the first node carries the 14-dimensional fundamental representation,
    the orientation required by the reference multiplicity and orbit data.
    """
    s, n = algebra.series, algebra.rank
    m = [[2 * int(i == j) for j in range(n)] for i in range(n)]

    def link(i, j, mij=-1, mji=-1):
        m[i][j] = mij
        m[j][i] = mji

    if s in "ABCD" or s == "E":
        for i in range(n - 1):
            link(i, i + 1)
    if s == "B":
        link(n - 2, n - 1, -2, -1)
    elif s == "C":
        link(n - 2, n - 1, -1, -2)
    elif s == "D":
        link(n - 2, n - 1, 0, 0)
        link(n - 3, n - 1)
    elif s == "E":
        # Bourbaki: node 2 branches off node 4; chain 1-3-4-5-...-n.
        for i in range(n - 1):
            link(i, i + 1, 0, 0)
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        prev = chain[0]
        for node in chain[1:]:
            link(prev - 1, node - 1)
            prev = node
        link(2 - 1, 4 - 1)
    elif s == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif s == "G":
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in m)


def _symmetrizers(cartan):
    """Positive integers d_j = <a_j,a_j>/2, normalized so short roots give 1."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        j = todo.pop()
        for k in range(n):
            if k != j and cartan[j][k] != 0 and d[k] is None:
                # symmetry of <a_j, a_k>:  M[j][k] d_k = M[k][j] d_j
                d[k] = d[j] * Fraction(cartan[k][j], cartan[j][k])
                todo.append(k)
    low = min(d)
    d = [x / low for x in d]
    assert all(x.denominator == 1 for x in d)
    return tuple(int(x) for x in d)


class DominantReduction(NamedTuple):
    weight: Weight
    parity: int
    on_wall: bool


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable exact data of one simple algebra; safe to share freely.

    Instances are interned per algebra by build_root_system, so identity
    comparison (the dataclass default with eq=False) is the right equality.
    """

    algebra: AlgebraId
    cartan: tuple
    symmetrizers: tuple          # d_j = half squared length of simple root j
    cartan_inv: tuple            # Fractions, M^-1
    gram_omega: tuple            # Fractions, <w_i, w_j>
    positive_roots: tuple        # omega-basis integer tuples
    highest_root: Weight
    marks: tuple                 # highest root in the alpha-basis
    comarks: tuple               # q_j with xi = sum q_j alpha-check_j
    weyl_order: int
    center_order: int
    _congruence: tuple = field(repr=False)   # (moduli, transform rows) for P/Q labels

    @property
    def rank(self) -> int:
        return self.algebra.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def fundamental_weight(self, j: int) -> Weight:
        return tuple(int(i == j - 1) for i in range(self.rank))

    def inner(self, u, v) -> Fraction:
        """Exact inner product of two weights given in the omega-basis."""
        g = self.gram_omega
        n = self.rank
        return sum(u[i] * g[i][j] * v[j] for i in range(n) for j in range(n))

    def alpha_coords(self, w) -> tuple:
        """Coordinates of a weight in the alpha-basis (Fractions)."""
        inv = self.cartan_inv
        n = self.rank
        return tuple(sum(inv[j][i] * w[j] for j in range(n)) for i in range(n))

    def height(self, w) -> Fraction:
        return sum(self.alpha_coords(w))

    def to_json(self) -> str:
        def frac(x):
            return f"{x.numerator}/{x.denominator}"

        payload = {
            "algebra": str(self.algebra),
            "cartan": [list(r) for r in self.cartan],
            "gram_omega": [[frac(x) for x in row] for row in self.gram_omega],
            "positive_roots": [list(r) for r in self.positive_roots],
            "highest_root": list(self.highest_root),
            "comarks": list(self.comarks),
            "weyl_order": self.weyl_order,
            "center_order": self.center_order,
        }
        return json.dumps(payload, sort_keys=True)


def _weyl_order(series, n):
    if series == "A":
        return factorial(n + 1)
    if series in ("B", "C"):
        return 2 ** n * factorial(n)
    if series == "D":
        return 2 ** (n - 1) * factorial(n)
    return _EXCEPTIONAL_WEYL_ORDERS[(series, n)]


def _positive_root_count(series, n):
    if series == "A":
        return n * (n + 1) // 2
    if series in ("B", "C"):
        return n * n
    if series == "D":
        return n * (n - 1)
    if series == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    return 24 if series == "F" else 6


def _center_order(series, n):
    if series == "A":
        return n + 1
    if series in ("B", "C"):
        return 2
    if series == "D":
        return 4
    if series == "E":
        return {6: 3, 7: 2, 8: 1}[n]
    return 1


def _enumerate_roots(cartan):
    """All roots, closing the simple roots under simple reflections."""
    n = len(cartan)
    simple = [tuple(cartan[i]) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n):
                if w[i] == 0:
                    continue
                r = tuple(w[k] - w[i] * cartan[i][k] for k in range(n))
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def build_root_system(spec) -> RootSystem:
    """Construct the exact root-system data for an algebra spec like "G2"."""
    algebra = AlgebraId.parse(spec)
    n = algebra.rank
    cartan = _cartan_matrix(algebra)
    d = _symmetrizers(cartan)
    cartan_inv = mat_inv(cartan)
    # <w_i, w_j> = (M^-1)[j][i] * d_i ; short roots have squared length 2.
    gram = tuple(tuple(cartan_inv[j][i] * d[i] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            assert gram[i][j] == gram[j][i]

    roots = _enumerate_roots(cartan)
    mt_inv = mat_inv([[cartan[j][i] for j in range(n)] for i in range(n)])

    def acoords(w):
        return tuple(sum(mt_inv[i][j] * w[j] for j in range(n)) for i in range(n))

    positive = []
    for r in roots:
        c = acoords(r)
        assert all(x.denominator == 1 for x in c)
        if all(x >= 0 for x in c):
            positive.append((r, tuple(int(x) for x in c)))
    expected = _positive_root_count(algebra.series, n)
    if len(positive) != expected:
        raise AssertionError(f"{algebra}: found {len(positive)} positive roots, expected {expected}")
    positive.sort(key=lambda rc: (sum(rc[1]), rc[0]))

    dominant_roots = [(r, c) for r, c in positive if all(x >= 0 for x in r)]
    norm = lambda rc: sum(rc[1][i] * d[i] * rc[0][i] for i in range(n))  # <r,r> via alpha expansion
    highest, marks = max(dominant_roots, key=norm)
    comarks = tuple(marks[i] * d[i] for i in range(n))

    moduli, transform = smith_normal_form(
        [[cartan[j][i] for j in range(n)] for i in range(n)])

    rs = RootSystem(
        algebra=algebra,
        cartan=cartan,
        symmetrizers=d,
        cartan_inv=cartan_inv,
        gram_omega=gram,
        positive_roots=tuple(r for r, _ in positive),
        highest_root=highest,
        marks=marks,
        comarks=comarks,
        weyl_order=_weyl_order(algebra.series, n),
        center_order=_center_order(algebra.series, n),
        _congruence=(tuple(moduli), transform),
    )
    _validate(rs)
    return rs


def _validate(rs):
    n = rs.rank
    # M G = diag(d) is the exact dual-pairing identity <a_j, w-check_k> = d_j djk.
    for i in range(n):
        for j in range(n):
            v = sum(rs.cartan[i][k] * rs.gram_omega[k][j] for k in range(n))
            assert v == (rs.symmetrizers[i] if i == j else 0)
    # Gram positive definite: leading principal minors.
    for k in range(1, n + 1):
        assert det([row[:k] for row in rs.gram_omega[:k]]) > 0
    # Highest root reconstructs from comarks.
    for k in range(n):
        v = sum(Fraction(rs.comarks[i], rs.symmetrizers[i]) * rs.cartan[i][k] for i in range(n))
        assert v == rs.highest_root[k]


def reflect(rs: RootSystem, i: int, w) -> Weight:
    """Simple reflection r_i:  (r_i w)_k = w_k - w_i M[i][k].  i is 1-based."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"reflection index {i} out of range for rank {rs.rank}")
    row = rs.cartan[i - 1]
    c = w[i - 1]
    if c == 0:
        return tuple(w)
    return tuple(w[k] - c * row[k] for k in range(rs.rank))


def to_dominant(rs: RootSystem, w) -> DominantReduction:
    """Reduce to the dominant chamber; parity is the minimal word length mod 2."""
    from .kernels import reduce_to_dominant

    dom, parity = reduce_to_dominant(rs.cartan, tuple(w))
    return DominantReduction(dom, parity, any(c == 0 for c in dom))


def is_dominant(w) -> bool:
    return all(c >= 0 for c in w)


def is_strictly_dominant(w) -> bool:
    return all(c > 0 for c in w)


def congruence_number(rs: RootSystem, w) -> int:
    """Label of the coset of w in P/Q (constant on Weyl orbits).

    For the series the tables use this matches the printed closed forms:
    A_n: sum j*w_j mod (n+1); B_n: w_n mod 2; C_n: sum of odd-index
    coordinates mod 2; one-class algebras give 0.  Remaining series get a
    canonical Smith-form coset label (mixed-radix integer for D_even).
    """
    s, n = rs.algebra.series, rs.rank
    if s == "A":
        return sum((j + 1) * w[j] for j in range(n)) % (n + 1)
    if s == "B":
        return w[n - 1] % 2
    if s == "C":
        return sum(w[j] for j in range(0, n, 2)) % 2
    if rs.center_order == 1:
        return 0
    moduli, transform = rs._congruence
    label = 0
    for i in range(n):
        if moduli[i] > 1:
            comp = sum(transform[i][j] * w[j] for j in range(n)) % moduli[i]
            label = label * moduli[i] + comp
    return label


def dominance_diff_in_root_lattice(rs: RootSystem, hi, lo) -> bool:
    """True iff hi - lo is a nonnegative integer combination of simple roots."""
    diff = tuple(a - b for a, b in zip(hi, lo))
    c = rs.alpha_coords(diff)
    return all(x.denominator == 1 and x >= 0 for x in c)


@dataclass(frozen=True)
class FundamentalRegion:
    vertices: tuple    # Fraction tuples in alpha-check coordinates, origin first
    volume: Fraction


def fundamental_region(rs: RootSystem) -> FundamentalRegion:
    """Simplex {x : <a_j, x> >= 0 for all j, <xi, x> <= 1} with exact volume.

    x is in alpha-check coordinates, so <a_j, x> = (M x)_j and <xi, x> is the
    dot product with the highest root's omega-coordinates.
    """
    n = rs.rank
    origin = tuple(Fraction(0) for _ in range(n))
    verts = [origin]
    for j in range(n):
        rows = [list(rs.cartan[i]) for i in range(n) if i != j]
        rows.append(list(rs.highest_root))
        rhs = [0] * (n - 1) + [1]
        verts.append(mat_solve(rows, rhs))
    vol = abs(det([list(v) for v in verts[1:]])) / factorial(n)
    return FundamentalRegion(tuple(verts), vol)
