"""Dominant-weight multiplicities, their triangular matrix, and dimensions.

The multiplicity recursion runs in integer arithmetic: the rational Gram
matrix is scaled by its common denominator, which cancels between the
numerator and denominator of every multiplicity.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, lcm

from . import kernels
from .orbits import orbit_size
from .polyring import MonomialOrder
from .rootsys import RootSystem, is_dominant
from ._exact import unitriangular_int_inverse


@lru_cache(maxsize=None)
def _int_gram(rs: RootSystem):
    scale = lcm(*[f.denominator for row in rs.gram_omega for f in row])
    g = tuple(tuple(int(f * scale) for f in row) for row in rs.gram_omega)
    return g, scale


def _ip(g, u, v):
    n = len(u)
    total = 0
    for i in range(n):
        ui = u[i]
        if ui:
            row = g[i]
            total += ui * sum(row[j] * v[j] for j in range(n))
    return total


def dominant_weight_diagram(rs: RootSystem, lam):
    """All dominant mu with lam - mu in the positive root lattice."""
    lam = tuple(lam)
    n = rs.rank
    inv = rs.cartan_inv
    bounds = []
    for i in range(n):
        b = sum(inv[j][i] * lam[j] for j in range(n))
        bounds.append(max(0, floor(b)))
    mt = [[rs.cartan[j][i] for j in range(n)] for i in range(n)]  # columns = roots
    out = []
    for c in itertools.product(*(range(b + 1) for b in bounds)):
        mu = tuple(lam[i] - sum(mt[i][j] * c[j] for j in range(n)) for i in range(n))
        if all(x >= 0 for x in mu):
            out.append(mu)
    return out


@dataclass(frozen=True)
class MultiplicityTable:
    rs: RootSystem
    highest: tuple
    rows: tuple                # ((mu, m), ...) descending in the monomial order

    def as_dict(self):
        return dict(self.rows)

    def multiplicity(self, mu):
        return dict(self.rows).get(tuple(mu), 0)

    def dimension(self) -> int:
        return sum(m * orbit_size(self.rs, mu) for mu, m in self.rows)


@lru_cache(maxsize=8192)
def _weight_multiplicities_cached(rs: RootSystem, lam):
    g, _ = _int_gram(rs)
    n = rs.rank
    rho = rs.rho
    lam_rho = tuple(a + 1 for a in lam)
    lamlam = _ip(g, lam_rho, lam_rho)
    order = MonomialOrder(rs)
    diagram = sorted(dominant_weight_diagram(rs, lam), key=order.key, reverse=True)
    roots = [tuple(r) for r in rs.positive_roots]
    groot = [tuple(sum(g[i][j] * r[j] for j in range(n)) for i in range(n)) for r in roots]

    mult = {lam: 1}
    for mu in diagram[1:]:
        acc = 0
        for r, gr in zip(roots, groot):
            nu = mu
            while True:
                nu = tuple(a + b for a, b in zip(nu, r))
                dom, _ = kernels.reduce_to_dominant(rs.cartan, nu)
                m = mult.get(dom)
                if m is None:
                    break
                acc += m * sum(nu[i] * gr[i] for i in range(n))
        mu_rho = tuple(a + 1 for a in mu)
        denom = lamlam - _ip(g, mu_rho, mu_rho)
        assert denom > 0
        num = 2 * acc
        assert num % denom == 0
        mult[mu] = num // denom
        assert mult[mu] > 0
    rows = tuple((mu, mult[mu]) for mu in diagram)
    return MultiplicityTable(rs=rs, highest=lam, rows=rows)


def weight_multiplicities(rs: RootSystem, lam) -> MultiplicityTable:
    """Multiplicities of all dominant weights of the irrep with highest weight lam."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    return _weight_multiplicities_cached(rs, lam)


def kostka_inverse(rs: RootSystem, weights):
    """Exact inverse of the unit upper-triangular multiplicity matrix.

    `weights` must be dominance-closed and ordered so that lower weights come
    first (matrix entry [i][j] = multiplicity of weights[i] in the irrep with
    highest weight weights[j]).
    """
    ws = [tuple(w) for w in weights]
    index = {w: i for i, w in enumerate(ws)}
    k = len(ws)
    m = [[0] * k for _ in range(k)]
    for j, lam in enumerate(ws):
        for mu, mult in weight_multiplicities(rs, lam).rows:
            i = index.get(mu)
            if i is None:
                raise ValueError(f"weight list not dominance-closed: {mu} missing (needed by {lam})")
            if i > j:
                raise ValueError(f"weight list not ordered compatibly: {mu} after {lam}")
            m[i][j] = mult
    return tuple(tuple(row) for row in m), unitriangular_int_inverse(m)


def dim_irrep(rs: RootSystem, lam) -> int:
    """Dimension by the Weyl product over positive roots, in exact rationals."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    g, _ = _int_gram(rs)
    n = rs.rank
    lam_rho = tuple(a + 1 for a in lam)
    rho = rs.rho
    out = Fraction(1)
    for r in rs.positive_roots:
        out *= Fraction(_ip(g, lam_rho, r), _ip(g, rho, r))
    assert out.denominator == 1
    return int(out)


def closed_form_dimension(rs: RootSystem, lam):
    """Per-algebra closed-form dimension, or None if not covered.

    The rank-2/3 product forms the reference tables use, with two printed
    slips corrected: the C2 form reads (a+2b+3), and the B3 form's seventh
    factor is (2a+2b+c+5) (both pinned by the Weyl formula and the tabulated
    characters).
    """
    s, n = rs.algebra.series, rs.rank
    if (s, n) == ("A", 1):
        return lam[0] + 1
    if (s, n) == ("A", 2):
        a, b = lam
        return (a + 1) * (b + 1) * (a + b + 2) // 2
    if (s, n) == ("C", 2):
        a, b = lam
        return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) // 6
    if (s, n) == ("G", 2):
        a, b = lam
        return ((a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3)
                * (3 * a + b + 4) * (3 * a + 2 * b + 5)) // 120
    if (s, n) == ("A", 3):
        a, b, c = lam
        return ((a + 1) * (b + 1) * (c + 1) * (a + b + 2) * (b + c + 2)
                * (a + b + c + 3)) // 12
    if (s, n) == ("B", 3):
        a, b, c = lam
        return ((a + 1) * (b + 1) * (c + 1) * (a + b + 2) * (2 * b + c + 3)
                * (2 * a + 2 * b + c + 5) * (b + c + 2) * (a + b + c + 3)
                * (a + 2 * b + c + 4)) // 720
    if (s, n) == ("C", 3):
        a, b, c = lam
        return ((a + 1) * (b + 1) * (c + 1) * (a + b + 2) * (b + 2 * c + 3)
                * (a + b + 2 * c + 4) * (b + c + 2) * (a + 2 * b + 2 * c + 5)
                * (a + b + c + 3)) // 720
    return None


def multiplicity_report(rs: RootSystem, weights) -> dict:
    """Table-style dump: matrix, inverse, orbit sizes, dimensions, checks."""
    ws = [tuple(w) for w in weights]
    m, inv = kostka_inverse(rs, ws)
    dims = [dim_irrep(rs, w) for w in ws]
    sizes = [orbit_size(rs, w) for w in ws]
    checks = []
    for j, lam in enumerate(ws):
        total = sum(m[i][j] * sizes[i] for i in range(len(ws)))
        checks.append({"weight": list(lam), "sum": total, "dim": dims[j],
                       "ok": total == dims[j]})
    return {
        "algebra": str(rs.algebra),
        "weights": [list(w) for w in ws],
        "multiplicities": [list(r) for r in m],
        "inverse": [list(r) for r in inv],
        "orbit_sizes": sizes,
        "dimensions": dims,
        "dimension_checks": checks,
    }


def multiplicity_report_json(rs, weights) -> str:
    return json.dumps(multiplicity_report(rs, weights), sort_keys=True)
