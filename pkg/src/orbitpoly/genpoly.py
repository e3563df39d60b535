"""Recursive construction of orbit polynomials and character polynomials.

The variables are X_j = C-function of the j-th fundamental weight.  Each
C_lam is obtained by peeling one fundamental weight off lam and solving the
product decomposition for its (always monic) top term.  S-polynomials are
the quotients S_lam / S_rho, i.e. characters, and come from the multiplicity
tables; a second, purely multiplicative route exists for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .multiplicities import weight_multiplicities, kostka_inverse, dim_irrep
from .orbitalg import cc_product, cs_product
from .orbits import orbit_size
from .polyring import MonomialOrder, Polynomial
from .rootsys import RootSystem, is_dominant, is_strictly_dominant


class WallWeightError(ValueError):
    """S-function identically zero: some coordinate of the weight is 0."""


@dataclass
class PolyTable:
    """Memo table of constructed polynomials for one algebra and kind.

    kind: "C", "S" or "char"; variable_mode: "orbit" (X_j = C-function of
    the j-th fundamental weight) or "char" (X_j = j-th fundamental
    character).  Contents are deterministic: they do not depend on the
    order in which entries were requested.
    """

    rs: RootSystem
    kind: str = "C"
    variable_mode: str = "orbit"
    entries: dict = field(default_factory=dict)

    def get(self, lam) -> Polynomial:
        lam = tuple(lam)
        got = self.entries.get(lam)
        if got is None:
            got = _build(self, lam)
            self.entries[lam] = got
        return got


_tables: dict = {}


def _table(rs, kind, mode="orbit") -> PolyTable:
    key = (id(rs), kind, mode)
    tab = _tables.get(key)
    if tab is None:
        tab = PolyTable(rs=rs, kind=kind, variable_mode=mode)
        _tables[key] = tab
    return tab


def _build(tab: PolyTable, lam) -> Polynomial:
    if tab.variable_mode == "char":
        return _to_char_variables(tab.rs, c_polynomial(tab.rs, lam))
    if tab.kind == "C":
        return _c_poly(tab, lam)
    if tab.kind == "S":
        return s_polynomial(tab.rs, lam)
    if tab.kind == "char":
        return character_polynomial(tab.rs, lam)
    raise ValueError(f"unknown table kind {tab.kind!r}")


def _c_poly(tab: PolyTable, lam) -> Polynomial:
    rs = tab.rs
    n = rs.rank
    if all(c == 0 for c in lam):
        return Polynomial.constant(n, 1)
    j = next(i for i, c in enumerate(lam) if c > 0) + 1
    if sum(lam) == 1:
        return Polynomial.variable(n, j)
    prev = tuple(c - int(i == j - 1) for i, c in enumerate(lam))
    combo = cc_product(rs, prev, rs.fundamental_weight(j))
    assert combo.coeff(lam) == 1
    out = Polynomial.variable(n, j) * tab.get(prev)
    for w, c in combo.terms:
        if w != lam:
            out = out - tab.get(w).scale(c)
    return out


def c_polynomial(rs: RootSystem, lam, table: PolyTable | None = None) -> Polynomial:
    """C_lam as a polynomial in X_1..X_n (integer coefficients, monic top)."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    tab = table if table is not None else _table(rs, "C")
    return tab.get(lam)


def character_polynomial(rs: RootSystem, lam, table: PolyTable | None = None) -> Polynomial:
    """Character of the irrep with highest weight lam, in the X variables."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    mult = weight_multiplicities(rs, lam)
    out = Polynomial.zero(rs.rank)
    for mu, m in mult.rows:
        out = out + c_polynomial(rs, mu, table).scale(m)
    return out


def s_polynomial(rs: RootSystem, lam) -> Polynomial:
    """S_lam / S_rho for strictly dominant lam: the character of lam - rho."""
    lam = tuple(lam)
    if not is_strictly_dominant(lam):
        raise WallWeightError(
            f"S_{lam} vanishes identically (wall weight); no quotient defined")
    prev = tuple(c - 1 for c in lam)
    return character_polynomial(rs, prev)


def s_polynomial_product_route(rs: RootSystem, lam) -> Polynomial:
    """S_lam / S_rho built multiplicatively from X_j * S products.

    Independent of the character route; used as a cross-check.  Peels one
    fundamental weight at a time, staying inside the strictly dominant cone.
    """
    lam = tuple(lam)
    if not is_strictly_dominant(lam):
        raise WallWeightError(f"S_{lam} vanishes identically (wall weight)")
    memo: dict = {}

    def build(w) -> Polynomial:
        got = memo.get(w)
        if got is not None:
            return got
        if all(c == 1 for c in w):
            out = Polynomial.constant(rs.rank, 1)
        else:
            j = next(i for i, c in enumerate(w) if c > 1) + 1
            prev = tuple(c - int(i == j - 1) for i, c in enumerate(w))
            combo = cs_product(rs, rs.fundamental_weight(j), prev)
            assert combo.coeff(w) == 1
            out = Polynomial.variable(rs.rank, j) * build(prev)
            for v, c in combo.terms:
                if v != w:
                    out = out - build(v).scale(c)
        memo[w] = out
        return out

    return build(lam)


def inverse_character(rs: RootSystem, mu) -> dict:
    """C_mu as an integer combination of characters: weight -> coefficient.

    Inverts the unit-triangular multiplicity matrix over the dominance-closed
    set below mu.
    """
    mu = tuple(mu)
    if not is_dominant(mu):
        raise ValueError(f"weight {mu} is not dominant")
    order = MonomialOrder(rs)
    support = sorted(weight_multiplicities(rs, mu).as_dict(), key=order.key)
    closed = _dominance_closure(rs, support)
    _, inv = kostka_inverse(rs, closed)
    i = closed.index(mu)
    # chi = m^T C, hence C_i = sum_j inv[j][i] chi_j: read column i.
    return {closed[j]: inv[j][i] for j in range(len(closed)) if inv[j][i] != 0}


def _dominance_closure(rs, weights):
    order = MonomialOrder(rs)
    seen = set()
    queue = list(weights)
    while queue:
        w = queue.pop()
        if w in seen:
            continue
        seen.add(w)
        for v in weight_multiplicities(rs, w).as_dict():
            if v not in seen:
                queue.append(v)
    return sorted(seen, key=order.key)


def fundamental_characters(rs: RootSystem):
    """chi_{w_1}..chi_{w_n} as polynomials in the orbit variables."""
    return [character_polynomial(rs, rs.fundamental_weight(j))
            for j in range(1, rs.rank + 1)]


def _to_char_variables(rs: RootSystem, p: Polynomial) -> Polynomial:
    """Rewrite a polynomial in X through the substitution X_k -> chi_{w_k}.

    The fundamental characters are monic in the monomial order, so repeated
    leading-term elimination terminates and inverts the triangular change of
    variables exactly.
    """
    order = MonomialOrder(rs)
    chis = fundamental_characters(rs)
    out = Polynomial.zero(rs.rank)
    rem = p
    while rem:
        e, c = rem.leading_monomial(order)
        out = out + Polynomial.monomial(e, c)
        prod = Polynomial.constant(rs.rank, c)
        for j, k in enumerate(e):
            if k:
                prod = prod * chis[j] ** k
        rem = rem - prod
    return out


def char_variable_polynomial(rs: RootSystem, lam) -> Polynomial:
    """C_lam written in the fundamental-character variables.

    Coincides with c_polynomial for the A series, where the fundamental
    characters equal the fundamental orbit sums.
    """
    return _table(rs, "C", "char").get(tuple(lam))


def dimension_identity(rs: RootSystem, lam) -> dict:
    """Term-count consistency of the character decomposition of lam."""
    mult = weight_multiplicities(rs, tuple(lam))
    total = sum(m * orbit_size(rs, mu) for mu, m in mult.rows)
    d = dim_irrep(rs, tuple(lam))
    return {"weight": list(lam), "sum_of_orbit_sizes": total, "dim": d, "ok": total == d}
