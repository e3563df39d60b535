"""Decomposition of orbit-function products into orbit-function sums.

Products of C- and S-functions expand over all pairs of orbit points; the
(signed) multiset of pair sums is Weyl-(skew-)invariant, so its value at a
dominant point is the coefficient of that orbit in the decomposition.  This
is the engine behind every recurrence the polynomial builder consumes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import kernels
from .orbits import weyl_orbit, orbit_size, DEFAULT_ORBIT_CAP
from .polyring import MonomialOrder
from .rootsys import RootSystem, congruence_number, is_dominant, is_strictly_dominant


@dataclass(frozen=True)
class OrbitCombination:
    """Integer combination of C- or S-functions, keyed by dominant weight."""

    kind: str                 # "C" or "S"
    terms: tuple              # ((weight, coeff), ...) sorted descending

    def coeff(self, w):
        return dict(self.terms).get(tuple(w), 0)

    def as_dict(self):
        return dict(self.terms)

    def __len__(self):
        return len(self.terms)


def _combine(rs, kind, counts):
    order = MonomialOrder(rs)
    items = sorted(counts.items(), key=lambda t: order.key(t[0]), reverse=True)
    return OrbitCombination(kind=kind, terms=tuple(items))


def cc_product(rs: RootSystem, lam, mu, max_size=DEFAULT_ORBIT_CAP) -> OrbitCombination:
    """C_lam * C_mu as a positive integer combination of C-functions."""
    lam, mu = tuple(lam), tuple(mu)
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError("cc_product needs dominant weights")
    oa = weyl_orbit(rs, lam, max_size)
    ob = weyl_orbit(rs, mu, max_size)
    counts = kernels.pair_counts_dominant(oa.weights, ob.weights)
    return _combine(rs, "C", counts)


def cs_product(rs: RootSystem, mu, lam, max_size=DEFAULT_ORBIT_CAP) -> OrbitCombination:
    """C_mu * S_lam as a signed combination of S-functions.

    Pair sums landing on a chamber wall cancel identically and never appear;
    coefficients at strictly dominant weights may be negative.
    """
    mu, lam = tuple(mu), tuple(lam)
    if not is_dominant(mu):
        raise ValueError("cs_product needs a dominant C-side weight")
    if not is_strictly_dominant(lam):
        raise ValueError("cs_product needs a strictly dominant S-side weight")
    oc = weyl_orbit(rs, mu, max_size)
    os_ = weyl_orbit(rs, lam, max_size)
    counts = kernels.pair_counts_signed(
        oc.weights, (0,) * len(oc), os_.weights, os_.parities, True)
    return _combine(rs, "S", counts)


def ss_product(rs: RootSystem, lam, mu, max_size=DEFAULT_ORBIT_CAP) -> OrbitCombination:
    """S_lam * S_mu as a signed combination of C-functions."""
    lam, mu = tuple(lam), tuple(mu)
    if not (is_strictly_dominant(lam) and is_strictly_dominant(mu)):
        raise ValueError("ss_product needs strictly dominant weights")
    oa = weyl_orbit(rs, lam, max_size)
    ob = weyl_orbit(rs, mu, max_size)
    counts = kernels.pair_counts_signed(
        oa.weights, oa.parities, ob.weights, ob.parities, False)
    return _combine(rs, "C", counts)


def raw_signed_multiset(rs: RootSystem, lam, mu, kind_a="C", kind_b="C",
                        max_size=DEFAULT_ORBIT_CAP):
    """Diagnostic: full pair-sum multiset as point -> [plus, minus] tallies."""
    oa = weyl_orbit(rs, tuple(lam), max_size)
    ob = weyl_orbit(rs, tuple(mu), max_size)
    pa = oa.parities if kind_a == "S" else (0,) * len(oa)
    pb = ob.parities if kind_b == "S" else (0,) * len(ob)
    return kernels.pair_counts_raw(oa.weights, pa, ob.weights, pb)


def check_term_count(rs: RootSystem, combo: OrbitCombination, lam, mu) -> bool:
    """Exponential-term conservation for C*C decompositions."""
    lhs = orbit_size(rs, lam) * orbit_size(rs, mu)
    rhs = sum(c * orbit_size(rs, w) for w, c in combo.terms)
    return lhs == rhs


def check_congruence(rs: RootSystem, combo: OrbitCombination, lam, mu) -> bool:
    """Every term must carry the congruence number of the product."""
    want = _congruence_sum(rs, lam, mu)
    return all(congruence_number(rs, w) == want for w, _ in combo.terms)


def _congruence_sum(rs, lam, mu):
    c1 = congruence_number(rs, lam)
    c2 = congruence_number(rs, mu)
    if rs.algebra.series == "D" and rs.rank % 2 == 0:
        # Two independent mod-2 labels, packed as a 2-bit code: add bitwise.
        return 2 * (((c1 >> 1) + (c2 >> 1)) & 1) + (((c1 & 1) + (c2 & 1)) & 1)
    return (c1 + c2) % rs.center_order


@dataclass(frozen=True)
class Recursion:
    """One relation X_j * F_lam = F_top + sum(coeff * F_w), F in {C, S}."""

    rs: RootSystem
    var: int
    seed: tuple
    kind: str
    top: tuple                # (weight, 1)
    rest: tuple               # ((weight, coeff), ...) descending

    @property
    def combination(self):
        return OrbitCombination(self.kind, (self.top,) + self.rest)

    def as_multiset(self):
        return dict((self.top,) + self.rest)

    def render_text(self) -> str:
        return f"X_{self.var}{self._sym(self.seed)} = " + self._rhs_text()

    def _sym(self, w):
        k = self.kind
        if k == "C":
            if all(c == 0 for c in w):
                return "1" if any(True for _ in w) else ""
            if sum(w) == 1 and max(w) == 1:
                return f"X_{w.index(1) + 1}"
        body = ",".join(str(c) for c in w)
        return f"{k}_({body})"

    def _term_text(self, w, coeff):
        sym = self._sym(w)
        if sym == "1":
            return str(coeff)
        return sym if coeff == 1 else f"{coeff}{sym}"

    def _rhs_text(self):
        parts = [self._term_text(*self.top)]
        parts += [self._term_text(w, c) for w, c in self.rest]
        return " + ".join(parts)

    def render_json(self) -> str:
        return json.dumps({
            "lhs": {"var": self.var, "weight": list(self.seed), "kind": self.kind},
            "rhs": [{"weight": list(w), "coeff": c}
                    for w, c in (self.top,) + self.rest],
        }, sort_keys=True)

    def render_latex(self) -> str:
        def sym(w):
            body = ",".join(str(c) for c in w)
            return f"{self.kind}_{{({body})}}"

        def term(w, c):
            if all(x == 0 for x in w):
                return str(c)
            return sym(w) if c == 1 else f"{c}{sym(w)}"

        rhs = " + ".join(term(w, c) for w, c in (self.top,) + self.rest)
        return f"X_{{{self.var}}}{sym(self.seed)} = {rhs}"


def derive_recursion(rs: RootSystem, j: int, lam, kind: str,
                     max_size=DEFAULT_ORBIT_CAP) -> Recursion:
    """Expand X_j * C_lam (or X_j * S_lam) with the top term isolated.

    The top weight lam + w_j always has coefficient 1, which is what makes
    the relation solvable for ever higher polynomials.
    """
    lam = tuple(lam)
    if not 1 <= j <= rs.rank:
        raise IndexError(f"variable index {j} out of range")
    wj = rs.fundamental_weight(j)
    if kind == "C":
        combo = cc_product(rs, lam, wj, max_size)
    elif kind == "S":
        combo = cs_product(rs, wj, lam, max_size)
    else:
        raise ValueError(f"kind must be C or S, got {kind!r}")
    top_w = tuple(a + b for a, b in zip(lam, wj))
    terms = combo.as_dict()
    if terms.get(top_w) != 1:
        raise AssertionError(f"top term {top_w} has coefficient {terms.get(top_w)}")
    rest = tuple((w, c) for w, c in combo.terms if w != top_w)
    return Recursion(rs=rs, var=j, seed=lam, kind=kind, top=(top_w, 1), rest=rest)
