"""Floating-point evaluation, substitution verification, and orthogonality.

All sampling is seeded and reproducible; integrals over the fundamental
simplex use uniform sorted-spacings sampling in alpha-check coordinates,
where the simplex volume is exactly 1/|W|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .genpoly import c_polynomial, s_polynomial
from .orbits import weyl_orbit, orbit_size
from .polyring import Polynomial
from .rootsys import RootSystem, fundamental_region, is_dominant, is_strictly_dominant

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class EvalContext:
    rs: RootSystem
    seed: int = 0
    n_samples: int = 100
    tolerance: float = 1e-9

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")

    def rng(self):
        return np.random.default_rng(self.seed)


def sample_fundamental_region(rs: RootSystem, n: int, rng) -> np.ndarray:
    """n uniform points of the fundamental simplex (alpha-check coordinates)."""
    region = fundamental_region(rs)
    verts = np.array([[float(c) for c in v] for v in region.vertices])
    u = np.sort(rng.random((n, rs.rank)), axis=1)
    pads = np.concatenate([np.zeros((n, 1)), u, np.ones((n, 1))], axis=1)
    weights = np.diff(pads, axis=1)          # (n, rank+1) barycentric spacings
    return weights @ verts


def eval_orbit_function(rs: RootSystem, kind: str, lam, x):
    """C_lam(x) or S_lam(x) by the direct phase sum over the orbit.

    x: one point or an (m, rank) array in alpha-check coordinates.  An
    S-function at a wall weight is identically zero and returns exact 0.
    """
    lam = tuple(lam)
    pts = np.atleast_2d(np.asarray(x, dtype=float))
    if kind == "S":
        if not is_dominant(lam):
            raise ValueError(f"weight {lam} is not dominant")
        if not is_strictly_dominant(lam):
            out = np.zeros(len(pts), dtype=complex)
            return out if np.ndim(x) > 1 else complex(out[0])
    elif kind != "C":
        raise ValueError(f"kind must be C or S, got {kind!r}")
    orb = weyl_orbit(rs, lam)
    mu = np.array(orb.weights, dtype=float)            # (m, rank)
    phases = np.exp(TWO_PI * 1j * (pts @ mu.T))        # (npts, m)
    if kind == "S":
        signs = np.where(np.array(orb.parities) % 2 == 0, 1.0, -1.0)
        out = phases @ signs
    else:
        out = phases.sum(axis=1)
    return out if np.ndim(x) > 1 else complex(out[0])


def eval_variables(rs: RootSystem, x) -> np.ndarray:
    """Values of the orbit variables X_j = C_{w_j}(x); shape (npts, rank)."""
    pts = np.atleast_2d(np.asarray(x, dtype=float))
    cols = [eval_orbit_function(rs, "C", rs.fundamental_weight(j), pts)
            for j in range(1, rs.rank + 1)]
    return np.stack(cols, axis=1)


def _eval_poly_at(p: Polynomial, values: np.ndarray) -> np.ndarray:
    out = np.zeros(values.shape[0], dtype=complex)
    for e, c in p.terms.items():
        term = np.full(values.shape[0], complex(c))
        for j, k in enumerate(e):
            if k:
                term = term * values[:, j] ** k
        out += term
    return out


def verify_substitution(rs: RootSystem, lam, ctx: EvalContext, kind: str = "C") -> dict:
    """Max deviation of the polynomial route from the direct orbit sum.

    C: P_lam(X_1(x)..X_n(x)) vs C_lam(x).  S: (S_lam/S_rho)(X(x)) * S_rho(x)
    vs S_lam(x).
    """
    lam = tuple(lam)
    rng = ctx.rng()
    x = sample_fundamental_region(rs, ctx.n_samples, rng)
    xvals = eval_variables(rs, x)
    if kind == "C":
        p = c_polynomial(rs, lam)
        direct = eval_orbit_function(rs, "C", lam, x)
        sub = _eval_poly_at(p, xvals)
    else:
        p = s_polynomial(rs, lam)
        direct = eval_orbit_function(rs, "S", lam, x)
        sub = _eval_poly_at(p, xvals) * eval_orbit_function(rs, "S", rs.rho, x)
    dev = float(np.max(np.abs(sub - direct))) if len(x) else 0.0
    return {
        "algebra": str(rs.algebra),
        "kind": kind,
        "weight": list(lam),
        "max_dev": dev,
        "N": ctx.n_samples,
        "seed": ctx.seed,
        "tolerance": ctx.tolerance,
        "pass": dev < ctx.tolerance,
    }


def orthogonality_integral(rs: RootSystem, kind: str, lam, lam2,
                           ctx: EvalContext, chunk: int = 200_000) -> dict:
    """Monte Carlo estimate of the pairing integral over the fundamental region.

    Expected value |W_lam| * |F| for equal C-weights, |W| * |F| for equal
    S-weights, 0 otherwise.  Reports the estimate and its standard error.
    """
    lam, lam2 = tuple(lam), tuple(lam2)
    region = fundamental_region(rs)
    vol = float(region.volume)
    rng = ctx.rng()
    n = ctx.n_samples
    total = 0.0 + 0.0j
    total_abs2 = 0.0
    done = 0
    while done < n:
        m = min(chunk, n - done)
        x = sample_fundamental_region(rs, m, rng)
        f = eval_orbit_function(rs, kind, lam, x)
        g = eval_orbit_function(rs, kind, lam2, x)
        vals = f * np.conj(g)
        total += vals.sum()
        total_abs2 += float((np.abs(vals) ** 2).sum())
        done += m
    mean = total / n
    var = max(total_abs2 / n - abs(mean) ** 2, 0.0)
    stderr = vol * (var / n) ** 0.5
    estimate = vol * mean
    if lam == lam2:
        expected = (orbit_size(rs, lam) if kind == "C" else rs.weyl_order) * vol
    else:
        expected = 0.0
    return {
        "algebra": str(rs.algebra),
        "kind": kind,
        "weights": [list(lam), list(lam2)],
        "estimate": [estimate.real, estimate.imag],
        "stderr": stderr,
        "expected": expected,
        "N": n,
        "seed": ctx.seed,
    }


def laurent_form(rs: RootSystem, kind: str, lam) -> Polynomial:
    """Exponential-substitution form: one Laurent monomial per orbit point."""
    lam = tuple(lam)
    orb = weyl_orbit(rs, lam)
    if kind == "C":
        return Polynomial(rs.rank, {w: 1 for w in orb.weights})
    if kind != "S":
        raise ValueError(f"kind must be C or S, got {kind!r}")
    if not is_strictly_dominant(lam):
        return Polynomial.zero(rs.rank)
    return Polynomial(rs.rank, {w: 1 if p % 2 == 0 else -1 for w, p in orb.points})


def monomial_symmetric_form(rs: RootSystem, lam) -> Polynomial:
    """The Weyl-invariant monomial sum over the orbit (same as laurent C-form)."""
    return laurent_form(rs, "C", lam)


@dataclass(frozen=True)
class TrigForm:
    """Real trigonometric form: sum of coeff * trig(2 pi <f, x>) terms.

    trig is "cos" for symmetric pairings; "sin" terms carry an overall
    factor i (the function equals i * sum coeff * sin(...)).
    """

    trig: str
    terms: tuple      # ((coeff, frequency vector), ...)

    def eval(self, x):
        pts = np.atleast_2d(np.asarray(x, dtype=float))
        out = np.zeros(len(pts), dtype=complex)
        fn = np.cos if self.trig == "cos" else np.sin
        unit = 1.0 if self.trig == "cos" else 1.0j
        for c, f in self.terms:
            out += unit * c * fn(TWO_PI * (pts @ np.asarray(f, dtype=float)))
        return out if np.ndim(x) > 1 else complex(out[0])


TRIG_CLOSED_SERIES = ("A1", "Bn>=3", "Cn>=2", "Deven", "E7", "E8", "F4", "G2")


def trig_substitution_supported(rs: RootSystem) -> bool:
    """Whether every orbit of the algebra is closed under negation."""
    s, n = rs.algebra.series, rs.rank
    return ((s == "A" and n == 1) or (s == "B" and n >= 2) or
            (s == "C" and n >= 2) or (s == "D" and n % 2 == 0) or
            (s == "E" and n in (7, 8)) or s in ("F", "G"))


def cosine_form(rs: RootSystem, kind: str, lam):
    """Pair +/- orbit points into cosines (or sines); None if not closed.

    Supported whenever the orbit satisfies -mu in W_lam for every mu, which
    holds for all orbits of the algebras admitting the trigonometric
    substitution and for self-inverse orbits elsewhere.
    """
    lam = tuple(lam)
    orb = weyl_orbit(rs, lam)
    table = dict(orb.points)
    if any(tuple(-c for c in w) not in table for w in table):
        return None
    terms = []
    sin_like = None
    for w, p in orb.points:
        neg = tuple(-c for c in w)
        sign = 1 if p % 2 == 0 else -1
        if all(c == 0 for c in w):
            terms.append((1, w))
            continue
        if w < neg:      # canonical representative of the +/- pair
            continue
        psign = 1 if table[neg] % 2 == 0 else -1
        if kind == "C":
            terms.append((2, w))
        else:
            pair_sin = sign != psign
            if sin_like is None:
                sin_like = pair_sin
            elif sin_like != pair_sin:
                return None   # mixed pairing cannot be a single trig family
            terms.append((2 * sign, w))
    if kind == "C":
        return TrigForm("cos", tuple(terms))
    return TrigForm("sin" if sin_like else "cos", tuple(terms))
