"""Exact sparse polynomials in the orbit variables X_1..X_n.

Coefficients are arbitrary-precision ints; exponent vectors are dense
integer tuples (negative exponents allowed, giving Laurent polynomials for
the exponential-substitution form).  A Polynomial is a value: every
operation returns a new canonical instance with no zero coefficients.
"""

from __future__ import annotations

import heapq
import json
from fractions import Fraction


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if c != 0:
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong arity for nvars={nvars}")
                clean[tuple(e)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, j):
        """X_j, 1-based."""
        e = tuple(int(i == j - 1) for i in range(nvars))
        return cls(nvars, {e: 1})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls(len(exponent), {tuple(exponent): coeff})

    # -- basics -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.nvars, other)
        return isinstance(other, Polynomial) and self.nvars == other.nvars \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError("arity mismatch")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        out = {}
        n = self.nvars
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = tuple(ea[k] + eb[k] for k in range(n))
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    # -- queries ------------------------------------------------------
    def is_laurent(self):
        return any(x < 0 for e in self.terms for x in e)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), 0)

    def leading_monomial(self, order):
        """(exponent, coeff) maximal under a MonomialOrder (or key callable)."""
        key = order.key if hasattr(order, "key") else order
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def substitute(self, values):
        """Evaluate with each variable replaced by a Polynomial (or int)."""
        vals = [Polynomial.constant(self.nvars, v) if isinstance(v, int) else v
                for v in values]
        nv = vals[0].nvars
        out = Polynomial.zero(nv)
        for e, c in self.terms.items():
            term = Polynomial.constant(nv, c)
            for j, k in enumerate(e):
                if k:
                    term = term * vals[j] ** k
            out = out + term
        return out

    def eval_complex(self, point):
        """Direct term-by-term evaluation at a complex point."""
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        total = 0j
        for e, c in self.terms.items():
            v = complex(c)
            for z, k in zip(point, e):
                if k:
                    v *= z ** k
            total += v
        return total

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient self / divisor (raises if it does not divide).

        Single-divisor division with a lexicographic term order; valid for
        Laurent operands since exactness keeps every intermediate monomial
        in a finite set.
        """
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        n = self.nvars
        lead_d = max(divisor.terms)
        cd = divisor.terms[lead_d]
        rem = dict(self.terms)
        heap = [tuple(-x for x in e) for e in rem]
        heapq.heapify(heap)
        q = {}
        while rem:
            while heap:
                e = tuple(-x for x in heap[0])
                if e in rem:
                    break
                heapq.heappop(heap)
            c = rem[e]
            if c % cd != 0:
                raise ValueError("not divisible (leading coefficient)")
            qe = tuple(e[k] - lead_d[k] for k in range(n))
            qc = c // cd
            q[qe] = qc
            for ed, cdd in divisor.terms.items():
                t = tuple(qe[k] + ed[k] for k in range(n))
                v = rem.get(t, 0) - qc * cdd
                if v:
                    if t not in rem:
                        heapq.heappush(heap, tuple(-x for x in t))
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Polynomial(n, q)

    # -- rendering ----------------------------------------------------
    def sorted_terms(self, order=None):
        if order is None:
            key = lambda e: e
        else:
            key = order.key if hasattr(order, "key") else order
        return sorted(self.terms.items(), key=lambda ec: key(ec[0]), reverse=True)

    def _render(self, order, var_fmt, mul=""):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(order):
            factors = [var_fmt(j + 1, k) for j, k in enumerate(e) if k != 0]
            mono = mul.join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mul}{mono}" if mul else f"{abs(c)}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_text(self, order=None, names=None):
        def fmt(j, k):
            name = names[j - 1] if names else f"X{j}"
            return name if k == 1 else f"{name}^{k}"
        return self._render(order, fmt, mul="*")

    def to_latex(self, order=None, names=None):
        def fmt(j, k):
            name = names[j - 1] if names else f"X_{j}"
            return name if k == 1 else f"{name}^{{{k}}}"
        return self._render(order, fmt)

    def __repr__(self):
        return f"Polynomial({self.to_text()})"

    # -- serialization ------------------------------------------------
    def to_json(self, order=None) -> str:
        terms = [{"e": list(e), "c": str(c)} for e, c in self.sorted_terms(order)]
        return json.dumps({"nvars": self.nvars, "terms": terms}, sort_keys=True)

    @classmethod
    def from_json(cls, s) -> "Polynomial":
        data = json.loads(s) if isinstance(s, str) else s
        return cls(data["nvars"],
                   {tuple(t["e"]): int(t["c"]) for t in data["terms"]})


class MonomialOrder:
    """Total order on exponent vectors extending the dominance order.

    Compares the exact root-lattice height first (a positive functional on
    the positive roots, so dominance-comparable pairs are ordered the same
    way), then falls back to lexicographic comparison.
    """

    def __init__(self, rs):
        self.rs = rs
        n = rs.rank
        inv = rs.cartan_inv
        # height(w) = sum of alpha-basis coordinates = <column sums of M^-T, w>
        self._h = tuple(sum(inv[j][i] for i in range(n)) for j in range(n))

    def key(self, e):
        h = sum(c * x for c, x in zip(self._h, e))
        return (h, e)

    def descending(self, exponents):
        return sorted(exponents, key=self.key, reverse=True)

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def height(self, e) -> Fraction:
        return sum(c * x for c, x in zip(self._h, e))
