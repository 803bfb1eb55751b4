"""Exact sparse polynomials in the variables z_{i,j}^{(k)} and degrevlex orders.

Every order here is a degree reverse lexicographic order attached to an
enumeration of the variables: ``m1 < m2`` iff ``deg m1 < deg m2``, or the
degrees agree and at the latest variable where the exponents differ ``m1`` has
the larger exponent.  Only the supports of the monomials being compared are
inspected, so the infinite variable set is never materialised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

SS_FINITE = "ss-finite"
PBW_FINITE = "pbw-finite"
SS_SEMIINF = "ss-semiinf"
PBW_SEMIINF = "pbw-semiinf"
FAMILIES = (SS_FINITE, PBW_FINITE, SS_SEMIINF, PBW_SEMIINF)


def mod1(a: int, n: int) -> int:
    """``a mod n`` taking values in ``[1, n]``."""
    return (a - 1) % n + 1


class VarId(NamedTuple):
    i: int
    j: int
    k: int = 0

    def __str__(self):
        return f"z_{{{self.i},{self.j}}}^{{({self.k})}}"


class Monomial:
    __slots__ = ("exps", "_hash")

    def __init__(self, exps=()):
        items = exps.items() if isinstance(exps, dict) else exps
        acc = {}
        for v, e in items:
            if e < 0:
                raise ValueError("monomials have nonnegative exponents")
            if e:
                v = VarId(*v)
                acc[v] = acc.get(v, 0) + int(e)
        self.exps = tuple(sorted(acc.items()))
        self._hash = hash(self.exps)

    @classmethod
    def _raw(cls, exps: tuple) -> "Monomial":
        m = cls.__new__(cls)
        m.exps = exps
        m._hash = hash(exps)
        return m

    @classmethod
    def of(cls, *variables) -> "Monomial":
        d = {}
        for v in variables:
            v = VarId(*v)
            d[v] = d.get(v, 0) + 1
        return cls(d)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other.exps:
            return self
        if not self.exps:
            return other
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial._raw(tuple(sorted(d.items())))

    def __pow__(self, e: int) -> "Monomial":
        return Monomial._raw(tuple((v, x * e) for v, x in self.exps)) if e else ONE

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def variables(self) -> tuple:
        return tuple(v for v, _ in self.exps)

    def max_k(self) -> int:
        return max((v.k for v, _ in self.exps), default=-1)

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        if not self.exps:
            return "1"
        return "".join(str(v) + (f"^{e}" if e > 1 else "") for v, e in self.exps)

    def to_json(self) -> list:
        return [[[v.i, v.j, v.k], e] for v, e in self.exps]

    @classmethod
    def from_json(cls, data) -> "Monomial":
        return cls([(tuple(v), e) for v, e in data])


ONE = Monomial()


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Immutable by convention: arithmetic always returns a new object."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in (terms.items() if isinstance(terms, dict) else terms):
                c = _frac(c)
                if c:
                    m = m if isinstance(m, Monomial) else Monomial(m)
                    s = self.terms.get(m, 0) + c
                    if s:
                        self.terms[m] = s
                    else:
                        self.terms.pop(m, None)

    @classmethod
    def var(cls, i, j, k=0) -> "Polynomial":
        return cls({Monomial.of((i, j, k)): 1})

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def _clean(cls, d: dict) -> "Polynomial":
        f = cls.__new__(cls)
        f.terms = {m: c for m, c in d.items() if c}
        return f

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return Polynomial._clean({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        d = dict(self.terms)
        for m, c in other.terms.items():
            d[m] = d.get(m, 0) + c
        return Polynomial._clean(d)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _frac(other)
            return Polynomial._clean({m: c * x for m, x in self.terms.items()})
        d = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                d[m] = d.get(m, 0) + c1 * c2
        return Polynomial._clean(d)

    __rmul__ = __mul__

    def variables(self) -> set:
        return {v for m in self.terms for v in m.variables}

    def degrees(self) -> set:
        """Set of bidegrees ``(total, sum of k)`` occurring."""
        return {(m.degree, sum(v.k * e for v, e in m.exps)) for m in self.terms}

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: t[0].exps)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in self.sorted_terms())

    def to_json(self) -> list:
        return [[m.to_json(), frac_str(c)] for m, c in self.sorted_terms()]


def frac_str(c) -> str:
    c = _frac(c)
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class OrderSpec:
    family: str
    p: int
    n: int
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown order family {self.family!r}")
        if not 1 <= self.p < self.n:
            raise ValueError("need 1 <= p < n")

    def rank(self, v) -> tuple:
        """Position of ``v`` in the variable enumeration (smaller = earlier)."""
        r = self._cache.get(v)
        if r is None:
            r = self._cache[v] = self._rank(VarId(*v))
        return r

    def _rank(self, v: VarId) -> tuple:
        p, n = self.p, self.n
        if not (1 <= v.i <= p and 1 <= v.j <= n and v.k >= 0):
            raise ValueError(f"{v} outside the variable range for p={p}, n={n}")
        if self.family in (SS_FINITE, PBW_FINITE) and v.k != 0:
            raise ValueError(f"{self.family} only orders k=0 variables, got {v}")
        if self.family in (SS_FINITE, SS_SEMIINF):
            return (v.k, v.i, v.j)
        start = mod1(v.k * p + v.i, n)
        return (v.k, v.i, (v.j - start) % n)

    def key(self, m: Monomial) -> tuple:
        """Sort key realising the order: ``key(m1) < key(m2)`` iff ``m1 < m2``."""
        ranked = sorted(((self.rank(v), e) for v, e in m.exps), reverse=True)
        return (m.degree, tuple((tuple(-x for x in r), -e) for r, e in ranked))

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)


def variable_rank(order: OrderSpec, v) -> tuple:
    return order.rank(v)


def mono_compare(order: OrderSpec, m1: Monomial, m2: Monomial) -> int:
    """-1, 0, 1 as ``m1`` is less than, equal to, greater than ``m2``."""
    return order.compare(m1, m2)


def initial_term(order: OrderSpec, f: Polynomial) -> tuple:
    if not f:
        raise ValueError("the zero polynomial has no initial term")
    m = max(f.terms, key=order.key)
    return f.terms[m], m


def echelon(order: OrderSpec, polys: Iterable[Polynomial]) -> list:
    """Pivot monomials of the row-echelon form of the coefficient matrix.

    Columns are all occurring monomials sorted descending by the order; the
    pivot of a row is its first nonzero column, so the pivots are exactly the
    initial monomials of the span.  Returned in descending order.
    """
    polys = list(polys)
    monos = {m for f in polys for m in f.terms}
    cols = sorted(monos, key=order.key, reverse=True)
    index = {m: t for t, m in enumerate(cols)}
    pivots = {}
    for f in polys:
        row = {index[m]: c for m, c in f.terms.items()}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = 1 / row[lead]
                pivots[lead] = {c: x * inv for c, x in row.items()}
                break
            factor = row[lead]
            for c, x in prow.items():
                nv = row.get(c, 0) - factor * x
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return [cols[t] for t in sorted(pivots)]


def initial_space(order: OrderSpec, polys: Iterable[Polynomial]) -> set:
    return set(echelon(order, polys))


def span_rank(polys: Iterable[Polynomial], order: OrderSpec) -> int:
    return len(echelon(order, polys))


@dataclass
class WeightReport:
    M: int
    weights: dict
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def weight_check(M: int, generators: Iterable[Polynomial], order: OrderSpec) -> WeightReport:
    """Check that the weights ``-(M+1)^idx`` pick out each generator's initial term.

    ``idx`` is the 1-based position of a variable among all variables
    occurring in the generators, enumerated by the order.
    """
    generators = list(generators)
    for f in generators:
        for m in f.terms:
            if m.degree > M:
                raise ValueError(f"term {m} has degree above M={M}")
    occurring = sorted({v for f in generators for v in f.variables()}, key=order.rank)
    weights = {v: -((M + 1) ** (t + 1)) for t, v in enumerate(occurring)}
    report = WeightReport(M, weights)
    for f in generators:
        report.checked += 1
        scored = sorted(
            ((sum(weights[v] * e for v, e in m.exps), m) for m in f.terms),
            key=lambda t: t[0],
            reverse=True,
        )
        _, expected = initial_term(order, f)
        top_w, top_m = scored[0]
        if len(scored) > 1 and scored[1][0] == top_w:
            report.failures.append({"poly": str(f), "reason": "weight tie", "weight": top_w})
        elif top_m != expected:
            report.failures.append(
                {"poly": str(f), "reason": "mismatch", "weight_max": str(top_m), "initial": str(expected)}
            )
    return report
