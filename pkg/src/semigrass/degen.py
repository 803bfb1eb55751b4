"""Ideal bijections, generator orders, Hibi correspondences and the graded checks.

Two generator families index the same algebra:

* ``ss``: increasing tuples at every shift k, ideal map ``phi_ss``,
  order polytope of ``Q~``;
* ``pbw``: tuples whose reduction ``alpha - k mod n`` is a PBW tuple, ideal
  map ``phi_pbw``, interpolating polytope with ``O`` the diagonal cells.

The sagbi and basis statements are checked one bigraded component
``(m generators, shift sum e)`` at a time by exact rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

from .errors import DomainError, InvariantViolation, check_cap
from .pluecker import (
    PBW,
    SS,
    GeneratorIndex,
    closed_initial,
    component_products,
    gen_family,
    generator,
    in_family,
    order_for,
    truncate_d,
)
from .polytope import (
    DIAGONAL,
    ORDER,
    HibiMonomial,
    LatticePoint,
    Partition,
    chain_sum,
    decompose_point,
    hibi_generator,
    weak_chains,
)
from .poset import Q, QTILDE, Cell, OrderIdeal, Poset
from .symalg import ONE, Monomial, VarId, echelon, initial_term, mod1

MAX_COUNTEREXAMPLES = 10


def partition_for(kind: str) -> Partition:
    return Partition(ORDER if kind == SS else DIAGONAL)


# -- the bijections -------------------------------------------------------------


def phi(kind: str, u: GeneratorIndex, p: int, n: int, finite: bool = False) -> OrderIdeal:
    """Order ideal attached to a generator index.

    With ``finite=True`` the ideal is returned as an ideal of ``Q`` (needs k=0).
    """
    if not in_family(p, n, u.I, u.k, kind):
        raise DomainError(f"{u} is not in the {kind} family")
    if finite and u.k:
        raise DomainError("finite ideals need k = 0")
    P = Poset(Q if finite else QTILDE, p, n)
    return _phi(kind, u.I, u.k, P)


@lru_cache(maxsize=None)
def _phi(kind, I, k, P: Poset) -> OrderIdeal:
    p, n = P.p, P.n
    if kind == SS:
        cells = set()
        for i in range(1, k + p + 1):
            for j in P.row(i):
                if i <= k or j <= i + I[p - (i - k)] - 1:
                    cells.add(Cell(i, j))
        return OrderIdeal(P, frozenset(cells))
    return P.downward_closure(pbw_cells(GeneratorIndex(I, k, PBW), p, n))


def pbw_cells(u: GeneratorIndex, p: int, n: int) -> list:
    """Cells ``q_{k+i, k+(alpha_i - k mod n)}`` lying above the diagonal block."""
    out = []
    for i, a in enumerate(u.I, 1):
        col = u.k + mod1(a - u.k, n)
        if col > p:
            out.append(Cell(u.k + i, col))
    return out


def phi_inverse(kind: str, J: OrderIdeal) -> GeneratorIndex:
    P = J.poset
    p, n = P.p, P.n
    k = J.level
    rows = {}
    for c in J.cells:
        rows[c.i] = max(rows.get(c.i, 0), c.j)
    if kind == SS:
        alpha = [0] * p
        for i in range(k + 1, k + p + 1):
            top = rows.get(i, max(p + 1, i) - 1)
            alpha[p - (i - k)] = top - i + 1
        u = GeneratorIndex(tuple(alpha), k, SS)
    else:
        inner = [Cell(c.i - k, c.j - k) for c in J.cells if k < c.i <= k + p and c.j > k + p]
        finite = Poset(Q, p, n)
        beta = list(range(1, p + 1))
        for c in finite.max_elements(inner):
            beta[c.i - 1] = c.j
        u = GeneratorIndex(tuple(mod1(b + k, n) for b in beta), k, PBW)
    if not in_family(p, n, u.I, u.k, kind) or phi(kind, u, p, n) != OrderIdeal(
        Poset(QTILDE, p, n), J.cells
    ):
        raise InvariantViolation(f"phi_{kind} is not inverted on {J.sorted_cells}")
    return u


# -- generator orders -----------------------------------------------------------


def gen_leq(kind: str, u: GeneratorIndex, v: GeneratorIndex, n: int) -> bool:
    if u.family != v.family or u.family != kind or len(u.I) != len(v.I):
        raise DomainError("gen_leq needs indices from the same family and p")
    p = len(u.I)
    k, k2 = u.k, v.k
    if k > k2:
        return False
    dk = k2 - k
    if kind == SS:
        return all(u.I[i] <= v.I[i + dk] for i in range(p - dk))
    for i in range(dk + 1, p + 1):
        lhs = k + mod1(u.I[i - 1] - k, n)
        if not any(lhs <= k2 + mod1(v.I[i2 - 1] - k2, n) for i2 in range(i - dk, p + 1)):
            return False
    return True


@dataclass
class IsoReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    cell: dict | None = None
    dim: int | None = None
    expected: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, item: dict):
        if len(self.failures) < MAX_COUNTEREXAMPLES:
            self.failures.append(item)
        else:
            self.failures[-1] = {"truncated": True}

    def to_json(self) -> dict:
        d = {"check": self.name}
        if self.cell is not None:
            d["cell"] = self.cell
            d["dim"] = self.dim
            d["expected"] = self.expected
        d["checked"] = self.checked
        d["status"] = "ok" if self.ok else "fail"
        d["counterexamples"] = self.failures
        return d


def check_bijection(kind: str, p: int, n: int, kmax: int) -> IsoReport:
    rep = IsoReport(f"bijection-{kind}")
    P = Poset(QTILDE, p, n)
    images = {}
    for u in gen_family(p, n, kind, kmax):
        rep.checked += 1
        J = phi(kind, u, p, n)
        if not P.is_order_ideal(J.cells) or J.level != u.k:
            rep.fail({"index": u.to_json(), "reason": "not an ideal of the right level"})
        if J in images:
            rep.fail({"index": u.to_json(), "reason": "collision", "other": images[J].to_json()})
        images[J] = u
        if phi_inverse(kind, J) != u:
            rep.fail({"index": u.to_json(), "reason": "round trip"})
    for J in P.enumerate_ideals(kmax):
        rep.checked += 1
        if J not in images:
            rep.fail({"ideal": J.to_json(), "reason": "not in image"})
    return rep


def check_order_isomorphism(kind: str, p: int, n: int, kmax: int) -> IsoReport:
    rep = IsoReport(f"order-isomorphism-{kind}")
    gens = gen_family(p, n, kind, kmax)
    check_cap(len(gens) ** 2, "generator pairs")
    ideals = {u: phi(kind, u, p, n) for u in gens}
    for u in gens:
        for v in gens:
            rep.checked += 1
            lhs = gen_leq(kind, u, v, n)
            rhs = ideals[u] <= ideals[v]
            if lhs != rhs:
                rep.fail({"u": u.to_json(), "v": v.to_json(), "gen_leq": lhs, "inclusion": rhs})
    return rep


# -- Laurent monomials and psi ----------------------------------------------------


class LaurentMonomial:
    __slots__ = ("exps",)

    def __init__(self, exps=None):
        self.exps = {VarId(*v): e for v, e in (exps or {}).items() if e}

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        d = dict(self.exps)
        for v, e in other.exps.items():
            d[v] = d.get(v, 0) + e
        return LaurentMonomial(d)

    def __pow__(self, e: int) -> "LaurentMonomial":
        return LaurentMonomial({v: x * e for v, x in self.exps.items()})

    def __eq__(self, other):
        return isinstance(other, LaurentMonomial) and self.exps == other.exps

    def __hash__(self):
        return hash(frozenset(self.exps.items()))

    def is_polynomial(self) -> bool:
        return all(e > 0 for e in self.exps.values())

    def to_monomial(self) -> Monomial:
        if not self.is_polynomial():
            raise DomainError(f"{self} has negative exponents")
        return Monomial(self.exps)

    @classmethod
    def of(cls, v, e=1) -> "LaurentMonomial":
        return cls({VarId(*v): e})

    def __str__(self):
        if not self.exps:
            return "1"
        return "".join(
            str(v) + (f"^{e}" if e != 1 else "") for v, e in sorted(self.exps.items())
        )

    __repr__ = __str__


def zeta(p: int, n: int, i: int, j: int) -> VarId:
    m, t = divmod(i - 1, p)
    return VarId(t + 1, mod1(j, n), m)


def psi_y(p: int, n: int, c) -> LaurentMonomial:
    i, j = c
    if not Poset(QTILDE, p, n).contains(c):
        raise DomainError(f"q_{{{i},{j}}} is not a cell of Q~({p},{n})")
    if j > i:
        return LaurentMonomial.of(zeta(p, n, i, j)) * LaurentMonomial.of(zeta(p, n, i, i), -1)
    return LaurentMonomial.of(zeta(p, n, i, i)) * LaurentMonomial.of(zeta(p, n, i - p, i - p), -1)


def psi_s(p: int) -> LaurentMonomial:
    return LaurentMonomial({VarId(i, i, 0): 1 for i in range(1, p + 1)})


def psi_image(p: int, n: int, g: HibiMonomial) -> LaurentMonomial:
    out = psi_s(p) ** g.degree
    for c, e in g.point.coords:
        out = out * psi_y(p, n, c) ** e
    return out


# -- Hibi correspondence -------------------------------------------------------------


def hibi_correspondence(kind: str, u: GeneratorIndex, p: int, n: int) -> tuple:
    """``(sign record, s * y^{v(phi(u))})`` for the matching partition."""
    record, _ = closed_initial(kind, p, n, u.I, u.k)
    return record, hibi_generator(phi(kind, u, p, n), partition_for(kind))


def hibi_to_z(kind: str, p: int, n: int, g: HibiMonomial) -> Monomial:
    """Translate a Hibi-ring monomial to a z-monomial through the correspondence.

    pbw: apply psi.  ss: decompose the exponent point into its chain of ideals
    and multiply the initial monomials of the corresponding generators.
    """
    if kind == PBW:
        return psi_image(p, n, g).to_monomial()
    P = Poset(QTILDE, p, n)
    out = ONE
    for J in decompose_point(g.point, g.degree, partition_for(SS), P):
        u = phi_inverse(SS, J)
        out = out * closed_initial(SS, p, n, u.I, u.k)[1]
    return out


def check_psi(p: int, n: int, kmax: int, max_degree: int = 2) -> IsoReport:
    """psi reproduces every closed-form pbw initial monomial, and is injective."""
    rep = IsoReport("psi")
    part = partition_for(PBW)
    for u in gen_family(p, n, PBW, kmax):
        rep.checked += 1
        img = psi_image(p, n, hibi_generator(phi(PBW, u, p, n), part))
        _, expected = closed_initial(PBW, p, n, u.I, u.k)
        if not img.is_polynomial() or img.to_monomial() != expected:
            rep.fail({"index": u.to_json(), "psi": str(img), "closed_form": str(expected)})
    ideals = Poset(QTILDE, p, n).enumerate_ideals(kmax)
    seen = {}
    for deg in range(1, max_degree + 1):
        for chain in weak_chains(ideals, deg):
            rep.checked += 1
            g = HibiMonomial(deg, chain_sum(chain, part))
            img = psi_image(p, n, g)
            if img in seen and seen[img] != g:
                rep.fail({"psi": str(img), "hibi": [str(g), str(seen[img])], "reason": "not injective"})
            seen[img] = g
    return rep


# -- chains ---------------------------------------------------------------------------


def generator_chains(kind: str, p: int, n: int, m: int, e: int) -> list:
    """Weakly increasing m-chains of family indices with shift sum e."""
    gens = gen_family(p, n, kind, e)
    out = []

    def rec(chain, left, budget):
        if left == 0:
            if budget == 0:
                out.append(tuple(chain))
                check_cap(len(out), "generator chains")
            return
        for v in gens:
            # shifts are weakly increasing, so the remaining factors need >= left * v.k
            if v.k * left > budget:
                continue
            if chain and not gen_leq(kind, chain[-1], v, n):
                continue
            chain.append(v)
            rec(chain, left - 1, budget - v.k)
            chain.pop()

    rec([], m, e)
    return out


def ideal_chains(kind: str, p: int, n: int, m: int, e: int) -> list:
    """Weakly increasing m-chains of ideals of Q~ with level sum e."""
    P = Poset(QTILDE, p, n)
    ideals = P.enumerate_ideals(e)
    return [c for c in weak_chains(ideals, m) if sum(J.level for J in c) == e]


def hilbert_count(kind: str, p: int, n: int, m: int, e: int) -> int:
    if m == 0:
        return 1 if e == 0 else 0
    gens = gen_family(p, n, kind, e)
    succ = {u: [v for v in gens if gen_leq(kind, u, v, n)] for u in gens}

    @lru_cache(maxsize=None)
    def count(u, left, budget):
        if left == 0:
            return 1 if budget == 0 else 0
        return sum(count(v, left - 1, budget - v.k) for v in succ[u] if v.k * left <= budget)

    return sum(count(u, m - 1, e - u.k) for u in gens if u.k * m <= e)


# -- the graded verifications -----------------------------------------------------------


def _check_cell(m, e, d, p):
    if m < 1:
        raise ValueError("m must be at least 1")
    # a single generator keeps its initial term as long as ceil(e/p) <= d
    if d < e and not (m == 1 and e <= d * p):
        raise ValueError("need d >= e so truncation keeps every factor intact")


def sagbi_verify(kind: str, p: int, n: int, m: int, e: int, d: int) -> IsoReport:
    """Initial space of a component vs. the Hibi-ring monomials of that degree."""
    _check_cell(m, e, d, p)
    rep = IsoReport(f"sagbi-{kind}", cell={"m": m, "e": e, "d": d})
    order = order_for(kind, p, n)
    products = [f for _, f in component_products(p, n, kind, m, e, d)]
    S1 = set(echelon(order, products))
    part = partition_for(kind)
    S2 = {}
    chains = ideal_chains(kind, p, n, m, e)
    for chain in chains:
        g = HibiMonomial(m, chain_sum(chain, part))
        z = hibi_to_z(kind, p, n, g)
        if z in S2:
            rep.fail({"reason": "Hibi monomials collide", "z": str(z)})
        S2[z] = chain
    rep.dim, rep.expected = len(S1), len(chains)
    rep.checked = len(S1) + len(S2)
    for z in sorted(S1 - set(S2), key=order.key):
        rep.fail({"reason": "initial monomial outside Hibi image", "monomial": z.to_json()})
    for z in sorted(set(S2) - S1, key=order.key):
        chain = S2[z]
        rep.fail(
            {
                "reason": "Hibi monomial not an initial monomial",
                "monomial": z.to_json(),
                "chain": [J.to_json() for J in chain],
            }
        )
    return rep


def basis_verify(kind: str, p: int, n: int, m: int, e: int, d: int) -> IsoReport:
    """Chain-indexed products: distinct initial monomials, count equals the rank."""
    _check_cell(m, e, d, p)
    rep = IsoReport(f"basis-{kind}", cell={"m": m, "e": e, "d": d})
    order = order_for(kind, p, n)
    rank = len(echelon(order, [f for _, f in component_products(p, n, kind, m, e, d)]))
    seen = {}
    chains = generator_chains(kind, p, n, m, e)
    for chain in chains:
        rep.checked += 1
        f = prod((truncate_d(generator(p, n, u), d) for u in chain), start=1)
        if not f:
            rep.fail({"chain": [u.to_json() for u in chain], "reason": "product vanishes"})
            continue
        _, mono = initial_term(order, f)
        if mono in seen:
            rep.fail(
                {
                    "reason": "repeated initial monomial",
                    "chain": [u.to_json() for u in chain],
                    "other": [u.to_json() for u in seen[mono]],
                    "monomial": mono.to_json(),
                    "polynomial": f.to_json(),
                }
            )
        seen[mono] = chain
    rep.dim, rep.expected = rank, len(chains)
    if rank != len(chains):
        rep.fail({"reason": "count differs from rank", "rank": rank, "chains": len(chains)})
    return rep
