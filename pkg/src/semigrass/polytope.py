"""Interpolating poset polytopes, their lattice points and Hibi monomials.

A partition ``O | C`` of the cells selects the vertex ``v(J)`` of an ideal:
coordinate 1 on ``J & O`` and on the maximal elements of ``J`` lying in ``C``.
Polytopes are never written down as inequality systems; integer points of
dilations are handled through their unique chain decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Optional

from .errors import InvariantViolation, MembershipError, PartitionError, check_cap
from .poset import QTILDE, Cell, OrderIdeal, Poset, ideals_of_finite

ORDER = "order"
CHAIN = "chain"
DIAGONAL = "diagonal"
EXPLICIT = "explicit"


@dataclass(frozen=True)
class Partition:
    kind: str
    explicit_O: Optional[Callable] = None

    def __post_init__(self):
        if self.kind not in (ORDER, CHAIN, DIAGONAL, EXPLICIT):
            raise PartitionError(f"unknown partition kind {self.kind!r}")
        if (self.kind == EXPLICIT) != (self.explicit_O is not None):
            raise PartitionError("explicit partitions need (only they take) an O-predicate")

    def in_O(self, c) -> bool:
        if self.kind == ORDER:
            return True
        if self.kind == CHAIN:
            return False
        if self.kind == DIAGONAL:
            return c[0] == c[1]
        return bool(self.explicit_O(c))

    def validate(self, poset: Poset):
        if self.kind == DIAGONAL and poset.kind != QTILDE:
            raise PartitionError("the diagonal partition only exists on Q~")


@dataclass(frozen=True, order=True)
class LatticePoint:
    """Finitely supported nonnegative integer point; ``coords`` is sorted, zero-free."""

    coords: tuple = ()

    @classmethod
    def from_dict(cls, d: dict) -> "LatticePoint":
        items = []
        for c, v in d.items():
            if v < 0:
                raise MembershipError(f"negative coordinate at {c}")
            if v:
                items.append((Cell(*c), int(v)))
        return cls(tuple(sorted(items)))

    def as_dict(self) -> dict:
        return dict(self.coords)

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        d = self.as_dict()
        for c, v in other.coords:
            d[c] = d.get(c, 0) + v
        return LatticePoint.from_dict(d)

    def __getitem__(self, c) -> int:
        return self.as_dict().get(Cell(*c), 0)

    @property
    def support(self) -> frozenset:
        return frozenset(c for c, _ in self.coords)

    @property
    def degree(self) -> int:
        return sum(v for _, v in self.coords)

    def sort_key(self):
        return (self.degree, self.coords)

    def to_json(self) -> list:
        return [[[c.i, c.j], v] for c, v in self.coords]

    @classmethod
    def from_json(cls, data) -> "LatticePoint":
        return cls.from_dict({Cell(*c): v for c, v in data})


ZERO = LatticePoint()


def vertex_point(J: OrderIdeal, part: Partition) -> LatticePoint:
    part.validate(J.poset)
    mx = J.maximal
    return LatticePoint(tuple((c, 1) for c in J.sorted_cells if part.in_O(c) or c in mx))


def chain_sum(chain: Iterable[OrderIdeal], part: Partition) -> LatticePoint:
    total = ZERO
    for J in chain:
        total = total + vertex_point(J, part)
    return total


def decompose_point(u: LatticePoint, k: int, part: Partition, poset: Poset) -> tuple:
    """The unique chain ``J_1 <= ... <= J_k`` with ``sum v(J_i) == u``.

    Every ideal of such a chain lies inside the closure of ``supp(u)``, so the
    search is confined to the finite poset formed by that closure.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    part.validate(poset)
    for c in u.support:
        poset.check(c)
    if k == 0:
        if u.coords:
            raise MembershipError("only the zero point lies in the 0-th dilation")
        return ()
    target = u.as_dict()
    S = poset.downward_closure(u.support)
    cands = [
        (J, v)
        for J, v in _vertices_within(poset, part, S.cells)
        if all(target.get(c, 0) >= x for c, x in v.items())
    ]

    found = []

    def rec(rem: dict, kk: int, upper: Optional[frozenset], tail: tuple):
        if len(found) > 1:
            return
        if kk == 0:
            if not any(rem.values()):
                found.append(tail)
            return
        # vertices are 0/1, so no coordinate can exceed the number of steps left
        if max(rem.values(), default=0) > kk:
            return
        for J, v in cands:
            if upper is not None and not J.cells <= upper:
                continue
            if any(rem.get(c, 0) < x for c, x in v.items()):
                continue
            nxt = dict(rem)
            for c, x in v.items():
                nxt[c] -= x
            rec(nxt, kk - 1, J.cells, (J,) + tail)

    rec(target, k, None, ())
    if not found:
        raise MembershipError(f"point is not an integer point of the {k}-th dilation")
    if len(found) > 1:
        raise InvariantViolation(f"ambiguous decomposition: {found[0]} vs {found[1]}")
    return found[0]


@lru_cache(maxsize=4096)
def _vertices_within(poset: Poset, part: Partition, cells: frozenset) -> tuple:
    out = []
    for sub in ideals_of_finite(cells, poset.leq):
        J = OrderIdeal(poset, sub)
        out.append((J, vertex_point(J, part).as_dict()))
    return tuple(out)


def weak_chains(ideals: list, k: int) -> list:
    """All weakly increasing k-chains (by inclusion) drawn from ``ideals``."""
    ideals = sorted(ideals, key=lambda J: (len(J), J.sorted_cells))
    out = []
    for combo in combinations_with_replacement(range(len(ideals)), k):
        chain = [ideals[t] for t in combo]
        if all(a <= b for a, b in zip(chain, chain[1:])):
            out.append(tuple(chain))
            check_cap(len(out), "chains")
    return out


def enumerate_dilation(k: int, part: Partition, ideals: list) -> list:
    """Integer points of the k-th dilation reachable from the given ideal window.

    Raises InvariantViolation if two chains share a sum.
    """
    if k == 0:
        return [ZERO]
    seen = {}
    for chain in weak_chains(ideals, k):
        u = chain_sum(chain, part)
        if u in seen:
            raise InvariantViolation(f"chains {seen[u]} and {chain} share a point")
        seen[u] = chain
    return sorted(seen, key=LatticePoint.sort_key)


def straighten_pair(J1: OrderIdeal, J2: OrderIdeal, part: Partition) -> tuple:
    if J1.poset != J2.poset:
        raise ValueError("ideals live in different posets")
    if J1 <= J2:
        return J1, J2
    if J2 <= J1:
        return J2, J1
    u = vertex_point(J1, part) + vertex_point(J2, part)
    return decompose_point(u, 2, part, J1.poset)


@dataclass(frozen=True)
class HibiMonomial:
    """``s^degree * y^point`` in the generalized Hibi ring."""

    degree: int
    point: LatticePoint

    def __mul__(self, other: "HibiMonomial") -> "HibiMonomial":
        return HibiMonomial(self.degree + other.degree, self.point + other.point)

    def __str__(self):
        ys = "".join(
            f"y_{{{c.i},{c.j}}}" + (f"^{v}" if v > 1 else "") for c, v in self.point.coords
        )
        s = "s" if self.degree == 1 else f"s^{self.degree}"
        return s + ys


def hibi_generator(J: OrderIdeal, part: Partition) -> HibiMonomial:
    return HibiMonomial(1, vertex_point(J, part))


def check_chain_points(poset: Poset, part: Partition, ideals: list, kmax: int) -> tuple:
    """Distinct chain sums and exact recovery by ``decompose_point`` for k <= kmax.

    Returns ``(checked, failures)``.
    """
    part.validate(poset)
    checked, failures = 0, []
    for k in range(1, kmax + 1):
        seen = {}
        for chain in weak_chains(ideals, k):
            checked += 1
            u = chain_sum(chain, part)
            if u in seen:
                failures.append({"k": k, "reason": "shared point", "point": u.to_json()})
                continue
            seen[u] = chain
            try:
                back = decompose_point(u, k, part, poset)
            except (MembershipError, InvariantViolation) as exc:
                failures.append({"k": k, "reason": str(exc), "point": u.to_json()})
                continue
            if back != chain:
                failures.append({"k": k, "reason": "wrong chain", "point": u.to_json()})
    return checked, failures
