"""The posets Q(p, n) and Q~(p, n) and their finite order ideals.

Cells are pairs ``(i, j)``.  The finite poset ``Q`` is the ``p x (n-p)``
rectangle ``1 <= i <= p``, ``p+1 <= j <= n`` ordered componentwise.  The
semi-infinite poset ``Q~`` has cells ``i >= 1, j >= p+1, 0 <= j-i <= n-1`` and
``a <= b`` iff one of

    (i)   a.i <= b.i and a.j <= b.j
    (ii)  a.i + p <= b.i
    (iii) a.j + n - p <= b.j

``Q~`` is infinite, so it is only ever described by predicates; ideals are
explicit finite cell sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Callable, Iterable, Iterator, NamedTuple

from .errors import CoordinateError, check_cap

Q = "q"
QTILDE = "qtilde"
KINDS = (Q, QTILDE)


class Cell(NamedTuple):
    i: int
    j: int

    def __str__(self):
        return f"q_{{{self.i},{self.j}}}"

    def shift(self, k: int) -> "Cell":
        return Cell(self.i + k, self.j + k)


@dataclass(frozen=True)
class Poset:
    kind: str
    p: int
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown poset kind {self.kind!r}")
        if not 1 <= self.p < self.n:
            raise ValueError(f"need 1 <= p < n, got p={self.p}, n={self.n}")

    # -- membership and order -------------------------------------------------

    def contains(self, c) -> bool:
        i, j = c
        p, n = self.p, self.n
        if self.kind == Q:
            return 1 <= i <= p and p + 1 <= j <= n
        return i >= 1 and j >= p + 1 and 0 <= j - i <= n - 1

    def check(self, c) -> Cell:
        c = Cell(*c)
        if not self.contains(c):
            raise CoordinateError(f"{c} is not a cell of {self}")
        return c

    def leq(self, a, b) -> bool:
        if a[0] <= b[0] and a[1] <= b[1]:
            return True
        if self.kind == Q:
            return False
        return a[0] + self.p <= b[0] or a[1] + self.n - self.p <= b[1]

    def cell_leq(self, a, b) -> bool:
        """Validated comparison; raises CoordinateError on foreign cells."""
        return self.leq(self.check(a), self.check(b))

    def clause(self, a, b) -> str:
        """Which defining clause witnesses ``a <= b`` ("i", "ii", "iii"), or ""."""
        if a[0] <= b[0] and a[1] <= b[1]:
            return "i"
        if self.kind == QTILDE:
            if a[0] + self.p <= b[0]:
                return "ii"
            if a[1] + self.n - self.p <= b[1]:
                return "iii"
        return ""

    def row(self, i: int) -> range:
        """Column range of row ``i``."""
        if self.kind == Q:
            return range(self.p + 1, self.n + 1)
        return range(max(self.p + 1, i), i + self.n)

    def cells_below(self, c) -> frozenset:
        """The principal ideal of ``c`` (always finite)."""
        i, j = self.check(c)
        top = i if self.kind == Q else max(i, j)
        return frozenset(
            Cell(a, b) for a in range(1, top + 1) for b in self.row(a) if self.leq((a, b), (i, j))
        )

    # -- windows ----------------------------------------------------------------

    def window(self, kmax: int = 0) -> list:
        """All cells that can occur in an ideal of level <= kmax, sorted.

        For ``Q`` this is the whole poset.  The window is downward closed.
        """
        if self.kind == Q:
            return [Cell(i, j) for i in range(1, self.p + 1) for j in self.row(i)]
        return [
            Cell(i, j)
            for i in range(1, kmax + self.p + 1)
            for j in self.row(i)
            if j <= kmax + self.n
        ]

    def left_part(self, k: int) -> frozenset:
        """Cells with ``i <= k`` or ``j <= k + p``: contained in every level-k ideal."""
        if k == 0:
            return frozenset()
        return frozenset(c for c in self.window(k) if c.i <= k or c.j <= k + self.p)

    def rectangle(self, k: int) -> list:
        """The copy ``Q^(k)`` of ``Q`` inside ``Q~``."""
        p, n = self.p, self.n
        return [Cell(i, j) for i in range(k + 1, k + p + 1) for j in range(k + p + 1, k + n + 1)]

    # -- ideals -------------------------------------------------------------------

    def is_order_ideal(self, cells: Iterable) -> bool:
        s = {self.check(c) for c in cells}
        return all(self.cells_below(c) <= s for c in s)

    def ideal(self, cells: Iterable) -> "OrderIdeal":
        s = frozenset(self.check(c) for c in cells)
        if not all(self.cells_below(c) <= s for c in s):
            raise ValueError("cells are not downward closed")
        return OrderIdeal(self, s)

    def downward_closure(self, cells: Iterable) -> "OrderIdeal":
        out = set()
        for c in cells:
            out |= self.cells_below(c)
        return OrderIdeal(self, frozenset(out))

    def max_elements(self, J: "OrderIdeal | Iterable") -> frozenset:
        cells = J.cells if isinstance(J, OrderIdeal) else frozenset(J)
        return frozenset(
            c for c in cells if not any(d != c and self.leq(c, d) for d in cells)
        )

    def ideal_level(self, J: "OrderIdeal | Iterable") -> int:
        """Largest k with ``q_{k+p,k+p}`` in J, else 0 (always 0 on ``Q``)."""
        cells = J.cells if isinstance(J, OrderIdeal) else frozenset(J)
        if self.kind == Q:
            return 0
        diag = [c.i - self.p for c in cells if c.i == c.j]
        return max(diag, default=0)

    def enumerate_ideals(self, kmax: int = 0) -> list:
        """All ideals (of level <= kmax for ``Q~``), sorted by level then cells.

        Each ideal of level k is ``left_part(k)`` plus a shifted ideal of ``Q``
        placed in ``Q^(k)``, so there are exactly ``(kmax+1) * C(n, p)`` of them.
        """
        base = comb(self.n, self.p)
        levels = 1 if self.kind == Q else kmax + 1
        check_cap(base * levels, "order ideals")
        finite = Poset(Q, self.p, self.n)
        q_ideals = sorted(
            (sorted(K) for K in ideals_of_finite(finite.window(), finite.leq)),
        )
        out = []
        for k in range(levels):
            left = self.left_part(k)
            level_k = [
                OrderIdeal(self, left | frozenset(c.shift(k) for c in K)) for K in q_ideals
            ]
            level_k.sort(key=lambda J: J.sorted_cells)
            out.extend(level_k)
        return out

    # -- Hasse diagram --------------------------------------------------------------

    def hasse_edges(self, kmax: int = 0) -> list:
        """Covering pairs ``(a, b)`` with ``a`` covered by ``b`` inside the window."""
        cells = self.window(kmax)
        below = {b: [a for a in cells if a != b and self.leq(a, b)] for b in cells}
        edges = []
        for b in cells:
            lower = below[b]
            for a in lower:
                if not any(c != a and self.leq(a, c) for c in lower):
                    edges.append((a, b))
        edges.sort()
        return edges

    def to_dot(self, kmax: int = 0, highlight: Iterable = ()) -> str:
        """DOT digraph of the Hasse diagram; arrows point to the lesser cell."""
        hl = set(highlight)
        lines = [f'digraph "{self.kind}_{self.p}_{self.n}" {{', "  rankdir=BT;"]
        for c in self.window(kmax):
            attrs = f'label="{c}"'
            if c in hl:
                attrs += ", style=filled, fillcolor=cyan"
            lines.append(f"  q_{c.i}_{c.j} [{attrs}];")
        for a, b in self.hasse_edges(kmax):
            style = "" if self.clause(a, b) == "i" else " [style=dashed, color=gray]"
            lines.append(f"  q_{b.i}_{b.j} -> q_{a.i}_{a.j}{style};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class OrderIdeal:
    poset: Poset
    cells: frozenset

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells)

    def __len__(self):
        return len(self.cells)

    def __contains__(self, c):
        return Cell(*c) in self.cells

    def __le__(self, other: "OrderIdeal") -> bool:
        return self.cells <= other.cells

    def __lt__(self, other: "OrderIdeal") -> bool:
        return self.cells < other.cells

    @cached_property
    def sorted_cells(self) -> tuple:
        return tuple(sorted(self.cells))

    @cached_property
    def level(self) -> int:
        return self.poset.ideal_level(self)

    @cached_property
    def maximal(self) -> frozenset:
        return self.poset.max_elements(self)

    def to_json(self) -> list:
        return [[c.i, c.j] for c in self.sorted_cells]


def ideal_meet_join(J1: OrderIdeal, J2: OrderIdeal) -> tuple:
    if J1.poset != J2.poset:
        raise ValueError("ideals live in different posets")
    return OrderIdeal(J1.poset, J1.cells & J2.cells), OrderIdeal(J1.poset, J1.cells | J2.cells)


def ideals_of_finite(cells: Iterable, leq: Callable) -> Iterator[frozenset]:
    """Yield every order ideal of a finite poset, each exactly once.

    Cells are visited along a linear extension; a cell may join the current
    ideal only when everything strictly below it already has.
    """
    cells = list(cells)
    below = {c: frozenset(d for d in cells if d != c and leq(d, c)) for c in cells}
    order = sorted(cells, key=lambda c: (len(below[c]), c))
    count = 0

    def rec(idx, chosen):
        nonlocal count
        if idx == len(order):
            count += 1
            check_cap(count, "order ideals")
            yield frozenset(chosen)
            return
        c = order[idx]
        yield from rec(idx + 1, chosen)
        if below[c] <= chosen:
            chosen.add(c)
            yield from rec(idx + 1, chosen)
            chosen.discard(c)

    yield from rec(0, set())
