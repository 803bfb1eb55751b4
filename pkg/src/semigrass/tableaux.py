"""Semi-infinite tableaux and their (PBW-)semistandardness.

A tableau of shift ``(k_1 <= ... <= k_m)`` has boxes ``(i, k_i + j)`` for
``j = 1..p``.  ``columns[i][j-1]`` stores the content at absolute height
``k_i + j``; height 1 is the bottom row.  In the rendered pictures a column is
read top to bottom, i.e. by *descending* height, so the semistandard column
tuple is ``reversed(columns[i])`` while the PBW column tuple is read by
ascending height.

PBW contents live in ``[k_i + 1, k_i + n]``: the content of box ``(i, k_i+j)``
is ``k_i + (alpha_j - k_i mod n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .degen import gen_leq
from .errors import DomainError, check_cap
from .pluecker import PBW, SS, GeneratorIndex, in_family, is_pbw_tuple, pbw_arrangement
from .symalg import mod1


@dataclass(frozen=True)
class SemiInfiniteTableau:
    shifts: tuple
    columns: tuple

    def __post_init__(self):
        shifts = tuple(int(k) for k in self.shifts)
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "columns", cols)
        if len(shifts) != len(cols):
            raise DomainError("one shift per column")
        if any(k < 0 for k in shifts) or any(a > b for a, b in zip(shifts, shifts[1:])):
            raise DomainError(f"shifts must be weakly increasing and nonnegative: {shifts}")
        if len({len(c) for c in cols}) > 1 or any(len(c) == 0 for c in cols):
            raise DomainError("all columns need the same positive height")

    @classmethod
    def from_top_down(cls, shifts, columns) -> "SemiInfiniteTableau":
        """Build from columns written top to bottom, as in pictures."""
        return cls(tuple(shifts), tuple(tuple(reversed(c)) for c in columns))

    @property
    def p(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    @property
    def m(self) -> int:
        return len(self.columns)

    def content(self, i: int, height: int):
        """Content of box (i, height) with 1-based column i, or None if no box."""
        k = self.shifts[i - 1]
        if k < height <= k + self.p:
            return self.columns[i - 1][height - k - 1]
        return None

    def top_down(self) -> tuple:
        return tuple(tuple(reversed(c)) for c in self.columns)

    def to_json(self) -> dict:
        return {"shifts": list(self.shifts), "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, d: dict) -> "SemiInfiniteTableau":
        return cls(tuple(d["shifts"]), tuple(tuple(c) for c in d["columns"]))

    def render(self) -> str:
        """Plain-text grid, top row first; ``#`` marks skipped boxes below a column."""
        if not self.columns:
            return ""
        height = max(self.shifts) + self.p
        width = max(len(str(x)) for c in self.columns for x in c)
        lines = []
        for h in range(height, 0, -1):
            cells = []
            for i in range(1, self.m + 1):
                x = self.content(i, h)
                if x is not None:
                    cells.append(str(x).rjust(width))
                elif h <= self.shifts[i - 1]:
                    cells.append("#".rjust(width))
                else:
                    cells.append(" " * width)
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines) + "\n"


# -- pairwise conditions between neighbouring columns ---------------------------------


def _ss_column_ok(col, n) -> bool:
    return all(1 <= x <= n for x in col) and all(a > b for a, b in zip(col, col[1:]))


def _ss_rows_ok(k1, c1, k2, c2) -> bool:
    p = len(c1)
    for h in range(max(k1, k2) + 1, min(k1, k2) + p + 1):
        if c1[h - k1 - 1] > c2[h - k2 - 1]:
            return False
    return True


def _pbw_column_ok(k, col, n) -> bool:
    return is_pbw_tuple(len(col), n, tuple(x - k for x in col))


def _pbw_rows_ok(k1, c1, k2, c2) -> bool:
    p = len(c1)
    for h in range(k2 + 1, k1 + p + 1):
        x = c1[h - k1 - 1]
        if not any(c2[h2 - k2 - 1] >= x for h2 in range(h, k2 + p + 1)):
            return False
    return True


def is_semistandard(T: SemiInfiniteTableau, n: int) -> bool:
    """Columns strictly increase top to bottom, rows weakly increase left to right."""
    if not all(_ss_column_ok(c, n) for c in T.columns):
        return False
    pairs = zip(T.shifts, T.columns, T.shifts[1:], T.columns[1:])
    return all(_ss_rows_ok(*q) for q in pairs)


def is_pbw_semistandard(T: SemiInfiniteTableau, n: int) -> bool:
    if not all(_pbw_column_ok(k, c, n) for k, c in zip(T.shifts, T.columns)):
        return False
    pairs = zip(T.shifts, T.columns, T.shifts[1:], T.columns[1:])
    return all(_pbw_rows_ok(*q) for q in pairs)


def is_valid(kind: str, T: SemiInfiniteTableau, n: int) -> bool:
    return is_semistandard(T, n) if kind == SS else is_pbw_semistandard(T, n)


# -- chains ------------------------------------------------------------------------------


def column_index(kind: str, k: int, col, n: int) -> GeneratorIndex:
    if kind == SS:
        return GeneratorIndex(tuple(reversed(col)), k, SS)
    return GeneratorIndex(tuple(mod1(x, n) for x in col), k, PBW)


def to_chain(kind: str, T: SemiInfiniteTableau, n: int) -> tuple:
    if not is_valid(kind, T, n):
        raise DomainError(f"tableau is not {kind}-semistandard")
    return tuple(column_index(kind, k, c, n) for k, c in zip(T.shifts, T.columns))


def is_chain(kind: str, chain, n: int) -> bool:
    """Every member lies in the family and consecutive members are comparable."""
    if not all(in_family(len(u.I), n, u.I, u.k, kind) and u.family == kind for u in chain):
        return False
    return all(gen_leq(kind, a, b, n) for a, b in zip(chain, chain[1:]))


def from_chain(kind: str, chain, n: int) -> SemiInfiniteTableau:
    chain = tuple(chain)
    if not is_chain(kind, chain, n):
        raise DomainError("input is not a weakly increasing chain of family indices")
    if kind == SS:
        cols = tuple(tuple(reversed(u.I)) for u in chain)
    else:
        cols = tuple(tuple(u.k + mod1(a - u.k, n) for a in u.I) for u in chain)
    return SemiInfiniteTableau(tuple(u.k for u in chain), cols)


# -- enumeration ------------------------------------------------------------------------------


def shift_sequences(m: int, e: int, low: int = 0):
    """Weakly increasing m-tuples of integers >= low summing to e."""
    if m == 0:
        if e == 0:
            yield ()
        return
    for k in range(low, e // m + 1):
        for rest in shift_sequences(m - 1, e - k, k):
            yield (k,) + rest


def candidate_columns(kind: str, p: int, n: int, k: int) -> list:
    if kind == SS:
        return [tuple(reversed(S)) for S in combinations(range(1, n + 1), p)]
    return sorted(tuple(k + b for b in pbw_arrangement(p, S)) for S in combinations(range(1, n + 1), p))


def enumerate_tableaux(kind: str, p: int, n: int, m: int, e: int) -> list:
    """All valid tableaux with m columns and shift sum e, built box by box."""
    if kind not in (SS, PBW):
        raise ValueError(f"unknown kind {kind!r}")
    column_ok = (lambda k, c: _ss_column_ok(c, n)) if kind == SS else (lambda k, c: _pbw_column_ok(k, c, n))
    rows_ok = _ss_rows_ok if kind == SS else _pbw_rows_ok
    out = []
    for shifts in shift_sequences(m, e):
        cands = {k: [c for c in candidate_columns(kind, p, n, k) if column_ok(k, c)] for k in set(shifts)}

        def rec(cols):
            t = len(cols)
            if t == m:
                out.append(SemiInfiniteTableau(shifts, tuple(cols)))
                check_cap(len(out), "tableaux")
                return
            for c in cands[shifts[t]]:
                if t and not rows_ok(shifts[t - 1], cols[-1], shifts[t], c):
                    continue
                cols.append(c)
                rec(cols)
                cols.pop()

        rec([])
    out.sort(key=lambda T: (T.shifts, T.columns))
    return out
