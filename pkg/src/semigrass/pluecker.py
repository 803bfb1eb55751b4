"""Plücker generators D_I^(k) and their index families.

``D_I^(k)`` is the coefficient of ``t^k`` in the determinant of the ``p x p``
matrix whose c-th column is column ``I[c]`` of ``(z_{i,j}(t))`` with
``z_{i,j}(t) = sum_k z_{i,j}^{(k)} t^k``.  The k=0 coefficients are the
classical minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import comb, prod

from .errors import DomainError, check_cap
from .symalg import Monomial, OrderSpec, Polynomial, VarId, initial_term, mod1

SS = "ss"
PBW = "pbw"
MAX_P = 6


def perm_sign(seq) -> int:
    """Sign of a sequence of distinct comparable values (parity of inversions)."""
    seq = list(seq)
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


def is_pbw_tuple(p: int, n: int, I) -> bool:
    I = tuple(I)
    if len(I) != p or len(set(I)) != p or not all(1 <= a <= n for a in I):
        return False
    big = [a for a in I if a > p]
    return all(a == pos for pos, a in enumerate(I, 1) if a <= p) and big == sorted(big, reverse=True)


def pbw_arrangement(p: int, values) -> tuple:
    """The unique PBW ordering of a p-set of values."""
    vals = set(values)
    big = iter(sorted((a for a in vals if a > p), reverse=True))
    return tuple(pos if pos in vals else next(big) for pos in range(1, p + 1))


def in_family(p: int, n: int, I, k: int, family: str) -> bool:
    I = tuple(I)
    if len(I) != p or k < 0 or not all(1 <= a <= n for a in I):
        return False
    if family == SS:
        return all(a < b for a, b in zip(I, I[1:]))
    if family == PBW:
        return is_pbw_tuple(p, n, tuple(mod1(a - k, n) for a in I))
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class GeneratorIndex:
    I: tuple
    k: int
    family: str

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(self.I))

    @property
    def p(self) -> int:
        return len(self.I)

    def sort_key(self):
        return (self.k, self.I)

    def reduced(self, n: int) -> tuple:
        """``(alpha_i - k mod n)_i``."""
        return tuple(mod1(a - self.k, n) for a in self.I)

    def __str__(self):
        return f"({','.join(map(str, self.I))})^({self.k})"

    def to_json(self) -> dict:
        return {"I": list(self.I), "k": self.k, "family": self.family}

    @classmethod
    def from_json(cls, d: dict) -> "GeneratorIndex":
        return cls(tuple(d["I"]), int(d["k"]), d["family"])


def make_index(p: int, n: int, I, k: int, family: str) -> GeneratorIndex:
    if not in_family(p, n, I, k, family):
        raise DomainError(f"{tuple(I)}^({k}) is not in the {family} family for p={p}, n={n}")
    return GeneratorIndex(tuple(I), k, family)


def pbw_normalize(p: int, n: int, S, k: int = 0) -> tuple:
    """Reorder ``S`` into the PBW family at shift k.

    Returns ``(index, sign)`` where ``sign`` is the sign of the permutation
    taking the input order to the normalized one (+1 for unordered sets).
    """
    given = tuple(S) if not isinstance(S, (set, frozenset)) else tuple(sorted(S))
    if len(given) != p or len(set(given)) != p:
        raise DomainError(f"need {p} distinct values, got {given}")
    if not all(1 <= a <= n for a in given):
        raise DomainError(f"values must lie in [1, {n}]")
    reduced = pbw_arrangement(p, {mod1(a - k, n) for a in given})
    I = tuple(mod1(b + k, n) for b in reduced)
    if isinstance(S, (set, frozenset)):
        return GeneratorIndex(I, k, PBW), 1
    pos = {a: t for t, a in enumerate(given)}
    return GeneratorIndex(I, k, PBW), perm_sign([pos[a] for a in I])


def compositions(k: int, parts: int):
    if parts == 0:
        if k == 0:
            yield ()
        return
    if parts == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in compositions(k - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def plucker_coeff(p: int, n: int, I: tuple, k: int) -> Polynomial:
    """Leibniz expansion of the t^k coefficient of the truncated-series minor."""
    I = tuple(I)
    if not 1 <= p <= MAX_P:
        raise ValueError(f"p must lie in [1, {MAX_P}]")
    if len(I) != p or not all(1 <= a <= n for a in I) or k < 0:
        raise DomainError(f"bad generator index {I}^({k})")
    terms = {}
    comps = list(compositions(k, p))
    for sigma in permutations(range(1, p + 1)):
        sgn = perm_sign(sigma)
        for ks in comps:
            m = Monomial.of(*((sigma[c], I[c], ks[c]) for c in range(p)))
            terms[m] = terms.get(m, 0) + sgn
    return Polynomial(terms)


def truncate_d(f: Polynomial, d: int) -> Polynomial:
    """Send every variable with superscript above d to zero."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return Polynomial._clean({m: c for m, c in f.terms.items() if m.max_k() <= d})


def gen_family(p: int, n: int, family: str, kmax: int) -> list:
    check_cap((kmax + 1) * comb(n, p), "generator indices")
    out = []
    for k in range(kmax + 1):
        for S in combinations(range(1, n + 1), p):
            if family == SS:
                out.append(GeneratorIndex(S, k, SS))
            elif family == PBW:
                out.append(pbw_normalize(p, n, frozenset(S), k)[0])
            else:
                raise ValueError(f"unknown family {family!r}")
    out.sort(key=GeneratorIndex.sort_key)
    return out


def generator(p: int, n: int, u: GeneratorIndex) -> Polynomial:
    return plucker_coeff(p, n, u.I, u.k)


@dataclass(frozen=True)
class SignRecord:
    family: str
    p: int
    n: int
    I: tuple
    k: int
    permutation: tuple  # row assigned to column c, for c = 1..p
    permutation_sign: int
    printed_exponent: int

    @property
    def printed_sign(self) -> int:
        return -1 if self.printed_exponent % 2 else 1

    def to_json(self, computed_sign=None) -> dict:
        d = {
            "family": self.family,
            "p": self.p,
            "n": self.n,
            "I": list(self.I),
            "k": self.k,
            "permutation": list(self.permutation),
            "permutation_sign": self.permutation_sign,
            "printed_exponent": self.printed_exponent,
            "printed_sign": self.printed_sign,
        }
        if computed_sign is not None:
            d["computed_sign"] = computed_sign
            d["permutation_matches"] = computed_sign == self.permutation_sign
            d["printed_matches"] = computed_sign == self.printed_sign
        return d


def closed_initial(family: str, p: int, n: int, I, k: int) -> tuple:
    """Closed-form initial monomial of ``D_I^(k)`` and its sign bookkeeping.

    With ``k = l*p + r``:
      ss:  row r+s takes column alpha_{p+1-s} at level l (s = 1..p-r),
           row s takes column alpha_{r+1-s} at level l+1 (s = 1..r);
      pbw: row s takes column alpha_{p-r+s} at level l+1 (s = 1..r),
           row r+s takes column alpha_s at level l (s = 1..p-r).
    The sign is that of the column-to-row permutation.  A reference exponent,
    ``C(n,2) + r(n-1)`` for ss and ``r(n-1)`` for pbw, is carried along for
    the discrepancy table and never used to decide the sign.
    """
    I = tuple(I)
    if not in_family(p, n, I, k, family):
        raise DomainError(f"{I}^({k}) is not in the {family} family")
    l, r = divmod(k, p)
    row_of = [0] * (p + 1)
    level_of = [0] * (p + 1)
    if family == SS:
        for s in range(1, p - r + 1):
            row_of[p + 1 - s], level_of[p + 1 - s] = r + s, l
        for s in range(1, r + 1):
            row_of[r + 1 - s], level_of[r + 1 - s] = s, l + 1
        printed = comb(n, 2) + r * (n - 1)
    else:
        for s in range(1, r + 1):
            row_of[p - r + s], level_of[p - r + s] = s, l + 1
        for s in range(1, p - r + 1):
            row_of[s], level_of[s] = r + s, l
        printed = r * (n - 1)
    perm = tuple(row_of[1:])
    mono = Monomial.of(*((row_of[c], I[c - 1], level_of[c]) for c in range(1, p + 1)))
    record = SignRecord(family, p, n, I, k, perm, perm_sign(perm), printed)
    return record, mono


def order_for(family: str, p: int, n: int) -> OrderSpec:
    """Semi-infinite monomial order matching a generator family."""
    return OrderSpec("ss-semiinf" if family == SS else "pbw-semiinf", p, n)


def check_closed_forms(p: int, n: int, family: str, kmax: int) -> tuple:
    """Compare symbolic initial terms with the closed forms.

    Returns ``(mismatches, sign_rows)``.
    """
    order = order_for(family, p, n)
    mismatches, rows = [], []
    for u in gen_family(p, n, family, kmax):
        coeff, mono = initial_term(order, generator(p, n, u))
        record, expected = closed_initial(family, p, n, u.I, u.k)
        sign = 1 if coeff > 0 else -1
        rows.append(record.to_json(sign) | {"coefficient": str(coeff)})
        if mono != expected or abs(coeff) != 1 or sign != record.permutation_sign:
            mismatches.append(
                {"index": u.to_json(), "computed": str(mono), "closed_form": str(expected), "coefficient": str(coeff)}
            )
    return mismatches, rows


def component_products(p: int, n: int, family: str, m: int, e: int, d: int) -> list:
    """All nonzero truncated products of m generators with shift sum e.

    Returns ``[(indices, polynomial)]`` with indices a sorted multiset.
    """
    if m < 1 or e < 0 or d < 0:
        raise ValueError("need m >= 1, e >= 0, d >= 0")
    gens = gen_family(p, n, family, e)
    out = []
    for combo in combinations_with_replacement(range(len(gens)), m):
        idx = tuple(gens[t] for t in combo)
        if sum(u.k for u in idx) != e:
            continue
        check_cap(len(out) + 1, "component products")
        f = prod((truncate_d(generator(p, n, u), d) for u in idx), start=Polynomial.const(1))
        if f:
            out.append((idx, f))
    return out
