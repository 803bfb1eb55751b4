"""Golden files for the standard worked examples, regenerated by ``--seed-docs``."""

from __future__ import annotations

import json

from . import degen
from .pluecker import PBW, SS, GeneratorIndex, closed_initial, generator, in_family, order_for
from .poset import QTILDE, Poset
from .symalg import frac_str, initial_term
from .tableaux import SemiInfiniteTableau, is_valid, to_chain


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _cells(cs) -> list:
    return [list(c) for c in sorted(cs)]


def ideal_record(kind: str, I, k: int, p: int, n: int, finite: bool = False) -> dict:
    u = GeneratorIndex(tuple(I), k, kind)
    J = degen.phi(kind, u, p, n, finite=finite)
    rec = {
        "index": u.to_json(),
        "p": p,
        "n": n,
        "finite": finite,
        "size": len(J),
        "cells": J.to_json(),
        "maximal": _cells(J.maximal),
        "level": J.level,
    }
    if kind == PBW:
        rec["generating_cells"] = _cells(degen.pbw_cells(u, p, n))
    return rec


# columns written top to bottom, as pictured
SS_TABLEAU = ((0, 1, 3), ((1, 3, 5), (1, 2, 3), (2, 5, 7)))
PBW_TABLEAU = ((0, 2, 4), ((5, 6, 2, 1), (6, 7, 8, 3), (9, 7, 10, 5)))
PBW_TABLEAU_AS_PRINTED = ((0, 2, 4), ((5, 6, 2, 1), (6, 7, 8, 3), (9, 7, 1, 5)))


def _tableau_record(kind, layout, n) -> dict:
    T = SemiInfiniteTableau.from_top_down(*layout)
    ok = is_valid(kind, T, n)
    return {
        "kind": kind,
        "n": n,
        "tableau": T.to_json(),
        "valid": ok,
        "chain": [u.to_json() for u in to_chain(kind, T, n)] if ok else None,
        "render": T.render().splitlines(),
    }


def pbw_columns() -> dict:
    p, n = 4, 9
    a = GeneratorIndex((1, 2, 6, 5), 0, PBW)
    b = GeneratorIndex((3, 8, 7, 6), 2, PBW)
    c = GeneratorIndex((5, 1, 7, 9), 4, PBW)
    d = GeneratorIndex((2, 3, 4, 5), 1, PBW)
    return {
        "p": p,
        "n": n,
        "membership": [
            {"index": u.to_json(), "reduced": list(u.reduced(n)), "member": in_family(p, n, u.I, u.k, PBW)}
            for u in (a, b, c)
        ],
        "comparisons": [
            {"lower": x.to_json(), "upper": y.to_json(), "leq": degen.gen_leq(PBW, x, y, n),
             "geq": degen.gen_leq(PBW, y, x, n)}
            for x, y in ((a, b), (b, c), (a, d))
        ],
    }


def initial_record(family: str, I, k: int, p: int, n: int) -> dict:
    u = GeneratorIndex(tuple(I), k, family)
    coeff, mono = initial_term(order_for(family, p, n), generator(p, n, u))
    record, closed = closed_initial(family, p, n, u.I, u.k)
    return {
        "index": u.to_json(),
        "p": p,
        "n": n,
        "monomial": mono.to_json(),
        "text": str(mono),
        "coefficient": frac_str(coeff),
        "closed_form": str(closed),
        "sign": record.to_json(1 if coeff > 0 else -1),
    }


def golden_examples() -> dict:
    return {
        "finite_ss_ideal.json": _dump(ideal_record(SS, (2, 3, 6), 0, 3, 7, finite=True)),
        "finite_pbw_ideal.json": _dump(ideal_record(PBW, (6, 2, 4), 0, 3, 7, finite=True)),
        "ss_ideal.json": _dump(ideal_record(SS, (2, 3, 6), 2, 3, 7)),
        "pbw_ideal.json": _dump(ideal_record(PBW, (1, 4, 6), 2, 3, 7)),
        "pbw_columns.json": _dump(pbw_columns()),
        "pbw_initial_1_4_6_k2.json": _dump(initial_record(PBW, (1, 4, 6), 2, 3, 7)),
        "ss_tableau.json": _dump(_tableau_record(SS, SS_TABLEAU, 7)),
        "pbw_tableau.json": _dump(
            {
                "formula_contents": _tableau_record(PBW, PBW_TABLEAU, 9),
                "as_printed": _tableau_record(PBW, PBW_TABLEAU_AS_PRINTED, 9),
            }
        ),
        "qtilde_3_7_k1.dot": Poset(QTILDE, 3, 7).to_dot(1),
    }
