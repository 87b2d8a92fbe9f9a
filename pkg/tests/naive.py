"""Independent brute-force oracle for the digraph predicates.

Deliberately written as literal quantifier loops over the definitions,
sharing only the Digraph data type with the package.  Used to compute
expected values that the tests then freeze, and to cross-check the
table-driven implementation on small digraphs.
"""
from __future__ import annotations

from itertools import combinations

from zfcantor.digraphs import Digraph


def nbhd(d: Digraph, u: int) -> frozenset[int]:
    return frozenset(a for (a, b) in d.arrows if b == u)


def naive_sus(d, u, v):
    return nbhd(d, u) <= nbhd(d, v)


def naive_si(d, u, v):
    return nbhd(d, u) == {v}


def naive_sin(d, u, v):
    return naive_si(d, u, v) and all(t == u or not naive_si(d, t, v) for t in d.vertices)


def naive_do(d, u, v, w):
    return nbhd(d, u) == {v, w}


def naive_dou(d, u, v, w):
    return naive_do(d, u, v, w) and all(t == u or not naive_do(d, t, v, w) for t in d.vertices)


def naive_opa(d, u, v, w, memo=None):
    if memo is not None and (u, v, w) in memo:
        return memo[(u, v, w)]
    value = any(
        naive_dou(d, u, s, t) and naive_sin(d, s, v) and naive_dou(d, t, v, w)
        for s in d.vertices
        for t in d.vertices
    )
    if memo is not None:
        memo[(u, v, w)] = value
    return value


def naive_rel(d, u, v, memo=None):
    return all(
        any(
            naive_opa(d, p, a, b, memo) and a in nbhd(d, v) and naive_sus(d, b, v)
            for a in d.vertices
            for b in d.vertices
        )
        for p in nbhd(d, u)
    )


def naive_fun(d, u, v, memo=None):
    if not naive_rel(d, u, v, memo):
        return False
    for w in nbhd(d, v):
        pairs = [
            p
            for p in d.vertices
            if p in nbhd(d, u) and any(naive_opa(d, p, w, b, memo) for b in d.vertices)
        ]
        if len(pairs) != 1:
            return False
    return True


def naive_sur(d, u, v, memo=None):
    if not naive_fun(d, u, v, memo):
        return False
    for t in d.vertices:
        if naive_sus(d, t, v):
            if not any(
                p in nbhd(d, u) and naive_opa(d, p, a, t, memo)
                for p in d.vertices
                for a in d.vertices
            ):
                return False
    return True


NAIVE_PREDICATES = {
    "SUS": naive_sus,
    "SI": naive_si,
    "SIN": naive_sin,
    "DO": naive_do,
    "DOU": naive_dou,
    "OPA": naive_opa,
    "REL": naive_rel,
    "FUN": naive_fun,
    "SUR": naive_sur,
}


def naive_predicate(d: Digraph, name: str, args: tuple[int, ...], memo=None) -> bool:
    fn = NAIVE_PREDICATES[name]
    if name in ("REL", "FUN", "SUR", "OPA"):
        return fn(d, *args, memo)
    return fn(d, *args)


def naive_is_cantor(d: Digraph) -> bool:
    memo: dict = {}
    return not any(naive_sur(d, v, u, memo) for u in d.vertices for v in d.vertices)


def naive_is_strongly_extensive(d: Digraph) -> bool:
    realized = {nbhd(d, t) for t in d.vertices}
    for u in d.vertices:
        members = sorted(nbhd(d, u))
        for size in range(len(members) + 1):
            for subset in combinations(members, size):
                if frozenset(subset) not in realized:
                    return False
    return True


def naive_census(n: int) -> tuple[int, int, int]:
    """(total, strongly extensive count, Cantor count) by raw enumeration."""
    total = 2 ** (n * n)
    strongly_extensive = 0
    cantor = 0
    for counter in range(total):
        arrows = frozenset(
            (u, v)
            for u in range(1, n + 1)
            for v in range(1, n + 1)
            if counter >> ((u - 1) * n + (v - 1)) & 1
        )
        d = Digraph(n, arrows)
        if naive_is_strongly_extensive(d):
            strongly_extensive += 1
        if naive_is_cantor(d):
            cantor += 1
    return total, strongly_extensive, cantor
