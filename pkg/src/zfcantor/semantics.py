"""Satisfaction of formulas in finite digraphs.

Membership atoms are read along arrows, equality atoms as vertex
identity, connectives classically, and quantifiers range over all
vertices.  An environment binds variables to vertices and must cover
every free variable of the formula; looking up an unbound variable is
an error, never a silent default.

Quantifier evaluation short-circuits.  An optional per-call cache keys
subformula values by the bindings of their free variables, which keeps
census-scale evaluation of the Cantor sentence cheap; the cache never
outlives the call.
"""
from __future__ import annotations

from typing import Mapping

from .digraphs import Digraph
from .formulas import (
    And,
    Equality,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Membership,
    Not,
    Or,
    PredicateAtom,
    free_variables,
    is_sentence,
)
from .symbols import Symbol


class SemanticsError(ValueError):
    pass


class UnboundVariable(SemanticsError):
    pass


class PredicateNotExpanded(SemanticsError):
    pass


class NotASentence(SemanticsError):
    pass


_MISSING = object()


def evaluate(
    digraph: Digraph,
    tree: Formula,
    env: Mapping[Symbol, int] | None = None,
    *,
    use_cache: bool = False,
) -> bool:
    """Decide whether the digraph satisfies the formula under env."""
    bindings: dict[Symbol, int] = dict(env or {})
    arrows = digraph.arrows
    vertices = digraph.vertices

    free_of: dict[int, tuple[Symbol, ...]] = {}
    memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def free_key(node: Formula) -> tuple[Symbol, ...]:
        key = id(node)
        if key not in free_of:
            free_of[key] = tuple(sorted(free_variables(node), key=lambda s: s.token))
        return free_of[key]

    def lookup(sym: Symbol) -> int:
        try:
            return bindings[sym]
        except KeyError:
            raise UnboundVariable(f"variable {sym.token} is not bound") from None

    def ev(node: Formula) -> bool:
        if isinstance(node, Membership):
            return (lookup(node.left), lookup(node.right)) in arrows
        if isinstance(node, Equality):
            return lookup(node.left) == lookup(node.right)
        if isinstance(node, PredicateAtom):
            raise PredicateNotExpanded(f"predicate atom {node.name} cannot be evaluated")
        if use_cache:
            key = (id(node), tuple(lookup(v) for v in free_key(node)))
            hit = memo.get(key)
            if hit is not None:
                return hit
            value = ev_composite(node)
            memo[key] = value
            return value
        return ev_composite(node)

    def ev_composite(node: Formula) -> bool:
        if isinstance(node, Not):
            return not ev(node.child)
        if isinstance(node, Implies):
            return not ev(node.left) or ev(node.right)
        if isinstance(node, Iff):
            return ev(node.left) == ev(node.right)
        if isinstance(node, And):
            return ev(node.left) and ev(node.right)
        if isinstance(node, Or):
            return ev(node.left) or ev(node.right)
        if isinstance(node, (Exists, Forall)):
            witness = isinstance(node, Exists)
            var = node.var
            saved = bindings.get(var, _MISSING)
            try:
                for vertex in vertices:
                    bindings[var] = vertex
                    if ev(node.child) == witness:
                        return witness
                return not witness
            finally:
                if saved is _MISSING:
                    bindings.pop(var, None)
                else:
                    bindings[var] = saved
        raise TypeError(f"not a formula node: {node!r}")

    return ev(tree)


def evaluate_sentence(digraph: Digraph, tree: Formula, *, use_cache: bool = False) -> bool:
    """Evaluate a sentence; its value does not depend on any environment."""
    if not is_sentence(tree):
        raise NotASentence("the formula has a free variable occurrence")
    return evaluate(digraph, tree, {}, use_cache=use_cache)
