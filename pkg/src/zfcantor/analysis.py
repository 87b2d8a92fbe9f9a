"""Graph-theoretic readings of the nine predicates and derived checks.

Everything is phrased through in-neighborhoods: u is a subset of v when
N(u) is contained in N(v); the power set of u collects all such subset
vertices; singleton and doubleton vertices are the unique vertices with
the prescribed in-neighborhood; an ordered-pair vertex is the doubleton
of the corresponding singleton and doubleton vertices.  Subset
containment is non-strict throughout, so every vertex is a subset of
itself.

Relations, functions, and surjections from v to the power set of v are
decided through a per-digraph ordered-pair resolution table, built once
by exhaustive scan; a pair vertex determines its two components
uniquely, so the table is well defined.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cantor import emit_phi
from .digraphs import Digraph
from .semantics import evaluate_sentence

PREDICATE_ARITY = {
    "SUS": 2,
    "SI": 2,
    "SIN": 2,
    "DO": 3,
    "DOU": 3,
    "OPA": 3,
    "REL": 2,
    "FUN": 2,
    "SUR": 2,
}


class AnalysisError(ValueError):
    pass


class ArityMismatch(AnalysisError):
    pass


class AmbiguousPair(RuntimeError):
    """Two component pairs resolved for one vertex; internally inconsistent."""


class NotASurjection(AnalysisError):
    pass


class InDegreeTooLarge(AnalysisError):
    pass


class SizeGuardExceeded(AnalysisError):
    pass


@dataclass(frozen=True)
class PairResolution:
    """An ordered-pair vertex with its uniquely determined components."""

    pair_vertex: int
    first: int
    second: int


@dataclass(frozen=True)
class SurjectionWitness:
    """The real-pair graph encoded by a surjection vertex.

    ``graph`` lists the (argument, value) pairs read off the elements of
    the function vertex; it maps N(domain_vertex) onto the power set of
    domain_vertex.
    """

    function_vertex: int
    domain_vertex: int
    graph: frozenset[tuple[int, int]]


class DigraphAnalysis:
    """Per-digraph tables shared by the predicate checks.

    Builds the in-neighborhood index and the ordered-pair resolution
    table once; all predicate methods are then cheap lookups and loops.
    """

    def __init__(self, digraph: Digraph):
        self.digraph = digraph
        n = digraph.n
        self.nbhd = {u: digraph.in_neighbors(u) for u in digraph.vertices}
        by_nbhd: dict[frozenset[int], list[int]] = {}
        for u in digraph.vertices:
            by_nbhd.setdefault(self.nbhd[u], []).append(u)
        self._by_nbhd = by_nbhd
        self._opa: dict[int, tuple[int, int]] = {}
        for u in digraph.vertices:
            found = [(v, w) for v in digraph.vertices for w in digraph.vertices if self._opa_check(u, v, w)]
            if len(found) > 1:
                raise AmbiguousPair(f"vertex {u} resolves to {found[0]} and {found[1]}")
            if found:
                self._opa[u] = found[0]

    def _the_vertex_with(self, nbhd: frozenset[int]) -> int | None:
        """The unique vertex whose in-neighborhood equals nbhd, if any."""
        hits = self._by_nbhd.get(nbhd, ())
        return hits[0] if len(hits) == 1 else None

    def _opa_check(self, u: int, v: int, w: int) -> bool:
        s = self._the_vertex_with(frozenset((v,)))
        if s is None:
            return False
        d = self._the_vertex_with(frozenset((v, w)))
        if d is None:
            return False
        return self._the_vertex_with(frozenset((s, d))) == u

    # -- the nine predicates ------------------------------------------------

    def sus(self, u: int, v: int) -> bool:
        return self.nbhd[u] <= self.nbhd[v]

    def si(self, u: int, v: int) -> bool:
        return self.nbhd[u] == frozenset((v,))

    def sin(self, u: int, v: int) -> bool:
        return self._the_vertex_with(frozenset((v,))) == u

    def do(self, u: int, v: int, w: int) -> bool:
        return self.nbhd[u] == frozenset((v, w))

    def dou(self, u: int, v: int, w: int) -> bool:
        return self._the_vertex_with(frozenset((v, w))) == u

    def opa(self, u: int, v: int, w: int) -> bool:
        return self._opa.get(u) == (v, w)

    def rel(self, u: int, v: int) -> bool:
        target = self.nbhd[v]
        for p in self.nbhd[u]:
            res = self._opa.get(p)
            if res is None or res[0] not in target or not self.nbhd[res[1]] <= target:
                return False
        return True

    def fun(self, u: int, v: int) -> bool:
        if not self.rel(u, v):
            return False
        firsts = [self._opa[p][0] for p in self.nbhd[u]]
        return all(firsts.count(w) == 1 for w in self.nbhd[v])

    def sur(self, u: int, v: int) -> bool:
        if not self.fun(u, v):
            return False
        seconds = {self._opa[p][1] for p in self.nbhd[u]}
        return self.d_power_set(v) <= seconds

    # -- derived operations --------------------------------------------------

    def d_power_set(self, u: int) -> frozenset[int]:
        target = self.nbhd[u]
        return frozenset(v for v in self.digraph.vertices if self.nbhd[v] <= target)

    def predicate(self, name: str, args: tuple[int, ...]) -> bool:
        try:
            arity = PREDICATE_ARITY[name]
        except KeyError:
            raise AnalysisError(f"unknown predicate {name!r}") from None
        if len(args) != arity:
            raise ArityMismatch(f"{name} takes {arity} arguments, got {len(args)}")
        for a in args:
            self.digraph.check_vertex(a)
        return getattr(self, name.lower())(*args)

    def resolve_opa(self, u: int) -> PairResolution | None:
        self.digraph.check_vertex(u)
        res = self._opa.get(u)
        if res is None:
            return None
        return PairResolution(u, res[0], res[1])

    def extract_surjection(self, u: int, v: int) -> SurjectionWitness:
        self.digraph.check_vertex(u)
        self.digraph.check_vertex(v)
        if not self.sur(u, v):
            raise NotASurjection(f"vertex {u} is not a surjection from {v} to its power set")
        graph = frozenset(self._opa[p] for p in self.nbhd[u])
        domain = {a for a, _ in graph}
        image = {b for _, b in graph}
        assert domain == self.nbhd[v] and len(graph) == len(domain)
        assert image == self.d_power_set(v)
        return SurjectionWitness(u, v, graph)

    def cantor_witness(self) -> tuple[int, int] | None:
        """A pair (u, v) with v a surjection from u onto its power set, if any."""
        for u in self.digraph.vertices:
            for v in self.digraph.vertices:
                if self.sur(v, u):
                    return (u, v)
        return None

    def is_cantor(self) -> bool:
        return self.cantor_witness() is None


# ---------------------------------------------------------------------------
# Module-level wrappers


def in_neighbors(digraph: Digraph, u: int) -> frozenset[int]:
    return digraph.in_neighbors(u)


def d_power_set(digraph: Digraph, u: int) -> frozenset[int]:
    digraph.check_vertex(u)
    return DigraphAnalysis(digraph).d_power_set(u)


def semantic_predicate(digraph: Digraph, name: str, args: tuple[int, ...]) -> bool:
    """Evaluate one of the nine predicates directly on the digraph."""
    return DigraphAnalysis(digraph).predicate(name, tuple(args))


def resolve_opa(digraph: Digraph, u: int) -> PairResolution | None:
    return DigraphAnalysis(digraph).resolve_opa(u)


def extract_surjection(digraph: Digraph, u: int, v: int) -> SurjectionWitness:
    return DigraphAnalysis(digraph).extract_surjection(u, v)


def is_cantor(digraph: Digraph, method: str = "semantic") -> bool:
    """No vertex surjects onto any vertex's power set.

    The semantic method scans all vertex pairs with the predicate
    implementation; the sentence method evaluates the 494-symbol Cantor
    sentence.  The two agree on every digraph.
    """
    if method == "semantic":
        return DigraphAnalysis(digraph).is_cantor()
    if method == "phi":
        return evaluate_sentence(digraph, emit_phi(), use_cache=True)
    raise ValueError(f"method must be 'semantic' or 'phi', got {method!r}")


def cantor_witness(digraph: Digraph) -> tuple[int, int] | None:
    return DigraphAnalysis(digraph).cantor_witness()


def is_strongly_extensive(digraph: Digraph, *, max_in_degree: int = 20) -> bool:
    """Every subset of every in-neighborhood is itself an in-neighborhood.

    Degrees above ``max_in_degree`` are rejected before any work since
    the subset enumeration would touch 2^degree sets.  Vertices whose
    degree d satisfies 2^d > n fail immediately: that many distinct
    subsets cannot all be realized by n vertices.
    """
    nbhds = [digraph.in_neighbors(u) for u in digraph.vertices]
    for u, nb in enumerate(nbhds, start=1):
        if len(nb) > max_in_degree:
            raise InDegreeTooLarge(
                f"vertex {u} has in-degree {len(nb)}, above the guard {max_in_degree}"
            )
    realized = set(nbhds)
    for nb in nbhds:
        if 2 ** len(nb) > digraph.n:
            return False
        members = sorted(nb)
        for size in range(len(members) + 1):
            for subset in combinations(members, size):
                if frozenset(subset) not in realized:
                    return False
    return True


def omega_level_ranges(levels: int, *, max_levels: int = 4) -> tuple[tuple[int, int], ...]:
    """Vertex ranges [lo, hi] of each construction level."""
    if levels < 1:
        raise SizeGuardExceeded("need at least one level")
    if levels > max_levels:
        raise SizeGuardExceeded(
            f"levels={levels} exceeds the guard {max_levels}; the construction doubles exponentially"
        )
    ranges = [(1, 1)]
    total = 1
    for _ in range(levels - 1):
        m = 2**total
        lo = ranges[-1][1] + 1
        ranges.append((lo, lo + m - 1))
        total += m
    return tuple(ranges)


def omega_prefix(levels: int, *, max_levels: int = 4) -> Digraph:
    """A finite prefix of the countable strongly extensive construction.

    Level 1 is the single vertex 1 with no arrows.  Each next level adds
    one vertex per subset of all previous vertices, wired so that the
    new vertex's in-neighborhood is exactly that subset.  Subsets are
    enumerated in binary-counter order over the previous vertices sorted
    ascending: the empty set first, then {min}, and so on.
    """
    ranges = omega_level_ranges(levels, max_levels=max_levels)
    arrows: set[tuple[int, int]] = set()
    previous: list[int] = [1]
    for lo, hi in ranges[1:]:
        ground = sorted(previous)
        for i, newv in enumerate(range(lo, hi + 1)):
            for j, member in enumerate(ground):
                if i >> j & 1:
                    arrows.add((member, newv))
        previous.extend(range(lo, hi + 1))
    return Digraph(ranges[-1][1], frozenset(arrows))
