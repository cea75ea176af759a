"""Top bounded powers of an edge ideal.

Given a graph G and a vector of per-vertex caps c, the objects of interest
are edge multisets whose exponent vector stays componentwise below c.  The
top degree ``delta(G, c)`` is the largest size of such a multiset, and the
generator set ``W(G, c)`` collects the distinct exponent vectors of the
multisets that reach that size.  Because all of them share degree
``2 * delta``, W is automatically a minimal generating set.

The engine is a depth-first search over edges in lexicographic order,
assigning a multiplicity to each edge.  Two ingredients keep it exact and
fast at this scale:

* memoization of ``best(i, residual)`` = the maximum number of edges
  placeable using edges i.. under the residual caps, with residual entries
  of vertices that have no remaining incident edge zeroed out (they can
  never be consumed, so distinct dead values are the same state);
* the bound ``best <= sum(residual) // 2``, which both prunes and lets the
  multiplicity loop stop early once attained.

Generator enumeration reruns the same search at the fixed depth delta,
pruned by the memoized bound, deduplicating exponent vectors.  A separate
brute-force oracle enumerates edge multisets naively (no pruning, no
memoization) and is used to cross-check the engine on small instances.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement

from .graph import Graph

DEFAULT_NODE_BUDGET = 10 ** 8
MAX_CAP = 1 << 15
ORACLE_CAP_SUM = 24


class BudgetError(RuntimeError):
    """A configured work budget was exhausted before the search finished."""


def as_caps(g: Graph, caps) -> tuple:
    """Validate a cap vector against a graph: positive ints, one per vertex."""
    caps = tuple(caps)
    if len(caps) != g.n:
        raise ValueError(f"cap vector has length {len(caps)}, graph has {g.n} vertices")
    for i, c in enumerate(caps):
        if not isinstance(c, int) or isinstance(c, bool):
            raise ValueError(f"caps[{i}] = {c!r} is not an integer")
        if not (1 <= c <= MAX_CAP):
            raise ValueError(f"caps[{i}] = {c} out of range 1..{MAX_CAP}")
    return caps


def parse_caps(text: str) -> tuple:
    """Parse the comma-separated cap syntax, e.g. "2,1,2,1,1,1,2,1"."""
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad cap vector {text!r}: {exc}") from None


def format_monomial(vec) -> str:
    """Render an exponent vector as a monomial, e.g. (1, 0, 2) -> "x1*x3^2"."""
    parts = []
    for i, e in enumerate(vec):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class EdgeMultiset:
    """Edges with multiplicities; ``counts`` is a sorted tuple of ((u, v), m)."""

    counts: tuple

    @property
    def size(self) -> int:
        return sum(m for _, m in self.counts)

    def product(self, n: int) -> tuple:
        out = [0] * n
        for (u, v), m in self.counts:
            out[u - 1] += m
            out[v - 1] += m
        return tuple(out)


@dataclass(frozen=True)
class GeneratorSet:
    """The generators of the top bounded power: exponent vectors of degree 2*delta."""

    graph: Graph
    caps: tuple
    delta: int
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, vec):
        return tuple(vec) in self.members

    @cached_property
    def ordered(self) -> tuple:
        """Members listed largest-first in lexicographic order (z_i indexing)."""
        return tuple(sorted(self.members, reverse=True))

    def to_json(self) -> dict:
        return {
            "caps": list(self.caps),
            "delta": self.delta,
            "members": [list(m) for m in self.ordered],
        }


def member(gens: GeneratorSet, vec) -> bool:
    """Set membership with a length check."""
    vec = tuple(vec)
    if len(vec) != gens.graph.n:
        raise ValueError(
            f"exponent vector has length {len(vec)}, graph has {gens.graph.n} vertices"
        )
    return vec in gens.members


class PowerEngine:
    """Shared-memo search engine for one graph, reusable across cap vectors."""

    MAX_VERTICES = 32

    def __init__(self, graph: Graph, node_budget: int = DEFAULT_NODE_BUDGET):
        if graph.n > self.MAX_VERTICES:
            raise ValueError(
                f"enumeration is limited to {self.MAX_VERTICES} vertices, got {graph.n}"
            )
        self.graph = graph
        self.node_budget = node_budget
        self.nodes = 0
        self._memo = {}
        self._pos = tuple((u - 1, v - 1) for u, v in graph.sorted_edges)
        m = len(self._pos)
        last = {}
        for i, (u, v) in enumerate(self._pos):
            last[u] = i
            last[v] = i
        dying = [[] for _ in range(m)]
        for p, i in last.items():
            dying[i].append(p)
        self._dying = tuple(tuple(sorted(d)) for d in dying)
        alive = [True] * graph.n
        alive_at = [tuple(alive)]
        for i in range(m):
            for p in dying[i]:
                alive[p] = False
            alive_at.append(tuple(alive))
        self._alive = tuple(alive_at)

    def _charge(self, extra_info=""):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetError(
                f"node budget {self.node_budget} exhausted{extra_info}"
            )

    def _best(self, i, res):
        """Max edges placeable from edge index i under (dead-masked) residual caps."""
        key = (i, res)
        val = self._memo.get(key)
        if val is not None:
            return val
        self._charge()
        if i == len(self._pos):
            self._memo[key] = 0
            return 0
        ub = sum(res) // 2
        if ub == 0:
            self._memo[key] = 0
            return 0
        u, v = self._pos[i]
        dying = self._dying[i]
        best = 0
        for t in range(min(res[u], res[v]), -1, -1):
            nxt = list(res)
            nxt[u] -= t
            nxt[v] -= t
            for p in dying:
                nxt[p] = 0
            got = t + self._best(i + 1, tuple(nxt))
            if got > best:
                best = got
                if best >= ub:
                    break
        self._memo[key] = best
        return best

    def delta(self, caps) -> int:
        caps = as_caps(self.graph, caps)
        return self._best(0, caps)

    def generators(self, caps) -> GeneratorSet:
        caps = as_caps(self.graph, caps)
        depth = self._best(0, caps)
        found = set()
        res = list(caps)
        pos = self._pos
        m = len(pos)
        alive = self._alive

        def go(i, need):
            self._charge(f" (enumeration, {len(found)} generators so far)")
            if need == 0:
                found.add(tuple(c - r for c, r in zip(caps, res)))
                return
            if i == m:
                return
            masked = tuple(r if a else 0 for r, a in zip(res, alive[i]))
            if self._best(i, masked) < need:
                return
            u, v = pos[i]
            for t in range(min(res[u], res[v], need), -1, -1):
                res[u] -= t
                res[v] -= t
                go(i + 1, need - t)
                res[u] += t
                res[v] += t

        go(0, depth)
        return GeneratorSet(self.graph, caps, depth, frozenset(found))

    def decompose(self, vec):
        """First edge multiset (canonical order, high multiplicities first)
        whose product is exactly ``vec``, or None."""
        vec = tuple(vec)
        if len(vec) != self.graph.n:
            raise ValueError(
                f"exponent vector has length {len(vec)}, graph has {self.graph.n} vertices"
            )
        if any(not isinstance(e, int) or e < 0 for e in vec):
            raise ValueError(f"exponent vector must be nonnegative integers: {vec}")
        total = sum(vec)
        if total % 2:
            raise ValueError(f"degree {total} is odd; no edge multiset can match")
        need = total // 2
        res = list(vec)
        pos = self._pos
        m = len(pos)
        alive = self._alive
        chosen = []

        def go(i, need):
            if need == 0:
                return all(r == 0 for r in res)
            if i == m:
                return False
            masked = tuple(r if a else 0 for r, a in zip(res, alive[i]))
            if self._best(i, masked) < need:
                return False
            u, v = pos[i]
            for t in range(min(res[u], res[v], need), -1, -1):
                res[u] -= t
                res[v] -= t
                if all(res[p] == 0 for p in self._dying[i]):
                    if t:
                        chosen.append((self.graph.sorted_edges[i], t))
                    if go(i + 1, need - t):
                        return True
                    if t:
                        chosen.pop()
                res[u] += t
                res[v] += t
            return False

        if need == 0:
            return EdgeMultiset(())
        if go(0, need):
            return EdgeMultiset(tuple(chosen))
        return None


def normalize_caps(g: Graph, caps) -> tuple:
    """Clamp each cap to the sum of its neighbors' caps, swept to a fixpoint.

    The generator set is unchanged by this reduction, so equal normal forms
    mean equal generator sets.
    """
    cur = as_caps(g, caps)
    while True:
        nxt = tuple(
            min(cur[v - 1], sum(cur[w - 1] for w in g.adjacency[v - 1]))
            for v in range(1, g.n + 1)
        )
        if nxt == cur:
            return nxt
        cur = nxt


def delta(g: Graph, caps, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Largest q such that some q-edge multiset stays under the caps."""
    return PowerEngine(g, node_budget).delta(caps)


def enumerate_generators(g: Graph, caps, node_budget: int = DEFAULT_NODE_BUDGET) -> GeneratorSet:
    """All exponent vectors realized by cap-respecting edge multisets of maximum size."""
    return PowerEngine(g, node_budget).generators(caps)


def edge_decompose(g: Graph, vec, node_budget: int = DEFAULT_NODE_BUDGET):
    """Deterministic edge-multiset factorization of an exponent vector, or None."""
    return PowerEngine(g, node_budget).decompose(vec)


def brute_force_oracle(g: Graph, caps):
    """Independent check: exhaustive multiset enumeration, no pruning or memo.

    Returns ``(delta, GeneratorSet)``.  Only available for cap sums up to
    ORACLE_CAP_SUM to keep the naive enumeration finite in practice.
    """
    caps = as_caps(g, caps)
    if sum(caps) > ORACLE_CAP_SUM:
        raise ValueError(
            f"oracle requires sum(caps) <= {ORACLE_CAP_SUM}, got {sum(caps)}"
        )
    edges = g.sorted_edges
    n = g.n
    best_m = 0
    best_set = frozenset()
    m = 1
    while True:
        found = set()
        for combo in combinations_with_replacement(edges, m):
            expo = [0] * n
            for u, v in combo:
                expo[u - 1] += 1
                expo[v - 1] += 1
            if all(e <= c for e, c in zip(expo, caps)):
                found.add(tuple(expo))
        if not found:
            break
        best_m = m
        best_set = frozenset(found)
        m += 1
    return best_m, GeneratorSet(g, caps, best_m, best_set)


def validate_generator_set(gens: GeneratorSet) -> None:
    """Re-check the defining invariants of a GeneratorSet (for tests)."""
    if gens.delta >= 1 and not gens.members:
        raise AssertionError("nonzero top degree but no generators")
    engine = PowerEngine(gens.graph)
    for mvec in gens.members:
        if sum(mvec) != 2 * gens.delta:
            raise AssertionError(f"{mvec} has degree {sum(mvec)} != 2*{gens.delta}")
        if any(e > c for e, c in zip(mvec, gens.caps)):
            raise AssertionError(f"{mvec} exceeds caps {gens.caps}")
        ems = engine.decompose(mvec)
        if ems is None or ems.size != gens.delta:
            raise AssertionError(f"{mvec} is not a product of {gens.delta} edges")
