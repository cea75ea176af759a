"""Exchange-property checkers and Veronese-type detection.

All three properties quantify over ordered pairs (u, v) of generators and
variable indices xi, rho with u[xi] > v[xi] and u[rho] < v[rho]:

* exchange:  some rho makes u - e_xi + e_rho a generator;
* symmetric: some rho makes both u - e_xi + e_rho and v - e_rho + e_xi
  generators;
* strong:    every such (xi, rho) keeps u - e_xi + e_rho a generator.

A generator set passes the strong property exactly when it is a shifted
bounded-degree slice: a common factor times all monomials of one degree
under componentwise bounds.  ``detect_veronese`` constructs the only
possible such decomposition (componentwise min as the factor, max - min as
the bounds) and verifies it, so presence of the decomposition and the
strong verdict can be cross-checked independently.

The module also hosts the cap-grid counterexample search for the strong
property over a whole graph, and integer polymatroid utilities used to
generate base families for property tests.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .graph import Graph
from .powers import (
    DEFAULT_NODE_BUDGET,
    BudgetError,
    GeneratorSet,
    PowerEngine,
    normalize_caps,
)

EXCHANGE = "exchange"
SYMMETRIC = "symmetric"
STRONG = "strong"

DEFAULT_GRID_LIMIT = 2_000_000


def _member_set(w):
    if isinstance(w, GeneratorSet):
        mem = w.members
    else:
        mem = frozenset(tuple(v) for v in w)
    if not mem:
        raise ValueError("generator set is empty")
    if len({len(v) for v in mem}) != 1:
        raise ValueError("generators have mixed lengths")
    return mem


def _swap(u, a, b):
    out = list(u)
    out[a] -= 1
    out[b] += 1
    return tuple(out)


@dataclass(frozen=True)
class ExchangeWitness:
    """Failing configuration; xi and rho are 1-based variable indices.

    For the exchange and symmetric properties a failure means no rho works
    at all, so rho and missing are None there.
    """

    u: tuple
    v: tuple
    xi: int
    rho: int | None
    missing: tuple | None

    def to_json(self) -> dict:
        return {
            "u": list(self.u),
            "v": list(self.v),
            "xi": self.xi,
            "rho": self.rho,
            "missing": list(self.missing) if self.missing is not None else None,
        }


@dataclass(frozen=True)
class ExchangeReport:
    prop: str
    ok: bool
    witness: ExchangeWitness | None = None

    def to_json(self) -> dict:
        out = {"property": self.prop, "verdict": "pass" if self.ok else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def check_exchange(w) -> ExchangeReport:
    """Single-sided exchange; the first failing (u, v, xi) in sorted order."""
    mem = _member_set(w)
    ordered = sorted(mem)
    n = len(ordered[0])
    for u in ordered:
        for v in ordered:
            if u == v:
                continue
            for xi in range(n):
                if u[xi] <= v[xi]:
                    continue
                ok = any(
                    u[rho] < v[rho] and _swap(u, xi, rho) in mem for rho in range(n)
                )
                if not ok:
                    return ExchangeReport(
                        EXCHANGE,
                        False,
                        ExchangeWitness(u, v, xi + 1, None, None),
                    )
    return ExchangeReport(EXCHANGE, True)


def check_symmetric_exchange(w) -> ExchangeReport:
    """Two-sided exchange; both swapped monomials must stay in the set."""
    mem = _member_set(w)
    ordered = sorted(mem)
    n = len(ordered[0])
    for u in ordered:
        for v in ordered:
            if u == v:
                continue
            for xi in range(n):
                if u[xi] <= v[xi]:
                    continue
                ok = any(
                    u[rho] < v[rho]
                    and _swap(u, xi, rho) in mem
                    and _swap(v, rho, xi) in mem
                    for rho in range(n)
                )
                if not ok:
                    return ExchangeReport(
                        SYMMETRIC,
                        False,
                        ExchangeWitness(u, v, xi + 1, None, None),
                    )
    return ExchangeReport(SYMMETRIC, True)


def check_strong_exchange(w) -> ExchangeReport:
    """Every admissible single swap must stay in the set."""
    mem = _member_set(w)
    ordered = sorted(mem)
    n = len(ordered[0])
    for u in ordered:
        for v in ordered:
            if u == v:
                continue
            for xi in range(n):
                if u[xi] <= v[xi]:
                    continue
                for rho in range(n):
                    if u[rho] >= v[rho]:
                        continue
                    moved = _swap(u, xi, rho)
                    if moved not in mem:
                        return ExchangeReport(
                            STRONG,
                            False,
                            ExchangeWitness(u, v, xi + 1, rho + 1, moved),
                        )
    return ExchangeReport(STRONG, True)


# ---------------------------------------------------------------------------
# Veronese-type detection

@dataclass(frozen=True)
class VeroneseDecomposition:
    """members = base + e over all e with 0 <= e <= bounds on support, sum(e) = degree."""

    base: tuple
    degree: int
    support: tuple
    bounds: tuple

    def expand(self) -> frozenset:
        """Reconstruct the full member set from the decomposition."""
        out = set()
        for e in _bounded_compositions(self.bounds, self.degree):
            vec = list(self.base)
            for idx, val in zip(self.support, e):
                vec[idx - 1] += val
            out.add(tuple(vec))
        return frozenset(out)

    def to_json(self) -> dict:
        return {
            "base": list(self.base),
            "degree": self.degree,
            "support": list(self.support),
            "bounds": list(self.bounds),
        }


def _bounded_compositions(bounds, total):
    """All tuples e with 0 <= e[i] <= bounds[i] and sum(e) = total."""
    k = len(bounds)
    out = []
    cur = [0] * k
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + bounds[i]

    def go(i, left):
        if i == k:
            if left == 0:
                out.append(tuple(cur))
            return
        if left > suffix[i]:
            return
        lo = max(0, left - suffix[i + 1])
        for val in range(min(bounds[i], left), lo - 1, -1):
            cur[i] = val
            go(i + 1, left - val)
        cur[i] = 0

    go(0, total)
    return out


def detect_veronese(w) -> VeroneseDecomposition | None:
    """The forced candidate decomposition, verified member-for-member.

    If any decomposition of this shape exists, the one built from the
    componentwise minimum and (max - min) bounds also works, so checking
    that single candidate decides existence.
    """
    mem = _member_set(w)
    members = list(mem)
    n = len(members[0])
    mins = tuple(min(m[i] for m in members) for i in range(n))
    maxs = tuple(max(m[i] for m in members) for i in range(n))
    deg = sum(members[0]) - sum(mins)
    support = tuple(i + 1 for i in range(n) if maxs[i] > mins[i])
    bounds = tuple(maxs[i - 1] - mins[i - 1] for i in support)
    decomp = VeroneseDecomposition(mins, deg, support, bounds)
    compositions = _bounded_compositions(bounds, deg)
    if len(compositions) != len(mem):
        return None
    for e in compositions:
        vec = list(mins)
        for idx, val in zip(support, e):
            vec[idx - 1] += val
        if tuple(vec) not in mem:
            return None
    return decomp


# ---------------------------------------------------------------------------
# Cap-grid counterexample search

def _grid_size(n, cap_max):
    return cap_max ** n


def _search_serial(graph, grid, node_budget):
    engine = PowerEngine(graph, node_budget)
    seen = set()
    for caps in grid:
        norm = normalize_caps(graph, caps)
        if norm in seen:
            continue
        seen.add(norm)
        report = check_strong_exchange(engine.generators(norm))
        if not report.ok:
            return caps, report
    return None


def _search_chunk(graph, chunk, node_budget):
    """Worker: first failing cap vector in a chunk of the grid, or None."""
    engine = PowerEngine(graph, node_budget)
    seen = set()
    for offset, caps in chunk:
        norm = normalize_caps(graph, caps)
        if norm in seen:
            continue
        seen.add(norm)
        report = check_strong_exchange(engine.generators(norm))
        if not report.ok:
            return offset, caps, report
    return None


def search_sep_counterexample(
    graph: Graph,
    cap_max: int,
    workers: int = 1,
    grid_limit: int = DEFAULT_GRID_LIMIT,
    node_budget: int = DEFAULT_NODE_BUDGET,
):
    """First cap vector (ascending lex over {1..cap_max}^n) whose generator
    set fails the strong exchange property, with its report; None if the
    whole grid passes.

    Cap vectors sharing a normal form share a generator set, so each normal
    form is evaluated once.  With ``workers > 1`` the grid is split into
    contiguous chunks evaluated in separate processes; the first failure in
    grid order wins, so results do not depend on the worker count.
    """
    if cap_max < 1:
        raise ValueError(f"cap_max must be >= 1, got {cap_max}")
    total = _grid_size(graph.n, cap_max)
    if total > grid_limit:
        raise BudgetError(
            f"grid of {total} cap vectors exceeds the limit {grid_limit}"
        )
    grid = product(range(1, cap_max + 1), repeat=graph.n)
    if workers <= 1:
        return _search_serial(graph, grid, node_budget)

    indexed = list(enumerate(grid))
    nchunks = max(1, min(len(indexed), workers * 4))
    step = (len(indexed) + nchunks - 1) // nchunks
    chunks = [indexed[k : k + step] for k in range(0, len(indexed), step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_search_chunk, graph, ch, node_budget) for ch in chunks]
        hit = None
        for fut in futures:
            res = fut.result()
            if res is not None:
                hit = res
                break
        for fut in futures:
            fut.cancel()
    if hit is None:
        return None
    _, caps, report = hit
    return caps, report


# ---------------------------------------------------------------------------
# Integer polymatroids (test-instance generation for the checkers)

@dataclass(frozen=True)
class SubmodularFunction:
    """Integer-valued set function on subsets of {0..k-1}, given by bitmask table."""

    k: int
    values: tuple

    def __post_init__(self):
        if not (1 <= self.k <= 16):
            raise ValueError(f"ground set size must be 1..16, got {self.k}")
        if len(self.values) != 1 << self.k:
            raise ValueError(
                f"value table must have {1 << self.k} entries, got {len(self.values)}"
            )
        vals = self.values
        if any(not isinstance(x, int) or x < 0 for x in vals):
            raise ValueError("values must be nonnegative integers")
        if vals[0] != 0:
            raise ValueError("the empty set must have value 0")
        full = (1 << self.k) - 1
        for mask in range(full + 1):
            for i in range(self.k):
                if not mask & (1 << i) and vals[mask | (1 << i)] < vals[mask]:
                    raise ValueError("function is not monotone")
        for a in range(full + 1):
            for b in range(a, full + 1):
                if vals[a] + vals[b] < vals[a | b] + vals[a & b]:
                    raise ValueError("function is not submodular")

    def value(self, mask: int) -> int:
        return self.values[mask]

    @property
    def rank(self) -> int:
        return self.values[-1]


def coverage_function(weights, covers) -> SubmodularFunction:
    """Weighted coverage function: value(A) = total weight covered by A.

    Coverage functions are monotone and submodular by construction, so this
    is a rejection-free generator of valid instances.
    """
    k = len(covers)
    values = []
    for mask in range(1 << k):
        covered = set()
        for i in range(k):
            if mask & (1 << i):
                covered.update(covers[i])
        values.append(sum(weights[j] for j in covered))
    return SubmodularFunction(k, tuple(values))


def random_coverage_function(rng, k, universe_size=5, max_weight=3) -> SubmodularFunction:
    weights = [rng.randint(0, max_weight) for _ in range(universe_size)]
    covers = [
        [j for j in range(universe_size) if rng.random() < 0.5] for _ in range(k)
    ]
    return coverage_function(weights, covers)


def enumerate_polymatroid_base(fn: SubmodularFunction) -> frozenset:
    """Integer base vectors: a >= 0 with sum over A <= value(A) for every A
    and total sum equal to the rank."""
    if fn.k > 6:
        raise ValueError(f"base enumeration is limited to k <= 6, got {fn.k}")
    k = fn.k
    singles = [fn.values[1 << i] for i in range(k)]
    masks = list(range(1, 1 << k))
    out = set()
    for a in product(*(range(s + 1) for s in singles)):
        if sum(a) != fn.rank:
            continue
        if all(
            sum(a[i] for i in range(k) if mask & (1 << i)) <= fn.values[mask]
            for mask in masks
        ):
            out.add(a)
    return frozenset(out)
