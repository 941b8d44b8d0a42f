"""Bounded backtracking search for sum labellings.

Every domain is compiled to an index table ``T[a][b]`` (``-1`` when the
composition leaves the domain), so one search core serves integer boxes,
residues, abelian products, set magmas and explicit tables.

Within its bound the search is complete: ``exhausted`` means no labelling
with labels in the domain exists, nothing more.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from . import graphs as G
from . import magmas as M
from .graphs import Graph
from .labelling import Labelling, is_strong, verify
from .magmas import MagmaSpec

log = logging.getLogger(__name__)

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET = "budget_exhausted"


# ---------------------------------------------------------------- problems

@dataclass(frozen=True)
class IntRadius:
    r: int
    # forbid the label 0 (the convention that reproduces the reference n >= 4 counts)
    nonzero: bool = False


@dataclass(frozen=True)
class NatMax:
    b: int


@dataclass(frozen=True)
class Mod:
    m: int


@dataclass(frozen=True)
class FiniteMagma:
    spec: MagmaSpec


@dataclass(frozen=True)
class SearchProblem:
    graph: Graph
    domain: IntRadius | NatMax | Mod | FiniteMagma
    relaxed: bool = False
    strong: bool = False

    def __post_init__(self):
        d = self.domain
        if isinstance(d, IntRadius) and d.r < 0:
            raise ValueError("radius must be >= 0")
        if isinstance(d, NatMax) and d.b < 1:
            raise ValueError("max label must be >= 1")
        if isinstance(d, Mod) and d.m < 2:
            raise ValueError("modulus must be >= 2")
        if isinstance(d, FiniteMagma) and not d.spec.is_finite:
            raise ValueError("FiniteMagma needs a finite carrier")


@dataclass
class SearchOutcome:
    status: str
    labelling: Labelling | None = None
    bound: object = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_json(self) -> dict:
        from .labelling import labelling_to_json

        return {"status": self.status,
                "bound": repr(self.bound),
                "nodes_expanded": self.nodes,
                "labelling": labelling_to_json(self.labelling) if self.labelling else None}


# ---------------------------------------------------------------- domains

@dataclass
class _Compiled:
    spec: MagmaSpec
    values: list
    table: list[list[int]]
    commutative: bool
    # candidate indices for the first vertex after symmetry reduction
    first: list[int] = field(default_factory=list)


def _compile(domain, symmetry: bool = True) -> _Compiled:
    if isinstance(domain, IntRadius):
        r = domain.r
        # ascending |x|: 0, 1, -1, 2, -2, ...
        values = [s * k for k in range(1, r + 1) for s in (1, -1)]
        if not domain.nonzero:
            values.insert(0, 0)
        pos = {v: i for i, v in enumerate(values)}
        table = [[pos.get(a + b, -1) for b in values] for a in values]
        first = [i for i, v in enumerate(values) if v >= 0] if symmetry else list(range(len(values)))
        return _Compiled(M.int_add(), values, table, True, first)
    if isinstance(domain, NatMax):
        values = list(range(1, domain.b + 1))
        b = domain.b
        table = [[a + c - 1 if a + c <= b else -1 for c in values] for a in values]
        return _Compiled(M.nat_add(), values, table, True, list(range(len(values))))
    if isinstance(domain, Mod):
        m = domain.m
        values = list(range(m))
        table = [[(a + c) % m for c in values] for a in values]
        # x -> u*x for units u preserves sum graphs, so the first label can be gcd(x, m)
        first = [x for x in values if x == 0 or m % x == 0] if symmetry else values[:]
        return _Compiled(M.mod_add(m), values, table, True, first)
    spec = domain.spec
    values = list(M.enumerate_carrier(spec))
    pos = {v: i for i, v in enumerate(values)}
    table = [[pos[M.raw_op(spec, a, b)] for b in values] for a in values]
    return _Compiled(spec, values, table, spec.is_commutative, list(range(len(values))))


def _vertex_order(g: Graph) -> list[int]:
    """Max degree first, then greedily the vertex with most placed neighbours."""
    n = g.n
    if n == 0:
        return []
    deg = [g.degree(v) for v in range(n)]
    order = [max(range(n), key=lambda v: (deg[v], -v))]
    placed = 1 << order[0]
    while len(order) < n:
        rest = [v for v in range(n) if not placed >> v & 1]
        v = max(rest, key=lambda v: ((g.rows[v] & placed).bit_count(), deg[v], -v))
        order.append(v)
        placed |= 1 << v
    return order


# ---------------------------------------------------------------- core

class _Budget(Exception):
    pass


def _search(g: Graph, comp: _Compiled, relaxed: bool, strong: bool,
            budget: int | None, prune: bool = True):
    """Return (label indices by vertex or None, nodes expanded)."""
    n = g.n
    D = len(comp.values)
    T = comp.table
    order = _vertex_order(g)
    adj = [[bool(g.rows[u] >> v & 1) for v in range(n)] for u in range(n)]
    lab = [-1] * n
    cnt = [0] * D
    forb = [0] * D
    need = [0] * D
    comm = comp.commutative
    nodes = 0
    missing = 0
    all_values = list(range(D))

    def feasible_leaf() -> bool:
        # final exact check against the target
        support = {lab[v] for v in range(n)}
        for u in range(n):
            a = lab[u]
            for v in range(u + 1, n):
                b = lab[v]
                e = T[a][b] in support or (not comm and T[b][a] in support)
                if e != adj[u][v]:
                    return False
        if strong and any(T[a][a] in support for a in support):
            return False
        return True

    def assign(depth: int) -> bool:
        nonlocal nodes, missing
        if depth == n:
            return feasible_leaf()
        w = order[depth]
        placed = order[:depth]
        remaining = n - depth
        if depth == 0:
            candidates = comp.first
        elif prune and missing == remaining:
            # every open vertex must realise one of the missing sums
            candidates = [s for s in range(D) if need[s] and not cnt[s]]
        else:
            candidates = all_values
        adj_w = adj[w]
        for x in candidates:
            if not relaxed and cnt[x]:
                continue
            if prune and forb[x]:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise _Budget
            # reject before mutating state
            ok = True
            Tx = T[x]
            if prune:
                for u in placed:
                    y = lab[u]
                    s = Tx[y]
                    if adj_w[u]:
                        if comm and (s < 0 or forb[s]):
                            ok = False
                            break
                    else:
                        if s >= 0 and (cnt[s] or s == x or need[s]):
                            ok = False
                            break
                        if not comm:
                            s2 = T[y][x]
                            if s2 >= 0 and (cnt[s2] or s2 == x or need[s2]):
                                ok = False
                                break
                if ok and strong:
                    s = Tx[x]
                    if s >= 0 and (cnt[s] or s == x or need[s]):
                        ok = False
                if not ok:
                    continue
            # apply
            undo_forb: list[int] = []
            undo_need: list[int] = []
            lab[w] = x
            cnt[x] += 1
            if cnt[x] == 1 and need[x]:
                missing -= 1
            if prune:
                for u in placed:
                    y = lab[u]
                    if adj_w[u]:
                        if comm:
                            s = Tx[y]
                            need[s] += 1
                            undo_need.append(s)
                            if need[s] == 1 and not cnt[s]:
                                missing += 1
                    else:
                        s = Tx[y]
                        if s >= 0:
                            forb[s] += 1
                            undo_forb.append(s)
                        if not comm:
                            s2 = T[y][x]
                            if s2 >= 0:
                                forb[s2] += 1
                                undo_forb.append(s2)
                if strong:
                    s = Tx[x]
                    if s >= 0:
                        forb[s] += 1
                        undo_forb.append(s)
            if (not prune or missing <= remaining - 1) and assign(depth + 1):
                return True
            for s in undo_need:
                need[s] -= 1
                if need[s] == 0 and not cnt[s]:
                    missing -= 1
            for s in undo_forb:
                forb[s] -= 1
            if cnt[x] == 1 and need[x]:
                missing += 1
            cnt[x] -= 1
            lab[w] = -1
        return False

    if n == 0:
        return [], 0
    if assign(0):
        return lab[:], nodes
    return None, nodes


def solve(p: SearchProblem, budget: int | None = None, prune: bool = True,
          symmetry: bool = True) -> SearchOutcome:
    """Decide whether ``p.graph`` has a labelling with labels in ``p.domain``.

    Complete within the domain: returns ``found`` with a verified witness or
    ``exhausted``.  With ``budget`` set, ``budget_exhausted`` is returned
    once that many candidate assignments have been tried.
    """
    comp = _compile(p.domain, symmetry=symmetry)
    try:
        idx, nodes = _search(p.graph, comp, p.relaxed, p.strong, budget, prune)
    except _Budget:
        return SearchOutcome(BUDGET, None, p.domain, budget)
    if idx is None:
        return SearchOutcome(EXHAUSTED, None, p.domain, nodes)
    lab = Labelling(comp.spec, tuple(comp.values[i] for i in idx),
                    relaxed=p.relaxed and len(set(idx)) < len(idx))
    if not verify(lab, p.graph).ok or (p.strong and not is_strong(lab)):
        raise AssertionError(f"search produced an invalid witness {lab.labels}")
    return SearchOutcome(FOUND, lab, p.domain, nodes)


# ---------------------------------------------------------------- derived searches

def radius(g: Graph, cap: int, relaxed: bool = False, start: int = 0,
           budget: int | None = None) -> tuple[int | None, SearchOutcome]:
    """Least r <= cap with a labelling of radius r; ``None`` means above cap."""
    last = None
    for r in range(start, cap + 1):
        last = solve(SearchProblem(g, IntRadius(r), relaxed=relaxed), budget=budget)
        if last.found:
            return r, last
        if last.status == BUDGET:
            return None, last
    return None, last


def sum_number_bounded(g: Graph, max_isolated: int, b: int,
                       budget: int | None = None) -> tuple[int | None, SearchOutcome | None]:
    """Least k <= max_isolated such that g + kK_1 has labels in 1..b."""
    last = None
    for k in range(max_isolated + 1):
        h = G.disjoint_union([g, G.empty(k)]) if k else g
        last = solve(SearchProblem(h, NatMax(b)), budget=budget)
        if last.found:
            return k, last
        if last.status == BUDGET:
            return None, last
    return None, last


def mod_sum_bound(n: int) -> int:
    """Moduli up to 2*3^(n-1) settle mod-sum existence for connected graphs, n >= 3."""
    return 2 * 3 ** (n - 1)


@dataclass
class SweepResult:
    modulus: int | None
    outcome: SearchOutcome | None
    cap: int
    theorem_bound: int
    conclusive: bool
    nodes: int

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "cap": self.cap, "theorem_bound": self.theorem_bound,
                "conclusive": self.conclusive, "nodes_expanded": self.nodes,
                "outcome": self.outcome.to_json() if self.outcome else None}


def mod_sum_sweep(g: Graph, m_cap: int, relaxed: bool = False,
                  budget: int | None = None) -> SweepResult:
    """First m in 2..m_cap with a Z_m labelling.

    A negative sweep is conclusive for connected graphs with ``n >= 3`` once
    ``m_cap`` reaches :func:`mod_sum_bound` (not for relaxed searches).
    """
    if m_cap < 2:
        raise ValueError("m_cap must be >= 2")
    bound = mod_sum_bound(g.n)
    total = 0
    for m in range(2, m_cap + 1):
        out = solve(SearchProblem(g, Mod(m), relaxed=relaxed), budget=budget)
        total += out.nodes
        if out.found:
            return SweepResult(m, out, m_cap, bound, True, total)
        if out.status == BUDGET:
            return SweepResult(None, out, m_cap, bound, False, total)
    conclusive = not relaxed and g.n >= 3 and G.is_connected(g) and m_cap >= bound
    return SweepResult(None, None, m_cap, bound, conclusive, total)


class GcdDoesNotDivideModulus(ValueError):
    pass


def gcd_reduce_mod_labelling(lab: Labelling) -> Labelling:
    """Divide labels and modulus by the gcd d of the labels (d must divide m)."""
    if lab.spec.kind != M.MOD_ADD:
        raise ValueError("gcd reduction applies to Z_m labellings")
    m = lab.spec.modulus
    d = 0
    for x in lab.labels:
        d = gcd(d, x)
    if d == 0 or m % d:
        raise GcdDoesNotDivideModulus(f"gcd {d} of the labels does not divide {m}")
    if d == 1:
        return lab
    return Labelling(M.mod_add(m // d), tuple(x // d for x in lab.labels), lab.relaxed)


# ---------------------------------------------------------------- corpus counting

class MixedOrders(ValueError):
    pass


DEFAULT_SCHEDULE = (1, 2, 3, 4, 6, 8)


@dataclass
class CorpusCount:
    n: int
    total: int
    isg: int
    risg: int | None
    radius_cap: int
    undecided: int = 0
    nonzero: bool = False

    def to_json(self) -> dict:
        row = {"n": self.n, "t": self.total, "isg": self.isg, "risg": self.risg,
               "isg/t": round(self.isg / self.total, 2) if self.total else None,
               "risg/t": round(self.risg / self.total, 2) if self.total and self.risg is not None else None,
               "radius_cap": self.radius_cap, "nonzero_labels": self.nonzero}
        if self.undecided:
            row["undecided"] = self.undecided
        return row


def _existence(g: Graph, relaxed: bool, cap: int, budget: int | None, nonzero: bool) -> str:
    # deepen over a short schedule so positives are found cheaply, then the cap
    radii = [r for r in DEFAULT_SCHEDULE if r < cap] + [cap]
    for r in radii:
        out = solve(SearchProblem(g, IntRadius(r, nonzero), relaxed=relaxed), budget=budget)
        if out.found:
            return FOUND
        if out.status == BUDGET:
            return BUDGET
    return EXHAUSTED


def _classify(args) -> tuple[str, str | None]:
    g6, cap, relaxed, budget, nonzero = args
    g = G.parse_graph6(g6)
    plain = _existence(g, False, cap, budget, nonzero)
    if not relaxed:
        return plain, None
    if plain == FOUND:
        return plain, FOUND
    return plain, _existence(g, True, cap, budget, nonzero)


def count_corpus(graphs: Iterable[Graph | bytes], relaxed: bool = True, radius_cap: int = 12,
                 jobs: int | None = None, budget: int | None = None,
                 nonzero: bool = False) -> CorpusCount:
    """Count integral (and relaxed integral) sum graphs in a list of equal-order graphs.

    Positive answers carry a verified witness; a graph counts as negative
    when nothing exists up to ``radius_cap``.  ``nonzero`` forbids the label 0.
    """
    items = [g if isinstance(g, Graph) else G.parse_graph6(g) for g in graphs]
    orders = {g.n for g in items}
    if len(orders) > 1:
        raise MixedOrders(f"corpus mixes orders {sorted(orders)}")
    n = orders.pop() if orders else 0
    jobs = jobs or int(os.environ.get("SUMGRAPHS_JOBS", "1"))
    work = [(G.emit_graph6(g), radius_cap, relaxed, budget, nonzero) for g in items]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify, work, chunksize=4))
    else:
        results = [_classify(w) for w in work]
    isg = sum(1 for a, _ in results if a == FOUND)
    risg = sum(1 for _, b in results if b == FOUND) if relaxed else None
    undecided = sum(1 for a, b in results if a == BUDGET or b == BUDGET)
    if undecided:
        log.warning("%d graphs hit the search budget; counts are lower bounds", undecided)
    return CorpusCount(n, len(items), isg, risg, radius_cap, undecided, nonzero)
