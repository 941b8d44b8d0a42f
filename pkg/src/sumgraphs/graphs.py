"""Simple undirected graphs, standard families, graph6 I/O and report output.

Adjacency is stored as one Python int per vertex whose set bits mark the
neighbours, so edge-set comparisons are a handful of integer operations.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

GRAPH6_MAX_N = 1 << 16


class GraphError(ValueError):
    pass


class InvalidParameter(GraphError):
    pass


class MalformedHeader(GraphError):
    pass


class TruncatedBody(GraphError):
    pass


class TrailingBits(GraphError):
    pass


class Unsupported(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError("row count does not match vertex count")
        for i, row in enumerate(self.rows):
            if row >> self.n:
                raise GraphError(f"row {i} references a vertex >= n")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------- families

@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with its parameters.

    ``kind`` is one of cycle, path, complete, empty, bipartite, matching,
    hypercube, petersen, prism, union.  ``parts`` is only used by union.
    """

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 0:
        raise InvalidParameter(f"complete graph needs n >= 0, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 0:
        raise InvalidParameter(f"empty graph needs n >= 0, got {n}")
    return Graph(n, (0,) * n)


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise InvalidParameter("complete bipartite graph needs both sides non-empty")
    return Graph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def matching(m: int) -> Graph:
    """m disjoint edges (2i, 2i+1)."""
    if m < 1:
        raise InvalidParameter(f"matching needs m >= 1, got {m}")
    return Graph.from_edges(2 * m, ((2 * i, 2 * i + 1) for i in range(m)))


def hypercube(k: int) -> Graph:
    if k < 0:
        raise InvalidParameter(f"hypercube needs k >= 0, got {k}")
    n = 1 << k
    return Graph.from_edges(n, ((v, v ^ (1 << b)) for v in range(n) for b in range(k) if not v >> b & 1))


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def triangular_prism() -> Graph:
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return Graph.from_edges(6, edges)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.rows)
        offset += g.n
    return Graph(offset, tuple(rows))


_BUILDERS = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "empty": empty,
    "bipartite": complete_bipartite,
    "matching": matching,
    "hypercube": hypercube,
    "petersen": petersen,
    "prism": triangular_prism,
}


def build_family(spec: FamilySpec) -> Graph:
    if spec.kind == "union":
        return disjoint_union([build_family(p) for p in spec.parts])
    try:
        builder = _BUILDERS[spec.kind]
    except KeyError:
        raise InvalidParameter(f"unknown family {spec.kind!r}") from None
    return builder(*spec.params)


def parse_family(text: str) -> FamilySpec:
    """Parse names like ``C4``, ``K3,3``, ``Q4``, ``C4+3K1``, ``M5``, ``Petersen``.

    Tokens: Cn cycle, Pn path, Kn complete, Km,n complete bipartite,
    En or nK1 edgeless, Mm or mP2 matching, Qk hypercube, Petersen, Prism.
    ``+`` forms a disjoint union.
    """
    parts = [p.strip() for p in text.split("+")]
    specs = [_parse_token(p) for p in parts]
    return specs[0] if len(specs) == 1 else FamilySpec("union", parts=tuple(specs))


def _parse_token(tok: str) -> FamilySpec:
    low = tok.lower()
    if low == "petersen":
        return FamilySpec("petersen")
    if low == "prism":
        return FamilySpec("prism")
    if low.endswith("k1") and low[:-2].isdigit():
        return FamilySpec("empty", (int(low[:-2]),))
    if low.endswith("p2") and low[:-2].isdigit():
        return FamilySpec("matching", (int(low[:-2]),))
    head, rest = low[:1], low[1:]
    try:
        if head == "k" and "," in rest:
            a, b = rest.split(",")
            return FamilySpec("bipartite", (int(a), int(b)))
        kind = {"c": "cycle", "p": "path", "k": "complete", "e": "empty",
                "m": "matching", "q": "hypercube"}[head]
        return FamilySpec(kind, (int(rest),))
    except (KeyError, ValueError):
        raise InvalidParameter(f"cannot parse graph name {tok!r}") from None


# ---------------------------------------------------------------- graph6

def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise MalformedHeader("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise MalformedHeader("graph6 bytes must lie in 63..126")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeader("truncated 8-byte size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise MalformedHeader("truncated 4-byte size header")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
    if n > GRAPH6_MAX_N:
        raise Unsupported(f"graph6 with n={n} exceeds the ceiling {GRAPH6_MAX_N}")
    return n, pos


def parse_graph6(text: bytes | str) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise TruncatedBody(f"expected {nbytes} body bytes, got {len(body)}")
    if len(body) > nbytes:
        raise MalformedHeader(f"expected {nbytes} body bytes, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            b = body[k // 6] - 63
            if b >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbytes and (body[-1] - 63) & ((1 << (6 * nbytes - nbits)) - 1):
        raise TrailingBits("non-zero padding bits")
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> bytes:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise Unsupported(f"n={n} exceeds the graph6 ceiling {GRAPH6_MAX_N}")
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    acc = nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.rows[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out)


def read_graph6_file(path) -> list[Graph]:
    with open(path, "rb") as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + b"\n")


# ---------------------------------------------------------------- structure

def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for v in _bits(g.rows[u]):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def has_odd_cycle(g: Graph) -> bool:
    """True iff some component is not bipartite (BFS parity clash)."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in _bits(g.rows[u]):
                if side[v] < 0:
                    side[v] = side[u] ^ 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return True
    return False


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Vertex v of g becomes perm[v]."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def _canonical_key(n: int, edges: list[tuple[int, int]], perms) -> int:
    best = -1
    for p in perms:
        key = 0
        for u, v in edges:
            a, b = p[u], p[v]
            if a > b:
                a, b = b, a
            key |= 1 << (a * n + b)
        best = max(best, key)
    return best


def all_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on n vertices (brute force; n <= 5)."""
    if not 0 <= n <= 5:
        raise InvalidParameter("all_graphs enumerates n <= 5 only")
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen: dict[int, Graph] = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        key = _canonical_key(n, edges, perms)
        if key not in seen:
            seen[key] = Graph.from_edges(n, edges)
    return sorted(seen.values(), key=lambda g: (g.num_edges, g.rows))


# ---------------------------------------------------------------- reports

def emit_report(g: Graph, labelling=None, fmt: str = "json") -> str:
    """Render ``g`` (optionally with a labelling) as DOT or JSON text.

    JSON schema: ``{"n": int, "edges": [[u, v], ...], "magma": obj|null,
    "labels": [...]|null}``.  DOT names each vertex by its rendered label
    (vertex index when unlabelled); repeated labels get a ``#k`` suffix so
    node names stay unique.
    """
    if labelling is not None and len(labelling.labels) != g.n:
        raise GraphError("labelling does not cover every vertex")
    if fmt == "json":
        from .magmas import element_to_json, spec_to_json

        doc = {
            "n": g.n,
            "edges": [list(e) for e in g.edges()],
            "magma": spec_to_json(labelling.spec) if labelling else None,
            "labels": [element_to_json(labelling.spec, x) for x in labelling.labels] if labelling else None,
        }
        return json.dumps(doc)
    if fmt == "dot":
        names = _dot_names(g, labelling)
        lines = ["graph G {"]
        lines += [f'  "{name}";' for name in names]
        lines += [f'  "{names[u]}" -- "{names[v]}";' for u, v in g.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def _dot_names(g: Graph, labelling) -> list[str]:
    if labelling is None:
        return [str(v) for v in range(g.n)]
    from .magmas import render_element

    names, seen = [], {}
    for x in labelling.labels:
        base = render_element(labelling.spec, x)
        k = seen.get(base, 0)
        seen[base] = k + 1
        names.append(base if k == 0 else f"{base}#{k}")
    return names


def parse_report(text: str, fmt: str = "json") -> tuple[int, set[tuple[int, int]]]:
    """Read back the vertex count and edge set from :func:`emit_report` output."""
    if fmt == "json":
        doc = json.loads(text)
        return doc["n"], {tuple(sorted(e)) for e in doc["edges"]}
    names: list[str] = []
    edges = set()
    for line in text.splitlines():
        line = line.strip().rstrip(";")
        if line.startswith('"') and " -- " in line:
            a, b = (s.strip().strip('"') for s in line.split(" -- "))
            u, v = names.index(a), names.index(b)
            edges.add((min(u, v), max(u, v)))
        elif line.startswith('"'):
            names.append(line.strip('"'))
    return len(names), edges
