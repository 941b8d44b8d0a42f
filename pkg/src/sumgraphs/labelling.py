"""Induced sum graphs, labelling verification, strongness and sum-graph isomorphisms."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from . import magmas
from .graphs import Graph
from .magmas import MagmaSpec, raw_op


class LabellingError(ValueError):
    pass


class NotBijective(LabellingError):
    pass


@dataclass(frozen=True)
class Labelling:
    """Vertex ``i`` carries ``labels[i]``; repeated labels need ``relaxed``."""

    spec: MagmaSpec
    labels: tuple
    relaxed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        for x in self.labels:
            magmas.check_element(self.spec, x)
        if not self.relaxed and len(set(self.labels)) != len(self.labels):
            raise LabellingError("repeated labels in a non-relaxed labelling")

    @property
    def n(self) -> int:
        return len(self.labels)

    def support(self) -> set:
        return set(self.labels)

    def radius(self) -> int:
        return max((abs(x) for x in self.labels), default=0)

    def label_range(self) -> int:
        return max(self.labels) - min(self.labels) if self.labels else 0


@dataclass
class Verdict:
    ok: bool
    missing_edges: list[tuple[int, int]] = field(default_factory=list)
    # (u, v, k): label[u] (+) label[v] == label[k] although uv is not a target edge
    spurious_edges: list[tuple[int, int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "missing_edges": [list(e) for e in self.missing_edges],
                "spurious_edges": [{"edge": [u, v], "witness": k} for u, v, k in self.spurious_edges]}


def _sum_index(lab: Labelling) -> dict:
    index: dict = {}
    for k, x in enumerate(lab.labels):
        index.setdefault(x, k)
    return index


def edge_witness(lab: Labelling, u: int, v: int, index: dict | None = None) -> int | None:
    """A vertex whose label is ``l(u) (+) l(v)`` (or the reverse order), else None."""
    index = _sum_index(lab) if index is None else index
    a, b = lab.labels[u], lab.labels[v]
    k = index.get(raw_op(lab.spec, a, b))
    if k is None and not lab.spec.is_commutative:
        k = index.get(raw_op(lab.spec, b, a))
    return k


def induced_graph(lab: Labelling) -> Graph:
    """The sum graph of the label multiset, one vertex per labelled vertex.

    Membership is tested against the support, so two vertices sharing label
    ``x`` are adjacent exactly when ``x (+) x`` is a label.
    """
    spec, labels = lab.spec, lab.labels
    support = set(labels)
    both = not spec.is_commutative
    n = len(labels)
    rows = [0] * n
    for u in range(n):
        a = labels[u]
        for v in range(u + 1, n):
            b = labels[v]
            if raw_op(spec, a, b) in support or (both and raw_op(spec, b, a) in support):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def verify(lab: Labelling, target: Graph) -> Verdict:
    if lab.n != target.n:
        raise LabellingError(f"{lab.n} labels for a graph on {target.n} vertices")
    got = induced_graph(lab)
    index = _sum_index(lab)
    missing, spurious = [], []
    for u in range(target.n):
        diff = got.rows[u] ^ target.rows[u]
        for v in range(u + 1, target.n):
            if not diff >> v & 1:
                continue
            if target.adjacent(u, v):
                missing.append((u, v))
            else:
                spurious.append((u, v, edge_witness(lab, u, v, index)))
    return Verdict(not missing and not spurious, missing, spurious)


def is_strong(lab: Labelling) -> bool:
    support = set(lab.labels)
    return all(raw_op(lab.spec, x, x) not in support for x in support)


def check_sum_iso(lab_v: Labelling, lab_w: Labelling, f: Sequence[int]) -> bool:
    """Whether vertex map ``f`` (``f[i]`` indexes ``lab_w``) is a sum-graph isomorphism.

    Only ordered pairs whose composition is again a label of ``lab_v`` are
    constrained (``f`` is undefined elsewhere); the induced edge sets must
    also correspond under ``f``.
    """
    n = lab_v.n
    if lab_v.relaxed or lab_w.relaxed:
        raise LabellingError("sum-graph isomorphisms need non-relaxed labellings")
    if lab_w.n != n or sorted(f) != list(range(n)):
        raise NotBijective("f is not a bijection between the vertex sets")
    index = _sum_index(lab_v)
    for i in range(n):
        for j in range(n):
            k = index.get(raw_op(lab_v.spec, lab_v.labels[i], lab_v.labels[j]))
            if k is None:
                continue
            if lab_w.labels[f[k]] != raw_op(lab_w.spec, lab_w.labels[f[i]], lab_w.labels[f[j]]):
                return False
    gv, gw = induced_graph(lab_v), induced_graph(lab_w)
    return all(gv.adjacent(u, v) == gw.adjacent(f[u], f[v]) for u in range(n) for v in range(u + 1, n))


# ---------------------------------------------------------------- JSON

def labelling_to_json(lab: Labelling, graph: Graph | None = None) -> dict:
    doc = {
        "magma": magmas.spec_to_json(lab.spec),
        "relaxed": lab.relaxed,
        "labels": [magmas.element_to_json(lab.spec, x) for x in lab.labels],
    }
    if graph is not None:
        doc["graph"] = {"n": graph.n, "edges": [list(e) for e in graph.edges()]}
    return doc


def labelling_from_json(doc: dict | str) -> tuple[Labelling, Graph | None]:
    if isinstance(doc, str):
        doc = json.loads(doc)
    spec = magmas.spec_from_json(doc["magma"])
    labels = tuple(magmas.element_from_json(spec, x) for x in doc["labels"])
    lab = Labelling(spec, labels, bool(doc.get("relaxed", False)))
    g = doc.get("graph")
    graph = Graph.from_edges(g["n"], (tuple(e) for e in g["edges"])) if g else None
    return lab, graph
