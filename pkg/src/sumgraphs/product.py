"""Direct (tensor) products and the transfer of strong integral labellings."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product as iproduct
from typing import Sequence

from . import magmas as M
from .graphs import Graph
from .labelling import Labelling, is_strong


class NotStrong(ValueError):
    pass


class BaseTooSmall(ValueError):
    pass


def direct_product(g: Graph, h: Graph) -> Graph:
    """(i, j) -> i*|H| + j; adjacent iff both coordinates are adjacent."""
    nh = h.n
    edges = [(i * nh + j, k * nh + l)
             for i, k in g.edges() for j, l in h.edges()]
    edges += [(i * nh + l, k * nh + j) for i, k in g.edges() for j, l in h.edges()]
    return Graph.from_edges(g.n * nh, edges)


def direct_product_all(graphs: Sequence[Graph]) -> Graph:
    if not graphs:
        raise ValueError("need at least one graph")
    return reduce(direct_product, graphs)


@dataclass(frozen=True)
class FlattenSpec:
    k: int
    M: int
    max_coord: int = 0

    def __post_init__(self):
        if self.k < 1 or self.M < 1:
            raise ValueError("k and M must be >= 1")
        if not self.M > 2 * self.max_coord:
            raise BaseTooSmall(f"M = {self.M} must exceed 2 * {self.max_coord}")

    @classmethod
    def minimal(cls, tuples: Sequence[Sequence[int]]) -> "FlattenSpec":
        """Smallest base injective on the given tuples: M = 2*max + 1."""
        k = len(tuples[0]) if tuples else 1
        mx = max((abs(x) for t in tuples for x in t), default=0)
        return cls(k, 2 * mx + 1, mx)

    @classmethod
    def for_sums(cls, tuples: Sequence[Sequence[int]]) -> "FlattenSpec":
        """Smallest base with f(a) + f(b) = f(c) only when a + b = c: M = 3*max + 1.

        a + b - c has coordinates of size up to 3*max, and a base-M digit
        vector with every |digit| < M is zero only if all digits are.
        """
        k = len(tuples[0]) if tuples else 1
        mx = max((abs(x) for t in tuples for x in t), default=0)
        return cls(k, 3 * mx + 1, mx)


def flatten(labels: Sequence[Sequence[int]], spec: FlattenSpec) -> tuple[int, ...]:
    """(x_1, ..., x_k) -> sum x_i M^(i-1)."""
    out = []
    for t in labels:
        if len(t) != spec.k:
            raise ValueError(f"expected {spec.k} coordinates, got {len(t)}")
        if any(2 * abs(x) >= spec.M for x in t):
            raise BaseTooSmall(f"coordinate of {tuple(t)} is not below M/2 = {spec.M / 2}")
        out.append(sum(x * spec.M ** i for i, x in enumerate(t)))
    return tuple(out)


def product_tuples(*labs: Labelling) -> list[tuple[int, ...]]:
    """Coordinatewise labels of the product, in direct-product vertex order."""
    return [tuple(t) for t in iproduct(*(lab.labels for lab in labs))]


def product_labelling(*labs: Labelling) -> Labelling:
    """Strong integral labelling of the direct product of the labelled graphs.

    A non-strong factor cannot work in general: if 2u is a label of G then
    (u, v) and (u, w) get adjacent for any labels v, w of H with v + w a label.
    """
    if len(labs) < 2:
        raise ValueError("need at least two labellings")
    for lab in labs:
        if lab.spec.kind != M.INT_ADD:
            raise ValueError("product labellings are defined for integer labellings")
        if lab.relaxed:
            raise ValueError("relaxed labellings are not supported")
        if not is_strong(lab):
            x = next(x for x in lab.labels if 2 * x in lab.support())
            raise NotStrong(f"label {x} has 2*{x} = {2 * x} among the labels, so (u,v) and (u,w) "
                            "would be adjacent whenever v + w is a label of the other factor")
    tuples = product_tuples(*labs)
    # 2*max + 1 is injective on labels but can alias sums onto labels
    spec = FlattenSpec.for_sums(tuples)
    return Labelling(M.int_add(), flatten(tuples, spec))
