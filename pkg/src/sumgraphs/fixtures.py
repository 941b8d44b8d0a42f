"""Every explicit reference labelling, with its magma and target graph.

Vertex orders follow the printed figures.  Cycles list labels in cyclic
order; hypercubes use binary-index order; the Petersen graph uses the
:func:`~sumgraphs.graphs.petersen` order (outer cycle, then the inner vertex
on each spoke).
"""
from __future__ import annotations

from dataclasses import dataclass

from . import graphs as G
from . import magmas as M
from .graphs import Graph
from .labelling import Labelling


@dataclass(frozen=True)
class Fixture:
    key: str
    section: str
    graph: Graph
    labelling: Labelling
    note: str = ""
    # False for misprinted figures that are kept only as reported data
    expect_ok: bool = True


def _cyc(spec, labels, relaxed=False):
    return G.cycle(len(labels)), Labelling(spec, tuple(labels), relaxed)


# vertex order (binary index) for the four Q4 labellings and the kernel basis
Q4_SOL1 = (-17, 38, 6, -46, -21, -19, -25, 8, -8, -32, -38, 21, -11, -6, 19, -40)
Q4_SOL2 = (29, -10, -32, 18, -19, 5, 37, -8, 8, -22, 10, 19, -3, 32, -5, -14)
Q4_SOL3 = (8, 18, -6, -29, -26, -9, -3, 11, -11, -24, -18, 26, 2, 6, 9, -35)
Q4_R24 = (-5, 17, 19, 5, 24, -12, -2, 14, 22, 2, -24, 12, -20, -4, 4, -16)
Q4_U = (
    (0, 0, -1, 1, 0, 0, 1, -1, 1, -1, 0, 0, -1, 1, 0, 0),
    (-3, 2, 0, 0, 1, -1, -1, -2, 2, -2, -2, -1, -3, 0, 1, 0),
    (-1, 0, 0, 1, 1, 0, 0, -1, 1, 0, 0, -1, -1, 0, 0, 1),
)
Q4_COEFFS = {"sol1": (-6, 19, -40), "sol2": (32, -5, -14), "sol3": (6, 9, -35)}
Q4_RADII = {"sol1": 46, "sol2": 37, "sol3": 35, "r24": 24}

# relaxed cubic example on 12 vertices (figure nodes n1..n12)
_CUBIC12_LABELS = (-3, -15, -11, -3, 5, -1, 4, -14, 3, 3, -6, -18)
_CUBIC12_EDGES = [(1, 2), (1, 3), (1, 4), (2, 4), (3, 4), (3, 5), (2, 7), (5, 6), (6, 7), (5, 11),
                  (7, 12), (6, 8), (8, 9), (8, 10), (10, 12), (9, 11), (10, 11), (9, 12)]


def _build() -> list[Fixture]:
    Z = M.int_add()
    fx: list[Fixture] = []

    def add(key, section, graph, lab, note="", expect_ok=True):
        fx.append(Fixture(key, section, graph, lab, note, expect_ok))

    add("ex1-z-graph", "2", Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (2, 5), (4, 5)]),
        Labelling(Z, (-3, 1, -2, -1, -4, 3)), "six vertices, seven edges")
    add("harary-p6", "2", G.path(6), Labelling(Z, (1, 2, -1, 3, -4, 7)))
    add("c4-3k1-nat", "2", G.disjoint_union([G.cycle(4), G.empty(3)]),
        Labelling(M.nat_add(), (1, 3, 6, 8, 4, 9, 14)))
    add("relaxed-cubic12", "2", Graph.from_edges(12, [(u - 1, v - 1) for u, v in _CUBIC12_EDGES]),
        Labelling(Z, _CUBIC12_LABELS, relaxed=True), "cubic, not a Z-graph, but a relaxed one")

    add("c4-z5", "4", *_cyc(M.mod_add(5), (1, 3, 4, 2)))
    add("c4-units11", "4", *_cyc(M.mod_mul_units(11), (3, 5, 4, 9)))

    add("c7-z29-fib", "5", *_cyc(M.mod_add(29), (1, 24, 25, 20, 16, 7, 23)))
    add("c7-z17", "5", *_cyc(M.mod_add(17), (1, 6, 12, 3, 15, 7, 5)),
        "non-Fibonacci; as printed 15+5=3 (mod 17) adds a chord", expect_ok=False)
    add("c15-z682", "5", *_cyc(M.mod_add(682),
                              (1, 81, 82, 163, 245, 408, 653, 379, 350, 47, 397, 444, 159, 603, 80)))
    add("c6-z4xz4", "5", *_cyc(M.abelian(4, 4), ((0, 1), (1, 0), (3, 1), (2, 3), (1, 2), (1, 1))))
    add("c5-z11", "6", *_cyc(M.mod_add(11), (1, 3, 9, 5, 4)))
    add("c6-z13", "6", *_cyc(M.mod_add(13), (1, 5, 9, 6, 3, 2)), "non-Fibonacci")
    add("c8-z3xz15", "6", *_cyc(M.abelian(3, 15),
                               ((0, 1), (1, 3), (1, 4), (2, 7), (0, 11), (2, 3), (2, 14), (1, 2))))
    add("c8-z29", "6", *_cyc(M.mod_add(29), (1, 13, 17, 25, 21, 14, 7, 6)), "non-Fibonacci")
    add("c12-z40xz40", "6", *_cyc(M.abelian(40, 40),
                                 ((0, 1), (5, 3), (5, 4), (10, 7), (15, 11), (25, 18),
                                  (0, 29), (25, 7), (25, 36), (10, 3), (35, 39), (5, 2))))

    add("c9-z53", "7", *_cyc(M.mod_add(53), (1, 8, 16, 24, 40, 11, 51, 9, 7)))
    add("c9-z47-a", "7", *_cyc(M.mod_add(47), (1, 12, 36, 23, 13, 30, 43, 26, 22)))
    add("c9-z47-b", "7", *_cyc(M.mod_add(47), (1, 34, 14, 26, 35, 38, 44, 41, 40)))

    q4 = G.hypercube(4)
    for name, labels in (("sol1", Q4_SOL1), ("sol2", Q4_SOL2), ("sol3", Q4_SOL3), ("r24", Q4_R24)):
        add(f"q4-{name}", "9.3", q4, Labelling(Z, labels), f"radius {Q4_RADII[name]}")

    # cube: front face 9,12,4,8 on bit2=0 (cycle 0-1-3-2), back face 3,6,2,1 on bit2=1
    add("q3-z15", "10", G.hypercube(3), Labelling(M.mod_add(15), (9, 12, 8, 4, 3, 6, 1, 2)))
    add("petersen-z28", "10", G.petersen(), Labelling(M.mod_add(28), (1, 20, 7, 5, 19, 23, 27, 12, 24, 21)))

    add("k33-z9-relaxed", "11", G.complete_bipartite(3, 3),
        Labelling(M.mod_add(9), (1, 4, 7, 6, 6, 6), relaxed=True))
    return fx


FIXTURES: dict[str, Fixture] = {f.key: f for f in _build()}

# (source index -> target index) map between the Z_5 and Z*_11 C4 labellings
C4_ISO_MAP = (0, 1, 2, 3)
