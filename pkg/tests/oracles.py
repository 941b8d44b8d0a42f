"""Slow reference implementations, written without reusing package internals."""
from __future__ import annotations

from fractions import Fraction
from itertools import product


def set_op(name: str, s: int, a: frozenset, b: frozenset) -> frozenset:
    universe = frozenset(range(s))
    if name == "union":
        return a | b
    if name == "intersection":
        return a & b
    if name == "symdiff":
        return a ^ b
    if name == "complement_union":
        return universe - (a | b)
    if name == "complement_intersection":
        return universe - (a & b)
    raise ValueError(name)


def mask_to_set(x: int) -> frozenset:
    return frozenset(i for i in range(x.bit_length()) if x >> i & 1)


def induced_edges(labels, plus) -> set[tuple[int, int]]:
    """Double loop over all vertex pairs and all vertices, no indexing tricks."""
    n = len(labels)
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                if plus(labels[i], labels[j]) == labels[k] or plus(labels[j], labels[i]) == labels[k]:
                    edges.add((i, j))
                    break
    return edges


def cofactor_det(m) -> Fraction:
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def naive_exists(n: int, edges: set[tuple[int, int]], r: int, relaxed: bool = False,
                 strong: bool = False) -> bool:
    """Try every assignment from [-r, r]^n."""
    target = {tuple(sorted(e)) for e in edges}
    for labels in product(range(-r, r + 1), repeat=n):
        if not relaxed and len(set(labels)) != n:
            continue
        if strong and any(2 * x in labels for x in labels):
            continue
        if induced_edges(labels, lambda a, b: a + b) == target:
            return True
    return False


def two_colourable(n: int, adj: dict[int, set[int]]) -> bool:
    colour: dict[int, int] = {}
    for s in range(n):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def rational_rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank
