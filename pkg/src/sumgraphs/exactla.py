"""Exact linear algebra over Z, Q and prime fields for labelling systems.

A valid integral labelling of G satisfies ``x_i + x_j - x_k = 0`` for every
edge ``ij`` with witness ``k``.  The rational nullspace of that system (the
kernel of the labelling) contains every labelling that realises the same
witnesses, and scanning small integer combinations of a kernel basis
produces further labellings.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

import numpy as np

from . import graphs as G
from . import magmas as M
from .graphs import Graph
from .labelling import Labelling, verify

log = logging.getLogger(__name__)

IntMatrix = list[list[int]]


class NotSquare(ValueError):
    pass


class NotAValidLabelling(ValueError):
    pass


class AmbiguousWitness(ValueError):
    pass


class NoSolutionWithinBudget(RuntimeError):
    pass


class InvalidCycleMap(ValueError):
    pass


# ---------------------------------------------------------------- Z and Q

def determinant(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination (Bareiss)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NotSquare(f"{n} rows but row lengths {sorted({len(r) for r in m})}")
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _rref(m: Sequence[Sequence[int]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in row] for row in m]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(m: Sequence[Sequence[int]], cols: int | None = None) -> int:
    cols = len(m[0]) if cols is None else cols
    return len(_rref(m, cols)[1]) if m else 0


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the gcd and make the leading nonzero entry positive."""
    g = reduce(gcd, v, 0)
    if g == 0:
        return tuple(v)
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


def rational_nullspace(m: Sequence[Sequence[int]], cols: int | None = None) -> list[tuple[int, ...]]:
    """Basis of {x : m x = 0} over Q as primitive integer vectors."""
    if cols is None:
        if not m:
            raise ValueError("cols is required for an empty matrix")
        cols = len(m[0])
    red, pivots = _rref(m, cols) if m else ([], [])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
        basis.append(primitive([int(x * den) for x in v]))
    return basis


def coordinates(v: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[Fraction, ...] | None:
    """Exact coefficients c with sum c_i basis_i == v, or None outside the span."""
    d, n = len(basis), len(v)
    # augmented system basis^T c = v
    aug = [[basis[i][r] for i in range(d)] + [v[r]] for r in range(n)]
    red, pivots = _rref(aug, d + 1)
    if d in pivots:
        return None
    c = [Fraction(0)] * d
    for row, p in zip(red, pivots):
        c[p] = row[d]
    return tuple(c)


def combine(coeffs: Sequence[int | Fraction], basis: Sequence[Sequence[int]]) -> tuple:
    n = len(basis[0])
    out = [sum(c * b[r] for c, b in zip(coeffs, basis)) for r in range(n)]
    return tuple(int(x) if Fraction(x).denominator == 1 else x for x in out)


# ---------------------------------------------------------------- labelling systems

@dataclass(frozen=True)
class LabellingSystem:
    graph: Graph
    labelling: Labelling
    rows: tuple[tuple[int, int, int], ...]

    def matrix(self) -> IntMatrix:
        n = self.graph.n
        out = []
        for i, j, k in self.rows:
            row = [0] * n
            row[i] += 1
            row[j] += 1
            row[k] -= 1
            out.append(row)
        return out


def labelling_system(g: Graph, lab: Labelling) -> LabellingSystem:
    if lab.spec.kind != M.INT_ADD:
        raise NotAValidLabelling("labelling systems are built for integer labellings")
    if lab.n != g.n or not verify(lab, g).ok:
        raise NotAValidLabelling("the labelling does not induce the graph")
    where: dict[int, list[int]] = {}
    for k, x in enumerate(lab.labels):
        where.setdefault(x, []).append(k)
    rows = []
    for i, j in g.edges():
        ks = where.get(lab.labels[i] + lab.labels[j], [])
        if len(ks) != 1:
            raise AmbiguousWitness(f"edge {i}{j} has witnesses {ks}")
        rows.append((i, j, ks[0]))
    return LabellingSystem(g, lab, tuple(rows))


def labelling_kernel(g: Graph, lab: Labelling) -> tuple[LabellingSystem, list[tuple[int, ...]]]:
    system = labelling_system(g, lab)
    basis = rational_nullspace(system.matrix(), g.n)
    if coordinates(lab.labels, basis) is None:
        raise AssertionError("label vector outside its own kernel")
    return system, basis


def _forbidden_functionals(g: Graph) -> list[tuple[int, ...]]:
    # x_i - x_j (distinctness) and x_i + x_j - x_k for non-edges ij and any k
    n = g.n
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i], v[j] = 1, -1
            out.append(tuple(v))
            if g.adjacent(i, j):
                continue
            for k in range(n):
                v = [0] * n
                v[i] += 1
                v[j] += 1
                v[k] -= 1
                out.append(tuple(v))
    return out


def _shared_witnesses(g: Graph, basis: Sequence[Sequence[int]]) -> bool:
    """Whether every edge has one k with b_i + b_j = b_k for all basis vectors b."""
    for i, j in g.edges():
        if not any(all(b[i] + b[j] == b[k] for b in basis) for k in range(g.n)):
            return False
    return True


def enumerate_primitive_labellings(g: Graph, basis: Sequence[Sequence[int]], box: int = 50,
                                   limit: int | None = None, chunk: int = 1 << 16) -> list[Labelling]:
    """Primitive labellings c . basis with integer c in [-box, box]^d.

    Coefficient vectors with a positive first nonzero entry are scanned in a
    fixed order (by position, then value, of that entry), so the output is
    deterministic and no two outputs are proportional.  Candidates
    must avoid every hyperplane of :func:`_forbidden_functionals` and have
    coprime entries.  When the basis shares one witness system (always the
    case for a basis from :func:`labelling_kernel`) the edges hold by
    linearity; otherwise each survivor is also run through ``verify``.
    """
    if box < 1:
        raise ValueError("box must be >= 1")
    basis = [tuple(map(int, b)) for b in basis]
    d = len(basis)
    if d == 0:
        return []
    linear = _shared_witnesses(g, basis)
    # pull each forbidden functional back to coefficient space and dedupe
    pulled = set()
    for h in _forbidden_functionals(g):
        w = tuple(sum(h[r] * basis[i][r] for r in range(g.n)) for i in range(d))
        if not any(w):
            return []
        pulled.add(primitive(w))
    big = max(abs(x) for b in basis for x in b) * box * d
    big = max(big, max((abs(x) for w in pulled for x in w), default=0) * box * d)
    dtype = np.int64 if big < 2 ** 62 else object
    H = np.array(sorted(pulled), dtype=dtype).T.reshape(d, len(pulled))
    B = np.array(basis, dtype=dtype)
    Z = M.int_add()
    out: list[Labelling] = []
    span = np.arange(-box, box + 1, dtype=np.int64)
    # all coefficient vectors, lexicographic, streamed by leading coordinate
    for lead_pos in range(d):
        for lead in range(1, box + 1):
            tail = d - lead_pos - 1
            count = len(span) ** tail
            for start in range(0, count, chunk):
                idx = np.arange(start, min(count, start + chunk), dtype=np.int64)
                C = np.zeros((len(idx), d), dtype=dtype)
                C[:, lead_pos] = lead
                for t in range(tail):
                    C[:, d - 1 - t] = span[idx % len(span)]
                    idx = idx // len(span)
                keep = np.all(C @ H != 0, axis=1)
                C = C[keep]
                if not len(C):
                    continue
                L = C @ B
                g_all = np.gcd.reduce(np.abs(L).astype(np.int64), axis=1) if dtype is np.int64 else \
                    np.array([reduce(gcd, map(int, row), 0) for row in L])
                for row in L[g_all == 1]:
                    lab = Labelling(Z, tuple(int(x) for x in row))
                    if not linear and not verify(lab, g).ok:
                        continue
                    out.append(lab)
                    if limit is not None and len(out) >= limit:
                        return out
    return out


# ---------------------------------------------------------------- prime fields

def nullspace_mod_p(m: Sequence[Sequence[int]], p: int, cols: int) -> list[list[int]]:
    a = [[x % p for x in row] for row in m]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    basis = []
    for f in (c for c in range(cols) if c not in pivots):
        v = [0] * cols
        v[f] = 1
        for row, pc in zip(a, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i in range(n + 1) if sieve[i]]


@dataclass(frozen=True)
class RandomCycleSystem:
    n: int
    g: tuple[int, ...]
    seed: int

    def __post_init__(self):
        check_cycle_map(self.g)

    def matrix(self) -> IntMatrix:
        n = self.n
        rows = []
        for i, t in enumerate(self.g):
            row = [0] * n
            row[i] += 1
            row[(i + 1) % n] += 1
            row[t] -= 1
            rows.append(row)
        return rows


def check_cycle_map(g: Sequence[int]) -> None:
    n = len(g)
    for i, t in enumerate(g):
        if not 0 <= t < n or t in (i, (i + 1) % n) or t == g[(i + 1) % n]:
            raise InvalidCycleMap(f"g({i}) = {t} breaks the constraints")


def sample_cycle_map(n: int, rng: random.Random) -> tuple[int, ...]:
    """Uniform over maps with g(i) not in {i, i+1} and g(i) != g(i+1), by rejection."""
    while True:
        g = [rng.choice([t for t in range(n) if t not in (i, (i + 1) % n)]) for i in range(n)]
        if all(g[i] != g[(i + 1) % n] for i in range(n)):
            return tuple(g)


@dataclass
class CycleHit:
    prime: int
    labelling: Labelling
    cycle_map: tuple[int, ...]
    det: int

    def to_json(self) -> dict:
        return {"p": self.prime, "labels": list(self.labelling.labels),
                "g": list(self.cycle_map), "det": str(self.det)}


def random_cycle_search(n: int, seed: int = 0, prime_bound: int = 100, max_iter: int = 100_000,
                        want: int = 1) -> list[CycleHit]:
    """Find Z_p labellings of C_n from random systems x_i + x_{i+1} = x_{g(i)}.

    For each sampled ``g`` the determinant of the system is computed; every
    prime ``p <= prime_bound`` dividing it gives a nonzero kernel vector mod
    ``p`` (scaled so its first nonzero entry is 1), which is kept only if it
    verifies as a labelling of C_n.  Integer-singular systems are skipped.
    """
    if n < 5:
        raise ValueError("n must be >= 5")
    if prime_bound < 2:
        raise ValueError("prime_bound must be >= 2")
    rng = random.Random(seed)
    primes = [p for p in _primes_upto(prime_bound) if p >= n]
    cyc = G.cycle(n)
    hits: list[CycleHit] = []
    seen = set()
    for _ in range(max_iter):
        system = RandomCycleSystem(n, sample_cycle_map(n, rng), seed)
        mat = system.matrix()
        det = determinant(mat)
        if det == 0:
            continue
        for p in primes:
            if det % p:
                continue
            for v in nullspace_mod_p(mat, p, n):
                lead = next(x for x in v if x)
                inv = pow(lead, -1, p)
                labels = tuple(x * inv % p for x in v)
                if len(set(labels)) < n or (p, labels) in seen:
                    continue
                seen.add((p, labels))
                lab = Labelling(M.mod_add(p), labels)
                if verify(lab, cyc).ok:
                    hits.append(CycleHit(p, lab, system.g, det))
                    if len(hits) >= want:
                        return hits
    if not hits:
        raise NoSolutionWithinBudget(f"no verified C_{n} labelling in {max_iter} samples")
    return hits
