"""Closed-form candidate labellings.

Nothing here asserts that a candidate is valid: pair each result with
:func:`sumgraphs.labelling.verify` against the intended graph.
"""
from __future__ import annotations

from . import magmas as M
from .fib import fib, fib_params
from .labelling import Labelling
from .magmas import MagmaSpec


class ConstructionError(ValueError):
    pass


class TooSmall(ConstructionError):
    pass


class InvalidGenerator(ConstructionError):
    pass


class DegenerateGroup(ConstructionError):
    pass


class UniverseTooSmall(ConstructionError):
    pass


class NotRepresentable(ConstructionError):
    pass


class NecessaryConditionViolated(ConstructionError):
    def __init__(self, message, labelling, conditions):
        super().__init__(message)
        self.labelling = labelling
        self.conditions = conditions


def harary_path(n: int) -> Labelling:
    """a_0 = 1, a_1 = 2, a_k = a_{k-2} - a_{k-1} along P_n."""
    if n < 4:
        raise TooSmall("Harary's path labelling needs n >= 4")
    a = [1, 2]
    while len(a) < n:
        a.append(a[-2] - a[-1])
    return Labelling(M.int_add(), tuple(a))


def matching_harary_style(m: int) -> Labelling:
    """Two runs ``a..a+m-2`` and ``-b..-b-m+2`` plus the pair ``(m-1, 2m-3)``.

    With ``a = 2m-2`` and ``b = m-1``; vertex pairs ``(2i, 2i+1)`` are
    ``(a+i, -b-i)`` for ``i < m-1`` and finally ``(m-1, 2m-3)``.
    """
    if m < 4:
        raise TooSmall("this matching construction needs m >= 4")
    a, b = 2 * m - 2, m - 1
    labels: list[int] = []
    for i in range(m - 1):
        labels += [a + i, -(b + i)]
    labels += [a - b, b + m - 2]
    return Labelling(M.int_add(), tuple(labels))


def matching_li(m: int) -> Labelling:
    """-1; 1, 3, ..., 4m-5; 4m-4, paired so each pair sums to a label."""
    if m < 3:
        raise TooSmall("Li's matching labelling needs m >= 3")
    top = 4 * m - 4
    labels = [-1, top]
    for i in range(m - 1):
        labels += [2 * i + 1, top - (2 * i + 1)]
    return Labelling(M.int_add(), tuple(labels))


def empty_graph(n: int) -> Labelling:
    """-(n-1)..-ceil(n/2) together with floor(n/2)..n-1; radius n-1."""
    if n < 1:
        raise TooSmall("empty graph labelling needs n >= 1")
    neg = list(range(-(n - 1), -((n + 1) // 2) + 1))
    pos = list(range(n // 2, n))
    return Labelling(M.int_add(), tuple(neg + pos))


def empty_graph_even_alt(n: int) -> Labelling:
    """Odd numbers +-1, +-3, ..., +-(n-1) for even n."""
    if n < 2 or n % 2:
        raise ConstructionError("alternative empty graph labelling needs even n >= 2")
    odds = list(range(1, n, 2))
    return Labelling(M.int_add(), tuple([-x for x in reversed(odds)] + odds))


def _as_group(spec: MagmaSpec) -> MagmaSpec:
    if spec.kind not in (M.MOD_ADD, M.ABELIAN):
        raise ConstructionError(f"{M.spec_name(spec)} is not a finite abelian group")
    return spec


def c4_over_abelian(spec: MagmaSpec, a) -> Labelling:
    """(a, 3a, 4a, 2a) around C_4; needs a != 0 and 5a = 0."""
    _as_group(spec)
    M.check_element(spec, a)
    if a == M.zero(spec) or M.scale(spec, 5, a) != M.zero(spec):
        raise InvalidGenerator(f"{M.render_element(spec, a)} does not have order 5")
    return Labelling(spec, tuple(M.scale(spec, k, a) for k in (1, 3, 4, 2)))


def fibonacci_conditions(spec: MagmaSpec, a0, a1, n: int) -> dict:
    p = fib_params(n)
    order = M.element_order(spec, a0)
    return {
        "order_a0": order,
        "delta": p.delta,
        "order_divides_delta": p.delta % order == 0,
        "d_a1_equals_z_a0": M.scale(spec, p.d, a1) == M.scale(spec, p.z, a0),
    }


def fibonacci_cycle(spec: MagmaSpec, a0, a1, n: int, strict: bool = False) -> Labelling:
    """a_0, a_1, a_{i+1} = a_i + a_{i-1} around C_n.

    With ``strict`` a failed necessary condition raises
    :class:`NecessaryConditionViolated`, which still carries the labelling.
    Coinciding labels give a relaxed labelling so it can be inspected.
    """
    _as_group(spec)
    if n < 3:
        raise TooSmall("cycles need n >= 3")
    M.check_element(spec, a0)
    M.check_element(spec, a1)
    seq = [a0, a1]
    while len(seq) < n:
        seq.append(M.raw_op(spec, seq[-2], seq[-1]))
    lab = Labelling(spec, tuple(seq), relaxed=len(set(seq)) < n)
    if strict:
        cond = fibonacci_conditions(spec, a0, a1, n)
        if not (cond["order_divides_delta"] and cond["d_a1_equals_z_a0"]):
            raise NecessaryConditionViolated("necessary conditions fail", lab, cond)
    return lab


def c4l_theorem_labelling(ell: int) -> Labelling:
    """a_i = (f_i mod f, f_{i-1} mod f), i < 4*ell, over Z_f x Z_f with f = f_{2*ell}."""
    if ell < 1:
        raise TooSmall("ell must be >= 1")
    f = fib(2 * ell)
    if f < 2:
        raise DegenerateGroup(f"f_{2 * ell} = {f} gives the trivial group")
    spec = M.abelian(f, f)
    labels = tuple((fib(i) % f, fib(i - 1) % f) for i in range(4 * ell))
    return Labelling(spec, labels, relaxed=len(set(labels)) < len(labels))


def union_cycle(k: int) -> Labelling:
    """C_{2k} over subsets of a 2k-set with union: A_i = {i}, B_i = {k+i}."""
    if k < 2:
        raise TooSmall("union cycle needs k >= 2")
    spec = M.set_magma(2 * k, "union")
    labels = []
    for i in range(1, k + 1):
        nxt = i % k + 1
        labels.append(1 << (i - 1))
        labels.append((1 << (i - 1)) | (1 << (nxt - 1)) | (1 << (k + i - 1)))
    return Labelling(spec, tuple(labels))


def union_clique(n: int, s: int) -> Labelling:
    """Chain of n nested sets starting at the empty set."""
    if n < 1:
        raise TooSmall("clique needs n >= 1")
    if n > s + 1:
        raise UniverseTooSmall(f"a chain of {n} sets needs a universe of size >= {n - 1}")
    return Labelling(M.set_magma(s, "union"), tuple((1 << i) - 1 for i in range(n)))


def boolean_clique(m: int) -> Labelling:
    """K_m over subsets with symmetric difference, for m = 2^k or 2^k - 1."""
    if m < 1:
        raise NotRepresentable("m must be >= 1")
    if m & (m - 1) == 0:
        k = m.bit_length() - 1
        return Labelling(M.set_magma(k, "symdiff"), tuple(range(m)))
    if (m + 1) & m == 0:
        k = (m + 1).bit_length() - 1
        return Labelling(M.set_magma(k, "symdiff"), tuple(range(1, m + 1)))
    raise NotRepresentable(f"K_{m}: m is neither 2^k nor 2^k - 1")


def relaxed_clique(n: int) -> Labelling:
    if n < 1:
        raise TooSmall("clique needs n >= 1")
    return Labelling(M.int_add(), (0,) * n, relaxed=True)


CONSTRUCTORS = {
    "harary-path": harary_path,
    "matching-harary": matching_harary_style,
    "matching-li": matching_li,
    "empty": empty_graph,
    "empty-alt": empty_graph_even_alt,
    "c4l": c4l_theorem_labelling,
    "union-cycle": union_cycle,
    "union-clique": union_clique,
    "boolean-clique": boolean_clique,
    "relaxed-clique": relaxed_clique,
}
