"""Carrier-and-operation pairs with exact element arithmetic.

Elements are plain values (``int`` or ``tuple`` of ``int``) and never carry
their magma; every function takes the :class:`MagmaSpec` explicitly.

Set magmas encode a subset of ``{1, ..., s}`` as an ``int`` whose bit
``e - 1`` marks membership of ``e``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Any, Iterator

INT_ADD = "int_add"
NAT_ADD = "nat_add"
ABS_DIFF = "abs_diff"
MOD_ADD = "mod_add"
MOD_MUL_UNITS = "mod_mul_units"
ABELIAN = "abelian"
SET = "set"
TABLE = "table"

SET_OPS = ("union", "intersection", "symdiff", "complement_union", "complement_intersection")
TABLE_MAX = 64


class MagmaError(ValueError):
    pass


class DomainMismatch(MagmaError):
    pass


class InfiniteCarrier(MagmaError):
    pass


@dataclass(frozen=True)
class MagmaSpec:
    kind: str
    moduli: tuple[int, ...] = ()
    set_size: int = 0
    set_op: str = ""
    table: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        k = self.kind
        if k in (MOD_ADD, ABELIAN):
            if not self.moduli or any(m < 1 for m in self.moduli):
                raise MagmaError("moduli must be >= 1")
            if k == MOD_ADD and len(self.moduli) != 1:
                raise MagmaError("ModAdd takes exactly one modulus")
        elif k == MOD_MUL_UNITS:
            if len(self.moduli) != 1 or self.moduli[0] < 2:
                raise MagmaError("ModMulUnits needs a single modulus >= 2")
        elif k == SET:
            if self.set_size < 0 or self.set_op not in SET_OPS:
                raise MagmaError(f"bad set magma ({self.set_size}, {self.set_op!r})")
        elif k == TABLE:
            size = len(self.table)
            if not 1 <= size <= TABLE_MAX:
                raise MagmaError(f"table magma size must be in 1..{TABLE_MAX}")
            if any(len(r) != size or any(not 0 <= x < size for x in r) for r in self.table):
                raise MagmaError("table must be square with entries in range")
        elif k not in (INT_ADD, NAT_ADD, ABS_DIFF):
            raise MagmaError(f"unknown magma kind {k!r}")

    @property
    def modulus(self) -> int:
        return self.moduli[0]

    @property
    def is_finite(self) -> bool:
        return self.kind not in (INT_ADD, NAT_ADD, ABS_DIFF)

    @property
    def is_commutative(self) -> bool:
        if self.kind != TABLE:
            return True
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(len(t)) for b in range(a))

    def __str__(self) -> str:
        return spec_name(self)


def int_add() -> MagmaSpec:
    return MagmaSpec(INT_ADD)


def nat_add() -> MagmaSpec:
    return MagmaSpec(NAT_ADD)


def abs_diff() -> MagmaSpec:
    return MagmaSpec(ABS_DIFF)


def mod_add(m: int) -> MagmaSpec:
    return MagmaSpec(MOD_ADD, (m,))


def mod_mul_units(m: int) -> MagmaSpec:
    return MagmaSpec(MOD_MUL_UNITS, (m,))


def abelian(*moduli: int) -> MagmaSpec:
    return MagmaSpec(ABELIAN, tuple(moduli))


def set_magma(s: int, op: str) -> MagmaSpec:
    return MagmaSpec(SET, set_size=s, set_op=op)


def table_magma(rows) -> MagmaSpec:
    return MagmaSpec(TABLE, table=tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------- elements

def is_element(spec: MagmaSpec, a: Any) -> bool:
    k = spec.kind
    if k == ABELIAN:
        return (isinstance(a, tuple) and len(a) == len(spec.moduli)
                and all(isinstance(x, int) and 0 <= x < m for x, m in zip(a, spec.moduli)))
    if not isinstance(a, int) or isinstance(a, bool):
        return False
    if k == INT_ADD:
        return True
    if k in (NAT_ADD, ABS_DIFF):
        return a >= 1
    if k == MOD_ADD:
        return 0 <= a < spec.modulus
    if k == MOD_MUL_UNITS:
        return 0 < a < spec.modulus and gcd(a, spec.modulus) == 1
    if k == SET:
        return 0 <= a < (1 << spec.set_size)
    return 0 <= a < len(spec.table)


def check_element(spec: MagmaSpec, a: Any) -> None:
    if not is_element(spec, a):
        raise DomainMismatch(f"{a!r} is not an element of {spec_name(spec)}")


def op(spec: MagmaSpec, a: Any, b: Any) -> Any:
    """The magma operation ``a (+) b``.

    For ``abs_diff`` the result may be 0, which is outside the carrier and so
    never matches a label.  Likewise ``nat_add`` results are always in range.
    """
    check_element(spec, a)
    check_element(spec, b)
    return raw_op(spec, a, b)


def raw_op(spec: MagmaSpec, a, b):
    # unchecked; the search and verifier call this in inner loops
    k = spec.kind
    if k in (INT_ADD, NAT_ADD):
        return a + b
    if k == MOD_ADD:
        return (a + b) % spec.moduli[0]
    if k == ABELIAN:
        return tuple((x + y) % m for x, y, m in zip(a, b, spec.moduli))
    if k == ABS_DIFF:
        return abs(a - b)
    if k == MOD_MUL_UNITS:
        return a * b % spec.moduli[0]
    if k == SET:
        o = spec.set_op
        full = (1 << spec.set_size) - 1
        if o == "union":
            return a | b
        if o == "intersection":
            return a & b
        if o == "symdiff":
            return a ^ b
        if o == "complement_union":
            return full & ~(a | b)
        return full & ~(a & b)
    return spec.table[a][b]


def enumerate_carrier(spec: MagmaSpec) -> Iterator:
    k = spec.kind
    if not spec.is_finite:
        raise InfiniteCarrier(f"{spec_name(spec)} has an infinite carrier")
    if k == MOD_ADD:
        yield from range(spec.modulus)
    elif k == MOD_MUL_UNITS:
        m = spec.modulus
        yield from (a for a in range(1, m) if gcd(a, m) == 1)
    elif k == ABELIAN:
        yield from product(*(range(m) for m in spec.moduli))
    elif k == SET:
        yield from range(1 << spec.set_size)
    else:
        yield from range(len(spec.table))


def carrier_size(spec: MagmaSpec) -> int:
    return sum(1 for _ in enumerate_carrier(spec))


def zero(spec: MagmaSpec):
    """Additive identity for the group kinds."""
    if spec.kind in (INT_ADD, MOD_ADD):
        return 0
    if spec.kind == ABELIAN:
        return (0,) * len(spec.moduli)
    raise MagmaError(f"{spec_name(spec)} has no additive zero")


def scale(spec: MagmaSpec, k: int, a):
    """``k * a`` in an additive group (``k`` may be negative)."""
    if spec.kind == INT_ADD:
        return k * a
    if spec.kind == MOD_ADD:
        return k * a % spec.modulus
    if spec.kind == ABELIAN:
        return tuple(k * x % m for x, m in zip(a, spec.moduli))
    raise MagmaError(f"scalar multiples undefined for {spec_name(spec)}")


def element_order(spec: MagmaSpec, a) -> int:
    """Additive order of ``a`` in ModAdd or an abelian product."""
    if spec.kind == MOD_ADD:
        m = spec.modulus
        return m // gcd(a, m)
    if spec.kind == ABELIAN:
        order = 1
        for x, m in zip(a, spec.moduli):
            o = m // gcd(x, m)
            order = order * o // gcd(order, o)
        return order
    raise MagmaError(f"additive order undefined for {spec_name(spec)}")


def complement(spec: MagmaSpec, a: int) -> int:
    return ((1 << spec.set_size) - 1) & ~a


# ---------------------------------------------------------------- groups

def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def abelian_groups_of_order(n: int) -> list[MagmaSpec]:
    """One spec per isomorphism class, in invariant-factor form.

    Each class is a choice of partition of every prime exponent; factors are
    listed ``d_1 | d_2 | ... | d_k``.  Order 1 gives the trivial group ``Z_1``.
    """
    if n < 1:
        raise MagmaError("group order must be >= 1")
    if n == 1:
        return [abelian(1)]
    primes = sorted(_factorize(n).items())
    specs = []
    for choice in product(*(list(_partitions(e)) for _, e in primes)):
        width = max(len(part) for part in choice)
        factors = [1] * width
        for (p, _), part in zip(primes, choice):
            for i, e in enumerate(part):
                factors[width - 1 - i] *= p ** e
        specs.append(abelian(*factors))
    return specs


# ---------------------------------------------------------------- universal

def universal_magma(g):
    """Table magma over ``V + {bullet}`` in which ``g`` is a sum graph.

    Elements ``0..n-1`` are the vertices and ``n`` is the bullet.  ``a (+) b``
    is vertex 0 when ``ab`` is an edge and the bullet otherwise, so the
    identity labelling reproduces ``g``.
    """
    from .labelling import Labelling

    n = g.n
    if n < 1:
        raise MagmaError("universal magma needs at least one vertex")
    if n + 1 > TABLE_MAX:
        raise MagmaError(f"graph too large for a {TABLE_MAX}-element table")
    bullet = n
    rows = [[0 if a < n and b < n and g.adjacent(a, b) else bullet for b in range(n + 1)]
            for a in range(n + 1)]
    spec = table_magma(rows)
    return spec, Labelling(spec, tuple(range(n)))


# ---------------------------------------------------------------- rendering

def spec_name(spec: MagmaSpec) -> str:
    k = spec.kind
    if k == INT_ADD:
        return "Z"
    if k == NAT_ADD:
        return "N"
    if k == ABS_DIFF:
        return "N(absdiff)"
    if k == MOD_ADD:
        return f"Z_{spec.modulus}"
    if k == MOD_MUL_UNITS:
        return f"Z*_{spec.modulus}"
    if k == ABELIAN:
        return "x".join(f"Z_{m}" for m in spec.moduli)
    if k == SET:
        return f"P({spec.set_size}),{spec.set_op}"
    return f"Table({len(spec.table)})"


def spec_to_json(spec: MagmaSpec) -> dict:
    doc: dict[str, Any] = {"kind": spec.kind}
    if spec.kind in (MOD_ADD, MOD_MUL_UNITS, ABELIAN):
        doc["moduli"] = list(spec.moduli)
    elif spec.kind == SET:
        doc["size"] = spec.set_size
        doc["op"] = spec.set_op
    elif spec.kind == TABLE:
        doc["table"] = [list(r) for r in spec.table]
    return doc


def spec_from_json(doc: dict) -> MagmaSpec:
    kind = doc["kind"]
    if kind in (MOD_ADD, MOD_MUL_UNITS, ABELIAN):
        return MagmaSpec(kind, tuple(doc["moduli"]))
    if kind == SET:
        return set_magma(doc["size"], doc["op"])
    if kind == TABLE:
        return table_magma(doc["table"])
    return MagmaSpec(kind)


def subset_members(a: int) -> list[int]:
    return [i + 1 for i in range(a.bit_length()) if a >> i & 1]


def subset_from_members(members) -> int:
    out = 0
    for e in members:
        if e < 1:
            raise MagmaError(f"set members are numbered from 1, got {e}")
        out |= 1 << (e - 1)
    return out


def element_to_json(spec: MagmaSpec, a):
    if spec.kind == SET:
        return subset_members(a)
    if spec.kind == ABELIAN:
        return list(a)
    return a


def element_from_json(spec: MagmaSpec, value):
    if spec.kind == SET:
        return subset_from_members(value)
    if spec.kind == ABELIAN:
        return tuple(value)
    return value


def render_element(spec: MagmaSpec, a) -> str:
    if spec.kind == SET:
        return "{" + ",".join(map(str, subset_members(a))) + "}"
    if spec.kind == ABELIAN:
        return "(" + ",".join(map(str, a)) + ")"
    return str(a)


def parse_spec(text: str) -> MagmaSpec:
    """Parse CLI magma names.

    ``z``, ``n``, ``absdiff``, ``z11`` / ``mod:11``, ``units:11``,
    ``ab:4x4``, ``set:4:union`` (ops: union, intersection, symdiff,
    complement_union, complement_intersection).
    """
    low = text.strip().lower()
    if low == "z":
        return int_add()
    if low == "n":
        return nat_add()
    if low == "absdiff":
        return abs_diff()
    try:
        if low.startswith("mod:"):
            return mod_add(int(low[4:]))
        if low.startswith("units:"):
            return mod_mul_units(int(low[6:]))
        if low.startswith("ab:"):
            return abelian(*(int(x) for x in low[3:].split("x")))
        if low.startswith("set:"):
            _, size, o = low.split(":")
            return set_magma(int(size), o)
        if low.startswith("z") and low[1:].isdigit():
            return mod_add(int(low[1:]))
    except ValueError:
        pass
    raise MagmaError(f"cannot parse magma {text!r}")


def parse_element(spec: MagmaSpec, text: str):
    """One label in CLI syntax: ``5``, ``(1,2)`` or ``{1,3}``."""
    t = text.strip()
    if spec.kind == ABELIAN:
        return tuple(int(x) for x in t.strip("()").split(","))
    if spec.kind == SET:
        inner = t.strip("{}").strip()
        return subset_from_members(int(x) for x in inner.split(",")) if inner else 0
    return int(t)


def split_labels(text: str) -> list[str]:
    """Split a comma list at top level so ``(1,2),(0,1)`` gives two items."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur or out:
        out.append("".join(cur))
    return [s for s in (x.strip() for x in out) if s]
