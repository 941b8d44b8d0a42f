"""Fibonacci numbers, the cycle-labelling parameter tuple and the delta-ratio table."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from decimal import Decimal, getcontext
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def _fib_pair(k: int) -> tuple[int, int]:
    # (f_k, f_{k+1}) by fast doubling, k >= 0
    if k == 0:
        return 0, 1
    a, b = _fib_pair(k >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if k & 1 else (c, d)


def fib(k: int) -> int:
    """f_k for any integer k, with f_{-t} = (-1)^(t-1) f_t."""
    if k >= 0:
        return _fib_pair(k)[0]
    t = -k
    f = _fib_pair(t)[0]
    return f if t % 2 == 1 else -f


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with g = x*a + y*b, g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def gcd_fn_closed_form(n: int) -> int:
    """gcd(f_n, f_{n+1} - 1) by residue class of n."""
    if n < 3:
        raise ValueError("closed form needs n >= 3")
    if n % 2 == 1:
        return 2 if n % 3 == 0 else 1
    h = n // 2
    if n % 4 == 0:
        return fib(h)
    return fib(h) + 2 * fib(h - 1)


@dataclass(frozen=True)
class FibParams:
    n: int
    d: int
    x: int
    y: int
    z: int
    q: int
    q1: int
    e: int
    z1: int
    delta: int

    def to_json(self) -> dict:
        # keep big integers exact in JSON consumers that use doubles
        return {k: (v if abs(v) < 2 ** 53 else str(v)) for k, v in asdict(self).items()}


def fib_params(n: int) -> FibParams:
    """Parameters constraining Fibonacci labellings of C_n over abelian groups.

    A labelling generated by ``(a0, a1)`` needs ``d*a1 == z*a0`` and the order
    of ``a0`` to divide ``delta``.  ``(x, y)`` is the Bezout pair returned by
    :func:`ext_gcd` on ``(f_n, f_{n+1} - 1)``; ``z``, ``e``, ``z1`` and hence
    ``delta`` depend on that choice.
    """
    if n < 3:
        raise ValueError("fib_params needs n >= 3")
    fn, fn1, fnm1 = fib(n), fib(n + 1), fib(n - 1)
    d, x, y = ext_gcd(fn, fn1 - 1)
    z = (1 - fnm1) * x - fn * y
    q, q1 = fn // d, (fn1 - 1) // d
    e = z * q + fnm1 - 1
    z1 = z * q1 + fn
    return FibParams(n, d, x, y, z, q, q1, e, z1, gcd(e, z1))


def delta(n: int) -> int:
    return fib_params(n).delta


PHI_DIGITS = 50


def phi() -> Decimal:
    getcontext().prec = PHI_DIGITS
    return (1 + Decimal(5).sqrt()) / 2


PROGRESSIONS = ((4, 0), (4, 2), (6, 1), (6, 3), (6, 5))


def delta_ratio_report(max_k: int) -> dict:
    """Consecutive delta ratios along n = 4k+r and n = 6k+r.

    Returns ``{"phi": str, "limits": {...}, "rows": [...]}`` where each row is
    ``{"progression": "4k+0", "k": k, "n": n, "delta": int, "ratio": str|None}``.
    Ratios are printed to 12 significant digits; nothing is asserted.
    """
    if max_k < 2:
        raise ValueError("max_k must be >= 2")
    p = phi()
    limits = {"4k+r": 2 + p, "6k+r": 13 + 8 / p}
    rows = []
    for step, r in PROGRESSIONS:
        prev = None
        for k in range(1, max_k + 1):
            n = step * k + r
            if n < 3:
                continue
            dl = delta(n)
            ratio = None
            if prev:
                getcontext().prec = PHI_DIGITS
                ratio = Decimal(dl) / Decimal(prev)
            rows.append({"progression": f"{step}k+{r}", "k": k, "n": n, "delta": dl,
                         "ratio": None if ratio is None else f"{ratio:.12g}"})
            prev = dl
    return {"phi": str(p), "limits": {k: str(v) for k, v in limits.items()}, "rows": rows}


def format_delta_report(report: dict) -> str:
    lines = [f"phi = {report['phi']}"]
    for name, v in report["limits"].items():
        lines.append(f"conjectured limit for {name}: {Decimal(v):.15g}")
    lines.append(f"{'prog':>6} {'k':>4} {'n':>5} {'ratio':>16}  delta")
    for row in report["rows"]:
        ratio = row["ratio"] or "-"
        lines.append(f"{row['progression']:>6} {row['k']:>4} {row['n']:>5} {ratio:>16}  {row['delta']}")
    return "\n".join(lines)
