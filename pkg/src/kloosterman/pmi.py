"""Power moment identities: Stirling numbers, the Pless identity, and the
recursion producing trace-one Kloosterman moments from code weight data.

Everything is computed in exact rational arithmetic; any result that fails to
clear its denominator is a hard error, never a rounding event.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classical import ORTHOGONAL, SYMPLECTIC
from .dcsum import cell_constants
from .gf2r import Field
from .ksum import moments
from .wcode import weight_prefix_closed

_T1K_MEMO: dict[tuple[int, int, int, int], int] = {}


def stirling2(h: int, t: int) -> int:
    """Stirling number of the second kind via its alternating sum; S(0,0) = 1."""
    if h < 0 or t < 0:
        raise ValueError("Stirling numbers need nonnegative arguments")
    if t > h:
        return 0
    total = sum((-1) ** (t - j) * math.comb(t, j) * j**h for j in range(t + 1))
    ft = math.factorial(t)
    assert total % ft == 0
    return total // ft


def _comb0(n: int, k: int) -> int:
    """Binomial coefficient with the out-of-range-is-zero convention."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def pless_check(
    length: int, dim: int, dual_weights: list[int], prefix: list[int], h: int
) -> tuple[int, int]:
    """Both sides of the binary Pless power moment identity, exactly.

    dual_weights lists the weight of every codeword of a binary [length, dim]
    code B; prefix lists the weight distribution C_0.. of its dual, at least
    up to min(length, h).  Returns (sum of h-th weight powers over B, the
    Stirling/binomial side evaluated from the prefix).
    """
    jcap = min(length, h)
    if len(prefix) <= jcap:
        raise ValueError(f"prefix covers j < {len(prefix)}, need j <= {jcap}")
    lhs = sum(w**h for w in dual_weights)
    rhs = Fraction(0)
    for j in range(jcap + 1):
        inner = sum(
            math.factorial(t) * stirling2(h, t) * Fraction(2) ** (dim - t) * _comb0(length - j, t - j)
            for t in range(j, h + 1)
        )
        rhs += (-1) ** j * prefix[j] * inner
    assert rhs.denominator == 1
    return lhs, int(rhs)


def _check_recursion_range(n: int, field: Field) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"the recursion needs odd n, got n={n}")
    if n == 1 and field.q < 8:
        raise ValueError(
            f"outside the supported range: n=1 requires q >= 8, got q={field.q} "
            "(any q is allowed once n >= 3)"
        )


def _difference_prefix(n: int, field: Field, jmax: int) -> list[int]:
    """D_j: orthogonal-cell minus symplectic-cell weight counts, j = 0..jmax."""
    cj = weight_prefix_closed(n, field, jmax, ORTHOGONAL)
    cj_hat = weight_prefix_closed(n, field, jmax, SYMPLECTIC)
    return [a - b for a, b in zip(cj, cj_hat)]


def _t1k_value(n: int, field: Field, h: int) -> int:
    key = (n, field.r, field.modulus, h)
    cached = _T1K_MEMO.get(key)
    if cached is not None:
        return cached
    consts = cell_constants(n, field)
    scale, cofactor, size = consts.scale, consts.cofactor, consts.size
    jcap = min(size, h)
    d = _difference_prefix(n, field, jcap)

    first = sum(
        math.comb(h, l) * cofactor ** (h - l) * _t1k_value(n, field, l)
        for l in range(1, h - 1, 2)
    )
    double_sum = Fraction(0)
    for j in range(jcap + 1):
        inner = sum(
            math.factorial(t)
            * stirling2(h, t)
            * Fraction(2) ** (h - t - 1)
            * _comb0(size - j, t - j)
            for t in range(j, h + 1)
        )
        double_sum += (-1) ** j * d[j] * inner
    value = -first + Fraction(field.q, scale**h) * double_sum
    assert value.denominator == 1, f"non-integral recursion value at (n={n}, q={field.q}, h={h})"
    result = int(value)
    _T1K_MEMO[key] = result
    return result


@dataclass(frozen=True)
class RecursionReport:
    """One recursion evaluation: inputs, the D_j data, and the verdict."""

    n: int
    q: int
    h: int
    d_values: tuple[int, ...]
    recursive: int
    direct: int | None
    match: bool | None


def t1k_recursive(n: int, field: Field, h: int, compare: bool = False) -> RecursionReport:
    """Trace-one moment of order h from code weight data, per the recursion.

    Defined for odd h, with odd n >= 3 at any q, or n = 1 with q >= 8.  With
    compare=True the direct trace-one power sum is computed as an independent
    oracle and the verdict recorded.
    """
    _check_recursion_range(n, field)
    if h < 1 or h % 2 == 0:
        raise ValueError(f"the recursion needs odd h >= 1, got h={h}")
    value = _t1k_value(n, field, h)
    size = cell_constants(n, field).size
    d = tuple(_difference_prefix(n, field, min(size, h)))
    direct = moments(field, h).t1k if compare else None
    return RecursionReport(
        n=n,
        q=field.q,
        h=h,
        d_values=d,
        recursive=value,
        direct=direct,
        match=(value == direct) if compare else None,
    )


def full_moment_identity(n: int, field: Field, h: int) -> tuple[int, int]:
    """Both sides of the identity tying binomial-weighted full moments MK^l
    to the symplectic cell's weight prefix; exact equality is the contract."""
    _check_recursion_range(n, field)
    if h < 1:
        raise ValueError(f"need h >= 1, got h={h}")
    consts = cell_constants(n, field)
    scale, cofactor, size = consts.scale, consts.cofactor, consts.size
    lhs = Fraction(scale**h, 2**h) * sum(
        (-1) ** l * math.comb(h, l) * cofactor ** (h - l) * moments(field, l).mk
        for l in range(h + 1)
    )
    jcap = min(size, h)
    prefix_hat = weight_prefix_closed(n, field, jcap, SYMPLECTIC)
    rhs = field.q * sum(
        (-1) ** j
        * prefix_hat[j]
        * sum(
            math.factorial(t) * stirling2(h, t) * Fraction(2) ** (-t) * _comb0(size - j, t - j)
            for t in range(j, h + 1)
        )
        for j in range(jcap + 1)
    )
    assert lhs.denominator == 1 and rhs.denominator == 1
    return int(lhs), int(rhs)


def mk_via_identity(n: int, field: Field, h: int) -> int:
    """Solve the full-moment identity for MK^h given the lower direct moments."""
    _check_recursion_range(n, field)
    if h < 1:
        raise ValueError(f"need h >= 1, got h={h}")
    consts = cell_constants(n, field)
    scale, cofactor, size = consts.scale, consts.cofactor, consts.size
    jcap = min(size, h)
    prefix_hat = weight_prefix_closed(n, field, jcap, SYMPLECTIC)
    rhs = field.q * sum(
        (-1) ** j
        * prefix_hat[j]
        * sum(
            math.factorial(t) * stirling2(h, t) * Fraction(2) ** (-t) * _comb0(size - j, t - j)
            for t in range(j, h + 1)
        )
        for j in range(jcap + 1)
    )
    lower = sum(
        (-1) ** l * math.comb(h, l) * cofactor ** (h - l) * moments(field, l).mk
        for l in range(h)
    )
    value = (-1) ** h * (rhs * Fraction(2**h, scale**h) - lower)
    assert value.denominator == 1, f"non-integral moment at (n={n}, q={field.q}, h={h})"
    return int(value)
