"""Arithmetic in GF(2^r): field elements as ints, absolute trace, additive character.

Field elements are plain nonnegative ints below q = 2**r, read as coefficient
vectors over the polynomial basis.  Addition is xor; a Field object carries the
modulus and supplies multiplication, inversion, trace and the character
lambda(x) = (-1)**trace(x).  Zero and one are always represented by 0 and 1.
"""

from __future__ import annotations

# Lowest-weight irreducible polynomial per degree, lexicographically smallest
# among minimal-weight candidates.  Re-verified irreducible at construction,
# so a bad entry fails loudly rather than corrupting results.
MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x187,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x2027,
    14: 0x4021,
    15: 0x8003,
    16: 0x10047,
    17: 0x20009,
    18: 0x40009,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x1000087,
}

MAX_DEGREE = 24

# Build multiplication/inverse/trace lookup tables only for fields this small.
_TABLE_LIMIT = 1 << 11


def _poly_mod(a: int, b: int) -> int:
    """Remainder of polynomial a modulo b over GF(2)."""
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def is_irreducible(poly: int, degree: int) -> bool:
    """Exhaustive factor search: no divisor of degree 1..degree//2."""
    if poly.bit_length() - 1 != degree:
        return False
    if degree == 1:
        return True
    if poly & 1 == 0:
        return False
    for d in range(1, degree // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if _poly_mod(poly, g) == 0:
                return False
    return True


class Field:
    """The field GF(2^r) with a fixed irreducible modulus.

    Semantically immutable after construction; all operations are pure, so
    instances are safe to share across threads and processes.  Lookup tables
    for small fields are built lazily and idempotently, which is the only
    internal state.
    """

    def __init__(self, r: int, modulus: int | None = None):
        if not 1 <= r <= MAX_DEGREE:
            raise ValueError(f"unsupported extension degree r={r}; need 1 <= r <= {MAX_DEGREE}")
        if modulus is None:
            modulus = MODULI[r]
        if not is_irreducible(modulus, r):
            raise ValueError(f"modulus {modulus:#x} is not irreducible of degree {r}")
        self.r = r
        self.q = 1 << r
        self.modulus = modulus
        self._mul_table: list[list[int]] | None = None
        self._inv_table: list[int] | None = None
        self._trace_table: list[int] | None = None

    def __repr__(self):
        return f"Field(r={self.r}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.r, self.modulus) == (other.r, other.modulus)

    def __hash__(self):
        return hash((self.r, self.modulus))

    def _mul_raw(self, a: int, b: int) -> int:
        m, r = self.modulus, self.r
        p = 0
        while b:
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a >> r:
                a ^= m
        return p

    def mul_table(self) -> list[list[int]]:
        """Full q x q product table; built lazily, only for small fields."""
        if self._mul_table is None:
            if self.q > _TABLE_LIMIT:
                raise ValueError(f"q={self.q} too large for a product table")
            q = self.q
            self._mul_table = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        return self._mul_table

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        if self.q <= _TABLE_LIMIT:
            return self.mul_table()[a][b]
        return self._mul_raw(a, b)

    def inv_table(self) -> list[int]:
        """Inverses of all elements; entry 0 is a placeholder and never valid."""
        if self._inv_table is None:
            self._inv_table = [0] * self.q
            for a in range(1, self.q):
                self._inv_table[a] = self._inv_raw(a)
        return self._inv_table

    def _inv_raw(self, a: int) -> int:
        # a**(q-2) by square and multiply
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if not 0 < a < self.q:
            if a == 0:
                raise ZeroDivisionError("0 has no multiplicative inverse")
            raise ValueError(f"{a} is not an element of GF(2^{self.r})")
        if self.q <= _TABLE_LIMIT:
            return self.inv_table()[a]
        return self._inv_raw(a)

    def trace_table(self) -> list[int]:
        if self._trace_table is None:
            self._trace_table = [self._trace_raw(a) for a in range(self.q)]
        return self._trace_table

    def _trace_raw(self, a: int) -> int:
        # tr(x) = x + x^2 + ... + x^(2^(r-1)), landing in {0, 1}
        t, x = 0, a
        for _ in range(self.r):
            t ^= x
            x = self._mul_raw(x, x)
        return t

    def trace(self, a: int) -> int:
        if self.q <= _TABLE_LIMIT:
            return self.trace_table()[a]
        return self._trace_raw(a)

    def lam(self, a: int) -> int:
        """The canonical additive character: +1 on trace 0, -1 on trace 1."""
        return -1 if self.trace(a) else 1

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result
