"""The groups O(2n+1,q) and Sp(2n,q): forms, parabolic subgroups, Bruhat cells.

The orthogonal group acts on column vectors of length 2n+1 preserving the
quadratic form theta(x) = sum x_i x_{n+i} + x_{2n+1}^2; the symplectic group
is the 2n x 2n analogue.  Both carry a maximal parabolic subgroup P of block
upper-triangular elements, and decompose into double cosets P sigma_r P for
r = 0..n, where sigma_r swaps the first r "plus" coordinates with their
"minus" partners.

Everything here is exact and deterministic: parabolic elements are generated
in a fixed lexicographic parameter order, coset transversals greedily in that
order, and trace histograms stream the cells without materializing them.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .gf2r import Field
from .matfq import (
    Mat,
    gl_iter,
    identity,
    is_alternating,
    mat_add,
    mat_inv,
    mat_mul,
    mat_vec,
    transpose,
)

ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"
FAMILIES = (ORTHOGONAL, SYMPLECTIC)

#: Default cap on the number of streamed group elements per enumeration.
DEFAULT_BUDGET = 10**8


class BudgetError(RuntimeError):
    """An enumeration would stream more elements than the configured budget."""


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


# ----------------------------------------------------------------------------
# closed-form orders


def gl_order(n: int, q: int) -> int:
    """Order of GL(n,q)."""
    return math.prod(q**n - q**j for j in range(n))


def q_binom(n: int, r: int, q: int) -> int:
    """Gaussian binomial coefficient counting r-dimensional subspaces of F_q^n."""
    if not 0 <= r <= n:
        raise ValueError(f"q-binomial needs 0 <= r <= n, got n={n}, r={r}")
    num = math.prod(q ** (n - j) - 1 for j in range(r))
    den = math.prod(q ** (r - j) - 1 for j in range(r))
    assert num % den == 0
    return num // den


def parabolic_order(n: int, q: int) -> int:
    """|P(2n+1,q)| = |P'(2n,q)| = q^binom(n+1,2) * |GL(n,q)|."""
    return q ** math.comb(n + 1, 2) * gl_order(n, q)


def stabilizer_order(n: int, r: int, q: int) -> int:
    """Order of A_r = P intersected with its sigma_r-conjugate."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    # r*(2n-3r-1) is always even; the combined exponent is >= 0 on 0 <= r <= n
    exponent = math.comb(n + 1, 2) + r * (2 * n - 3 * r - 1) // 2
    return gl_order(r, q) * gl_order(n - r, q) * q**exponent


def transversal_size(n: int, r: int, q: int) -> int:
    """Number of right cosets of A_r in P."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    return q ** math.comb(r + 1, 2) * q_binom(n, r, q)


def cell_order(n: int, r: int, q: int) -> int:
    """|P sigma_r P|, identical for the orthogonal and symplectic families."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    return (
        q ** (n * n)
        * q_binom(n, r, q)
        * q ** math.comb(r, 2)
        * q**r
        * math.prod(q**j - 1 for j in range(1, n + 1))
    )


def dc_order(n: int, q: int) -> int:
    """|P sigma_(n-1) P| in its separate displayed product form."""
    return (
        q ** (n * (3 * n - 1) // 2)
        * q_binom(n, 1, q)
        * math.prod(q**j - 1 for j in range(1, n + 1))
    )


def alternating_count(r: int, field: Field) -> int:
    """Number of nonsingular alternating r x r matrices over the field."""
    if r < 0:
        raise ValueError("matrix size must be nonnegative")
    if r == 0:
        return 1
    if r % 2 == 1:
        return 0
    q, half = field.q, r // 2
    return q ** (half * (half - 1)) * math.prod(q ** (2 * j - 1) - 1 for j in range(1, half + 1))


def alternating_count_bruteforce(r: int, field: Field, budget: int = DEFAULT_BUDGET) -> int:
    """Count nonsingular alternating matrices by exhaustion (small r only)."""
    from .matfq import is_invertible

    if r == 0:
        return 1
    total = field.q ** (r * (r - 1) // 2)
    if total > budget:
        raise BudgetError(f"{total} alternating matrices exceeds budget {budget}")
    return sum(1 for a in _alternating_iter(field, r) if is_invertible(field, a))


@dataclass(frozen=True)
class GroupOrders:
    """Exact subgroup and cell orders for one (n, q)."""

    n: int
    q: int
    general_linear: int
    q_binomials: tuple[int, ...]
    parabolic: int
    stabilizers: tuple[int, ...]
    cells: tuple[int, ...]

    @property
    def group_order(self) -> int:
        return sum(self.cells)


def group_order_data(n: int, field: Field) -> GroupOrders:
    q = field.q
    return GroupOrders(
        n=n,
        q=q,
        general_linear=gl_order(n, q),
        q_binomials=tuple(q_binom(n, r, q) for r in range(n + 1)),
        parabolic=parabolic_order(n, q),
        stabilizers=tuple(stabilizer_order(n, r, q) for r in range(n + 1)),
        cells=tuple(cell_order(n, r, q) for r in range(n + 1)),
    )


# ----------------------------------------------------------------------------
# forms, membership tests, the isomorphism iota


def theta_form(field: Field, x: tuple[int, ...], n: int) -> int:
    """The quadratic form sum x_i x_(n+i) + x_(2n+1)^2 on 2n+1 coordinates."""
    if len(x) != 2 * n + 1:
        raise ValueError(f"expected {2 * n + 1} coordinates, got {len(x)}")
    mul = field.mul
    s = mul(x[2 * n], x[2 * n])
    for i in range(n):
        s ^= mul(x[i], x[n + i])
    return s


def jmat(n: int) -> Mat:
    """The antidiagonal block matrix defining the symplectic form."""
    return tuple(
        tuple(1 if j == (i + n) % (2 * n) else 0 for j in range(2 * n)) for i in range(2 * n)
    )


def is_symplectic(field: Field, w: Mat, n: int) -> bool:
    if len(w) != 2 * n or len(w[0]) != 2 * n:
        raise ValueError(f"expected a {2 * n} x {2 * n} matrix")
    j = jmat(n)
    return mat_mul(field, mat_mul(field, transpose(w), j), w) == j


def _outer(field: Field, u: tuple[int, ...], v: tuple[int, ...]) -> Mat:
    mul = field.mul
    return tuple(tuple(mul(a, b) for b in v) for a in u)


def _blocks(w: Mat, n: int):
    a = tuple(row[:n] for row in w[:n])
    b = tuple(row[n : 2 * n] for row in w[:n])
    c = tuple(row[:n] for row in w[n : 2 * n])
    d = tuple(row[n : 2 * n] for row in w[n : 2 * n])
    g = w[2 * n][:n]
    h = w[2 * n][n : 2 * n]
    return a, b, c, d, g, h


def is_orthogonal(field: Field, w: Mat, n: int) -> bool:
    """Membership test for the isometry group of theta, via the block relations."""
    dim = 2 * n + 1
    if len(w) != dim or len(w[0]) != dim:
        raise ValueError(f"expected a {dim} x {dim} matrix")
    # last column must be the last standard basis vector
    if w[dim - 1][dim - 1] != 1 or any(w[i][dim - 1] for i in range(dim - 1)):
        return False
    a, b, c, d, g, h = _blocks(w, n)
    at, bt, ct = transpose(a), transpose(b), transpose(c)
    if not is_alternating(mat_add(mat_mul(field, at, c), _outer(field, g, g))):
        return False
    if not is_alternating(mat_add(mat_mul(field, bt, d), _outer(field, h, h))):
        return False
    return mat_add(mat_mul(field, at, d), mat_mul(field, ct, b)) == identity(n)


def preserves_theta(field: Field, w: Mat, n: int) -> bool:
    """Direct isometry check: theta(wx) = theta(x) for every vector x."""
    dim = 2 * n + 1
    for x in product(range(field.q), repeat=dim):
        if theta_form(field, mat_vec(field, w, x), n) != theta_form(field, x, n):
            return False
    return True


def iota(field: Field, w: Mat, n: int) -> Mat:
    """The group isomorphism onto Sp(2n,q): drop the last row and column."""
    if not is_orthogonal(field, w, n):
        raise ValueError("iota is defined on the orthogonal group only")
    return tuple(row[: 2 * n] for row in w[: 2 * n])


def _sigma_perm(n: int, r: int, dim: int) -> list[int]:
    p = list(range(dim))
    for i in range(r):
        p[i], p[n + i] = p[n + i], p[i]
    return p


def sigma_r(n: int, r: int, family: str = ORTHOGONAL) -> Mat:
    """The Weyl representative swapping the first r plus/minus coordinate pairs."""
    _check_family(family)
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    dim = 2 * n + 1 if family == ORTHOGONAL else 2 * n
    perm = _sigma_perm(n, r, dim)
    return tuple(tuple(1 if j == perm[i] else 0 for j in range(dim)) for i in range(dim))


# ----------------------------------------------------------------------------
# parabolic subgroup enumeration


def _alternating_iter(field: Field, n: int) -> Iterator[Mat]:
    """All alternating n x n matrices, lexicographic in the strict upper triangle."""
    idx = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for vals in product(range(field.q), repeat=len(idx)):
        m = [[0] * n for _ in range(n)]
        for (i, j), v in zip(idx, vals):
            m[i][j] = v
            m[j][i] = v
        yield tuple(tuple(row) for row in m)


def _symmetric_iter(field: Field, n: int) -> Iterator[Mat]:
    """All symmetric n x n matrices, lexicographic in the upper triangle."""
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    for vals in product(range(field.q), repeat=len(idx)):
        m = [[0] * n for _ in range(n)]
        for (i, j), v in zip(idx, vals):
            m[i][j] = v
            m[j][i] = v
        yield tuple(tuple(row) for row in m)


def enumerate_parabolic(
    n: int, field: Field, family: str = ORTHOGONAL, budget: int = DEFAULT_BUDGET
) -> Iterator[Mat]:
    """Yield each element of the maximal parabolic subgroup exactly once.

    Orthogonal family: parameters (A, alternating part of B, h), with
    B = alt + (transpose of h times h), assembled as the product of the Levi
    and unipotent factors.  Symplectic family: parameters (A, symmetric B).
    Generation order is lexicographic in those parameters with A outermost,
    which fixes the element ordering used everywhere downstream.
    """
    _check_family(family)
    count = parabolic_order(n, field.q)
    if count > budget:
        raise BudgetError(f"|P| = {count} exceeds enumeration budget {budget}")
    q, mul = field.q, field.mul
    zero_n = (0,) * n
    if family == ORTHOGONAL:
        for a in gl_iter(field, n):
            ait = transpose(mat_inv(field, a))
            middle = tuple(zero_n + row + (0,) for row in ait)
            for alt in _alternating_iter(field, n):
                for h in product(range(q), repeat=n):
                    b = tuple(
                        tuple(alt[i][j] ^ mul(h[i], h[j]) for j in range(n)) for i in range(n)
                    )
                    ab = mat_mul(field, a, b)
                    yield (
                        tuple(a[i] + ab[i] + (0,) for i in range(n))
                        + middle
                        + (zero_n + h + (1,),)
                    )
    else:
        for a in gl_iter(field, n):
            ait = transpose(mat_inv(field, a))
            lower = tuple(zero_n + row for row in ait)
            for b in _symmetric_iter(field, n):
                ab = mat_mul(field, a, b)
                yield tuple(a[i] + ab[i] for i in range(n)) + lower


# ----------------------------------------------------------------------------
# A_r, coset transversals, double cosets


def _conjugate_zero_positions(n: int, r: int, family: str) -> tuple[tuple[int, int], ...]:
    """Entry positions of w that must vanish for sigma_r w sigma_r to lie in P.

    Conjugation by sigma_r permutes rows and columns, and membership in P is
    exactly "in the group, with zero lower-left block (and zero g row in the
    orthogonal case)"; the group part is automatic for elements of P.
    """
    dim = 2 * n + 1 if family == ORTHOGONAL else 2 * n
    perm = _sigma_perm(n, r, dim)
    positions = [(perm[i], perm[j]) for i in range(n, 2 * n) for j in range(n)]
    if family == ORTHOGONAL:
        positions.extend((2 * n, perm[j]) for j in range(n))
    return tuple(positions)


@dataclass(frozen=True)
class CosetData:
    """A right-coset transversal of A_r in P, plus the exact cell sizes."""

    n: int
    r: int
    family: str
    field: Field
    parabolic_order: int
    stabilizer_order: int
    transversal: tuple[Mat, ...]

    @property
    def cell_size(self) -> int:
        return self.parabolic_order * len(self.transversal)


def _pack_rows(w: Mat) -> list[int]:
    return [sum(v << j for j, v in enumerate(row)) for row in w]


def coset_transversal(
    n: int, r: int, field: Field, family: str = ORTHOGONAL, budget: int = DEFAULT_BUDGET
) -> CosetData:
    """Filter A_r out of P and sift a greedy right-coset transversal.

    An element w is kept unless w * kept^(-1) lies in A_r for some already
    kept element; only the product entries that must vanish are evaluated.
    """
    _check_family(family)
    q = field.q
    positions = _conjugate_zero_positions(n, r, family)
    p_elements = list(enumerate_parabolic(n, field, family, budget))

    a_count = sum(1 for w in p_elements if all(w[i][j] == 0 for i, j in positions))
    expected_a = stabilizer_order(n, r, q)
    if a_count != expected_a:
        raise AssertionError(f"|A_{r}| mismatch: counted {a_count}, formula {expected_a}")

    kept: list[Mat] = []
    mul = field.mul
    if q == 2:
        kept_cols: list[list[int]] = []  # bit-packed columns of kept^(-1)
        for w in p_elements:
            wrows = _pack_rows(w)
            for ucols in kept_cols:
                if all((wrows[i] & ucols[j]).bit_count() & 1 == 0 for i, j in positions):
                    break
            else:
                kept.append(w)
                kept_cols.append(_pack_rows(transpose(mat_inv(field, w))))
    else:
        kept_cols_g: list[Mat] = []  # columns of kept^(-1) as tuples
        for w in p_elements:
            for ucols in kept_cols_g:
                if all(_dot_is_zero(mul, w[i], ucols[j]) for i, j in positions):
                    break
            else:
                kept.append(w)
                kept_cols_g.append(transpose(mat_inv(field, w)))

    expected_t = transversal_size(n, r, q)
    if len(kept) != expected_t:
        raise AssertionError(
            f"transversal size mismatch: sifted {len(kept)}, formula {expected_t}"
        )
    return CosetData(
        n=n,
        r=r,
        family=family,
        field=field,
        parabolic_order=len(p_elements),
        stabilizer_order=a_count,
        transversal=tuple(kept),
    )


def _dot_is_zero(mul, row, col) -> bool:
    s = 0
    for x, y in zip(row, col):
        if x and y:
            s ^= mul(x, y)
    return s == 0


def enumerate_double_coset(
    n: int, r: int, field: Field, family: str = ORTHOGONAL, budget: int = DEFAULT_BUDGET
) -> Iterator[Mat]:
    """Stream P sigma_r P in the fixed order: transversal outer, P inner."""
    data = coset_transversal(n, r, field, family, budget)
    if data.cell_size > budget:
        raise BudgetError(f"cell size {data.cell_size} exceeds budget {budget}")
    dim = 2 * n + 1 if family == ORTHOGONAL else 2 * n
    perm = _sigma_perm(n, r, dim)
    for x in data.transversal:
        m = tuple(x[perm[i]] for i in range(dim))  # sigma_r * x
        for p in enumerate_parabolic(n, field, family, budget):
            yield mat_mul(field, p, m)


def enumerate_group(
    n: int, field: Field, family: str = ORTHOGONAL, budget: int = DEFAULT_BUDGET
) -> Iterator[Mat]:
    """Stream the whole group as the disjoint union of its Bruhat cells."""
    for r in range(n + 1):
        yield from enumerate_double_coset(n, r, field, family, budget)


# ----------------------------------------------------------------------------
# streaming trace histograms

# Worker payloads are module-level functions so a process pool can pickle them.


def _count_chunk_q2(p_bits: list[int], m_bits: list[int]) -> dict[int, int]:
    ones = 0
    for m in m_bits:
        ones += sum((p & m).bit_count() & 1 for p in p_bits)
    return {0: len(p_bits) * len(m_bits) - ones, 1: ones}


def _count_chunk_general(
    q: int, mul_table: list[list[int]], p_sparse: list[tuple], m_flats: list[tuple]
) -> dict[int, int]:
    counts = [0] * q
    for mt in m_flats:
        for sp in p_sparse:
            s = 0
            for idx, a in sp:
                b = mt[idx]
                if b:
                    s ^= mul_table[a][b]
            counts[s] += 1
    return {beta: c for beta, c in enumerate(counts)}


def _merge_counts(parts, q: int) -> dict[int, int]:
    out = {beta: 0 for beta in range(q)}
    for part in parts:
        for beta, c in part.items():
            out[beta] += c
    return out


def dc_trace_histogram(
    n: int,
    r: int,
    field: Field,
    family: str = ORTHOGONAL,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> dict[int, int]:
    """Trace histogram of the double coset P sigma_r P, streamed exactly once.

    Returns a dense map beta -> count over all field elements.  The cell is
    never materialized: for each transversal element x the products
    p * sigma_r * x contribute only their traces.  With workers > 1 the
    transversal is partitioned across processes; the merged result is
    bit-identical for every worker count.
    """
    _check_family(family)
    q = field.q
    size = cell_order(n, r, q)
    if parabolic_order(n, q) > budget:
        raise BudgetError(f"|P| = {parabolic_order(n, q)} exceeds enumeration budget {budget}")
    if size > budget:
        raise BudgetError(f"cell size {size} exceeds enumeration budget {budget}")
    data = coset_transversal(n, r, field, family, budget)
    dim = 2 * n + 1 if family == ORTHOGONAL else 2 * n
    perm = _sigma_perm(n, r, dim)
    ms = [tuple(x[perm[i]] for i in range(dim)) for x in data.transversal]

    p_elements = list(enumerate_parabolic(n, field, family, budget))
    if q == 2:
        # trace of p*m mod 2 is the parity of popcount(rows(p) AND columns(m))
        p_bits = [sum(v << k for k, v in enumerate(x for row in w for x in row)) for w in p_elements]
        m_payloads = [
            sum(v << k for k, v in enumerate(x for col in zip(*m) for x in col)) for m in ms
        ]
        chunk_fn, args = _count_chunk_q2, (p_bits,)
    else:
        p_sparse = [
            tuple((i * dim + j, v) for i, row in enumerate(w) for j, v in enumerate(row) if v)
            for w in p_elements
        ]
        m_payloads = [tuple(x for col in zip(*m) for x in col) for m in ms]
        chunk_fn, args = _count_chunk_general, (q, field.mul_table(), p_sparse)

    if workers <= 1:
        parts = [chunk_fn(*args, m_payloads)]
    else:
        chunks = [m_payloads[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(chunk_fn, *args, chunk) for chunk in chunks]
            parts = [f.result() for f in futures]
    hist = _merge_counts(parts, q)
    total = sum(hist.values())
    if total != size:
        raise AssertionError(f"histogram total {total} != cell size {size}")
    return hist
