"""Exact dense linear algebra over prime fields and the rationals.

Everything here is plain Gaussian elimination on tiny matrices.  GF(p)
elements are ints reduced into [0, p); rational entries are Fraction.
Matrices carry explicit shapes so that 0xn and nx0 cases stay unambiguous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, math.isqrt(n) + 1))


class PrimeField:
    """Arithmetic in GF(p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def rand(self, rng):
        return rng.randrange(self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class RationalField:
    """Arithmetic in the rationals, with Fraction entries."""

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


@dataclass(frozen=True)
class Mat:
    """Immutable matrix with explicit shape; rows is a tuple of row tuples."""

    nrows: int
    ncols: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("column count mismatch")

    def entry(self, i, j):
        return self.rows[i][j]


def mat(rows, ncols=None) -> Mat:
    """Build a Mat from an iterable of rows; ncols is required when empty."""
    rows = tuple(tuple(r) for r in rows)
    if rows:
        ncols = len(rows[0]) if ncols is None else ncols
    elif ncols is None:
        ncols = 0
    return Mat(len(rows), ncols, rows)


def zeros(field, nrows, ncols) -> Mat:
    z = field.zero
    return Mat(nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))


def identity(field, n) -> Mat:
    z, o = field.zero, field.one
    return Mat(n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))


def from_int_rows(field, rows, ncols=None) -> Mat:
    return mat([[field.from_int(x) for x in r] for r in rows], ncols)


def transpose(a: Mat) -> Mat:
    return Mat(a.ncols, a.nrows, tuple(zip(*a.rows)) if a.rows else ((),) * a.ncols)


def hstack(mats) -> Mat:
    mats = list(mats)
    nrows = mats[0].nrows
    if any(m.nrows != nrows for m in mats):
        raise ValueError("hstack: row count mismatch")
    rows = tuple(sum((m.rows[i] for m in mats), ()) for i in range(nrows))
    return Mat(nrows, sum(m.ncols for m in mats), rows)


def vstack(mats) -> Mat:
    mats = list(mats)
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise ValueError("vstack: column count mismatch")
    return Mat(sum(m.nrows for m in mats), ncols, sum((m.rows for m in mats), ()))


def add(field, a: Mat, b: Mat) -> Mat:
    _same_shape(a, b)
    return Mat(a.nrows, a.ncols, tuple(
        tuple(field.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))


def sub(field, a: Mat, b: Mat) -> Mat:
    _same_shape(a, b)
    return Mat(a.nrows, a.ncols, tuple(
        tuple(field.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))


def neg(field, a: Mat) -> Mat:
    return Mat(a.nrows, a.ncols, tuple(tuple(field.neg(x) for x in r) for r in a.rows))


def scale(field, c, a: Mat) -> Mat:
    return Mat(a.nrows, a.ncols, tuple(tuple(field.mul(c, x) for x in r) for r in a.rows))


def mul(field, a: Mat, b: Mat) -> Mat:
    if a.ncols != b.nrows:
        raise ValueError(f"mul: {a.nrows}x{a.ncols} times {b.nrows}x{b.ncols}")
    if isinstance(field, PrimeField):
        p = field.p
        bt = list(zip(*b.rows)) if b.rows else [()] * b.ncols
        rows = tuple(
            tuple(sum(x * y for x, y in zip(ra, col)) % p for col in bt)
            for ra in a.rows)
        return Mat(a.nrows, b.ncols, rows)
    bt = list(zip(*b.rows)) if b.rows else [()] * b.ncols
    rows = []
    for ra in a.rows:
        row = []
        for col in bt:
            acc = field.zero
            for x, y in zip(ra, col):
                acc = field.add(acc, field.mul(x, y))
            row.append(acc)
        rows.append(tuple(row))
    return Mat(a.nrows, b.ncols, tuple(rows))


def is_zero(a: Mat) -> bool:
    return all(all(x == 0 for x in r) for r in a.rows)


def _same_shape(a, b):
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValueError("shape mismatch")


def rref(field, a: Mat):
    """Reduced row echelon form; returns (Mat, pivot column indices)."""
    rows = [list(r) for r in a.rows]
    m, n = a.nrows, a.ncols
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != field.zero), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        lead = rows[r]
        for i in range(m):
            if i != r and rows[i][c] != field.zero:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return Mat(m, n, tuple(tuple(row) for row in rows)), tuple(pivots)


def rank(field, a: Mat) -> int:
    if isinstance(field, PrimeField):
        return _rank_mod(a.rows, field.p)
    return len(rref(field, a)[1])


def _rank_mod(rows, p):
    """Forward elimination rank count over GF(p); rows is any iterable of rows."""
    work = [list(r) for r in rows]
    m = len(work)
    n = len(work[0]) if work else 0
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if work[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        lead = work[r]
        inv = pow(lead[c], p - 2, p)
        for i in range(r + 1, m):
            f = work[i][c]
            if f % p:
                f = (f * inv) % p
                work[i] = [(x - f * y) % p for x, y in zip(work[i], lead)]
        r += 1
        if r == m:
            break
    return r


def nullspace(field, a: Mat):
    """Basis of the right kernel, as a tuple of length-ncols vectors."""
    red, pivots = rref(field, a)
    pivot_set = set(pivots)
    free = [j for j in range(a.ncols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [field.zero] * a.ncols
        v[f] = field.one
        for r, c in enumerate(pivots):
            v[c] = field.neg(red.rows[r][f])
        basis.append(tuple(v))
    return tuple(basis)


def solve(field, a: Mat, b):
    """One solution of A x = b, or None when inconsistent; b is a length-nrows vector."""
    if len(b) != a.nrows:
        raise ValueError("solve: right-hand side length mismatch")
    aug = hstack([a, Mat(a.nrows, 1, tuple((x,) for x in b))])
    red, pivots = rref(field, aug)
    if a.ncols in pivots:
        return None
    x = [field.zero] * a.ncols
    for r, c in enumerate(pivots):
        x[c] = red.rows[r][a.ncols]
    return tuple(x)


def inverse(field, a: Mat) -> Mat:
    if a.nrows != a.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = a.nrows
    red, pivots = rref(field, hstack([a, identity(field, n)]))
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return Mat(n, n, tuple(r[n:] for r in red.rows))


def random_matrix(field, nrows, ncols, rng) -> Mat:
    return Mat(nrows, ncols, tuple(
        tuple(field.rand(rng) for _ in range(ncols)) for _ in range(nrows)))


def random_invertible(field, n, rng) -> Mat:
    if n == 0:
        return Mat(0, 0, ())
    while True:
        a = random_matrix(field, n, n, rng)
        if rank(field, a) == n:
            return a
