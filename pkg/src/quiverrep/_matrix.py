"""Exact dense linear algebra over Q (Fraction) and F_p (ints mod p).

Matrices are tuples of row tuples.  All routines are pure and side-effect
free; no floating point anywhere.
"""

from fractions import Fraction


class Field:
    """Arithmetic context: p=None means Q (Fraction), otherwise F_p."""

    def __init__(self, p=None):
        if p is not None and p < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.p = p

    def coerce(self, x):
        if self.p is None:
            return x if isinstance(x, Fraction) else Fraction(x)
        return int(x) % self.p

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        s = a + b
        return s if self.p is None else s % self.p

    def sub(self, a, b):
        s = a - b
        return s if self.p is None else s % self.p

    def mul(self, a, b):
        s = a * b
        return s if self.p is None else s % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a == 0


def mat_freeze(rows):
    return tuple(tuple(r) for r in rows)


def zeros(nrows, ncols, fld):
    z = fld.zero()
    return tuple(tuple(z for _ in range(ncols)) for _ in range(nrows))


def identity(n, fld):
    z, o = fld.zero(), fld.one()
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def shape(m):
    return (len(m), len(m[0]) if m else 0)


def mat_coerce(rows, fld):
    return tuple(tuple(fld.coerce(x) for x in r) for r in rows)


def mat_add(a, b, fld):
    return tuple(tuple(fld.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a, fld):
    return tuple(tuple(fld.neg(x) for x in r) for r in a)


def mat_scale(a, c, fld):
    c = fld.coerce(c)
    return tuple(tuple(fld.mul(c, x) for x in r) for r in a)


def mat_mul(a, b, fld):
    n, k = shape(a)
    k2, m = shape(b)
    if n == 0:
        return ()
    if k == 0 and k2 == 0:
        # a is n x 0, so the product is an n x m zero matrix
        return zeros(n, m, fld)
    if k != k2:
        raise ValueError("shape mismatch in mat_mul: %s vs %s" % ((n, k), (k2, m)))
    bt = list(zip(*b)) if m else []
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = fld.zero()
            for x, y in zip(row, col):
                if x != 0 and y != 0:
                    s = fld.add(s, fld.mul(x, y))
            out_row.append(s)
        out.append(tuple(out_row))
    if m == 0:
        return tuple(() for _ in range(n))
    return tuple(out)


def transpose(a):
    return tuple(zip(*a)) if a and a[0] else tuple(() for _ in range(shape(a)[1]))


def hstack(blocks, nrows, fld):
    """Concatenate matrices side by side; blocks may be empty."""
    rows = [[] for _ in range(nrows)]
    for b in blocks:
        if len(b) != nrows:
            raise ValueError("row count mismatch in hstack")
        for i, r in enumerate(b):
            rows[i].extend(r)
    return tuple(tuple(r) for r in rows)


def vstack(blocks):
    out = []
    for b in blocks:
        out.extend(b)
    return tuple(out)


def rref(m, fld):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    rows = [list(r) for r in m]
    nr, nc = len(rows), (len(rows[0]) if rows else 0)
    pivots = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        pr = None
        for i in range(r, nr):
            if not fld.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = fld.inv(rows[r][c])
        rows[r] = [fld.mul(inv, x) for x in rows[r]]
        for i in range(nr):
            if i != r and not fld.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return mat_freeze(rows), pivots


def rank(m, fld):
    if not m or not m[0]:
        return 0
    return len(rref(m, fld)[1])


def nullspace(m, fld):
    """Basis of {x : m x = 0} as a list of column vectors (tuples)."""
    nr, nc = shape(m)
    if nc == 0:
        return []
    if nr == 0:
        return [tuple(fld.one() if i == j else fld.zero() for i in range(nc))
                for j in range(nc)]
    red, pivots = rref(m, fld)
    pivot_set = set(pivots)
    free = [c for c in range(nc) if c not in pivot_set]
    basis = []
    for fcol in free:
        vec = [fld.zero()] * nc
        vec[fcol] = fld.one()
        for r, pc in enumerate(pivots):
            vec[pc] = fld.neg(red[r][fcol])
        basis.append(tuple(vec))
    return basis


def solve(m, rhs, fld):
    """One solution X of m X = rhs (rhs a matrix), or None if inconsistent."""
    nr, nc = shape(m)
    nr2, nk = shape(rhs)
    if nr != nr2:
        raise ValueError("shape mismatch in solve")
    if nr == 0:
        return zeros(nc, nk, fld)
    aug = hstack([m, rhs], nr, fld)
    red, pivots = rref(aug, fld)
    for r in range(len(pivots)):
        if pivots[r] >= nc:
            return None  # pivot in the RHS block: inconsistent
    sol = [[fld.zero()] * nk for _ in range(nc)]
    for r, pc in enumerate(pivots):
        if pc < nc:
            for k in range(nk):
                sol[pc][k] = red[r][nc + k]
    return mat_freeze(sol)


def column_space_contains(m, cols, fld):
    """True iff every column of `cols` lies in the column space of m."""
    nr, _ = shape(m)
    if nr == 0:
        return True
    return solve(m, cols, fld) is not None
