"""Exact integer linear algebra: Smith normal form, integer solving, and
presentations of finitely generated abelian groups.

A finitely generated abelian group is described throughout by an "orders"
vector: entry 0 means a free Z summand, entry d >= 1 a cyclic summand Z/d.
Elements are integer coordinate vectors taken modulo the orders.
"""


def _freeze(rows):
    return tuple(tuple(r) for r in rows)


def int_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(m):
    """Return (U, Uinv, D, V, Vinv) with U*M*V = D in Smith form.

    U, V are unimodular; D is diagonal with d1 | d2 | ... and di >= 0.
    """
    a = [list(r) for r in m]
    nr = len(a)
    nc = len(a[0]) if a else 0
    u, uinv = int_identity(nr), int_identity(nr)
    v, vinv = int_identity(nc), int_identity(nc)

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def row_add(i, j, q):
        # row_i += q * row_j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]
        for r in uinv:
            r[j] -= q * r[i]

    def col_add(i, j, q):
        # col_i += q * col_j
        for r in a:
            r[i] += q * r[j]
        for r in v:
            r[i] += q * r[j]
        vinv[j] = [x - q * y for x, y in zip(vinv[j], vinv[i])]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    t = 0
    while t < min(nr, nc):
        # find the smallest nonzero entry in the remaining block
        piv = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = abs(a[i][j])
                if x != 0 and (best is None or x < best):
                    best, piv = x, (i, j)
        if piv is None:
            break
        while True:
            i0, j0 = piv
            row_swap(t, i0)
            col_swap(t, j0)
            if a[t][t] < 0:
                row_negate(t)
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_add(i, t, -q)
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_add(j, t, -q)
                    if a[t][j] != 0:
                        dirty = True
            if not dirty:
                # ensure divisibility of the remaining block by a[t][t]
                bad = None
                for i in range(t + 1, nr):
                    for j in range(t + 1, nc):
                        if a[i][j] % a[t][t] != 0:
                            bad = (i, j)
                            break
                    if bad:
                        break
                if bad is None:
                    break
                row_add(t, bad[0], 1)
            # pick a new (smallest) pivot in the block and retry
            piv = None
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = abs(a[i][j])
                    if x != 0 and (best is None or x < best):
                        best, piv = x, (i, j)
        t += 1
    return (_freeze(u), _freeze(uinv), _freeze(a), _freeze(v), _freeze(vinv))


def int_mat_mul(a, b):
    nr = len(a)
    nk = len(a[0]) if a else 0
    nc = len(b[0]) if b else 0
    if nr == 0:
        return ()
    if nk == 0:
        # a is nr x 0 (possibly with lost column info): zero product
        return tuple(tuple(0 for _ in range(nc)) for _ in range(nr))
    if len(b) != nk:
        raise ValueError("shape mismatch")
    bt = list(zip(*b)) if b and b[0] else []
    out = []
    for row in a:
        out.append(tuple(sum(x * y for x, y in zip(row, col)) for col in bt))
    if nc == 0:
        return tuple(() for _ in range(nr))
    return tuple(out)


def int_nullspace(m):
    """Basis (list of column tuples) of the integer kernel {x : m x = 0}."""
    nr = len(m)
    nc = len(m[0]) if m else 0
    if nc == 0:
        return []
    if nr == 0:
        return [tuple(1 if i == j else 0 for i in range(nc)) for j in range(nc)]
    _, _, d, v, _ = smith_normal_form(m)
    basis = []
    for j in range(nc):
        dj = d[j][j] if j < min(nr, nc) else 0
        if dj == 0:
            basis.append(tuple(v[i][j] for i in range(nc)))
    return basis


def int_solve(m, b):
    """One integer solution x of m x = b (b a column vector), or None."""
    nr = len(m)
    nc = len(m[0]) if m else 0
    if nr == 0:
        return tuple(0 for _ in range(nc))
    if nc == 0:
        return () if all(x == 0 for x in b) else None
    u, _, d, v, _ = smith_normal_form(m)
    ub = [sum(u[i][k] * b[k] for k in range(nr)) for i in range(nr)]
    y = [0] * nc
    for i in range(nr):
        di = d[i][i] if i < min(nr, nc) else 0
        if di == 0:
            if i < nc:
                pass
            if ub[i] != 0:
                return None
        else:
            if ub[i] % di != 0:
                return None
            y[i] = ub[i] // di
    return tuple(sum(v[i][k] * y[k] for k in range(nc)) for i in range(nc))


def _augment_orders(m, tgt_orders):
    """Columns of m plus one column order*e_i for each nonzero target order."""
    nr = len(m)
    cols = [list(col) for col in zip(*m)] if (m and m[0]) else []
    extra = []
    for i, o in enumerate(tgt_orders):
        if o:
            col = [0] * nr
            col[i] = o
            extra.append(col)
    allcols = cols + extra
    if not allcols:
        return tuple(() for _ in range(nr)), 0
    rows = _freeze(zip(*allcols))
    return rows, len(cols)


def solve_mod(m, b, tgt_orders):
    """One x with m x = b modulo tgt_orders (componentwise), or None."""
    aug, ncols = _augment_orders(m, tgt_orders)
    nc = len(m[0]) if m else 0
    sol = int_solve(aug, list(b))
    if sol is None:
        return None
    return sol[:nc]


def kernel_mod(m, tgt_orders):
    """Generators (column tuples) of the lattice {x in Z^n : m x = 0 mod orders}."""
    nc = len(m[0]) if m else 0
    aug, _ = _augment_orders(m, tgt_orders)
    basis = int_nullspace(aug)
    return [vec[:nc] for vec in basis]


def normalize_orders(diag_entries, ngens):
    """Orders vector from SNF diagonal entries for a group with ngens generators."""
    orders = []
    for i in range(ngens):
        d = diag_entries[i] if i < len(diag_entries) else 0
        orders.append(d)
    return orders


def coker_presentation(rel, ngens):
    """Present Z^ngens / column-span(rel).

    rel is a ngens x k integer matrix (may have k = 0).  Returns
    (orders, proj, lift): the quotient is (+) Z/orders[i]; proj is the
    (len(orders) x ngens) matrix of the projection in the new coordinates;
    lift is the (ngens x len(orders)) matrix expressing each new generator
    as an element of Z^ngens (a set-theoretic section of proj).
    Order-1 summands are dropped; free summands come first.
    """
    if ngens == 0:
        return [], (), ()
    if not rel or not rel[0]:
        orders = [0] * ngens
        ident = _freeze(int_identity(ngens))
        return orders, ident, ident
    u, uinv, d, _, _ = smith_normal_form(rel)
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    raw_orders = normalize_orders(diag, ngens)
    keep_free = [i for i in range(ngens) if raw_orders[i] == 0]
    keep_tors = [i for i in range(ngens) if raw_orders[i] > 1]
    keep = keep_free + keep_tors
    orders = [0] * len(keep_free) + [raw_orders[i] for i in keep_tors]
    proj = _freeze(u[i] for i in keep)
    lift = _freeze(tuple(uinv[r][i] for i in keep) for r in range(ngens))
    return orders, proj, lift


def subgroup_presentation(gens, ambient_orders):
    """Normal form of the subgroup of (+) Z/ambient_orders generated by
    the columns of gens.

    Returns (orders, new_gens): the subgroup is isomorphic to (+) Z/orders[i]
    with new_gens (ambient-coordinate columns, as a matrix n x len(orders))
    mapping the canonical generators onto subgroup elements of exactly those
    orders.
    """
    n = len(ambient_orders)
    cols = [list(c) for c in zip(*gens)] if (gens and gens[0]) else []
    k = len(cols)
    if k == 0:
        return [], tuple(() for _ in range(n))
    gmat = _freeze(zip(*cols))
    rel_cols = kernel_mod(gmat, ambient_orders)
    rel = _freeze(zip(*rel_cols)) if rel_cols else tuple(() for _ in range(k))
    orders, _, lift = coker_presentation(rel, k)
    # new generator j (in ambient coordinates) = gens * lift[:, j]
    new_gens = int_mat_mul(gmat, lift)
    new_gens = _reduce_mod(new_gens, ambient_orders)
    return orders, new_gens


def quotient_presentation(up_gens, low_gens, ambient_orders):
    """Invariant factors of U/W for subgroups W <= U of (+) Z/ambient_orders.

    up_gens and low_gens are matrices whose columns generate U and W.
    Returns the orders vector of U/W.
    """
    n = len(ambient_orders)
    ucols = [list(c) for c in zip(*up_gens)] if (up_gens and up_gens[0]) else []
    k = len(ucols)
    if k == 0:
        return []
    wcols = [list(c) for c in zip(*low_gens)] if (low_gens and low_gens[0]) else []
    # relations among the U-generators: z with U z in W + ambient relations
    allcols = ucols + wcols
    for i, o in enumerate(ambient_orders):
        if o:
            col = [0] * n
            col[i] = o
            allcols.append(col)
    big = _freeze(zip(*allcols))
    null = int_nullspace(big)
    rel_cols = [vec[:k] for vec in null]
    rel = _freeze(zip(*rel_cols)) if rel_cols else tuple(() for _ in range(k))
    orders, _, _ = coker_presentation(rel, k)
    return orders


def _reduce_mod(m, orders):
    out = []
    for i, row in enumerate(m):
        o = orders[i]
        out.append(tuple(x % o if o else x for x in row))
    return tuple(out)
