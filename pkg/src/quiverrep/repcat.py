"""Representations of a quiver in an exact base category.

A representation assigns a base object to each vertex (zero almost
everywhere: only finitely many vertices may carry a nonzero object, so
support-finite representations over generated quivers work too) and a
base morphism to each arrow.  Morphisms of representations are vertexwise
base morphisms satisfying naturality on every arrow.

Kernels, cokernels and images are computed vertexwise, with the induced
arrow maps obtained by factoring through the vertexwise (co)kernels.
Hom groups are computed by solving the naturality system exactly over the
base's Hom-module coordinates.
"""

from . import _intmatrix as zm
from . import _matrix as fm
from .basecat import HomModule


class RepError(ValueError):
    pass


class Representation:
    def __init__(self, quiver, base, objs=None, maps=None, check=True):
        self.quiver = quiver
        self.base = base
        self.objs = {v: o for v, o in (objs or {}).items()
                     if not base.is_zero_obj(o)}
        self.maps = dict(maps or {})
        if check:
            self._validate()

    def _validate(self):
        q, base = self.quiver, self.base
        for v in self.objs:
            if not q.has_vertex(v):
                raise RepError("object at unknown vertex %r" % (v,))
        by_id = {}
        for a in arrows_touching(q, self.objs.keys()):
            by_id[a.id] = a
        for aid, f in self.maps.items():
            a = by_id.get(aid)
            if a is None:
                if self.base.is_zero_mor(f):
                    continue
                raise RepError("map on arrow %r outside the support" % (aid,))
            if not base.obj_eq(f.src, self.obj_at(a.src)):
                raise RepError("map source mismatch on arrow %r" % (aid,))
            if not base.obj_eq(f.tgt, self.obj_at(a.tgt)):
                raise RepError("map target mismatch on arrow %r" % (aid,))

    def obj_at(self, v):
        return self.objs.get(v, self.base.zero_obj())

    def map_at(self, arrow):
        if isinstance(arrow, str):
            arrow = self.quiver.arrow(arrow)
        f = self.maps.get(arrow.id)
        if f is None:
            return self.base.zero_mor(self.obj_at(arrow.src),
                                      self.obj_at(arrow.tgt))
        return f

    def support(self):
        return frozenset(self.objs.keys())

    def path_map(self, path):
        """The composite map along a path (identity for the trivial path)."""
        q = self.quiver
        cur = self.base.identity(self.obj_at(path.source))
        for aid in path.arrows:
            a = _find_arrow(q, aid, cur.tgt, self)
            cur = self.base.compose(self.map_at(a), cur)
        return cur


def _find_arrow(q, aid, _hint, rep):
    if q.is_explicit:
        return q.arrow(aid)
    # generated quivers: search the arrows adjacent to the support
    for a in arrows_touching(q, rep.objs.keys()):
        if a.id == aid:
            return a
    raise RepError("arrow %r not adjacent to the support" % (aid,))


def arrows_touching(q, vertices):
    """All arrows with an endpoint in `vertices` (deduplicated)."""
    seen = {}
    for v in vertices:
        for a in q.out_arrows(v):
            seen[a.id] = a
        for a in q.in_arrows(v):
            seen[a.id] = a
    return list(seen.values())


def relevant_arrows(q, *reps):
    verts = set()
    for r in reps:
        verts |= set(r.objs.keys())
    return arrows_touching(q, verts)


class RepMorphism:
    def __init__(self, src, tgt, comps=None, check=True):
        if src.quiver is not tgt.quiver and src.quiver != tgt.quiver:
            raise RepError("morphism between different quivers")
        self.src = src
        self.tgt = tgt
        base = src.base
        self.comps = {}
        for v, f in (comps or {}).items():
            if base.is_zero_mor(f):
                continue
            self.comps[v] = f
        if check:
            self._validate()

    @property
    def base(self):
        return self.src.base

    @property
    def quiver(self):
        return self.src.quiver

    def comp_at(self, v):
        f = self.comps.get(v)
        if f is None:
            return self.base.zero_mor(self.src.obj_at(v), self.tgt.obj_at(v))
        return f

    def _validate(self):
        base = self.base
        for v, f in self.comps.items():
            if not base.obj_eq(f.src, self.src.obj_at(v)):
                raise RepError("component source mismatch at %r" % (v,))
            if not base.obj_eq(f.tgt, self.tgt.obj_at(v)):
                raise RepError("component target mismatch at %r" % (v,))
        for a in relevant_arrows(self.quiver, self.src, self.tgt):
            lhs = base.compose(self.comp_at(a.tgt), self.src.map_at(a))
            rhs = base.compose(self.tgt.map_at(a), self.comp_at(a.src))
            if not base.mor_eq(lhs, rhs):
                raise RepError("naturality fails on arrow %r" % (a.id,))


# ---------------------------------------------------------------------
# pointwise arithmetic


def zero_rep(quiver, base):
    return Representation(quiver, base, {}, {}, check=False)


def rep_eq(f, g):
    base = f.base
    if f.support() != g.support():
        return False
    for v in f.support():
        if not base.obj_eq(f.obj_at(v), g.obj_at(v)):
            return False
    for a in relevant_arrows(f.quiver, f, g):
        if not base.mor_eq(f.map_at(a), g.map_at(a)):
            return False
    return True


def identity_rep(f):
    base = f.base
    return RepMorphism(f, f, {v: base.identity(f.obj_at(v)) for v in f.support()},
                       check=False)


def zero_rep_mor(src, tgt):
    return RepMorphism(src, tgt, {}, check=False)


def compose_rep(f, g):
    """f after g."""
    base = f.base
    comps = {}
    for v in set(g.src.support()) | set(g.tgt.support()) | set(f.tgt.support()):
        comps[v] = base.compose(f.comp_at(v), g.comp_at(v))
    return RepMorphism(g.src, f.tgt, comps, check=False)


def add_rep(f, g):
    base = f.base
    comps = {}
    for v in set(f.comps) | set(g.comps):
        comps[v] = base.add(f.comp_at(v), g.comp_at(v))
    return RepMorphism(f.src, f.tgt, comps, check=False)


def neg_rep(f):
    base = f.base
    return RepMorphism(f.src, f.tgt,
                       {v: base.neg(c) for v, c in f.comps.items()}, check=False)


def scale_rep(c, f):
    base = f.base
    return RepMorphism(f.src, f.tgt,
                       {v: base.scale(c, m) for v, m in f.comps.items()},
                       check=False)


def rep_mor_eq(f, g):
    base = f.base
    for v in set(f.comps) | set(g.comps):
        if not base.mor_eq(f.comp_at(v), g.comp_at(v)):
            return False
    return True


def is_zero_rep_mor(f):
    base = f.base
    return all(base.is_zero_mor(c) for c in f.comps.values())


def total_dim(f):
    """Sum of vertexwise generator counts (dimension over a field base)."""
    from .basecat import VObj
    return sum(o.dim if isinstance(o, VObj) else o.ngens
               for o in f.objs.values())


# ---------------------------------------------------------------------
# structural constructions


def direct_sum_rep(reps, quiver=None, base=None):
    if reps:
        quiver, base = reps[0].quiver, reps[0].base
    verts = set()
    for r in reps:
        verts |= r.support()
    objs, vert_incs, vert_projs = {}, {}, {}
    for v in verts:
        s, incs, projs = base.direct_sum([r.obj_at(v) for r in reps])
        objs[v] = s
        vert_incs[v] = incs
        vert_projs[v] = projs
    sum_rep = Representation(quiver, base, objs, {}, check=False)
    maps = {}
    for a in arrows_touching(quiver, verts):
        if base.is_zero_obj(sum_rep.obj_at(a.src)):
            continue
        if base.is_zero_obj(sum_rep.obj_at(a.tgt)):
            continue
        acc = base.zero_mor(sum_rep.obj_at(a.src), sum_rep.obj_at(a.tgt))
        for i, r in enumerate(reps):
            inc = (vert_incs[a.tgt][i] if a.tgt in vert_incs
                   else base.zero_mor(r.obj_at(a.tgt), sum_rep.obj_at(a.tgt)))
            prj = (vert_projs[a.src][i] if a.src in vert_projs
                   else base.zero_mor(sum_rep.obj_at(a.src), r.obj_at(a.src)))
            acc = base.add(acc, base.compose(inc, base.compose(r.map_at(a), prj)))
        maps[a.id] = acc
    sum_rep.maps.update({k: m for k, m in maps.items()
                         if not base.is_zero_mor(m)})
    rep_incs, rep_projs = [], []
    for i, r in enumerate(reps):
        inc = {v: vert_incs[v][i] for v in r.support()}
        prj = {v: vert_projs[v][i] for v in r.support()}
        rep_incs.append(RepMorphism(r, sum_rep, inc, check=False))
        rep_projs.append(RepMorphism(sum_rep, r, prj, check=False))
    return sum_rep, rep_incs, rep_projs


class SubquotientResult:
    def __init__(self, obj, mor, diagnostics=None):
        self.obj = obj
        self.mor = mor
        self.diagnostics = diagnostics or {}


def kernel_rep(f):
    """Vertexwise kernel with induced arrow maps (by factoring through
    the monic embeddings)."""
    base = f.base
    kobjs, embs = {}, {}
    for v in f.src.support():
        k, emb = base.kernel(f.comp_at(v))
        if not base.is_zero_obj(k):
            kobjs[v] = k
            embs[v] = emb
    krep = Representation(f.quiver, base, kobjs, {}, check=False)
    for a in arrows_touching(f.quiver, kobjs.keys()):
        if a.src not in kobjs or base.is_zero_obj(krep.obj_at(a.tgt)):
            continue
        comp = base.compose(f.src.map_at(a), embs[a.src])
        ind = base.factor_mono(embs[a.tgt], comp)
        if ind is None:
            raise RepError("kernel arrow map failed to factor (arrow %r)" % a.id)
        if not base.is_zero_mor(ind):
            krep.maps[a.id] = ind
    mor = RepMorphism(krep, f.src, embs, check=True)
    return SubquotientResult(krep, mor)


def cokernel_rep(f):
    base = f.base
    cobjs, projs = {}, {}
    for v in f.tgt.support():
        c, proj = base.cokernel(f.comp_at(v))
        if not base.is_zero_obj(c):
            cobjs[v] = c
            projs[v] = proj
    crep = Representation(f.quiver, base, cobjs, {}, check=False)
    for a in arrows_touching(f.quiver, cobjs.keys()):
        if a.tgt not in cobjs or base.is_zero_obj(crep.obj_at(a.src)):
            continue
        comp = base.compose(projs[a.tgt], f.tgt.map_at(a))
        ind = base.factor_epi(projs[a.src], comp)
        if ind is None:
            raise RepError("cokernel arrow map failed to factor (arrow %r)" % a.id)
        if not base.is_zero_mor(ind):
            crep.maps[a.id] = ind
    mor = RepMorphism(f.tgt, crep, projs, check=True)
    return SubquotientResult(crep, mor)


def image_rep(f):
    """(image object, mono into f.tgt, epi from f.src)."""
    coker = cokernel_rep(f)
    ker_of_coker = kernel_rep(coker.mor)
    mono = ker_of_coker.mor
    epi = factor_mono_rep(mono, f)
    if epi is None:
        raise RepError("image factorization failed")
    return ker_of_coker.obj, mono, epi


def factor_mono_rep(emb, f):
    """h with emb . h = f, vertexwise (unique, hence natural)."""
    base = f.base
    comps = {}
    for v in set(f.src.support()) | set(emb.src.support()):
        h = base.factor_mono(emb.comp_at(v), f.comp_at(v))
        if h is None:
            return None
        comps[v] = h
    return RepMorphism(f.src, emb.src, comps, check=False)


def factor_epi_rep(proj, f):
    """h with h . proj = f, vertexwise (unique, hence natural)."""
    base = f.base
    comps = {}
    for v in set(f.tgt.support()) | set(proj.tgt.support()):
        h = base.factor_epi(proj.comp_at(v), f.comp_at(v))
        if h is None:
            return None
        comps[v] = h
    return RepMorphism(proj.tgt, f.tgt, comps, check=False)


def is_mono_rep(f):
    base = f.base
    return all(base.is_mono(f.comp_at(v)) for v in f.src.support())


def is_epi_rep(f):
    base = f.base
    return all(base.is_epi(f.comp_at(v)) for v in f.tgt.support())


def is_exact_rep(f, g):
    """Is A --f--> B --g--> C exact at B?  Returns (bool, diagnostics)."""
    base = f.base
    diag = {}
    comp = compose_rep(g, f)
    if not is_zero_rep_mor(comp):
        bad = [v for v in comp.comps if not base.is_zero_mor(comp.comp_at(v))]
        return False, {"composite_nonzero_at": bad}
    ker = kernel_rep(g)
    h = factor_mono_rep(ker.mor, f)
    if h is None:
        return False, {"factorization_failed": True}
    ok = True
    for v in set(ker.obj.support()) | set(f.src.support()):
        epi = base.is_epi(h.comp_at(v))
        diag[v] = epi
        ok = ok and epi
    return ok, {"image_covers_kernel_at": diag}


def is_short_exact(f, g):
    """0 -> A -f-> B -g-> C -> 0."""
    mid, _ = is_exact_rep(f, g)
    return is_mono_rep(f) and is_epi_rep(g) and mid


# ---------------------------------------------------------------------
# hom spaces


class HomPresentation:
    """Hom_{Rep}(F, G), normalized.

    Over a field base: gens is a basis, orders is None.  Over FgAb: gens
    have the listed cyclic orders (0 = infinite).
    """

    def __init__(self, src, tgt, gens, orders, coords_fn, from_coords_fn):
        self.src = src
        self.tgt = tgt
        self.gens = list(gens)
        self.orders = None if orders is None else list(orders)
        self.coords = coords_fn
        self.from_coords = from_coords_fn

    @property
    def ngens(self):
        return len(self.gens)

    def is_trivial(self):
        return not self.gens

    def summary(self):
        if self.orders is None:
            return {"kind": "vector-space", "dim": self.ngens}
        return {"kind": "abelian-group", "orders": list(self.orders)}


def _hom_layout(f, g):
    """Vertexwise Hom modules and a flat variable layout for the common
    support."""
    base = f.base
    verts = sorted(set(f.support()) & set(g.support()), key=str)
    mods = {v: base.hom_module(f.obj_at(v), g.obj_at(v)) for v in verts}
    offsets = {}
    off = 0
    for v in verts:
        offsets[v] = off
        off += mods[v].ngens
    return verts, mods, offsets, off


def _mor_from_var_coords(f, g, verts, mods, offsets, vec):
    base = f.base
    comps = {}
    for v in verts:
        m = mods[v]
        if m.ngens == 0:
            continue
        comps[v] = m.from_coords(vec[offsets[v]:offsets[v] + m.ngens])
    return RepMorphism(f, g, comps, check=False)


def _naturality_rows(f, g, verts, mods, offsets, nvars):
    """Rows (coefficient vectors) and their moduli (FgAb) for the naturality
    system eta_t . F_a = G_a . eta_s."""
    base = f.base
    field = base.scalar() in ("q", "fp")
    fld = base.fld if field else None
    rows, moduli = [], []
    vset = set(verts)
    for a in relevant_arrows(f.quiver, f, g):
        s, t = a.src, a.tgt
        if base.is_zero_obj(f.obj_at(s)) or base.is_zero_obj(g.obj_at(t)):
            continue
        target_mod = base.hom_module(f.obj_at(s), g.obj_at(t))
        if target_mod.ngens == 0:
            continue
        ncons = target_mod.ngens
        block = [[fld.zero() if field else 0] * nvars for _ in range(ncons)]
        if t in vset:
            for k, gen in enumerate(mods[t].gens):
                col = target_mod.coords(base.compose(gen, f.map_at(a)))
                for r in range(ncons):
                    block[r][offsets[t] + k] = col[r]
        if s in vset:
            for k, gen in enumerate(mods[s].gens):
                col = target_mod.coords(base.compose(g.map_at(a), gen))
                for r in range(ncons):
                    x = block[r][offsets[s] + k]
                    block[r][offsets[s] + k] = (fld.sub(x, col[r]) if field
                                                else x - col[r])
        rows.extend(block)
        if not field:
            moduli.extend(target_mod.orders)
    return rows, moduli


def hom_space_rep(f, g):
    """Natural transformations f -> g as a normalized presentation."""
    base = f.base
    field = base.scalar() in ("q", "fp")
    verts, mods, offsets, nvars = _hom_layout(f, g)
    var_orders = [] if field else [o for v in verts for o in mods[v].orders]
    rows, moduli = _naturality_rows(f, g, verts, mods, offsets, nvars)

    def build(vec):
        return _mor_from_var_coords(f, g, verts, mods, offsets, vec)

    if field:
        fld = base.fld
        if nvars == 0:
            basis = []
        elif rows:
            basis = fm.nullspace(fm.mat_freeze(rows), fld)
        else:
            basis = [tuple(fld.one() if i == j else fld.zero()
                           for i in range(nvars)) for j in range(nvars)]
        gens = [build(b) for b in basis]
        gmat = fm.mat_freeze(zip(*basis)) if basis else None

        def coords(m):
            vec = _flat_coords(m, verts, mods, offsets, nvars)
            if gmat is None:
                return ()
            sol = fm.solve(gmat, fm.mat_freeze([[x] for x in vec]), fld)
            if sol is None:
                raise RepError("morphism is not natural")
            return tuple(r[0] for r in sol)

        def from_coords(cs):
            acc = zero_rep_mor(f, g)
            for c, gen in zip(cs, gens):
                acc = add_rep(acc, scale_rep(c, gen))
            return acc

        return HomPresentation(f, g, gens, None, coords, from_coords)

    # FgAb base: lattice of solutions mod variable orders
    if nvars == 0:
        return HomPresentation(f, g, [], [], lambda m: (), lambda cs: zero_rep_mor(f, g))
    if rows:
        sol_gens = _kernel_mod_with_var_orders(rows, moduli, var_orders, nvars)
    else:
        sol_gens = [tuple(1 if i == j else 0 for i in range(nvars))
                    for j in range(nvars)]
    if not sol_gens:
        return HomPresentation(f, g, [], [],
                               lambda m: (), lambda cs: zero_rep_mor(f, g))
    gmat = tuple(zip(*sol_gens))
    orders, new_gens = zm.subgroup_presentation(gmat, var_orders)
    gens = [build(tuple(new_gens[i][j] for i in range(nvars)))
            for j in range(len(orders))]
    genmat = new_gens

    def coords(m):
        vec = _flat_coords(m, verts, mods, offsets, nvars)
        sol = zm.solve_mod(genmat, list(vec), var_orders)
        if sol is None:
            raise RepError("morphism is not natural")
        return tuple(x % o if o else x for x, o in zip(sol, orders))

    def from_coords(cs):
        acc = zero_rep_mor(f, g)
        for c, gen in zip(cs, gens):
            acc = add_rep(acc, scale_rep(int(c), gen))
        return acc

    return HomPresentation(f, g, gens, orders, coords, from_coords)


def _flat_coords(m, verts, mods, offsets, nvars):
    vec = [0] * nvars
    for v in verts:
        mod = mods[v]
        if mod.ngens == 0:
            continue
        cs = mod.coords(m.comp_at(v))
        for k, c in enumerate(cs):
            vec[offsets[v] + k] = c
    return vec


def _kernel_mod_with_var_orders(rows, moduli, var_orders, nvars):
    """Solutions x (mod var_orders) of rows . x = 0 (mod moduli)."""
    # adding order-multiples of variables never changes the class mod orders
    mat = tuple(tuple(r) for r in rows)
    gens = zm.kernel_mod(mat, moduli)
    extra = []
    for i, o in enumerate(var_orders):
        if o:
            vec = [0] * nvars
            vec[i] = o
            extra.append(tuple(vec))
    return gens + extra


def rep_hom_solve(f, g, conditions=()):
    """One natural transformation eta: f -> g with B . eta . A = R for each
    condition (A: X->f, B: g->Y, R: X->Y), or None.

    A condition may use A=None (identity on f) or B=None (identity on g).
    """
    base = f.base
    field = base.scalar() in ("q", "fp")
    verts, mods, offsets, nvars = _hom_layout(f, g)
    var_orders = [] if field else [o for v in verts for o in mods[v].orders]
    rows, moduli = _naturality_rows(f, g, verts, mods, offsets, nvars)
    rhs = [base.fld.zero() if field else 0 for _ in rows]
    vset = set(verts)
    for (amor, bmor, rmor) in conditions:
        src_rep = amor.src if amor is not None else f
        tgt_rep = bmor.tgt if bmor is not None else g
        cond_verts = (set(src_rep.support()) | set(tgt_rep.support())
                      | set(rmor.comps.keys()))
        for v in sorted(cond_verts, key=str):
            x_obj = src_rep.obj_at(v)
            y_obj = tgt_rep.obj_at(v)
            tmod = base.hom_module(x_obj, y_obj)
            if tmod.ngens == 0:
                continue
            block = [[base.fld.zero() if field else 0] * nvars
                     for _ in range(tmod.ngens)]
            if v in vset:
                a_v = (amor.comp_at(v) if amor is not None
                       else base.identity(f.obj_at(v)))
                b_v = (bmor.comp_at(v) if bmor is not None
                       else base.identity(g.obj_at(v)))
                for k, gen in enumerate(mods[v].gens):
                    col = tmod.coords(
                        base.compose(b_v, base.compose(gen, a_v)))
                    for r in range(tmod.ngens):
                        block[r][offsets[v] + k] = col[r]
            rows.extend(block)
            rvec = tmod.coords(rmor.comp_at(v))
            rhs.extend(rvec)
            if not field:
                moduli.extend(tmod.orders)
    if field:
        fld = base.fld
        if not rows:
            return zero_rep_mor(f, g)
        sol = fm.solve(fm.mat_freeze(rows), fm.mat_freeze([[x] for x in rhs]), fld)
        if sol is None:
            return None
        vec = tuple(r[0] for r in sol) if nvars else ()
        return _mor_from_var_coords(f, g, verts, mods, offsets, vec)
    if not rows:
        return zero_rep_mor(f, g)
    mat = tuple(tuple(r) for r in rows)
    if nvars == 0:
        ok = all((x % o if o else x) == 0 for x, o in zip(rhs, moduli))
        return zero_rep_mor(f, g) if ok else None
    sol = zm.solve_mod(mat, rhs, moduli)
    if sol is None:
        return None
    return _mor_from_var_coords(f, g, verts, mods, offsets, sol)


# ---------------------------------------------------------------------
# restriction / extension / support


def restrict(f, s):
    """Restriction to the full subquiver on vertex set s (objects outside
    are dropped; arrow maps kept when both endpoints lie in s)."""
    s = set(s)
    objs = {v: o for v, o in f.objs.items() if v in s}
    maps = {}
    for a in arrows_touching(f.quiver, objs.keys()):
        if a.src in s and a.tgt in s and a.id in f.maps:
            maps[a.id] = f.maps[a.id]
    return Representation(f.quiver, f.base, objs, maps, check=False)


def extend(f, quiver):
    """Extension by zero to a larger quiver containing f's support."""
    return Representation(quiver, f.base, dict(f.objs), dict(f.maps))


def support_class(f, which="fbt", budget=10000):
    """Verdict[bool]: is Supp(F) in the class F/FB/FT/FBT?  The zero
    representation belongs to every class."""
    from .quiver import exact, subquiver_family
    supp = f.support()
    if not supp:
        return exact(True)
    fam = subquiver_family(f.quiver, supp, budget)
    key = {"f": "in_F", "fb": "in_FB", "ft": "in_FT", "fbt": "in_FBT",
           "b": "in_B", "t": "in_T"}.get(which)
    if key is None:
        raise RepError("unknown support class %r" % (which,))
    return fam[key]


# ---------------------------------------------------------------------
# sampling / serialization


def rand_rep(quiver, base, rng, max_dim=2, vertices=None):
    if vertices is None:
        vertices = quiver.vertices()
    objs = {v: base.rand_obj(rng, max_dim) for v in vertices}
    rep = Representation(quiver, base, objs, {}, check=False)
    maps = {}
    for a in arrows_touching(quiver, rep.support()):
        s, t = rep.obj_at(a.src), rep.obj_at(a.tgt)
        if base.is_zero_obj(s) or base.is_zero_obj(t):
            continue
        m = base.rand_mor(rng, s, t)
        if not base.is_zero_mor(m):
            maps[a.id] = m
    rep.maps.update(maps)
    return rep


def rep_to_json(f):
    base = f.base
    return {
        "support": {str(v): base.obj_to_json(o) for v, o in f.objs.items()},
        "arrows": {str(aid): base.mor_to_json(m) for aid, m in f.maps.items()},
    }


def _vertex_key_map(quiver, keys):
    """Map JSON string keys back onto actual vertex objects."""
    if quiver.is_explicit:
        lookup = {str(v): v for v in quiver.vertices()}
        return {k: lookup[k] for k in keys}
    out = {}
    for k in keys:
        for cast in (int, str):
            try:
                v = cast(k)
            except ValueError:
                continue
            if quiver.has_vertex(v):
                out[k] = v
                break
        else:
            raise RepError("cannot resolve vertex key %r" % (k,))
    return out


def rep_from_json(quiver, base, doc):
    keymap = _vertex_key_map(quiver, doc.get("support", {}).keys())
    objs = {keymap[k]: base.obj_from_json(o)
            for k, o in doc.get("support", {}).items()}
    rep = Representation(quiver, base, objs, {}, check=False)
    arrows = {a.id: a for a in arrows_touching(quiver, rep.support())}
    maps = {}
    for aid, mdoc in doc.get("arrows", {}).items():
        a = arrows.get(aid)
        if a is None:
            raise RepError("arrow %r not adjacent to the support" % (aid,))
        maps[aid] = base.mor_from_json(rep.obj_at(a.src), rep.obj_at(a.tgt), mdoc)
    rep.maps.update(maps)
    rep._validate()
    return rep


def rep_mor_to_json(f):
    base = f.base
    return {"components": {str(v): base.mor_to_json(m)
                           for v, m in f.comps.items()}}


def rep_mor_from_json(src, tgt, doc):
    base = src.base
    keymap = _vertex_key_map(src.quiver, doc.get("components", {}).keys())
    comps = {}
    for k, mdoc in doc.get("components", {}).items():
        v = keymap[k]
        comps[v] = base.mor_from_json(src.obj_at(v), tgt.obj_at(v), mdoc)
    return RepMorphism(src, tgt, comps)
