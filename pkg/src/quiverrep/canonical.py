"""Canonical presentations and co-presentations.

For a finite-support representation F with certified-finite cones:

    0 -> (+)_{rho in Q1'} f_{t(rho)}(F_{s(rho)})
           --Gamma--> (+)_{i in Supp F} f_i(F_i) --proj--> F -> 0

where Q1' is the set of arrows with source in Supp(F).  Gamma acts on the
(rho, lam) coordinate by mu_{lam.rho} - mu_lam . F_rho, and the sequence
splits at every vertex: the explicit left inverse Lambda_k of Gamma_k is
built by unrolling each indexing path.  The co-presentation is the exact
dual using cofree representations.  Everything is verified on
construction; a verification failure raises InternalVerificationError.
"""

from .quiver import Path, QuiverError, trivial_path
from .functors import (CofreeRep, FreeRep, counit_psi, path_transformation,
                       unit_theta)
from .repcat import (Representation, RepMorphism, add_rep, compose_rep,
                     direct_sum_rep, is_epi_rep, is_exact_rep, is_mono_rep,
                     zero_rep, zero_rep_mor)


class InternalVerificationError(RuntimeError):
    """A self-check of a constructed presentation failed (a bug, not a
    user error)."""


def path_vertices(quiver, path):
    """The vertex itinerary v_0, ..., v_n of a path."""
    verts = [path.source]
    cur = path.source
    for aid in path.arrows:
        nxt = None
        for a in quiver.out_arrows(cur):
            if a.id == aid:
                nxt = a.tgt
                break
        if nxt is None:
            raise QuiverError("path mentions unknown arrow %r" % (aid,))
        verts.append(nxt)
        cur = nxt
    return verts


def free_map(free_src, free_tgt, base_mor):
    """f_i applied to a base morphism: f_i(X) -> f_i(Y), coordinatewise."""
    base = free_src.base
    if not free_src.labels or not free_tgt.labels:
        return zero_rep_mor(free_src.rep, free_tgt.rep)
    comps = {}
    for v, paths in free_src.labels.items():
        m = base.zero_mor(free_src.rep.obj_at(v), free_tgt.rep.obj_at(v))
        for p in paths:
            m = base.add(m, base.compose(
                free_tgt.mu(p), base.compose(base_mor, free_src.pi(p))))
        if not base.is_zero_mor(m):
            comps[v] = m
    return RepMorphism(free_src.rep, free_tgt.rep, comps, check=False)


def cofree_map(cof_src, cof_tgt, base_mor):
    """g_i applied to a base morphism, coordinatewise."""
    base = cof_src.base
    if not cof_src.labels or not cof_tgt.labels:
        return zero_rep_mor(cof_src.rep, cof_tgt.rep)
    comps = {}
    for v, paths in cof_src.labels.items():
        m = base.zero_mor(cof_src.rep.obj_at(v), cof_tgt.rep.obj_at(v))
        for p in paths:
            m = base.add(m, base.compose(
                cof_tgt.iota(p), base.compose(base_mor, cof_src.pi(p))))
        if not base.is_zero_mor(m):
            comps[v] = m
    return RepMorphism(cof_src.rep, cof_tgt.rep, comps, check=False)


def cofree_path_transformation(rho, cof_src, cof_tgt):
    """g_rho(C): g_{t(rho)}(C) -> g_{s(rho)}(C), prepending rho:
    pi_lam . g_rho = pi_{rho . lam}."""
    base = cof_src.base
    comps = {}
    for v, paths in cof_tgt.labels.items():
        m = base.zero_mor(cof_src.rep.obj_at(v), cof_tgt.rep.obj_at(v))
        for lam in paths:  # lam in Q(v, s(rho))
            full = Path(v, rho.target, lam.arrows + rho.arrows)
            m = base.add(m, base.compose(cof_tgt.iota(lam), cof_src.pi(full)))
        if not base.is_zero_mor(m):
            comps[v] = m
    return RepMorphism(cof_src.rep, cof_tgt.rep, comps, check=False)


def left_inverse(base, m):
    """X with X . m = id (exists iff m is a split mono)."""
    return base.factor_epi(m, base.identity(m.src))


def right_inverse(base, m):
    """X with m . X = id (exists iff m is a split epi)."""
    return base.factor_mono(m, base.identity(m.tgt))


class CanonicalPresentation:
    def __init__(self, f, p1, p0, gamma, proj, lambdas, frees0, frees1,
                 arrow_order, supp_order):
        self.f = f
        self.p1 = p1
        self.p0 = p0
        self.gamma = gamma
        self.proj = proj
        self.lambdas = lambdas      # vertex -> base morphism (P0)_k -> (P1)_k
        self.frees0 = frees0        # vertex i -> FreeRep f_i(F_i)
        self.frees1 = frees1        # arrow id -> FreeRep f_{t(rho)}(F_{s(rho)})
        self.arrow_order = arrow_order
        self.supp_order = supp_order

    def to_json(self):
        from .repcat import rep_mor_to_json, rep_to_json
        base = self.f.base
        return {
            "P1": rep_to_json(self.p1),
            "P0": rep_to_json(self.p0),
            "gamma": rep_mor_to_json(self.gamma),
            "proj": rep_mor_to_json(self.proj),
            "lambda": {str(v): base.mor_to_json(m)
                       for v, m in self.lambdas.items()},
        }


def _verify_presentation(pres):
    f = pres.f
    base = f.base
    if not is_mono_rep(pres.gamma):
        raise InternalVerificationError("Gamma is not a monomorphism")
    if not is_epi_rep(pres.proj):
        raise InternalVerificationError("proj is not an epimorphism")
    ok, diag = is_exact_rep(pres.gamma, pres.proj)
    if not ok:
        raise InternalVerificationError("presentation not exact: %r" % (diag,))
    for v, lam in pres.lambdas.items():
        g_v = pres.gamma.comp_at(v)
        ident = base.identity(pres.p1.obj_at(v))
        if not base.mor_eq(base.compose(lam, g_v), ident):
            raise InternalVerificationError(
                "Lambda . Gamma != id at vertex %r" % (v,))


def canonical_presentation(f, budget=10000, lambda_via_solver=False):
    """The canonical projective-style presentation of F, verified."""
    base = f.base
    q = f.quiver
    supp = sorted(f.support(), key=str)
    frees0 = {i: FreeRep(q, base, i, f.obj_at(i), budget) for i in supp}
    arrows1 = []
    seen = set()
    for i in supp:
        for a in q.out_arrows(i):
            if a.id not in seen:
                seen.add(a.id)
                arrows1.append(a)
    arrows1.sort(key=lambda a: str(a.id))
    frees1 = {a.id: FreeRep(q, base, a.tgt, f.obj_at(a.src), budget)
              for a in arrows1}
    p0, incs0, projs0 = direct_sum_rep([frees0[i].rep for i in supp], q, base)
    p1, incs1, projs1 = direct_sum_rep([frees1[a.id].rep for a in arrows1],
                                       q, base)
    supp_idx = {i: n for n, i in enumerate(supp)}
    # proj: P0 ->> F via the counits
    proj = zero_rep_mor(p0, f)
    for n, i in enumerate(supp):
        proj = add_rep(proj, compose_rep(counit_psi(frees0[i], f), projs0[n]))
    # Gamma: on the rho-block, mu_{lam.rho} - mu_lam . F_rho
    gamma = zero_rep_mor(p1, p0)
    for n, a in enumerate(arrows1):
        rho = Path(a.src, a.tgt, (a.id,))
        t_rho = path_transformation(rho, frees1[a.id], frees0[a.src])
        part1 = compose_rep(incs0[supp_idx[a.src]], t_rho)
        if a.tgt in supp_idx:
            f_rho = free_map(frees1[a.id], frees0[a.tgt], f.map_at(a))
            part1 = add_rep(part1,
                            _neg(compose_rep(incs0[supp_idx[a.tgt]], f_rho)))
        gamma = add_rep(gamma, compose_rep(part1, projs1[n]))
    lambdas = (_lambda_by_solver(f, p1, p0, gamma, base)
               if lambda_via_solver
               else _lambda_by_formula(f, q, base, supp, supp_idx, arrows1,
                                       frees0, frees1, p0, p1, incs1, projs0))
    pres = CanonicalPresentation(f, p1, p0, gamma, proj, lambdas,
                                 frees0, frees1, arrows1, supp)
    _verify_presentation(pres)
    return pres


def _neg(rep_mor):
    from .repcat import neg_rep
    return neg_rep(rep_mor)


def _lambda_by_solver(f, p1, p0, gamma, base):
    lambdas = {}
    for v in p0.support():
        g_v = gamma.comp_at(v)
        lam = left_inverse(base, g_v)
        if lam is None:
            raise InternalVerificationError(
                "no vertexwise left inverse at %r" % (v,))
        lambdas[v] = lam
    return lambdas


def _lambda_by_formula(f, q, base, supp, supp_idx, arrows1, frees0, frees1,
                       p0, p1, incs1, projs0):
    """Lambda_k . mu_{(i,gamma)} = sum_m mu_{(a_m, tail_m)} . F_{prefix_m},
    where gamma = a_n ... a_1, tail_m = a_n ... a_{m+1} and
    prefix_m = a_{m-1} ... a_1."""
    arrow1_idx = {a.id: n for n, a in enumerate(arrows1)}
    lambdas = {}
    for k in sorted(p0.support(), key=str):
        lam = base.zero_mor(p0.obj_at(k), p1.obj_at(k))
        for i in supp:
            free_i = frees0[i]
            if k not in free_i.labels:
                continue
            for gpath in free_i.labels[k]:
                n = len(gpath.arrows)
                if n == 0:
                    continue
                verts = path_vertices(q, gpath)
                term = base.zero_mor(f.obj_at(i), p1.obj_at(k))
                for m in range(1, n + 1):
                    aid = gpath.arrows[m - 1]
                    if aid not in arrow1_idx:
                        continue
                    free_rho = frees1[aid]
                    tail = Path(verts[m], k, gpath.arrows[m:])
                    mu = base.compose(incs1[arrow1_idx[aid]].comp_at(k),
                                      free_rho.mu(tail))
                    prefix = Path(i, verts[m - 1], gpath.arrows[: m - 1])
                    term = base.add(term, base.compose(mu, f.path_map(prefix)))
                # column block of Lambda_k at coordinate (i, gpath)
                coord_proj = base.compose(free_i.pi(gpath),
                                          projs0[supp_idx[i]].comp_at(k))
                lam = base.add(lam, base.compose(term, coord_proj))
        lambdas[k] = lam
    return lambdas


# ---------------------------------------------------------------------
# co-presentation


class CanonicalCopresentation:
    def __init__(self, f, i0, i1, inj, delta, colambdas, cofrees0, cofrees1,
                 arrow_order, supp_order):
        self.f = f
        self.i0 = i0
        self.i1 = i1
        self.inj = inj              # F >-> I0
        self.delta = delta          # I0 ->> I1
        self.colambdas = colambdas  # vertex -> right inverse of Delta_k
        self.cofrees0 = cofrees0
        self.cofrees1 = cofrees1
        self.arrow_order = arrow_order
        self.supp_order = supp_order

    def to_json(self):
        from .repcat import rep_mor_to_json, rep_to_json
        base = self.f.base
        return {
            "I0": rep_to_json(self.i0),
            "I1": rep_to_json(self.i1),
            "inj": rep_mor_to_json(self.inj),
            "delta": rep_mor_to_json(self.delta),
            "colambda": {str(v): base.mor_to_json(m)
                         for v, m in self.colambdas.items()},
        }


def canonical_copresentation(f, budget=10000):
    """0 -> F -> prod_i g_i(F_i) -> prod_rho g_{s(rho)}(F_{t(rho)}) -> 0."""
    base = f.base
    q = f.quiver
    supp = sorted(f.support(), key=str)
    cofrees0 = {i: CofreeRep(q, base, i, f.obj_at(i), budget) for i in supp}
    arrows1 = []
    seen = set()
    for i in supp:
        for a in q.in_arrows(i):
            if a.id not in seen:
                seen.add(a.id)
                arrows1.append(a)
    arrows1.sort(key=lambda a: str(a.id))
    cofrees1 = {a.id: CofreeRep(q, base, a.src, f.obj_at(a.tgt), budget)
                for a in arrows1}
    i0, incs0, projs0 = direct_sum_rep([cofrees0[i].rep for i in supp], q, base)
    i1, incs1, projs1 = direct_sum_rep([cofrees1[a.id].rep for a in arrows1],
                                       q, base)
    supp_idx = {i: n for n, i in enumerate(supp)}
    inj = zero_rep_mor(f, i0)
    for n, i in enumerate(supp):
        inj = add_rep(inj, compose_rep(incs0[n], unit_theta(cofrees0[i], f)))
    delta = zero_rep_mor(i0, i1)
    for n, a in enumerate(arrows1):
        rho = Path(a.src, a.tgt, (a.id,))
        # component into the rho-factor: g_rho(F_{t(rho)}) . pi_{t(rho)}
        #                              - g_{s(rho)}(F_rho) . pi_{s(rho)}
        part = compose_rep(
            cofree_path_transformation(rho, cofrees0[a.tgt], cofrees1[a.id]),
            projs0[supp_idx[a.tgt]])
        if a.src in supp_idx:
            g_f = cofree_map(cofrees0[a.src], cofrees1[a.id], f.map_at(a))
            part = add_rep(part, _neg(compose_rep(g_f, projs0[supp_idx[a.src]])))
        delta = add_rep(delta, compose_rep(incs1[n], part))
    colambdas = {}
    for v in sorted(i1.support(), key=str):
        d_v = delta.comp_at(v)
        sec = right_inverse(base, d_v)
        if sec is None:
            raise InternalVerificationError(
                "no vertexwise section of Delta at %r" % (v,))
        colambdas[v] = sec
    pres = CanonicalCopresentation(f, i0, i1, inj, delta, colambdas,
                                   cofrees0, cofrees1, arrows1, supp)
    if not is_mono_rep(inj):
        raise InternalVerificationError("co-presentation inj not mono")
    if not is_epi_rep(delta):
        raise InternalVerificationError("co-presentation delta not epi")
    ok, diag = is_exact_rep(inj, delta)
    if not ok:
        raise InternalVerificationError("co-presentation not exact: %r" % diag)
    return pres


# ---------------------------------------------------------------------
# stalk presentations and filtrations


class RepSequence:
    """A composable chain of representation morphisms."""

    def __init__(self, mors):
        self.mors = list(mors)

    def is_short_exact(self):
        from .repcat import is_short_exact
        if len(self.mors) != 2:
            return False
        return is_short_exact(self.mors[0], self.mors[1])


def stalk_presentation(quiver, base, x, c, budget=10000):
    """(+)_{a: x -> *} f_{t(a)}(C) >-> f_x(C) ->> s_x(C), verified exact."""
    from .functors import stalk
    free_x = FreeRep(quiver, base, x, c, budget)
    arrows = sorted(quiver.out_arrows(x), key=lambda a: str(a.id))
    frees = [FreeRep(quiver, base, a.tgt, c, budget) for a in arrows]
    s_sum, incs, projs = direct_sum_rep([fr.rep for fr in frees],
                                        quiver, base)
    mono = zero_rep_mor(s_sum, free_x.rep)
    for a, fr, pr in zip(arrows, frees, projs):
        rho = Path(a.src, a.tgt, (a.id,))
        mono = add_rep(mono, compose_rep(
            path_transformation(rho, fr, free_x), pr))
    st = stalk(quiver, base, x, c)
    comps = {}
    if not base.is_zero_obj(c):
        comps[x] = free_x.pi(trivial_path(x))
    epi = RepMorphism(free_x.rep, st, comps, check=False)
    seq = RepSequence([mono, epi])
    if not seq.is_short_exact():
        raise InternalVerificationError("stalk presentation not exact")
    return seq, (s_sum, free_x, st)


def _paths_of_length(quiver, x, k, budget=10000):
    from .quiver import right_cone, INFINITE
    cone = right_cone(quiver, x, budget)
    if cone.value == INFINITE or cone.value is None:
        from .functors import InfiniteConeError
        raise InfiniteConeError("right cone of %r not certified finite" % (x,))
    out = []
    for v in sorted(cone.value, key=str):
        for p in cone.value[v]:
            if len(p.arrows) == k:
                out.append(p)
    out.sort(key=lambda p: p.sort_key())
    return out


def path_length_filtration(quiver, base, x, c, k, budget=10000):
    """The k-th filtration sequence: strata of paths of length k and k-1.

    (+)_{rho in Q_k} f_{t(rho)}(C) >-> (+)_{rho' in Q_{k-1}} f_{t(rho')}(C)
    ->> (+)_{rho' in Q_{k-1}} s_{t(rho')}(C).
    """
    from .functors import stalk
    if k < 1:
        raise QuiverError("filtration degree must be >= 1")
    paths_k = _paths_of_length(quiver, x, k, budget)
    paths_k1 = _paths_of_length(quiver, x, k - 1, budget)
    idx_k1 = {p.arrows: n for n, p in enumerate(paths_k1)}
    frees_k = [FreeRep(quiver, base, p.target, c, budget) for p in paths_k]
    frees_k1 = [FreeRep(quiver, base, p.target, c, budget) for p in paths_k1]
    top, _, tprojs = direct_sum_rep([fr.rep for fr in frees_k], quiver, base)
    mid, mincs, mprojs = direct_sum_rep([fr.rep for fr in frees_k1],
                                        quiver, base)
    stalks = [stalk(quiver, base, p.target, c) for p in paths_k1]
    bot, bincs, _ = direct_sum_rep(stalks, quiver, base)
    mono = zero_rep_mor(top, mid)
    for n, p in enumerate(paths_k):
        prefix = p.arrows[:-1]
        j = idx_k1[prefix]
        last = p.arrows[-1]
        verts = path_vertices(quiver, p)
        alpha = Path(verts[-2], verts[-1], (last,))
        mono = add_rep(mono, compose_rep(
            mincs[j],
            compose_rep(path_transformation(alpha, frees_k[n], frees_k1[j]),
                        tprojs[n])))
    epi = zero_rep_mor(mid, bot)
    for j, p in enumerate(paths_k1):
        v = p.target
        comps = {}
        if not base.is_zero_obj(c):
            comps[v] = frees_k1[j].pi(trivial_path(v))
        blk = RepMorphism(frees_k1[j].rep, stalks[j], comps, check=False)
        epi = add_rep(epi, compose_rep(bincs[j], compose_rep(blk, mprojs[j])))
    seq = RepSequence([mono, epi])
    if not seq.is_short_exact():
        raise InternalVerificationError("filtration sequence not exact")
    return seq, (top, mid, bot)
