"""Projective presentations and resolutions, Ext groups, projective
dimension, and the global-dimension experiments.

Projectives in the representation category are the direct sums of free
representations f_i(P) on base projectives P, so a projective
presentation of F is the coproduct of the f_i applied to base-level
projective covers of the F_i, mapped down by the adjunction counits.
Ext^n(F, G) is computed by dimension shifting:

    Ext^n(F, G) = coker( Hom(P_{n-1}, G) --(. emb)--> Hom(K_{n-1}, G) )

where K_{n-1} is the (n-1)-st syzygy of F.  Splitting questions are
decided by the constraint solver, never numerically.
"""

import random

from . import _matrix as fm
from . import _intmatrix as zm
from .functors import FreeRep, adjunction_transport, stalk
from .repcat import (RepError, Representation, compose_rep, direct_sum_rep,
                     factor_mono_rep, factor_epi_rep, hom_space_rep,
                     identity_rep, is_epi_rep, is_short_exact, kernel_rep,
                     cokernel_rep, neg_rep, add_rep, rand_rep, rep_hom_solve,
                     zero_rep_mor)
from .canonical import InternalVerificationError, RepSequence


class TruncatedResolutionError(RuntimeError):
    """The resolution hit its length cap before becoming exact."""


class AtLeast:
    """A lower bound returned when a computation is cut off at a cap."""

    def __init__(self, n):
        self.n = n

    def __repr__(self):
        return "AtLeast(%d)" % self.n

    def __eq__(self, other):
        return isinstance(other, AtLeast) and self.n == other.n


def split_section(epi):
    """s with epi . s = id, or None."""
    return rep_hom_solve(epi.tgt, epi.src,
                         [(None, epi, identity_rep(epi.tgt))])


def split_retraction(mono):
    """r with r . mono = id, or None."""
    return rep_hom_solve(mono.tgt, mono.src,
                         [(mono, None, identity_rep(mono.src))])


class ProjPresentation:
    """P0 ->> F with kernel K >-> P0."""

    def __init__(self, f, p0, epi, kernel, frees, base_covers, supp_order):
        self.f = f
        self.p0 = p0
        self.epi = epi
        self.kernel = kernel            # SubquotientResult (obj, mor)
        self.frees = frees              # vertex -> FreeRep over the cover
        self.base_covers = base_covers  # vertex -> (U_i, cover epi)
        self.supp_order = supp_order

    @property
    def cover(self):
        return self.p0, self.epi


def projective_presentation(f, budget=10000):
    """(+)_{i in Supp F} f_i(U_i) ->> F with U_i ->> F_i base-projective
    covers; the kernel is computed vertexwise."""
    base = f.base
    q = f.quiver
    supp = sorted(f.support(), key=str)
    base_covers = {i: base.projective_cover(f.obj_at(i)) for i in supp}
    frees = {i: FreeRep(q, base, i, base_covers[i][0], budget) for i in supp}
    p0, _, projs = direct_sum_rep([frees[i].rep for i in supp], q, base)
    epi = zero_rep_mor(p0, f)
    for n, i in enumerate(supp):
        part = adjunction_transport(i, "f_from_base", base_covers[i][1],
                                    f=f, free=frees[i])
        epi = add_rep(epi, compose_rep(part, projs[n]))
    if not is_epi_rep(epi):
        raise InternalVerificationError("presentation map is not epi")
    ker = kernel_rep(epi)
    return ProjPresentation(f, p0, epi, ker, frees, base_covers, supp)


def is_projective_rep(f, budget=10000):
    """Split test: F is projective iff its presentation epi has a section."""
    if not f.support():
        return True
    pres = projective_presentation(f, budget)
    return split_section(pres.epi) is not None


class ProjResolution:
    """... -> P1 -> P0 ->> F, exact, all terms certified projective."""

    def __init__(self, f, terms, diffs, augmentation, kernels, truncated):
        self.f = f
        self.terms = terms            # [P0, P1, ...]
        self.diffs = diffs            # [d1: P1->P0, d2: P2->P1, ...]
        self.augmentation = augmentation
        self.kernels = kernels        # kernels[k] = syzygy inside terms[k]
        self.truncated = truncated

    @property
    def length(self):
        return len(self.terms) - 1

    def verify(self):
        ok = is_epi_rep(self.augmentation)
        from .repcat import is_exact_rep, is_mono_rep
        if self.diffs:
            mid, _ = is_exact_rep(self.diffs[0], self.augmentation)
            ok = ok and mid
        for k in range(1, len(self.diffs)):
            mid, _ = is_exact_rep(self.diffs[k], self.diffs[k - 1])
            ok = ok and mid
        if not self.truncated and self.diffs:
            ok = ok and is_mono_rep(self.diffs[-1])
        return ok


def projective_resolution(f, max_len=8, budget=10000):
    """Iterate presentations on syzygies; the last term may be a syzygy
    itself when it is already projective."""
    pres = projective_presentation(f, budget)
    terms = [pres.p0]
    diffs = []
    kernels = [pres.kernel]
    k = pres.kernel
    truncated = False
    while k.obj.support():
        if len(terms) > max_len:
            truncated = True
            break
        if is_projective_rep(k.obj, budget):
            terms.append(k.obj)
            diffs.append(k.mor)
            kz = kernel_rep(k.mor)   # zero: the embedding is monic
            kernels.append(kz)
            k = kz
            break
        nxt = projective_presentation(k.obj, budget)
        terms.append(nxt.p0)
        diffs.append(compose_rep(k.mor, nxt.epi))
        kernels.append(nxt.kernel)
        k = nxt.kernel
    return ProjResolution(f, terms, diffs, pres.epi, kernels, truncated)


def _base_pd_cap(f):
    cap = 0
    for i in f.support():
        cap = max(cap, f.base.pd(f.obj_at(i)))
    return cap + 1


def pd_rep(f, cap=None, budget=10000):
    """Projective dimension (pd(0) = 0), always <= sup_i pd(F_i) + 1."""
    bound = _base_pd_cap(f) if f.support() else 0
    limit = bound if cap is None else min(cap, bound)
    cur = f
    for k in range(limit + 1):
        if not cur.support() or is_projective_rep(cur, budget):
            return k
        cur = projective_presentation(cur, budget).kernel.obj
    if cap is not None and cap < bound:
        return AtLeast(cap + 1)
    raise InternalVerificationError(
        "projective dimension exceeds the bound sup_i pd(F_i) + 1 = %d"
        % bound)


# ---------------------------------------------------------------------
# Ext


MAX_EXT_DEGREE = 3


class ExtPresentation:
    """Ext^n(F, G) in normal form, with an optional representative
    extension in degree 1."""

    def __init__(self, n, field, dim=None, orders=None, witness=None):
        self.n = n
        self.field = field
        self.dim = dim
        self.orders = None if orders is None else list(orders)
        self._witness = witness   # (emb, p0, aug_epi, homK, class_coords)
        self._representative = None

    def summary(self):
        if self.field:
            return {"kind": "vector-space", "dim": self.dim}
        return {"kind": "abelian-group", "orders": list(self.orders)}

    def is_trivial(self):
        return self.dim == 0 if self.field else not self.orders

    def min_generators(self):
        """The uniform 'dimension': minimal generator count."""
        return self.dim if self.field else len(self.orders)

    def representative(self):
        """An exact sequence 0 -> G -> E -> F -> 0 whose class is a
        nonzero element (degree 1, nontrivial group only)."""
        if self.n != 1 or self.is_trivial() or self._witness is None:
            return None
        if self._representative is None:
            self._representative = _pushout_extension(*self._witness)
        return self._representative


def _pushout_extension(emb, p0, aug_epi, hom_k, class_coords):
    """E = coker((-emb, x): K -> P0 (+) G) for the cocycle x with the
    given coordinates; returns the verified sequence G >-> E ->> F."""
    x = hom_k.from_coords(class_coords)
    f = aug_epi.tgt
    g = hom_k.tgt
    s, incs, projs = direct_sum_rep([p0, g], f.quiver, f.base)
    m = add_rep(compose_rep(incs[0], neg_rep(emb)), compose_rep(incs[1], x))
    cok = cokernel_rep(m)
    iota = compose_rep(cok.mor, incs[1])
    p_f = compose_rep(aug_epi, projs[0])
    induced = factor_epi_rep(cok.mor, p_f)
    if induced is None:
        raise InternalVerificationError("extension quotient map missing")
    seq = RepSequence([iota, induced])
    if not seq.is_short_exact():
        raise InternalVerificationError("representative extension not exact")
    if split_retraction(iota) is not None:
        raise InternalVerificationError(
            "representative extension splits despite nonzero class")
    return seq


def _restriction_cols(hom_p, hom_k, emb):
    """Coordinates in Hom(K, G) of each Hom(P, G) generator restricted
    along emb: K >-> P."""
    return [hom_k.coords(compose_rep(h, emb)) for h in hom_p.gens]


def ext_rep(f, g, n, budget=10000):
    """Ext^n(F, G) via dimension shifting along a projective resolution."""
    base = f.base
    field = base.scalar() in ("q", "fp")
    if n < 0:
        raise RepError("negative Ext degree")
    if n > MAX_EXT_DEGREE:
        raise RepError("Ext degree capped at %d" % MAX_EXT_DEGREE)
    if n == 0:
        hom = hom_space_rep(f, g)
        if field:
            return ExtPresentation(0, True, dim=hom.ngens)
        return ExtPresentation(0, False, orders=hom.orders)
    pres = projective_presentation(f, budget)
    k, p = pres.kernel, pres.p0
    aug = pres.epi
    for _ in range(n - 1):
        if not k.obj.support():
            break
        nxt = projective_presentation(k.obj, budget)
        k, p, aug = nxt.kernel, nxt.p0, nxt.epi
    if not k.obj.support():
        return (ExtPresentation(n, True, dim=0) if field
                else ExtPresentation(n, False, orders=[]))
    hom_k = hom_space_rep(k.obj, g)
    hom_p = hom_space_rep(p, g)
    cols = _restriction_cols(hom_p, hom_k, k.mor)
    if field:
        fld = base.fld
        if hom_k.ngens == 0:
            return ExtPresentation(n, True, dim=0)
        mat = (fm.mat_freeze(zip(*cols)) if cols
               else fm.zeros(hom_k.ngens, 0, fld))
        dim = hom_k.ngens - fm.rank(mat, fld)
        witness = None
        if n == 1 and dim > 0:
            for j in range(hom_k.ngens):
                e_j = fm.mat_freeze([[fld.one() if i == j else fld.zero()]
                                     for i in range(hom_k.ngens)])
                if not fm.column_space_contains(mat, e_j, fld):
                    coords = tuple(fld.one() if i == j else fld.zero()
                                   for i in range(hom_k.ngens))
                    witness = (k.mor, p, aug, hom_k, coords)
                    break
        return ExtPresentation(n, True, dim=dim, witness=witness)
    m = hom_k.ngens
    if m == 0:
        return ExtPresentation(n, False, orders=[])
    rel_cols = [list(c) for c in cols]
    for i, o in enumerate(hom_k.orders):
        if o:
            col = [0] * m
            col[i] = o
            rel_cols.append(col)
    rel = (tuple(zip(*rel_cols)) if rel_cols else tuple(() for _ in range(m)))
    orders, _, lift = zm.coker_presentation(rel, m)
    witness = None
    if n == 1 and orders:
        coords = tuple(lift[i][0] for i in range(m))
        witness = (k.mor, p, aug, hom_k, coords)
    return ExtPresentation(n, False, orders=orders, witness=witness)


def ext_class_coords(f, g, x, pres, budget=10000):
    """Coordinates of the degree-1 class of the cocycle x: K -> G in
    Hom(K, G)/Hom(P0, G), plus a nonzero test."""
    hom_k = hom_space_rep(pres.kernel.obj, g)
    hom_p = hom_space_rep(pres.p0, g)
    cols = _restriction_cols(hom_p, hom_k, pres.kernel.mor)
    vec = hom_k.coords(x)
    base = f.base
    if base.scalar() in ("q", "fp"):
        fld = base.fld
        if hom_k.ngens == 0:
            return vec, False
        mat = (fm.mat_freeze(zip(*cols)) if cols
               else fm.zeros(hom_k.ngens, 0, fld))
        rhs = fm.mat_freeze([[c] for c in vec])
        return vec, not fm.column_space_contains(mat, rhs, fld)
    if hom_k.ngens == 0:
        return vec, False
    rel_cols = [list(c) for c in cols]
    for i, o in enumerate(hom_k.orders):
        if o:
            col = [0] * hom_k.ngens
            col[i] = o
            rel_cols.append(col)
    mat = tuple(zip(*rel_cols))
    sol = zm.int_solve(mat, list(vec))
    return vec, sol is None


def ses_cocycle(mono, epi, pres, budget=10000):
    """The class of 0 -> G -> E -> F -> 0 as a cocycle K -> G on F's
    presentation: lift the augmentation through E and restrict to K."""
    lift = rep_hom_solve(pres.p0, epi.src, [(None, epi, pres.epi)])
    if lift is None:
        raise InternalVerificationError("projective lifting failed")
    rest = compose_rep(lift, pres.kernel.mor)
    x = factor_mono_rep(mono, rest)
    if x is None:
        raise InternalVerificationError("cocycle does not land in the kernel")
    return x


def yoneda_square_cocycle(f, x_delta, pres0, theta_mono, theta_epi,
                          budget=10000):
    """Degree-2 cocycle of the Yoneda composite theta . delta.

    delta in Ext^1(F, M) is given as a cocycle x_delta: K0 -> M on F's
    presentation pres0; theta in Ext^1(M, G) as a sequence
    G >--theta_mono--> E --theta_epi-->> M.  Returns (K1 >-> P1, P1,
    z: K1 -> G) realizing the composite in Hom(K1, G).
    """
    pres1 = projective_presentation(pres0.kernel.obj, budget)
    lifted = rep_hom_solve(pres1.p0, theta_epi.src,
                           [(None, theta_epi,
                             compose_rep(x_delta, pres1.epi))])
    if lifted is None:
        raise InternalVerificationError("Yoneda lifting failed")
    z_amb = compose_rep(lifted, pres1.kernel.mor)
    z = factor_mono_rep(theta_mono, z_amb)
    if z is None:
        raise InternalVerificationError("Yoneda cocycle misses the kernel")
    return pres1, z


# ---------------------------------------------------------------------
# non-split witnesses


def nonsplit_witness(quiver, base, arrow, c, eta=None, budget=10000):
    """The standard non-split sequence on a single arrow x -> y (x != y):

        delta_C : s_y(C) >-> (C = C on the arrow) ->> s_x(C)

    extended by zero to the whole quiver.  Certifies Ext^1(s_x(C),
    s_y(C)) != 0 with delta_C as a nonzero class.  When eta = (mono, epi)
    is a base-level short exact sequence D >-> E ->> C with nonzero
    class, additionally certifies that the Yoneda composite
    s_y(eta) . delta_C is nonzero in Ext^2(s_x(C), s_y(D)).
    """
    from .repcat import RepMorphism
    x, y = arrow.src, arrow.tgt
    if x == y:
        raise RepError("loops are out of scope for the witness construction")
    if base.is_zero_obj(c):
        raise RepError("witness object must be nonzero")
    sx = stalk(quiver, base, x, c)
    sy = stalk(quiver, base, y, c)
    mid = Representation(quiver, base, {x: c, y: c},
                         {arrow.id: base.identity(c)})
    mono = RepMorphism(sy, mid, {y: base.identity(c)}, check=True)
    epi = RepMorphism(mid, sx, {x: base.identity(c)}, check=True)
    delta = RepSequence([mono, epi])
    if not delta.is_short_exact():
        raise InternalVerificationError("delta_C is not short exact")
    if split_retraction(mono) is not None:
        raise InternalVerificationError("delta_C splits unexpectedly")
    ext1 = ext_rep(sx, sy, 1, budget)
    if ext1.is_trivial():
        raise InternalVerificationError("Ext^1(s_x(C), s_y(C)) vanished")
    pres0 = projective_presentation(sx, budget)
    x_delta = ses_cocycle(mono, epi, pres0, budget)
    coords, nonzero = ext_class_coords(sx, sy, x_delta, pres0, budget)
    if not nonzero:
        raise InternalVerificationError("class of delta_C is zero")
    report = {
        "delta": delta,
        "nonsplit": True,
        "ext1": ext1,
        "class_coords": list(coords),
        "higher": None,
    }
    if eta is not None:
        eta_mono, eta_epi = eta
        d_obj = eta_mono.src
        theta_mono = RepMorphism(stalk(quiver, base, y, d_obj),
                                 stalk(quiver, base, y, eta_mono.tgt),
                                 {y: eta_mono}, check=True)
        theta_epi = RepMorphism(theta_mono.tgt, sy, {y: eta_epi}, check=True)
        if not is_short_exact(theta_mono, theta_epi):
            raise RepError("eta does not define a short exact sequence")
        pres1, z = yoneda_square_cocycle(sx, x_delta, pres0,
                                         theta_mono, theta_epi, budget)
        sy_d = theta_mono.src
        _, nz2 = ext_class_coords(pres0.kernel.obj, sy_d, z, pres1, budget)
        if not nz2:
            raise InternalVerificationError("Yoneda composite class is zero")
        ext2 = ext_rep(sx, sy_d, 2, budget)
        if ext2.is_trivial():
            raise InternalVerificationError("Ext^2 group vanished")
        report["higher"] = {
            "ext": ext2.summary(),
            "composite_nonzero": True,
        }
    return report


def gldim_experiment(quiver, base, sample_count, dims_bound, seed,
                     budget=10000):
    """Sample random representations, record the max projective dimension,
    and exhibit a witness achieving the theoretical bound gl.dim(C) + 1."""
    bound = base_gldim(base) + 1
    rng = random.Random(seed)
    max_pd = 0
    pds = []
    for _ in range(sample_count):
        rep = rand_rep(quiver, base, rng, max_dim=dims_bound)
        p = pd_rep(rep, budget=budget)
        pds.append(p)
        if p > max_pd:
            max_pd = p
    if max_pd > bound:
        raise InternalVerificationError(
            "observed pd %d above the bound %d" % (max_pd, bound))
    arrow = _some_arrow(quiver)
    wit = stalk(quiver, base, arrow.src, _witness_obj(base))
    wit_pd = pd_rep(wit, budget=budget)
    if wit_pd != bound:
        raise InternalVerificationError(
            "witness pd %r != bound %d" % (wit_pd, bound))
    return {
        "bound": bound,
        "max_pd_observed": max_pd,
        "witness": {"vertex": str(arrow.src), "pd": wit_pd},
        "samples": sample_count,
        "dims_bound": dims_bound,
        "seed": seed,
    }


def base_gldim(base):
    """Global dimension of the base category (built-in bases only)."""
    from .basecat import FgAbBase, NestedBase, VectBase
    if isinstance(base, NestedBase):
        return base_gldim(base.inner) + 1
    if isinstance(base, FgAbBase):
        return 1
    if isinstance(base, VectBase):
        return 0
    raise RepError("unknown base category")


def _witness_obj(base):
    """A base object of projective dimension exactly gl.dim(base)."""
    from .basecat import AbObj, FgAbBase, NestedBase, VectBase, VObj
    if isinstance(base, NestedBase):
        arrow = _some_arrow(base.quiver)
        return stalk(base.quiver, base.inner, arrow.src,
                     _witness_obj(base.inner))
    if isinstance(base, FgAbBase):
        return AbObj((2,))
    return VObj(1)


def _some_arrow(quiver):
    for v in quiver.vertices():
        for a in quiver.out_arrows(v):
            if a.src != a.tgt:
                return a
    raise RepError("quiver has no non-loop arrow")
