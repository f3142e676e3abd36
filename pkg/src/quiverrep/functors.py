"""Functor toolkit for Rep(Q, C): evaluation e_i, stalk s_i, free f_i,
cofree g_i, mesh maps phi/psi with their boundary functors c_i/k_i,
units/counits, path-induced transformations, and the derived adjoints of
f_z and g_z.

Free and cofree representations carry explicit coordinate labels: at
vertex k, f_i(C) has one copy of C per path in Q(i,k) and g_i(C) one per
path in Q(k,i), both sorted lexicographically by arrow-id sequence.
"""

from .quiver import INFINITE, Path, left_cone, right_cone, trivial_path
from .repcat import (Representation, RepMorphism, RepError, add_rep,
                     arrows_touching, scale_rep, zero_rep_mor)


class InfiniteConeError(ValueError):
    """The cone needed for a free/cofree construction is not certified
    finite."""


def _extend_path(path, arrow):
    return Path(path.source, arrow.tgt, path.arrows + (arrow.id,))


def _prepend_path(arrow, path):
    return Path(arrow.src, path.target, (arrow.id,) + path.arrows)


class FreeRep:
    """f_i(C): vertex k carries one copy of C per path in Q(i,k)."""

    def __init__(self, quiver, base, i, c, budget=10000):
        cone = right_cone(quiver, i, budget)
        if cone.value == INFINITE or cone.value is None:
            raise InfiniteConeError(
                "right cone of %r is not certified finite" % (i,))
        self.quiver = quiver
        self.base = base
        self.vertex = i
        self.obj = c
        self.labels = {}   # vertex -> sorted list of paths i -> vertex
        self._index = {}   # (vertex, path.arrows) -> coordinate index
        objs, self._incs, self._projs = {}, {}, {}
        if not base.is_zero_obj(c):
            for v, paths in cone.value.items():
                self.labels[v] = list(paths)
                for n, p in enumerate(paths):
                    self._index[(v, p.arrows)] = n
                s, incs, projs = base.direct_sum([c] * len(paths))
                objs[v] = s
                self._incs[v] = incs
                self._projs[v] = projs
        self.rep = Representation(quiver, base, objs, {}, check=False)
        maps = {}
        for v in self.labels:
            for a in quiver.out_arrows(v):
                if a.tgt not in self.labels:
                    continue
                m = base.zero_mor(self.rep.obj_at(v), self.rep.obj_at(a.tgt))
                for p in self.labels[v]:
                    ext = _extend_path(p, a)
                    m = base.add(m, base.compose(self.mu(ext), self.pi(p)))
                if not base.is_zero_mor(m):
                    maps[a.id] = m
        self.rep.maps.update(maps)

    def mu(self, path):
        """Coordinate inclusion C -> (f_i C)_{t(path)}."""
        v = path.target
        return self._incs[v][self._index[(v, path.arrows)]]

    def pi(self, path):
        """Coordinate projection (f_i C)_{t(path)} -> C."""
        v = path.target
        return self._projs[v][self._index[(v, path.arrows)]]


class CofreeRep:
    """g_i(C): vertex k carries one copy of C per path in Q(k,i)."""

    def __init__(self, quiver, base, i, c, budget=10000):
        cone = left_cone(quiver, i, budget)
        if cone.value == INFINITE or cone.value is None:
            raise InfiniteConeError(
                "left cone of %r is not certified finite" % (i,))
        self.quiver = quiver
        self.base = base
        self.vertex = i
        self.obj = c
        self.labels = {}   # vertex -> sorted list of paths vertex -> i
        self._index = {}
        objs, self._incs, self._projs = {}, {}, {}
        if not base.is_zero_obj(c):
            for v, paths in cone.value.items():
                self.labels[v] = list(paths)
                for n, p in enumerate(paths):
                    self._index[(v, p.arrows)] = n
                s, incs, projs = base.direct_sum([c] * len(paths))
                objs[v] = s
                self._incs[v] = incs
                self._projs[v] = projs
        self.rep = Representation(quiver, base, objs, {}, check=False)
        maps = {}
        for v in self.labels:
            for a in quiver.out_arrows(v):
                if a.tgt not in self.labels:
                    continue
                m = base.zero_mor(self.rep.obj_at(v), self.rep.obj_at(a.tgt))
                for p in self.labels[a.tgt]:
                    # output coordinate p receives input coordinate p . a
                    m = base.add(m, base.compose(
                        self.iota(p), self.pi(_prepend_path(a, p))))
                if not base.is_zero_mor(m):
                    maps[a.id] = m
        self.rep.maps.update(maps)

    def iota(self, path):
        """Coordinate inclusion C -> (g_i C)_{s(path)}."""
        v = path.source
        return self._incs[v][self._index[(v, path.arrows)]]

    def pi(self, path):
        """Coordinate projection (g_i C)_{s(path)} -> C."""
        v = path.source
        return self._projs[v][self._index[(v, path.arrows)]]


def free_rep(quiver, base, i, c, budget=10000):
    return FreeRep(quiver, base, i, c, budget)


def cofree_rep(quiver, base, i, c, budget=10000):
    return CofreeRep(quiver, base, i, c, budget)


def stalk(quiver, base, i, c):
    """s_i(C): C at vertex i, zero elsewhere."""
    objs = {} if base.is_zero_obj(c) else {i: c}
    return Representation(quiver, base, objs, {}, check=False)


# ---------------------------------------------------------------------
# units, counits, transports


def counit_psi(free, f):
    """psi^i_F: f_i(F_i) -> F sending the lambda-coordinate via F_lambda.

    `free` must be FreeRep(quiver, base, i, F_i)."""
    base = f.base
    comps = {}
    for v, paths in free.labels.items():
        if base.is_zero_obj(f.obj_at(v)):
            continue
        m = base.zero_mor(free.rep.obj_at(v), f.obj_at(v))
        for p in paths:
            m = base.add(m, base.compose(f.path_map(p), free.pi(p)))
        comps[v] = m
    return RepMorphism(free.rep, f, comps)


def unit_theta(cofree, f):
    """theta^i_F: F -> g_i(F_i) with lambda-component F_lambda."""
    base = f.base
    comps = {}
    for v, paths in cofree.labels.items():
        if base.is_zero_obj(f.obj_at(v)):
            continue
        m = base.zero_mor(f.obj_at(v), cofree.rep.obj_at(v))
        for p in paths:
            m = base.add(m, base.compose(cofree.iota(p), f.path_map(p)))
        comps[v] = m
    return RepMorphism(f, cofree.rep, comps)


def adjunction_transport(i, direction, datum, f=None, free=None, cofree=None):
    """Realize the adjunction bijections on concrete morphisms.

    direction:
      'f_to_base'   : t: f_i(C) -> F       |-> t_i . mu_eps : C -> F_i
      'f_from_base' : beta: C -> F_i       |-> f_i(C) -> F
      'g_to_base'   : t: F -> g_i(C)       |-> pi_eps . t_i : F_i -> C
      'g_from_base' : beta: F_i -> C       |-> F -> g_i(C)
    """
    if direction == "f_to_base":
        return datum.base.compose(datum.comp_at(i),
                                  free.mu(trivial_path(i)))
    if direction == "f_from_base":
        base = f.base
        comps = {}
        for v, paths in free.labels.items():
            if base.is_zero_obj(f.obj_at(v)):
                continue
            m = base.zero_mor(free.rep.obj_at(v), f.obj_at(v))
            for p in paths:
                m = base.add(m, base.compose(
                    f.path_map(p), base.compose(datum, free.pi(p))))
            comps[v] = m
        return RepMorphism(free.rep, f, comps)
    if direction == "g_to_base":
        return datum.base.compose(cofree.pi(trivial_path(i)),
                                  datum.comp_at(i))
    if direction == "g_from_base":
        base = f.base
        comps = {}
        for v, paths in cofree.labels.items():
            if base.is_zero_obj(f.obj_at(v)):
                continue
            m = base.zero_mor(f.obj_at(v), cofree.rep.obj_at(v))
            for p in paths:
                m = base.add(m, base.compose(
                    cofree.iota(p), base.compose(datum, f.path_map(p))))
            comps[v] = m
        return RepMorphism(f, cofree.rep, comps)
    raise RepError("unknown transport direction %r" % (direction,))


def path_transformation(rho, free_src, free_tgt):
    """f_rho(C): f_{t(rho)}(C) -> f_{s(rho)}(C), appending rho to labels.

    free_src = FreeRep at t(rho), free_tgt = FreeRep at s(rho); the
    component at k sends the coordinate lambda to lambda . rho.
    """
    base = free_src.base
    comps = {}
    for v, paths in free_src.labels.items():
        m = base.zero_mor(free_src.rep.obj_at(v), free_tgt.rep.obj_at(v))
        for p in paths:
            comp = Path(rho.source, p.target, rho.arrows + p.arrows)
            m = base.add(m, base.compose(free_tgt.mu(comp), free_src.pi(p)))
        comps[v] = m
    return RepMorphism(free_src.rep, free_tgt.rep, comps)


# ---------------------------------------------------------------------
# mesh maps


class MeshMap:
    """A block mesh map with its coordinate bookkeeping."""

    def __init__(self, mor, arrows, summands, incs, projs):
        self.mor = mor          # the base morphism phi_i / psi_i
        self.arrows = arrows    # arrows indexing the summands
        self.summands = summands
        self.incs = incs
        self.projs = projs


def phi_map(i, f):
    """phi_i^F: (+)_{a: * -> i} F_{s(a)} -> F_i (zero summands dropped)."""
    base = f.base
    arrows = [a for a in f.quiver.in_arrows(i)
              if not base.is_zero_obj(f.obj_at(a.src))]
    summands = [f.obj_at(a.src) for a in arrows]
    s, incs, projs = base.direct_sum(summands)
    m = base.zero_mor(s, f.obj_at(i))
    for a, pr in zip(arrows, projs):
        m = base.add(m, base.compose(f.map_at(a), pr))
    return MeshMap(m, arrows, summands, incs, projs)


def psi_map(i, f):
    """psi_i^F: F_i -> (+)_{a: i -> *} F_{t(a)} (zero factors dropped)."""
    base = f.base
    arrows = [a for a in f.quiver.out_arrows(i)
              if not base.is_zero_obj(f.obj_at(a.tgt))]
    summands = [f.obj_at(a.tgt) for a in arrows]
    s, incs, projs = base.direct_sum(summands)
    m = base.zero_mor(f.obj_at(i), s)
    for a, inc in zip(arrows, incs):
        m = base.add(m, base.compose(inc, f.map_at(a)))
    return MeshMap(m, arrows, summands, incs, projs)


def c_of(i, f):
    """c_i(F) = Coker(phi_i^F), with the projection."""
    base = f.base
    return base.cokernel(phi_map(i, f).mor)


def k_of(i, f):
    """k_i(F) = Ker(psi_i^F), with the embedding."""
    base = f.base
    return base.kernel(psi_map(i, f).mor)


# ---------------------------------------------------------------------
# derived adjoints


class DerivedAdjoint:
    def __init__(self, obj, mor, coords):
        self.obj = obj       # the base object r_z(F) / l_z(F)
        self.mor = mor       # embedding into / projection from the sum
        self.coords = coords # list of (vertex, path) labeling sum coordinates


def right_adjoint_of_g(z, f, budget=10000):
    """r_z(F) with Hom(C, r_z F) = Hom(g_z C, F).

    Computed as the kernel of D: (+)_{(k, lam in Q(k,z))} F_k ->
    (+)_{(a: k->l, lam in Q(k,z))} F_l where D sends the (k, lam) block by
    F_a into row (a, lam), minus the identity from block (l, lam') when
    lam = lam' . a.
    """
    base = f.base
    cone = left_cone(f.quiver, z, budget)
    if cone.value == INFINITE or cone.value is None:
        raise InfiniteConeError("left cone of %r not certified finite" % (z,))
    dom_coords = []
    for v in sorted(cone.value, key=str):
        if base.is_zero_obj(f.obj_at(v)):
            continue
        for p in cone.value[v]:
            dom_coords.append((v, p))
    dom, dincs, dprojs = base.direct_sum([f.obj_at(v) for v, _ in dom_coords])
    didx = {(v, p.arrows): n for n, (v, p) in enumerate(dom_coords)}
    # constraint rows range over every cone coordinate, including vertices
    # where F vanishes (they still force identifications downstream)
    row_coords = []
    for v in sorted(cone.value, key=str):
        for p in cone.value[v]:
            for a in f.quiver.out_arrows(v):
                if base.is_zero_obj(f.obj_at(a.tgt)):
                    continue
                row_coords.append((a, v, p))
    cod, cincs, _ = base.direct_sum([f.obj_at(a.tgt) for (a, _, _) in row_coords])
    d_mor = base.zero_mor(dom, cod)
    for n, (a, v, p) in enumerate(row_coords):
        j0 = didx.get((v, p.arrows))
        if j0 is not None:
            term = base.compose(cincs[n], base.compose(f.map_at(a), dprojs[j0]))
            d_mor = base.add(d_mor, term)
        # lam factors as lam' . a exactly when its first arrow is a
        if p.arrows and p.arrows[0] == a.id:
            j = didx.get((a.tgt, p.arrows[1:]))
            if j is not None:
                term = base.compose(cincs[n], dprojs[j])
                d_mor = base.add(d_mor, base.neg(term))
    ker, emb = base.kernel(d_mor)
    return DerivedAdjoint(ker, emb, dom_coords)


def left_adjoint_of_f(z, f, budget=10000):
    """l_z(F) with Hom(l_z F, C) = Hom(F, f_z C).

    Computed as the cokernel of D': (+)_{(a: k->l, d in Q(z,l))} F_k ->
    (+)_{(k, g in Q(z,k))} F_k, whose (a, d) column is the inclusion into
    block (l, d) composed with F_a, minus the inclusion into block (k, g)
    when d = a . g.
    """
    base = f.base
    cone = right_cone(f.quiver, z, budget)
    if cone.value == INFINITE or cone.value is None:
        raise InfiniteConeError("right cone of %r not certified finite" % (z,))
    cod_coords = []
    for v in sorted(cone.value, key=str):
        if base.is_zero_obj(f.obj_at(v)):
            continue
        for p in cone.value[v]:
            cod_coords.append((v, p))
    cod, cincs, _ = base.direct_sum([f.obj_at(v) for v, _ in cod_coords])
    cidx = {(v, p.arrows): n for n, (v, p) in enumerate(cod_coords)}
    # relation columns range over every cone coordinate, including vertices
    # where F vanishes (they still kill coordinates upstream)
    col_coords = []
    for v in sorted(cone.value, key=str):
        for p in cone.value[v]:
            for a in f.quiver.in_arrows(v):
                if base.is_zero_obj(f.obj_at(a.src)):
                    continue
                col_coords.append((a, v, p))
    dom, _, dprojs = base.direct_sum([f.obj_at(a.src) for (a, _, _) in col_coords])
    d_mor = base.zero_mor(dom, cod)
    for n, (a, v, p) in enumerate(col_coords):
        j0 = cidx.get((v, p.arrows))
        if j0 is not None:
            term = base.compose(cincs[j0], base.compose(f.map_at(a), dprojs[n]))
            d_mor = base.add(d_mor, term)
        # d factors as a . g exactly when its last arrow is a
        if p.arrows and p.arrows[-1] == a.id:
            j = cidx.get((a.src, p.arrows[:-1]))
            if j is not None:
                term = base.compose(cincs[j], dprojs[n])
                d_mor = base.add(d_mor, base.neg(term))
    cok, proj = base.cokernel(d_mor)
    return DerivedAdjoint(cok, proj, cod_coords)
