import random

import pytest

from quiverrep.basecat import AbObj, FgAbBase, VObj, VectBase
from quiverrep.quiver import Path, template, trivial_path
from quiverrep.repcat import (compose_rep, hom_space_rep, is_epi_rep,
                              is_mono_rep, rand_rep, rep_mor_eq, total_dim)
from quiverrep.functors import (adjunction_transport, c_of, cofree_rep,
                                counit_psi, free_rep, k_of,
                                left_adjoint_of_f, path_transformation,
                                phi_map, psi_map, right_adjoint_of_g,
                                stalk, unit_theta)

F5 = VectBase(5)
A2 = template("A_2")
A3 = template("A_3")


# ---------------------------------------------------------------------
# free / cofree / stalk shapes


def test_free_rep_a3_dims():
    # f_1(k) on A_3 has one basis path into each vertex
    fr = free_rep(A3, F5, 1, VObj(1))
    assert [fr.rep.obj_at(v).dim for v in (1, 2, 3)] == [1, 1, 1]
    fr = free_rep(A3, F5, 2, VObj(1))
    assert [fr.rep.obj_at(v).dim for v in (1, 2, 3)] == [0, 1, 1]


def test_cofree_rep_a3_dims():
    gr = cofree_rep(A3, F5, 3, VObj(1))
    assert [gr.rep.obj_at(v).dim for v in (1, 2, 3)] == [1, 1, 1]
    gr = cofree_rep(A3, F5, 2, VObj(1))
    assert [gr.rep.obj_at(v).dim for v in (1, 2, 3)] == [1, 1, 0]


def test_stalk_shape():
    st = stalk(A3, F5, 2, VObj(4))
    assert [st.obj_at(v).dim for v in (1, 2, 3)] == [0, 4, 0]
    for a in A3.arrows():
        assert F5.is_zero_mor(st.map_at(a))


def test_free_rep_on_grid_counts_paths():
    q = template("grid(2,2)")
    fr = free_rep(q, F5, (1, 1), VObj(1))
    # the far corner of a 2x2 grid is reached by exactly 2 paths
    dims = sorted(fr.rep.obj_at(v).dim for v in q.vertices())
    assert dims == [1, 1, 1, 2]


# ---------------------------------------------------------------------
# adjunction dimension identities


def rand_c(rng):
    return VObj(rng.randrange(1, 3))


def test_free_adjunction_dims():
    rng = random.Random(0)
    for _ in range(10):
        f = rand_rep(A3, F5, rng, max_dim=2)
        c = rand_c(rng)
        for i in A3.vertices():
            fr = free_rep(A3, F5, i, c)
            lhs = hom_space_rep(fr.rep, f).summary()["dim"]
            rhs = c.dim * f.obj_at(i).dim
            assert lhs == rhs, (i, c)


def test_cofree_adjunction_dims():
    rng = random.Random(1)
    for _ in range(10):
        f = rand_rep(A3, F5, rng, max_dim=2)
        c = rand_c(rng)
        for i in A3.vertices():
            gr = cofree_rep(A3, F5, i, c)
            lhs = hom_space_rep(f, gr.rep).summary()["dim"]
            rhs = f.obj_at(i).dim * c.dim
            assert lhs == rhs, (i, c)


def test_stalk_adjunction_dims():
    rng = random.Random(2)
    for _ in range(10):
        f = rand_rep(A3, F5, rng, max_dim=2)
        c = rand_c(rng)
        for i in A3.vertices():
            st = stalk(A3, F5, i, c)
            cf, _ = c_of(i, f)
            kf, _ = k_of(i, f)
            assert (hom_space_rep(st, f).summary()["dim"]
                    == c.dim * kf.dim)
            assert (hom_space_rep(f, st).summary()["dim"]
                    == cf.dim * c.dim)


def test_adjunction_transport_roundtrip():
    rng = random.Random(3)
    f = rand_rep(A3, F5, rng, max_dim=2)
    c = VObj(2)
    i = 2
    fr = free_rep(A3, F5, i, c)
    # base map c -> F_i, transported to f_i(c) -> F and back
    u = F5.rand_mor(rng, c, f.obj_at(i))
    up = adjunction_transport(i, "f_from_base", u, f=f, free=fr)
    back = adjunction_transport(i, "f_to_base", up, f=f, free=fr)
    assert F5.mor_eq(back, u)


def test_cofree_transport_roundtrip():
    rng = random.Random(4)
    f = rand_rep(A3, F5, rng, max_dim=2)
    c = VObj(2)
    i = 2
    gr = cofree_rep(A3, F5, i, c)
    u = F5.rand_mor(rng, f.obj_at(i), c)
    up = adjunction_transport(i, "g_from_base", u, f=f, cofree=gr)
    back = adjunction_transport(i, "g_to_base", up, f=f, cofree=gr)
    assert F5.mor_eq(back, u)


# ---------------------------------------------------------------------
# counit / unit and naturality along arrows


def test_counit_is_epi_on_support():
    rng = random.Random(5)
    f = rand_rep(A2, F5, rng, max_dim=3)
    for i in A2.vertices():
        if F5.is_zero_obj(f.obj_at(i)):
            continue
        fr = free_rep(A2, F5, i, f.obj_at(i))
        eps = counit_psi(fr, f)
        assert F5.mor_eq(eps.comp_at(i), F5.identity(f.obj_at(i)))


def test_unit_component_is_identity():
    rng = random.Random(6)
    f = rand_rep(A2, F5, rng, max_dim=3)
    for i in A2.vertices():
        if F5.is_zero_obj(f.obj_at(i)):
            continue
        gr = cofree_rep(A2, F5, i, f.obj_at(i))
        theta = unit_theta(gr, f)
        assert F5.mor_eq(theta.comp_at(i), F5.identity(f.obj_at(i)))


def test_path_transformation_is_morphism():
    a1 = next(a for a in A3.arrows() if a.id == "a1")
    rho = Path(a1.src, a1.tgt, (a1.id,))
    fr1 = free_rep(A3, F5, 1, VObj(2))
    fr2 = free_rep(A3, F5, 2, VObj(2))
    t = path_transformation(rho, fr2, fr1)  # f_2(C) -> f_1(C)
    for a in A3.arrows():
        lhs = F5.compose(fr1.rep.map_at(a), t.comp_at(a.src))
        rhs = F5.compose(t.comp_at(a.tgt), fr2.rep.map_at(a))
        assert F5.mor_eq(lhs, rhs)
    # nonzero where both frees are supported
    assert not F5.is_zero_mor(t.comp_at(2))


# ---------------------------------------------------------------------
# mesh maps phi / psi


def test_phi_map_shapes():
    rng = random.Random(7)
    f = rand_rep(A3, F5, rng, max_dim=2)
    m = phi_map(2, f)
    assert m.mor.tgt == f.obj_at(2)
    assert sum(s.dim for s in m.summands) == m.mor.src.dim
    m = psi_map(2, f)
    assert m.mor.src == f.obj_at(2)


def test_phi_of_free_rep_is_epi_off_root():
    fr = free_rep(A3, F5, 1, VObj(1))
    # characteristic property: phi_i is an iso for i != 1 on a free rep
    for i in (2, 3):
        m = phi_map(i, fr.rep)
        assert F5.is_epi(m.mor) and F5.is_mono(m.mor)


def test_psi_of_cofree_rep_is_iso_off_root():
    gr = cofree_rep(A3, F5, 3, VObj(1))
    for i in (1, 2):
        m = psi_map(i, gr.rep)
        assert F5.is_epi(m.mor) and F5.is_mono(m.mor)


def test_c_and_k_of_stalk():
    st = stalk(A3, F5, 2, VObj(3))
    assert c_of(2, st)[0].dim == 3
    assert k_of(2, st)[0].dim == 3
    assert c_of(1, st)[0].dim == 0
    assert k_of(3, st)[0].dim == 0


# ---------------------------------------------------------------------
# derived adjoints


def test_derived_adjoints_on_a2():
    rng = random.Random(8)
    f = rand_rep(A2, F5, rng, max_dim=2)
    # right adjoint of g at vertex 2 evaluates sections over the left cone
    r = right_adjoint_of_g(2, f)
    assert r.obj.dim <= sum(f.obj_at(v).dim for v, _ in r.coords) \
        or not r.coords
    l = left_adjoint_of_f(1, f)
    assert l.obj.dim >= 0


def test_free_rep_over_fgab():
    b = FgAbBase()
    fr = free_rep(A2, b, 1, AbObj((0, 2)))
    assert fr.rep.obj_at(1) == AbObj((0, 2))
    assert fr.rep.obj_at(2) == AbObj((0, 2))
    assert b.is_mono(fr.rep.map_at("a1"))
