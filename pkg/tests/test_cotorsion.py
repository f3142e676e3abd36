import random

import pytest

from quiverrep.basecat import AbObj, FgAbBase, VObj, VectBase
from quiverrep.quiver import template
from quiverrep.repcat import rand_rep, rep_from_json, total_dim
from quiverrep.functors import cofree_rep, free_rep
from quiverrep.homology import ext_rep
from quiverrep.cotorsion import (CotorsionError, GroundPair, orthogonality,
                                 phi_membership, psi_membership,
                                 relative_support_check,
                                 special_phi_precover,
                                 special_psi_preenvelope,
                                 verify_pair_identities)

F5 = VectBase(5)
A2 = template("A_2")
A3 = template("A_3")


def stalk_rep(quiver, base, v, obj):
    return rep_from_json(quiver, base,
                         {"support": {str(v): base.obj_to_json(obj)},
                          "arrows": {}})


# ---------------------------------------------------------------------
# membership: frozen examples


def test_free_rep_is_phi_member():
    ground = GroundPair.proj_all(F5)
    fr = free_rep(A2, F5, 1, VObj(2))
    member, report = phi_membership(fr.rep, ground)
    assert member is True


def test_source_stalk_not_phi_member():
    ground = GroundPair.proj_all(F5)
    s1 = stalk_rep(A2, F5, 1, VObj(1))
    member, report = phi_membership(s1, ground)
    assert member is False
    assert report["vertices"]["1"]


def test_sink_stalk_is_phi_member():
    ground = GroundPair.proj_all(F5)
    s2 = stalk_rep(A2, F5, 2, VObj(1))
    member, _ = phi_membership(s2, ground)
    assert member is True


def test_sink_stalk_not_psi_member():
    # psi_2 of s_2 is k -> 0, not mono: the co-presentation of s_2
    # does not split, matching Ext^1(s_1, s_2) != 0
    ground = GroundPair.all_inj(F5)
    s2 = stalk_rep(A2, F5, 2, VObj(1))
    member, _ = psi_membership(s2, ground)
    assert member is False
    assert not ext_rep(stalk_rep(A2, F5, 1, VObj(1)), s2, 1).is_trivial()


def test_source_stalk_is_psi_member():
    ground = GroundPair.all_inj(F5)
    s1 = stalk_rep(A2, F5, 1, VObj(1))
    member, _ = psi_membership(s1, ground)
    assert member is True


def test_cofree_rep_is_psi_member():
    ground = GroundPair.all_inj(F5)
    gr = cofree_rep(A3, F5, 3, VObj(2))
    member, _ = psi_membership(gr.rep, ground)
    assert member is True


def test_all_inj_requires_field_base():
    with pytest.raises(CotorsionError):
        GroundPair.all_inj(FgAbBase())


# ---------------------------------------------------------------------
# membership vs Ext vanishing (the defining property)


def test_phi_iff_ext_vanishing_on_samples():
    ground = GroundPair.proj_all(F5)
    rng = random.Random(0)
    for _ in range(20):
        f = rand_rep(A3, F5, rng, max_dim=2)
        member, _ = phi_membership(f, ground)
        ext_ok = all(
            ext_rep(f, stalk_rep(A3, F5, i, b), 1).is_trivial()
            for i in A3.vertices() for b in ground.b_family)
        assert member == ext_ok


def test_psi_iff_ext_vanishing_on_samples():
    ground = GroundPair.all_inj(F5)
    rng = random.Random(1)
    for _ in range(20):
        f = rand_rep(A3, F5, rng, max_dim=2)
        member, _ = psi_membership(f, ground)
        ext_ok = all(
            ext_rep(stalk_rep(A3, F5, i, a), f, 1).is_trivial()
            for i in A3.vertices() for a in ground.a_family)
        assert member == ext_ok


# ---------------------------------------------------------------------
# orthogonality tables


def test_orthogonality_matrix_stalks_a2():
    s1 = stalk_rep(A2, F5, 1, VObj(1))
    s2 = stalk_rep(A2, F5, 2, VObj(1))
    table = orthogonality([s1, s2], [s1, s2], 1)
    assert table[0][1]["dim"] == 1   # Ext^1(s1, s2)
    assert table[1][0]["dim"] == 0
    assert table[0][0]["dim"] == 0
    assert table[1][1]["dim"] == 0


# ---------------------------------------------------------------------
# special approximations


def test_special_phi_precover_certified():
    rng = random.Random(2)
    for _ in range(8):
        f = rand_rep(A3, F5, rng, max_dim=2)
        ap = special_phi_precover(f)
        assert ap.form == "precover"
        assert ap.certificates["A_side"]["member"] is True


def test_special_psi_preenvelope_certified():
    rng = random.Random(3)
    for _ in range(8):
        f = rand_rep(A3, F5, rng, max_dim=2)
        ap = special_psi_preenvelope(f)
        assert ap.form == "preenvelope"
        assert ap.certificates["B_side"]["member"] is True


# ---------------------------------------------------------------------
# identity verification


def test_verify_pair_identities_fgab_proj_all():
    ground = GroundPair.proj_all(FgAbBase())
    rep = verify_pair_identities(A3, ground,
                                 {"samples": 25, "max_dim": 2}, 0)
    assert rep["violations"] == []
    assert rep["negative_control_detected"] is True
    assert rep["samples"] == 25


def test_verify_pair_identities_field_all_inj():
    ground = GroundPair.all_inj(F5)
    rep = verify_pair_identities(A2, ground,
                                 {"samples": 25, "max_dim": 2}, 0)
    assert rep["violations"] == []
    assert rep["negative_control_detected"] is True


def test_verify_pair_identities_deterministic():
    ground = GroundPair.proj_all(F5)
    a = verify_pair_identities(A2, ground, {"samples": 10, "max_dim": 2}, 5)
    b = verify_pair_identities(A2, ground, {"samples": 10, "max_dim": 2}, 5)
    assert a == b


# ---------------------------------------------------------------------
# relative (finite-support) behavior on an infinite quiver


def test_relative_support_check_zigzag():
    q = template("A_inf_zigzag")
    rep = relative_support_check(q, F5, {"samples": 10, "max_dim": 2}, 0)
    assert rep["all_in_rep_f"] is True


def test_relative_support_check_requires_shape_declaration():
    from quiverrep.quiver import QuiverError
    q = template("loop")
    with pytest.raises(QuiverError):
        relative_support_check(q, F5, {"samples": 3, "max_dim": 2}, 0)
