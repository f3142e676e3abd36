import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from quiverrep.basecat import (AbObj, BaseCatError, FgAbBase, NestedBase,
                               VObj, VectBase, base_from_json)
from quiverrep.quiver import template


# ---------------------------------------------------------------------
# fields


def test_field_scalars():
    assert VectBase().scalar() == "q"
    assert VectBase(5).scalar() == "fp"
    assert VectBase(5).p == 5
    with pytest.raises(BaseCatError):
        VectBase(4)


def test_field_kernel_cokernel():
    b = VectBase(5)
    m = b.mor(VObj(2), VObj(1), [[1, 2]])
    kobj, kmor = b.kernel(m)
    assert kobj.dim == 1
    assert b.is_zero_mor(b.compose(m, kmor))
    cobj, cmor = b.cokernel(m)
    assert cobj.dim == 0


def test_field_hom_module_dim():
    b = VectBase()
    h = b.hom_module(VObj(2), VObj(3))
    assert h.summary() == {"kind": "vector-space", "dim": 6}


def test_field_factorizations():
    b = VectBase(5)
    # f factors through the mono emb: f = emb . u
    emb = b.mor(VObj(1), VObj(2), [[1], [0]])
    f = b.mor(VObj(1), VObj(2), [[3], [0]])
    u = b.factor_mono(emb, f)
    assert u is not None and b.mor_eq(b.compose(emb, u), f)
    g = b.mor(VObj(1), VObj(2), [[0], [1]])
    assert b.factor_mono(emb, g) is None


def test_field_projectivity_trivial():
    b = VectBase(2)
    assert b.is_projective(VObj(3))
    assert b.pd(VObj(3)) == 0
    assert b.ext_is_trivial(b.ext(VObj(2), VObj(2), 1))


# ---------------------------------------------------------------------
# finitely generated abelian groups


def test_fgab_snf_oracle():
    b = FgAbBase()
    # SNF of [[2,4],[6,8]]: determinant -8, gcd 2 -> invariants (2, 4)
    _, d, _ = b.snf([[2, 4], [6, 8]])
    assert [d[i][i] for i in range(2)] == [2, 4]


def test_fgab_snf_random_matches_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form
    rng = random.Random(11)
    b = FgAbBase()
    for _ in range(25):
        r = rng.randrange(1, 4)
        c = rng.randrange(1, 4)
        rows = [[rng.randrange(-6, 7) for _ in range(c)] for _ in range(r)]
        _, dm, _ = b.snf([row[:] for row in rows])
        got = [abs(dm[i][i]) for i in range(min(r, c))]
        ref = smith_normal_form(sympy.Matrix(rows))
        want = [abs(ref[i, i]) for i in range(min(r, c))]
        assert got == want


def test_fgab_kernel_of_integer_row():
    b = FgAbBase()
    m = b.mor(AbObj((0, 0)), AbObj((0,)), [[2, 3]])
    kobj, kmor = b.kernel(m)
    assert kobj == AbObj((0,))
    assert b.is_zero_mor(b.compose(m, kmor))
    assert b.is_mono(kmor)


def test_fgab_cokernel_torsion():
    b = FgAbBase()
    m = b.mor(AbObj((0,)), AbObj((0,)), [[6]])
    cobj, cmor = b.cokernel(m)
    assert cobj == AbObj((6,))
    assert b.is_epi(cmor)
    assert b.is_zero_mor(b.compose(cmor, m))


def test_fgab_hom_modules():
    b = FgAbBase()
    assert b.hom_module(AbObj((2,)), AbObj((2,))).summary()["orders"] == [2]
    assert b.hom_module(AbObj((2,)), AbObj((0,))).summary()["orders"] == []
    assert b.hom_module(AbObj((0,)), AbObj((4,))).summary()["orders"] == [4]
    assert sorted(b.hom_module(AbObj((4,)), AbObj((6,))).summary()["orders"]) \
        == [2]


def test_fgab_ext_values():
    b = FgAbBase()
    assert b.ext(AbObj((2,)), AbObj((2,)), 1)["orders"] == [2]
    assert b.ext(AbObj((0,)), AbObj((2,)), 1)["orders"] == []
    assert b.ext(AbObj((4,)), AbObj((6,)), 1)["orders"] == [2]
    # hereditary: Ext^2 always vanishes
    assert b.ext_is_trivial(b.ext(AbObj((4,)), AbObj((9,)), 2))


def test_fgab_pd_and_cover():
    b = FgAbBase()
    assert b.pd(AbObj((0, 0))) == 0
    assert b.pd(AbObj((2,))) == 1
    cover, epi = b.projective_cover(AbObj((0, 6)))
    assert b.is_projective(cover) and b.is_epi(epi)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(min_value=-5, max_value=5),
                         min_size=2, max_size=2), min_size=2, max_size=2))
def test_fgab_snf_preserves_determinant(rows):
    b = FgAbBase()
    _, dm, _ = b.snf([row[:] for row in rows])
    d = [abs(dm[0][0]), abs(dm[1][1])]
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    assert d[0] * d[1] == abs(det)
    if d[0] and d[1]:
        assert d[1] % d[0] == 0


# ---------------------------------------------------------------------
# direct sums (all bases)


@pytest.mark.parametrize("base,x,y", [
    (VectBase(3), VObj(2), VObj(1)),
    (FgAbBase(), AbObj((0, 2)), AbObj((3,))),
])
def test_direct_sum_identities(base, x, y):
    s, incs, projs = base.direct_sum([x, y])
    assert base.mor_eq(base.compose(projs[0], incs[0]), base.identity(x))
    assert base.mor_eq(base.compose(projs[1], incs[1]), base.identity(y))
    assert base.is_zero_mor(base.compose(projs[0], incs[1]))
    total = base.add(base.compose(incs[0], projs[0]),
                     base.compose(incs[1], projs[1]))
    assert base.mor_eq(total, base.identity(s))


# ---------------------------------------------------------------------
# nested base


def test_nested_base_rejects_rational_inner():
    with pytest.raises(BaseCatError):
        NestedBase(template("A_2"), VectBase())


def test_nested_base_hom_orders_are_p_torsion():
    b = NestedBase(template("A_2"), VectBase(5))
    x = b.rand_obj(random.Random(0), 2)
    h = b.hom_module(x, x)
    s = h.summary()
    assert all(o == 5 for o in s["orders"])


def test_nested_base_kernel_cokernel_exactness():
    b = NestedBase(template("A_2"), VectBase(3))
    rng = random.Random(4)
    for _ in range(10):
        x = b.rand_obj(rng, 2)
        y = b.rand_obj(rng, 2)
        m = b.rand_mor(rng, x, y)
        kobj, kmor = b.kernel(m)
        cobj, cmor = b.cokernel(m)
        assert b.is_zero_mor(b.compose(m, kmor))
        assert b.is_zero_mor(b.compose(cmor, m))
        assert b.is_mono(kmor) and b.is_epi(cmor)


def test_nested_pd_bound():
    b = NestedBase(template("A_2"), VectBase(5))
    rng = random.Random(9)
    for _ in range(8):
        x = b.rand_obj(rng, 2)
        assert b.pd(x) <= 1


# ---------------------------------------------------------------------
# serialization


@pytest.mark.parametrize("base,obj", [
    (VectBase(), VObj(3)),
    (VectBase(7), VObj(2)),
    (FgAbBase(), AbObj((0, 2, 4))),
])
def test_base_and_obj_json_roundtrip(base, obj):
    b2 = base_from_json(base.to_json())
    assert b2.to_json() == base.to_json()
    assert base.obj_eq(base.obj_from_json(base.obj_to_json(obj)), obj)


def test_mor_json_roundtrip():
    b = FgAbBase()
    m = b.mor(AbObj((0,)), AbObj((4,)), [[3]])
    m2 = b.mor_from_json(m.src, m.tgt, b.mor_to_json(m))
    assert b.mor_eq(m, m2)
