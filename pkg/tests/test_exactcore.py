from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihom.errors import BadScalar, MissingUnit, SingularMap
from bihom.exactcore import (
    Elem2, Elem3, Endo, LinMap, Mul, Vec, elem3_build, endo_inverse,
    comul_apply, mul_apply, render_elem2, render_vec, scalar_parse,
    scalar_render, tensor_vv,
)
from bihom import catalog

ID2 = Endo.identity(2)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=7)


# ---------------------------------------------------------------------------
# scalars


def test_scalar_parse_zero():
    assert scalar_parse("0") == Q(0)


def test_scalar_parse_reduces():
    assert scalar_parse("-3/6") == Q(-1, 2)
    assert scalar_render(scalar_parse("-3/6")) == "-1/2"


def test_scalar_parse_integer_embedding():
    assert scalar_parse("7/1") == Q(7)
    assert scalar_render(scalar_parse("7/1")) == "7"


@pytest.mark.parametrize("bad", ["", "1.5", "a", "1/0", "0/0", "1/-2", "--2", "1/2/3"])
def test_scalar_parse_rejects(bad):
    with pytest.raises(BadScalar):
        scalar_parse(bad)


@given(rationals)
def test_scalar_render_roundtrip(x):
    assert scalar_parse(scalar_render(x)) == x


@given(rationals, rationals)
def test_scalar_arithmetic_stays_reduced(x, y):
    import math
    z = x * y + x - y
    assert math.gcd(z.numerator, z.denominator) == 1
    assert z.denominator > 0


# ---------------------------------------------------------------------------
# endomorphisms


def test_endo_inverse_identity():
    assert endo_inverse(ID2) == ID2


def test_endo_inverse_diagonal():
    assert endo_inverse(Endo.diagonal([1, 2])) == Endo.diagonal([1, Q(1, 2)])


def test_endo_inverse_shear():
    # oracle: the exact product with the claimed inverse is the identity
    f = Endo(2, ((1, 1), (0, 1)))
    g = endo_inverse(f)
    assert g == Endo(2, ((1, -1), (0, 1)))
    assert f @ g == ID2 and g @ f == ID2


def test_endo_inverse_singular():
    with pytest.raises(SingularMap):
        endo_inverse(Endo(2, ((1, 1), (1, 1))))


# hypothesis-built invertible maps: unit diagonal plus a strict upper part
@given(rationals, rationals, rationals)
def test_endo_inverse_roundtrip_triangular(a, b, c):
    f = Endo(3, ((1, a, b), (0, 1, c), (0, 0, 1)))
    g = endo_inverse(f)
    assert f @ g == Endo.identity(3)
    assert g @ f == Endo.identity(3)


# ---------------------------------------------------------------------------
# structure tensors and contractions


def test_mul_apply_dual_numbers():
    mul = catalog.entry("dual-numbers").as_algebra().mul
    one, x = Vec.basis(2, 0), Vec.basis(2, 1)
    assert mul_apply(mul, x, x) == Vec.zero(2)
    assert mul_apply(mul, one, x) == x
    assert mul_apply(mul, Vec.zero(2), x) == Vec.zero(2)


@given(rationals, st.integers(0, 1), st.integers(0, 1), st.integers(0, 1))
def test_mul_apply_bilinear(s, i, j, k):
    mul = catalog.entry("dual-numbers").as_algebra().mul
    a, a2, b = Vec.basis(2, i), Vec.basis(2, j), Vec.basis(2, k)
    lhs = mul_apply(mul, a.scale(s) + a2, b)
    rhs = mul_apply(mul, a, b).scale(s) + mul_apply(mul, a2, b)
    assert lhs == rhs
    lhs2 = mul_apply(mul, b, a.scale(s) + a2)
    rhs2 = mul_apply(mul, b, a).scale(s) + mul_apply(mul, b, a2)
    assert lhs2 == rhs2


def test_comul_apply_trivial_left():
    comul = catalog.entry("trivial-left").as_coalgebra().comul
    x = Vec.basis(2, 1)
    assert comul_apply(comul, x) == tensor_vv(x, Vec.basis(2, 0)).scale(-1)
    assert comul_apply(comul, Vec.zero(2)) == Elem2.zero(2)


def test_comul_apply_divided_powers():
    comul = catalog.entry("trunc-poly-2").as_coalgebra().comul
    x2 = Vec.basis(3, 2)
    expected = (tensor_vv(Vec.basis(3, 0), x2)
                + tensor_vv(Vec.basis(3, 1), Vec.basis(3, 1))
                + tensor_vv(x2, Vec.basis(3, 0)))
    assert comul_apply(comul, x2) == expected


# ---------------------------------------------------------------------------
# triple tensor builders


def _unit_cube(dim=2):
    one = [[Q(0)] * dim for _ in range(dim)]
    one[0][0] = Q(1)
    return Elem2(dim, tuple(tuple(r) for r in one))


def test_elem3_build_zero_r(dual_numbers):
    zero = Elem2.zero(2)
    for kind in ("r13r12", "r12r23", "r23r13", "r13", "r12", "r23"):
        out = elem3_build(kind, dual_numbers.mul, ID2, ID2, ID2, ID2,
                          dual_numbers.unit, zero)
        assert out.is_zero()


def test_elem3_build_unit_r(dual_numbers):
    r = _unit_cube()
    expected = Elem3.zero(2)
    cube = [[[Q(0)] * 2 for _ in range(2)] for _ in range(2)]
    cube[0][0][0] = Q(1)
    expected = Elem3(2, tuple(tuple(tuple(row) for row in plane) for plane in cube))
    for kind in ("r12r23", "r13", "r13r12", "r23r13", "r12", "r23"):
        out = elem3_build(kind, dual_numbers.mul, ID2, ID2, ID2, ID2,
                          dual_numbers.unit, r)
        assert out == expected, kind


def test_elem3_build_r12_is_r_tensor_unit(dual_numbers):
    r = Elem2(2, ((Q(1, 2), Q(-2)), (Q(3), Q(0))))
    out = elem3_build("r12", dual_numbers.mul, ID2, ID2, ID2, ID2,
                      dual_numbers.unit, r)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                assert out.t[i][j][k] == r.m[i][j] * dual_numbers.unit.coeffs[k]


def test_elem3_build_needs_unit(dual_numbers):
    r = _unit_cube()
    with pytest.raises(MissingUnit):
        elem3_build("r13", dual_numbers.mul, ID2, ID2, ID2, ID2, None, r)


# ---------------------------------------------------------------------------
# the dense map kernel


@given(rationals, rationals, rationals, rationals)
def test_linmap_tensor_compose_interchange(a, b, c, d):
    f = LinMap(2, 2, ((a, b), (c, d)))
    g = LinMap(2, 2, ((d, a), (b, c)))
    h = LinMap(2, 2, ((1, 0), (1, 1)))
    k = LinMap(2, 2, ((0, 1), (1, 0)))
    assert f.tensor(g) @ h.tensor(k) == (f @ h).tensor(g @ k)


def test_render_canonical():
    v = Vec(2, (Q(1), Q(-2)))
    assert render_vec(v) == "e0 - 2*e1"
    assert render_elem2(Elem2.zero(2)) == "0"
    r = Elem2(2, ((Q(0), Q(1, 2)), (Q(-1), Q(0))))
    assert render_elem2(r) == "1/2*e0(x)e1 - e1(x)e0"
