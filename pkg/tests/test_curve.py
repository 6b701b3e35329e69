import pytest

from ecpf.curve import (
    INFINITY,
    AffinePoint,
    CurveParams,
    format_point,
    negate,
    on_curve,
    parse_point,
    point_add,
    point_double,
)
from ecpf.errors import ContextError, DomainError, ParseError, ValidationError
from ecpf.field import Modulus
from ecpf.mpint import MpInt
from helpers import as_xy, enumerate_points, mk_point, oracle_add


@pytest.fixture(scope="module")
def smoke17_points(smoke17):
    return [mk_point(smoke17, xy) for xy in enumerate_points(17, 2, 2)]


def test_on_curve_examples(smoke17):
    assert on_curve(mk_point(smoke17, (5, 1)), smoke17)
    assert on_curve(INFINITY, smoke17)
    assert not on_curve(mk_point(smoke17, (5, 2)), smoke17)


def test_membership_matches_enumeration(smoke17):
    expected = set(enumerate_points(17, 2, 2)[1:])
    for x in range(17):
        for y in range(17):
            point = mk_point(smoke17, (x, y))
            assert on_curve(point, smoke17) == ((x, y) in expected)


def test_negate_examples(smoke17):
    assert as_xy(negate(mk_point(smoke17, (5, 1)))) == (5, 16)
    assert negate(INFINITY).is_infinity


def test_negate_is_involution(smoke17, smoke17_points):
    for point in smoke17_points:
        assert negate(negate(point)) == point


def test_point_add_examples(smoke17):
    p = mk_point(smoke17, (5, 1))
    q = mk_point(smoke17, (6, 3))
    assert as_xy(point_add(p, q, smoke17)) == (10, 6)
    assert point_add(p, INFINITY, smoke17) == p
    assert point_add(INFINITY, p, smoke17) == p
    assert point_add(p, mk_point(smoke17, (5, 16)), smoke17).is_infinity


def test_point_double_examples(smoke17):
    assert as_xy(point_double(mk_point(smoke17, (5, 1)), smoke17)) == (6, 3)
    assert point_double(INFINITY, smoke17).is_infinity


def test_double_with_zero_ordinate():
    # (0,0) sits on y^2 = x^3 + 4x over GF(5); its tangent is vertical
    tiny = CurveParams.from_ints("tiny5", 5, 4, 0, 0, 0, 2, 4)
    assert point_double(tiny.g, tiny).is_infinity
    assert point_add(tiny.g, tiny.g, tiny).is_infinity


def test_add_agrees_with_double(smoke17, smoke17_points):
    for point in smoke17_points:
        assert point_add(point, point, smoke17) == point_double(point, smoke17)


def test_closure_and_oracle_agreement(smoke17, smoke17_points):
    for p in smoke17_points:
        for q in smoke17_points:
            total = point_add(p, q, smoke17)
            assert on_curve(total, smoke17)
            assert as_xy(total) == oracle_add(as_xy(p), as_xy(q), 17, 2)


def test_identity_and_inverse(smoke17, smoke17_points):
    for point in smoke17_points:
        assert point_add(point, INFINITY, smoke17) == point
        assert point_add(point, negate(point), smoke17).is_infinity


def test_validate_flag_rejects_off_curve(smoke17):
    bad = mk_point(smoke17, (5, 2))
    good = mk_point(smoke17, (5, 1))
    with pytest.raises(DomainError):
        point_add(bad, good, smoke17, validate=True)
    with pytest.raises(DomainError):
        point_add(good, bad, smoke17, validate=True)
    with pytest.raises(DomainError):
        point_double(bad, smoke17, validate=True)
    point_add(good, good, smoke17, validate=True)


def test_affine_point_needs_both_coordinates(smoke17):
    x = smoke17.modulus.element(5)
    with pytest.raises(ValidationError):
        AffinePoint(x, None)
    with pytest.raises(ValidationError):
        AffinePoint(None, x)


def test_affine_point_context_consistency():
    with pytest.raises(ContextError):
        AffinePoint(Modulus.from_int(17).element(5), Modulus.from_int(19).element(1))


def test_curve_params_validation():
    with pytest.raises(ValidationError, match="singular"):
        CurveParams.from_ints("bad", 17, 0, 0, 5, 1, 19, 1)
    with pytest.raises(ValidationError, match="G not on curve"):
        CurveParams.from_ints("bad", 17, 2, 2, 5, 2, 19, 1)
    with pytest.raises(ValidationError, match="n"):
        CurveParams.from_ints("bad", 17, 2, 2, 5, 1, 1, 1)


def test_curve_params_rejects_infinite_base():
    m = Modulus.from_int(17)
    with pytest.raises(ValidationError, match="finite"):
        CurveParams(
            name="bad",
            modulus=m,
            a=m.element(2),
            b=m.element(2),
            g=INFINITY,
            n=MpInt(19, m.capacity),
            h=MpInt(1, m.capacity),
        )


def test_curve_params_rejects_foreign_coefficients():
    m = Modulus.from_int(17)
    other = Modulus.from_int(19)
    with pytest.raises(ContextError):
        CurveParams(
            name="bad",
            modulus=m,
            a=other.element(2),
            b=m.element(2),
            g=AffinePoint(m.element(5), m.element(1)),
            n=MpInt(19, m.capacity),
            h=MpInt(1, m.capacity),
        )


def test_format_point(smoke17, p192):
    assert format_point(INFINITY, smoke17) == "infinity"
    assert format_point(mk_point(smoke17, (5, 1)), smoke17) == "05,01"
    assert format_point(p192.g, p192) == (
        "188da80eb03090f67cbf20eb43a18800f4ff0afd82ff1012,"
        "07192b95ffc8da78631011ed6b24cdd573f977a11e794811"
    )


def test_parse_format_roundtrip(smoke17, smoke17_points):
    for point in smoke17_points:
        assert parse_point(format_point(point, smoke17), smoke17) == point


def test_parse_point_errors(smoke17):
    with pytest.raises(ParseError):
        parse_point("05", smoke17)
    with pytest.raises(ParseError):
        parse_point("05,01,02", smoke17)
    with pytest.raises(ParseError):
        parse_point("zz,01", smoke17)
    with pytest.raises(ValidationError):
        parse_point("12,01", smoke17)  # 0x12 = 18 >= 17
