"""Affine group law on short-Weierstrass curves y**2 = x**3 + a*x + b over GF(p).

The point at infinity is a first-class value, so addition and doubling are
total: every exceptional coordinate collision (equal points, inverse points,
identity operands, vertical tangents) is dispatched rather than treated as a
failure.  On-curve validation is available at API boundaries via the
``validate`` flag; interior callers such as the scalar-multiplication loop
rely on closure and skip it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextError, DomainError, ParseError, ValidationError
from .field import FieldElement, Modulus
from .mpint import MpInt


@dataclass(frozen=True, slots=True)
class AffinePoint:
    """Either the point at infinity (no coordinates) or a finite pair (x, y)."""

    x: FieldElement | None = None
    y: FieldElement | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValidationError("a finite point needs both coordinates")
        if self.x is not None and self.x.modulus != self.y.modulus:
            raise ContextError("point coordinates from different modulus contexts")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        if self.is_infinity:
            return "AffinePoint(infinity)"
        return f"AffinePoint({self.x.value.value}, {self.y.value.value})"


#: The group identity.
INFINITY = AffinePoint()


@dataclass(frozen=True)
class CurveParams:
    """A validated short-Weierstrass curve with base point and group order."""

    name: str
    modulus: Modulus
    a: FieldElement
    b: FieldElement
    g: AffinePoint
    n: MpInt
    h: MpInt

    def __post_init__(self):
        for coeff in (self.a, self.b):
            if coeff.modulus != self.modulus:
                raise ContextError("curve coefficients from a different modulus")
        m = self.modulus
        discriminant_part = (
            m.element(4) * self.a * self.a * self.a
            + m.element(27) * self.b * self.b
        )
        if discriminant_part.is_zero:
            raise ValidationError("curve is singular")
        if self.n.value < 2:
            raise ValidationError("base point order n must be at least 2")
        if self.g.is_infinity:
            raise ValidationError("G must be a finite point")
        if not on_curve(self.g, self):
            raise ValidationError("G not on curve")

    @classmethod
    def from_ints(cls, name, p, a, b, gx, gy, n, h) -> "CurveParams":
        """Build and validate a curve from plain integer parameters."""
        m = Modulus.from_int(p)
        return cls(
            name=name,
            modulus=m,
            a=m.element(a),
            b=m.element(b),
            g=AffinePoint(m.element(gx), m.element(gy)),
            n=MpInt(n, m.capacity),
            h=MpInt(h, m.capacity),
        )


def on_curve(point: AffinePoint, curve: CurveParams) -> bool:
    """Membership by substitution into the curve equation; O always belongs."""
    if point.is_infinity:
        return True
    x, y = point.x, point.y
    return y * y == (x * x + curve.a) * x + curve.b


def negate(point: AffinePoint) -> AffinePoint:
    """The additive inverse: O maps to O, (x, y) to (x, -y)."""
    if point.is_infinity:
        return point
    return AffinePoint(point.x, -point.y)


def point_add(
    p1: AffinePoint, p2: AffinePoint, curve: CurveParams, *, validate: bool = False
) -> AffinePoint:
    """Total point addition.

    Dispatch order: identity operands first, then the vertical chord
    (x1 = x2 with y1 = -y2, which also covers a shared zero ordinate),
    then equal points via the tangent law, and finally the generic chord
    s = (y2 - y1)/(x2 - x1) with x3 = s**2 - x1 - x2 and
    y3 = s*(x1 - x3) - y1.
    """
    if validate:
        _require_on_curve(p1, curve)
        _require_on_curve(p2, curve)
    if p1.is_infinity:
        return p2
    if p2.is_infinity:
        return p1
    if p1.x == p2.x:
        if p1.y == -p2.y:
            return INFINITY
        return point_double(p1, curve)
    s = (p2.y - p1.y) * (p2.x - p1.x).inverse()
    x3 = s * s - p1.x - p2.x
    y3 = s * (p1.x - x3) - p1.y
    return AffinePoint(x3, y3)


def point_double(
    point: AffinePoint, curve: CurveParams, *, validate: bool = False
) -> AffinePoint:
    """Total point doubling.

    O doubles to O, and a point with zero ordinate has a vertical tangent,
    so it doubles to O as well.  Otherwise the tangent law applies:
    s = (3*x**2 + a)/(2*y), x3 = s**2 - 2*x, y3 = s*(x - x3) - y.
    """
    if validate:
        _require_on_curve(point, curve)
    if point.is_infinity:
        return point
    x, y = point.x, point.y
    if y.is_zero:
        return INFINITY
    xx = x * x
    s = (xx + xx + xx + curve.a) * (y + y).inverse()
    x3 = s * s - x - x
    y3 = s * (x - x3) - y
    return AffinePoint(x3, y3)


def _require_on_curve(point: AffinePoint, curve: CurveParams) -> None:
    if not on_curve(point, curve):
        raise DomainError("point not on curve")


def format_point(point: AffinePoint, curve: CurveParams) -> str:
    """Serialize as "x,y" at the curve's fixed hex width, or "infinity"."""
    if point.is_infinity:
        return "infinity"
    width = curve.modulus.hex_width
    return f"{point.x.value.to_hex(width)},{point.y.value.to_hex(width)}"


def parse_point(text: str, curve: CurveParams) -> AffinePoint:
    """Inverse of :func:`format_point`; coordinates must be canonical residues."""
    if text == "infinity":
        return INFINITY
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"point must be 'x,y' or 'infinity', got {text!r}")
    m = curve.modulus
    coords = []
    for part in parts:
        value = MpInt.from_hex(part, m.capacity)
        if value >= m.p:
            raise ValidationError(f"coordinate {part} is not a canonical residue")
        coords.append(FieldElement(value, m))
    return AffinePoint(coords[0], coords[1])
