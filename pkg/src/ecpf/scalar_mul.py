"""Scalar point multiplication k*P.

The primary path is the Montgomery ladder: a register pair with constant
difference P, performing exactly one addition and one doubling per scalar
bit regardless of the bit's value.  A naive double-and-add walk is kept as
an independent oracle for cross-verification.  Scalars are plain unsigned
integers; they are never silently reduced modulo the group order, so k at
or beyond the order is computed faithfully (the total group law absorbs
the intermediate collisions with infinity that this produces).
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import INFINITY, AffinePoint, CurveParams, on_curve, point_add, point_double
from .errors import DomainError
from .mpint import MpInt


@dataclass
class OpCounter:
    """Counts the ladder's loop-body operations (the setup doubling excluded)."""

    adds: int = 0
    doubles: int = 0


def ladder(
    k: MpInt,
    point: AffinePoint,
    curve: CurveParams,
    *,
    counter: OpCounter | None = None,
) -> AffinePoint:
    """Montgomery-ladder scalar multiplication.

    Registers start as (P, 2P).  Scanning bits from the second-highest down
    to bit 0: a set bit folds the sum into the low register and doubles the
    high one, a clear bit does the mirror image.  The pair's difference
    stays P throughout, and the low register is the result.

    k = 0 yields O, k = 1 yields P, and P = O yields O.
    """
    if not on_curve(point, curve):
        raise DomainError("point not on curve")
    length = k.bit_length()
    if length == 0 or point.is_infinity:
        return INFINITY
    if length == 1:
        return point
    low, high = point, point_double(point, curve)
    for i in range(length - 2, -1, -1):
        if k.bit(i):
            low = point_add(low, high, curve)
            high = point_double(high, curve)
        else:
            high = point_add(high, low, curve)
            low = point_double(low, curve)
        if counter is not None:
            counter.adds += 1
            counter.doubles += 1
    return low


def double_and_add(k: MpInt, point: AffinePoint, curve: CurveParams) -> AffinePoint:
    """Verification oracle: double each step, add where the bit is set."""
    if not on_curve(point, curve):
        raise DomainError("point not on curve")
    acc = INFINITY
    for i in range(k.bit_length() - 1, -1, -1):
        acc = point_double(acc, curve)
        if k.bit(i):
            acc = point_add(acc, point, curve)
    return acc
