"""Arithmetic in the prime field GF(p).

A ``Modulus`` is a read-only context carrying the prime and its cached bit
length; a ``FieldElement`` is a canonical residue in ``[0, p)`` bound to its
context.  Mixing elements from different contexts is a hard error, never a
silent re-reduction.  Inversion uses the extended Euclidean algorithm; the
reduction after products is generic division, with a structure-specific
fast path for the 192-bit NIST prime available separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContextError, NoInverseError, RangeError
from .mpint import MpInt, capacity_for_bits

#: The NIST 192-bit prime, 2**192 - 2**64 - 1.
P192 = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFFFFFFFFFFFF

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Modulus:
    """A prime modulus context, shareable and immutable."""

    p: MpInt
    bits: int = field(init=False)

    def __post_init__(self):
        if self.p.value < 2:
            raise RangeError(f"modulus must be at least 2, got {self.p.value}")
        object.__setattr__(self, "bits", self.p.bit_length())

    @classmethod
    def from_int(cls, p: int) -> "Modulus":
        return cls(MpInt(p, capacity_for_bits(p.bit_length())))

    @property
    def capacity(self) -> int:
        """Capacity of element values: room for one double-width product."""
        return capacity_for_bits(self.bits)

    @property
    def hex_width(self) -> int:
        """Fixed hex-digit width of serialized elements."""
        return -(-self.bits // 4)

    def reduce(self, x: MpInt) -> "FieldElement":
        """Map any in-capacity integer to its canonical residue."""
        return FieldElement(MpInt(x.value % self.p.value, self.capacity), self)

    def element(self, value: int | MpInt) -> "FieldElement":
        """Convenience constructor accepting plain integers."""
        if isinstance(value, MpInt):
            value = value.value
        return FieldElement(MpInt(value % self.p.value, self.capacity), self)


class FieldElement:
    """A canonical residue in [0, p) attached to its modulus context.

    Instances are immutable.  The arithmetic operators implement the field
    operations: +, -, * reduce modulo p; unary - is the additive inverse;
    ``inverse`` the multiplicative one.  Sums are normalized by a single
    conditional subtraction of p, differences by a conditional addition of
    p before subtracting, products by a double-width multiply followed by
    reduction.
    """

    __slots__ = ("_value", "_modulus")

    def __init__(self, value: MpInt, modulus: Modulus):
        if value.value >= modulus.p.value:
            raise RangeError(
                f"residue {value.value} not canonical below {modulus.p.value}"
            )
        self._value = value
        self._modulus = modulus

    @property
    def value(self) -> MpInt:
        return self._value

    @property
    def modulus(self) -> Modulus:
        return self._modulus

    @property
    def is_zero(self) -> bool:
        return self._value.value == 0

    def _require_same(self, other: "FieldElement") -> None:
        if self._modulus is not other._modulus and self._modulus != other._modulus:
            raise ContextError("operands belong to different modulus contexts")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._require_same(other)
        m = self._modulus
        total = self._value.value + other._value.value
        p = m.p.value
        if total >= p:
            total -= p
        return FieldElement(MpInt(total, m.capacity), m)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._require_same(other)
        m = self._modulus
        minuend = self._value.value
        if minuend < other._value.value:
            minuend += m.p.value
        return FieldElement(MpInt(minuend - other._value.value, m.capacity), m)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._require_same(other)
        m = self._modulus
        product = self._value.value * other._value.value
        return FieldElement(MpInt(product % m.p.value, m.capacity), m)

    def __neg__(self) -> "FieldElement":
        if self.is_zero:
            return self
        m = self._modulus
        return FieldElement(MpInt(m.p.value - self._value.value, m.capacity), m)

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero:
            raise NoInverseError("zero has no multiplicative inverse")
        m = self._modulus
        try:
            inv = pow(self._value.value, -1, m.p.value)
        except ValueError:
            raise NoInverseError(
                f"{self._value.value} shares a factor with the modulus"
            ) from None
        return FieldElement(MpInt(inv, m.capacity), m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._value.value == other._value.value and (
            self._modulus is other._modulus or self._modulus == other._modulus
        )

    def __hash__(self) -> int:
        return hash((self._value.value, self._modulus.p.value))

    def __repr__(self) -> str:
        return f"FieldElement({self._value.value} mod {self._modulus.p.value})"


def reduce_p192(value: int) -> int:
    """Fast reduction modulo the NIST 192-bit prime.

    Exploits 2**192 = 2**64 + 1 (mod p): the six 64-bit words of a
    double-width value fold into four 192-bit summands, after which a few
    conditional subtractions restore the canonical range.  Observably
    identical to generic division for all inputs below 2**384.
    """
    if not 0 <= value < 1 << 384:
        raise RangeError("fast reduction expects a value below 2**384")
    c0 = value & _MASK64
    c1 = (value >> 64) & _MASK64
    c2 = (value >> 128) & _MASK64
    c3 = (value >> 192) & _MASK64
    c4 = (value >> 256) & _MASK64
    c5 = value >> 320
    total = (
        (c2 << 128 | c1 << 64 | c0)
        + (c3 << 64 | c3)
        + (c4 << 128 | c4 << 64)
        + (c5 << 128 | c5 << 64 | c5)
    )
    while total >= P192:
        total -= P192
    return total
