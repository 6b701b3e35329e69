"""Fixed-capacity unsigned multiprecision integers.

Values are immutable and bounded by a capacity chosen so that the full
double-width product of two field-sized operands still fits (for a b-bit
field: 2*b bits plus one limb of headroom).  Arithmetic that would exceed
the capacity raises instead of wrapping; unsigned subtraction below zero
raises instead of wrapping.  CPython's built-in integer supplies the limb
arithmetic; the ``limbs`` view decomposes a value into 64-bit words.
"""

from __future__ import annotations

from string import hexdigits

from .errors import ParseError, RangeError, UnderflowError

LIMB_BITS = 64

#: Headroom for a 192-bit field: 2 * 192 + one limb.
DEFAULT_CAPACITY = 2 * 192 + LIMB_BITS


def capacity_for_bits(bits: int) -> int:
    """Capacity able to hold a double-width product of ``bits``-bit values."""
    return 2 * bits + LIMB_BITS


class MpInt:
    """An unsigned integer below ``2**capacity``, in canonical form."""

    __slots__ = ("_value", "_capacity")

    def __init__(self, value: int, capacity: int = DEFAULT_CAPACITY):
        if capacity < 1:
            raise RangeError(f"capacity must be positive, got {capacity}")
        if value < 0:
            raise RangeError(f"negative value {value} for unsigned integer")
        if value.bit_length() > capacity:
            raise RangeError(
                f"value of {value.bit_length()} bits exceeds capacity {capacity}"
            )
        self._value = value
        self._capacity = capacity

    @classmethod
    def from_hex(cls, text: str, capacity: int = DEFAULT_CAPACITY) -> "MpInt":
        """Parse big-endian hex (case-insensitive, no prefix or separators)."""
        if not text:
            raise ParseError("empty hex string")
        for ch in text:
            if ch not in hexdigits:
                raise ParseError(f"invalid hex character {ch!r}")
        return cls(int(text, 16), capacity)

    @property
    def value(self) -> int:
        return self._value

    @property
    def capacity(self) -> int:
        return self._capacity

    @property
    def limbs(self) -> tuple[int, ...]:
        """Little-endian 64-bit words; words above the value are zero."""
        count = -(-self._capacity // LIMB_BITS)
        mask = (1 << LIMB_BITS) - 1
        return tuple((self._value >> (LIMB_BITS * i)) & mask for i in range(count))

    def to_hex(self, width: int) -> str:
        """Lowercase big-endian hex, left-padded with zeros to ``width`` digits."""
        digits = max(1, -(-self._value.bit_length() // 4))
        if width < digits:
            raise RangeError(f"width {width} below {digits} significant digits")
        return format(self._value, f"0{width}x")

    def bit_length(self) -> int:
        """Index of the highest set bit plus one; 0 for the value 0."""
        return self._value.bit_length()

    def bit(self, i: int) -> int:
        """The i-th binary digit, bit 0 being least significant."""
        if not 0 <= i < self._capacity:
            raise RangeError(f"bit index {i} outside capacity {self._capacity}")
        return (self._value >> i) & 1

    def compare(self, other: "MpInt") -> int:
        """-1, 0, or 1 as self is less than, equal to, or greater than other."""
        if self._value < other._value:
            return -1
        if self._value > other._value:
            return 1
        return 0

    def __add__(self, other: "MpInt") -> "MpInt":
        if not isinstance(other, MpInt):
            return NotImplemented
        return MpInt(self._value + other._value, max(self._capacity, other._capacity))

    def __sub__(self, other: "MpInt") -> "MpInt":
        if not isinstance(other, MpInt):
            return NotImplemented
        if self._value < other._value:
            raise UnderflowError("unsigned subtraction underflow")
        return MpInt(self._value - other._value, max(self._capacity, other._capacity))

    def __mul__(self, other: "MpInt") -> "MpInt":
        if not isinstance(other, MpInt):
            return NotImplemented
        return MpInt(self._value * other._value, max(self._capacity, other._capacity))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MpInt):
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __lt__(self, other: "MpInt") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "MpInt") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "MpInt") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "MpInt") -> bool:
        return self.compare(other) >= 0

    def __int__(self) -> int:
        return self._value

    def __bool__(self) -> bool:
        return self._value != 0

    def __repr__(self) -> str:
        return f"MpInt(0x{self._value:x}, capacity={self._capacity})"
