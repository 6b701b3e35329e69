"""Private-scalar generation and public-key derivation Q = d*G.

Random mode draws from the operating system's cryptographic source with
rejection sampling, giving a uniform private scalar in [1, n-1].
Deterministic mode maps a caller-supplied seed through (seed mod (n-1)) + 1;
it exists for reproducible tests only, is not uniform, and must never be
used for production keys.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass

from .curve import AffinePoint, CurveParams, on_curve
from .errors import RandomnessError, RangeError
from .mpint import MpInt
from .scalar_mul import ladder

# Rejection sampling accepts with probability above 1/2 per draw, so this
# bound is unreachable with a working entropy source.
_MAX_DRAWS = 4096


@dataclass(frozen=True)
class KeyPair:
    """A private scalar d in [1, n-1] with its public point Q = d*G."""

    d: MpInt
    q: AffinePoint
    curve_name: str

    def serialize(self) -> str:
        """Two lines, "private=<hex>" and "public=<x-hex>,<y-hex>".

        All values use the fixed hex width of the curve's field.
        """
        width = self.q.x.modulus.hex_width
        return (
            f"private={self.d.to_hex(width)}\n"
            f"public={self.q.x.value.to_hex(width)},{self.q.y.value.to_hex(width)}"
        )


def random_scalar(n: MpInt, *, seed: int | MpInt | None = None, randbits=None) -> MpInt:
    """Draw a private scalar d in [1, n-1].

    With ``seed`` given, returns (seed mod (n-1)) + 1 deterministically.
    Otherwise draws bit_length(n) bits per attempt, rejecting 0 and values
    at or above n.  ``randbits`` defaults to the OS source and is injectable
    for tests.
    """
    if n.value < 2:
        raise RangeError(f"order must be at least 2, got {n.value}")
    if seed is not None:
        d = int(seed) % (n.value - 1) + 1
        return MpInt(d, n.capacity)
    if randbits is None:
        randbits = secrets.randbits
    bits = n.bit_length()
    for _ in range(_MAX_DRAWS):
        try:
            d = randbits(bits)
        except Exception as exc:
            raise RandomnessError("entropy source failed") from exc
        if 0 < d < n.value:
            return MpInt(d, n.capacity)
    raise RandomnessError("rejection sampling produced no acceptable value")


def generate_keypair(
    curve: CurveParams, *, seed: int | MpInt | None = None, randbits=None
) -> KeyPair:
    """Generate d and derive Q = d*G on the given curve."""
    d = random_scalar(curve.n, seed=seed, randbits=randbits)
    q = ladder(d, curve.g, curve)
    return KeyPair(d=d, q=q, curve_name=curve.name)


def validate_public_key(q: AffinePoint, curve: CurveParams) -> bool:
    """True iff Q is finite, on the curve, and killed by the group order."""
    if q.is_infinity:
        return False
    if not on_curve(q, curve):
        return False
    return ladder(curve.n, q, curve).is_infinity
