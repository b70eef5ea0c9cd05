"""Conversion between bit strings and base-B digit strings.

Bit strings are ``str`` objects over ``"01"``, most significant bit first.
With ``sentinel=True`` a single 1-bit is prepended before conversion so
that leading zero bits survive the trip through an integer.
"""

from dataclasses import dataclass

from .errors import CorruptPayload, DomainError

MAX_BASE = 2**24


def bytes_to_bits(data: bytes) -> str:
    return "".join(f"{b:08b}" for b in data)


def bits_to_bytes(bits: str) -> bytes:
    """Pack bits MSB-first; a ragged tail is zero-padded on the right."""
    if not bits:
        return b""
    pad = -len(bits) % 8
    return int(bits + "0" * pad, 2).to_bytes((len(bits) + pad) // 8, "big")


def _check_bits(bits: str) -> None:
    if not isinstance(bits, str) or bits.strip("01"):
        raise DomainError("bit string must contain only '0' and '1'")


@dataclass(frozen=True)
class DigitString:
    base: int
    digits: tuple[int, ...]  # most significant first

    def __post_init__(self):
        if not 2 <= self.base <= MAX_BASE:
            raise DomainError(f"base must lie in [2, 2**24], got {self.base}")
        if any(not 0 <= d < self.base for d in self.digits):
            raise DomainError(f"digit out of range for base {self.base}")

    @property
    def q(self) -> int:
        return len(self.digits)

    def value(self) -> int:
        v = 0
        for d in self.digits:
            v = v * self.base + d
        return v


def int_to_digits(value: int, base: int) -> tuple[int, ...]:
    if value == 0:
        return (0,)
    out = []
    while value:
        value, d = divmod(value, base)
        out.append(d)
    return tuple(reversed(out))


def bits_to_digits(bits: str, base: int, sentinel: bool = True) -> DigitString:
    """Read ``bits`` as a big-endian integer and rewrite it in ``base``.

    >>> bits_to_digits("00000001", 10).digits
    (2, 5, 7)
    """
    if not isinstance(base, int) or not 2 <= base <= MAX_BASE:
        raise DomainError(f"base must lie in [2, 2**24], got {base!r}")
    _check_bits(bits)
    if sentinel:
        bits = "1" + bits
    elif not bits:
        raise DomainError("empty bit string has no digit representation")
    return DigitString(base, int_to_digits(int(bits, 2), base))


def digits_to_bits(
    z: DigitString, sentinel: bool = True, bit_length_hint: int | None = None
) -> str:
    value = z.value()
    if sentinel:
        if value == 0:
            raise CorruptPayload("sentinel bit missing: digit string is zero")
        return bin(value)[3:]
    if bit_length_hint is None:
        return bin(value)[2:]
    if value.bit_length() > bit_length_hint:
        raise CorruptPayload(
            f"value needs {value.bit_length()} bits, more than the {bit_length_hint} expected"
        )
    return format(value, "b").zfill(bit_length_hint) if bit_length_hint else ""
