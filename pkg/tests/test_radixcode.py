import pytest
from hypothesis import given, strategies as st

from colorstego.errors import CorruptPayload, DomainError
from colorstego.radixcode import (
    DigitString,
    bits_to_bytes,
    bits_to_digits,
    bytes_to_bits,
    digits_to_bits,
)
from colorstego.samples import SHORT_SECRET

bitstrings = st.text(alphabet="01", min_size=1, max_size=300)


def test_examples():
    assert bits_to_digits("101", 10, sentinel=False).digits == (5,)
    assert bits_to_digits("00000001", 10, sentinel=True).digits == (2, 5, 7)
    assert digits_to_bits(DigitString(10, (5,)), sentinel=False, bit_length_hint=3) == "101"
    assert digits_to_bits(DigitString(10, (2, 5, 7)), sentinel=True) == "00000001"


def test_short_secret_digit_count():
    bits = bytes_to_bits(SHORT_SECRET)
    assert len(bits) == 280
    value = int(bits, 2)
    # oracle: decimal digit count of the integer via str()
    expected_q = len(str(value))
    assert expected_q == 84  # leading 0-bit: the value has only 279 bits
    assert bits_to_digits(bits, 10, sentinel=False).q == expected_q


def test_bits_bytes_helpers():
    assert bytes_to_bits(b"\x01\x80") == "0000000110000000"
    assert bits_to_bytes("0000000110000000") == b"\x01\x80"
    assert bits_to_bytes("1") == b"\x80"
    assert bits_to_bytes("") == b""


@given(bitstrings, st.integers(2, 2**24))
def test_roundtrip_with_sentinel(bits, base):
    z = bits_to_digits(bits, base, sentinel=True)
    assert all(0 <= d < base for d in z.digits)
    assert digits_to_bits(z, sentinel=True) == bits


@given(bitstrings, st.integers(2, 256))
def test_roundtrip_without_sentinel_needs_hint(bits, base):
    z = bits_to_digits(bits, base, sentinel=False)
    assert digits_to_bits(z, sentinel=False, bit_length_hint=len(bits)) == bits


@given(st.binary(min_size=1, max_size=64), st.sampled_from([2, 10, 16, 32, 64]))
def test_byte_roundtrip(data, base):
    bits = bytes_to_bits(data)
    z = bits_to_digits(bits, base, sentinel=True)
    assert bits_to_bytes(digits_to_bits(z, sentinel=True)) == data


@given(bitstrings, st.integers(2, 2**24))
def test_length_bound(bits, base):
    import math

    q = bits_to_digits(bits, base, sentinel=True).q
    assert q <= math.ceil((len(bits) + 1) / math.log2(base)) + 1


def test_leading_zeros_lost_without_sentinel():
    z = bits_to_digits("0001", 10, sentinel=False)
    assert digits_to_bits(z, sentinel=False) == "1"


def test_errors():
    with pytest.raises(DomainError):
        bits_to_digits("1", 1)
    with pytest.raises(DomainError):
        bits_to_digits("102", 10)
    with pytest.raises(DomainError):
        bits_to_digits("", 10, sentinel=False)
    with pytest.raises(DomainError):
        DigitString(10, (10,))
    with pytest.raises(CorruptPayload):
        digits_to_bits(DigitString(10, (0,)), sentinel=True)
    with pytest.raises(CorruptPayload):
        digits_to_bits(DigitString(10, (9,)), sentinel=False, bit_length_hint=3)
