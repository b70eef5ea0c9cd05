"""Three LZW variants, each reporting its exact output size in bits.

``fixed``
    Dictionary seeded with the 256 byte values, codes start at 9 bits. When
    a code would not fit below the all-ones pattern of the current width,
    that all-ones pattern is emitted as an escape and the width grows by one.
``shared``
    Dictionary seeded with only the distinct bytes of the input (indexed
    from 1, first-appearance order). Every code is one byte, and the seed
    dictionary has to travel with the codes, so it is charged to the size.
``compress``
    The ``.Z`` format of the Unix ``compress`` tool: 3-byte header, 9 to 16
    bit codes packed LSB-first, block mode with code 256 reserved for CLEAR.

None of these are used by the embedding schemes; they exist to measure
whether compressing a short secret before hiding it pays off.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import CapacityError, CorruptStream, DomainError

MAGIC = b"\x1f\x9d"
BLOCK_MODE = 0x80
COMPRESS_MAX_BITS = 16
CLEAR = 256
FIRST_FREE = 257


class Variant(str, Enum):
    FIXED = "fixed"
    SHARED = "shared"
    COMPRESS = "compress"


@dataclass(frozen=True)
class LzwCodeStream:
    variant: Variant
    codes: tuple[int, ...]
    payload_bits: int
    widths: tuple[int, ...] | None = None  # fixed variant only
    data: bytes | None = None  # compress variant: the full .Z file

    def to_bytes(self) -> bytes:
        """Wire form: packed codes (fixed), one byte per code (shared), .Z file (compress)."""
        if self.variant is Variant.FIXED:
            return _pack_msb(self.codes, self.widths)
        if self.variant is Variant.SHARED:
            return bytes(self.codes)
        return self.data

    @classmethod
    def from_bytes(cls, variant, data: bytes) -> "LzwCodeStream":
        variant = Variant(variant)
        if variant is Variant.FIXED:
            codes, widths = _unpack_fixed(data)
            return cls(variant, codes, sum(widths), widths)
        if variant is Variant.SHARED:
            return cls(variant, tuple(data), 8 * len(data))
        codes = tuple(_read_z_codes(data))
        return cls(variant, codes, 8 * len(data), data=bytes(data))


def _require_bytes(src) -> bytes:
    if not isinstance(src, (bytes, bytearray)):
        raise DomainError("LZW input must be a byte string")
    if not src:
        raise DomainError("LZW input must be nonempty")
    return bytes(src)


def _greedy_parse(src: bytes, table: dict, next_code: int, on_new):
    """Greedy longest-match LZW parse; yields codes, calls ``on_new`` per allocation."""
    ent = table[(None, src[0])]
    for b in src[1:]:
        hit = table.get((ent, b))
        if hit is not None:
            ent = hit
            continue
        yield ent
        if on_new(next_code):
            table[(ent, b)] = next_code
            next_code += 1
        ent = table[(None, b)]
    yield ent


def lzw_fixed_encode(src: bytes) -> LzwCodeStream:
    src = _require_bytes(src)
    table = {(None, i): i for i in range(256)}
    codes, widths = [], []
    width = 9
    for code in _greedy_parse(src, table, 256, lambda _: True):
        while code >= (1 << width) - 1:
            codes.append((1 << width) - 1)
            widths.append(width)
            width += 1
        codes.append(code)
        widths.append(width)
    return LzwCodeStream(Variant.FIXED, tuple(codes), sum(widths), tuple(widths))


def _expand(codes, table: list, limit=None):
    """Shared LZW decoding loop; ``table`` is extended in place."""
    out = bytearray()
    prev = None
    for code in codes:
        if 0 <= code < len(table) and table[code] is not None:
            entry = table[code]
        elif prev is not None and code == len(table):
            entry = prev + prev[:1]
        else:
            raise CorruptStream(f"code {code} not in dictionary of size {len(table)}")
        out += entry
        if prev is not None:
            if limit is not None and len(table) > limit:
                raise CorruptStream("dictionary grew past its last index")
            table.append(prev + entry[:1])
        prev = entry
    return bytes(out)


def lzw_fixed_decode(s: LzwCodeStream) -> bytes:
    if Variant(s.variant) is not Variant.FIXED:
        raise DomainError(f"expected a fixed-variant stream, got {s.variant}")

    def strip_escapes():
        width = 9
        for code in s.codes:
            if code == (1 << width) - 1:
                width += 1
            elif code >= 1 << width:
                raise CorruptStream(f"code {code} does not fit in {width} bits")
            else:
                yield code

    return _expand(strip_escapes(), [bytes([i]) for i in range(256)])


def _pack_msb(codes, widths) -> bytes:
    bits = "".join(format(code, f"0{w}b") for code, w in zip(codes, widths))
    bits += "0" * (-len(bits) % 8)
    return int(bits, 2).to_bytes(len(bits) // 8, "big") if bits else b""


def _unpack_fixed(data: bytes):
    total = 8 * len(data)
    codes, widths = [], []
    width, pos = 9, 0
    # Trailing padding is under 8 bits, shorter than any code.
    while total - pos >= width:
        lo, skip = divmod(pos, 8)
        hi = (pos + width + 7) // 8
        chunk = int.from_bytes(data[lo:hi], "big")
        code = (chunk >> (8 * (hi - lo) - skip - width)) & ((1 << width) - 1)
        codes.append(code)
        widths.append(width)
        pos += width
        if code == (1 << width) - 1:
            width += 1
    return tuple(codes), tuple(widths)


def lzw_shared_encode(src: bytes) -> tuple[bytes, LzwCodeStream]:
    """Returns the seed dictionary (distinct bytes, index 1 first) and the codes.

    >>> d, s = lzw_shared_encode(b"aaa")
    >>> d, s.codes
    (b'a', (1, 2))
    """
    src = _require_bytes(src)
    dictionary = bytes(dict.fromkeys(src))
    if len(dictionary) > 255:
        raise CapacityError("256 distinct bytes leave no room for one-byte codes")
    table = {(None, c): i for i, c in enumerate(dictionary, start=1)}

    def allocate(code):
        if code > 255:
            raise CapacityError("shared dictionary overflowed one-byte codes")
        return True

    codes = tuple(_greedy_parse(src, table, len(dictionary) + 1, allocate))
    return dictionary, LzwCodeStream(
        Variant.SHARED, codes, 8 * (len(dictionary) + len(codes))
    )


def lzw_shared_decode(dictionary: bytes, s: LzwCodeStream) -> bytes:
    if Variant(s.variant) is not Variant.SHARED:
        raise DomainError(f"expected a shared-variant stream, got {s.variant}")
    if not dictionary or len(set(dictionary)) != len(dictionary):
        raise CorruptStream("shared dictionary must be nonempty distinct bytes")
    table = [None] + [bytes([c]) for c in dictionary]
    return _expand(s.codes, table, limit=255)


# -- .Z format ---------------------------------------------------------------


def _z_codes(src: bytes):
    table = {(None, i): i for i in range(256)}
    limit = 1 << COMPRESS_MAX_BITS
    return _greedy_parse(src, table, FIRST_FREE, lambda code: code < limit)


def lzw_compress_encode(src: bytes) -> LzwCodeStream:
    src = _require_bytes(src)
    out = bytearray(MAGIC)
    out.append(BLOCK_MODE | COMPRESS_MAX_BITS)
    max_max = 1 << COMPRESS_MAX_BITS
    n_bits, maxcode = 9, (1 << 9) - 1
    free_ent = FIRST_FREE
    acc = offset = 0  # bits pending in the current group of 8 codes
    codes = []
    for code in _z_codes(src):
        codes.append(code)
        acc |= code << offset
        offset += n_bits
        if offset == n_bits * 8:
            out += acc.to_bytes(n_bits, "little")
            acc = offset = 0
        # compress.c checks the width after writing a code but before
        # allocating the entry that code's successor byte creates.
        if free_ent > maxcode:
            if offset:
                out += acc.to_bytes(n_bits, "little")
                acc = offset = 0
            n_bits += 1
            maxcode = max_max if n_bits == COMPRESS_MAX_BITS else (1 << n_bits) - 1
        if free_ent < max_max:
            free_ent += 1
    if offset:
        out += acc.to_bytes((offset + 7) // 8, "little")
    # The final code allocates nothing, so the last increment was spurious
    # but happens after the final width check, keeping the stream exact.
    data = bytes(out)
    return LzwCodeStream(Variant.COMPRESS, tuple(codes), 8 * len(data), data=data)


def _read_z_codes(data: bytes):
    """Yield raw codes from a .Z file, honoring group alignment and CLEAR."""
    if len(data) < 3 or data[:2] != MAGIC:
        raise CorruptStream("missing .Z magic bytes 1f 9d")
    flags = data[2]
    maxbits = flags & 0x1F
    block = bool(flags & BLOCK_MODE)
    if not 9 <= maxbits <= 16:
        raise CorruptStream(f"unsupported max code width {maxbits}")
    max_max = 1 << maxbits
    body = data[3:]
    total = 8 * (len(data) - 3)
    n_bits, maxcode = 9, (1 << 9) - 1
    free_ent = FIRST_FREE if block else 256
    pos = origin = 0
    clear = first = True
    while True:
        if clear or free_ent > maxcode:
            if not first:
                group = n_bits * 8
                pos = origin + -(-(pos - origin) // group) * group
            origin = pos
            if clear:
                n_bits, maxcode = 9, (1 << 9) - 1
            else:
                n_bits += 1
                maxcode = max_max if n_bits == maxbits else (1 << n_bits) - 1
            clear = False
        if total - pos < n_bits:
            return
        lo, skip = divmod(pos, 8)
        code = (int.from_bytes(body[lo:lo + 3], "little") >> skip) & ((1 << n_bits) - 1)
        pos += n_bits
        yield code
        if block and code == CLEAR and not first:
            clear = True
            free_ent = FIRST_FREE - 1
            first = False
            continue
        if not first and free_ent < max_max:
            free_ent += 1
        first = False


def lzw_compress_decode(s) -> bytes:
    """Decode a .Z byte string (or a compress-variant code stream)."""
    data = s.data if isinstance(s, LzwCodeStream) else s
    flags = data[2] if len(data) > 2 else 0
    block = bool(flags & BLOCK_MODE)
    out = bytearray()
    run = []

    def flush():
        if run:
            table = [bytes([i]) for i in range(256)] + ([None] if block else [])
            out.extend(_expand(run, table))
            run.clear()

    for code in _read_z_codes(data):
        if block and code == CLEAR:
            flush()
        else:
            run.append(code)
    flush()
    return bytes(out)


@dataclass(frozen=True)
class SizeReport:
    raw_bits: int
    fixed_bits: int
    shared_bits: int | None  # None when the shared dictionary overflows
    compress_bits: int

    def rows(self):
        return [
            ("raw", self.raw_bits),
            ("fixed", self.fixed_bits),
            ("shared", self.shared_bits),
            ("compress", self.compress_bits),
        ]


def size_report(src: bytes) -> SizeReport:
    src = _require_bytes(src)
    try:
        shared = lzw_shared_encode(src)[1].payload_bits
    except CapacityError:
        shared = None
    return SizeReport(
        8 * len(src),
        lzw_fixed_encode(src).payload_bits,
        shared,
        lzw_compress_encode(src).payload_bits,
    )
