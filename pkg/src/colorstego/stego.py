"""Hiding bits in the colors of a cover text.

Two schemes share the same layout. The payload occupies the first eligible
(non-whitespace) characters in reading order. If eligible characters are
left over, the next one takes the palette's terminator color and the rest
get palette colors drawn from ``random.Random(seed)``, one ``randrange``
call per character. Whitespace is never colored.

``perm``
    Payload bits are cut into t-bit blocks, t = floor(log2(n!)). Each
    block is read as an integer, unranked to a permutation of the n
    palette indices, and painted onto the next n eligible characters.
``radix``
    The payload is written in base B (B = palette size) and each digit,
    most significant first, colors one eligible character.

Modes: ``framed`` prepends a 32-bit big-endian bit count (and, for
``radix``, a sentinel 1-bit) so extraction is self-delimiting. ``paper``
embeds the raw secret and needs the bit length back at extraction time,
which is what makes measured capacities comparable with published figures.
"""

import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .doc_io import ColoredDoc
from .errors import (
    BitLengthRequired,
    CorruptPayload,
    CorruptStego,
    CoverTooSmall,
    DomainError,
)
from .palette import Palette
from .permcode import block_budget, rank, unrank
from .radixcode import DigitString, bits_to_bytes, bits_to_digits, bytes_to_bits, digits_to_bits

WHITESPACE = frozenset(" \t\n\r")
HEADER_BITS = 32


class Method(str, Enum):
    PERM = "perm"
    RADIX = "radix"


class Mode(str, Enum):
    PAPER = "paper"
    FRAMED = "framed"


@dataclass(frozen=True)
class CoverText:
    text: str

    @cached_property
    def eligible_positions(self) -> tuple[int, ...]:
        return tuple(i for i, ch in enumerate(self.text) if ch not in WHITESPACE)


@dataclass(frozen=True)
class EmbedParams:
    method: Method
    palette: Palette
    mode: Mode = Mode.FRAMED
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "mode", Mode(self.mode))


def _as_cover(cover) -> CoverText:
    return cover if isinstance(cover, CoverText) else CoverText(cover)


def _frame(bits: str, mode: Mode) -> str:
    if mode is Mode.PAPER:
        return bits
    if len(bits) >= 1 << HEADER_BITS:
        raise DomainError("secret too long for a 32-bit length header")
    return format(len(bits), f"0{HEADER_BITS}b") + bits


def _paint(cover: CoverText, indices, params: EmbedParams) -> ColoredDoc:
    palette = params.palette
    eligible = cover.eligible_positions
    if len(indices) > len(eligible):
        raise CoverTooSmall(len(indices), len(eligible))
    colors = [None] * len(cover.text)
    for pos, idx in zip(eligible, indices):
        colors[pos] = palette.colors[idx]
    rest = eligible[len(indices):]
    if rest:
        colors[rest[0]] = palette.terminator
        rng = random.Random(params.seed)
        for pos in rest[1:]:
            colors[pos] = palette.colors[rng.randrange(palette.size)]
    return ColoredDoc.from_chars(zip(cover.text, colors))


def _payload_indices(doc: ColoredDoc, palette: Palette) -> list[int]:
    """Palette indices of eligible characters up to the terminator."""
    out = []
    for ch, color in doc.chars():
        if ch in WHITESPACE:
            continue
        if color is None or color == palette.terminator:
            break
        idx = palette.index.get(color)
        if idx is None:
            raise CorruptStego(f"color {color} is not in the palette")
        out.append(idx)
    return out


def _unframe(bits: str, mode: Mode, hint, slack: int = 0) -> str:
    """Cut the secret out of the recovered bitstream.

    ``slack`` is how many trailing padding bits a well-formed stream may carry.
    """
    if mode is Mode.FRAMED:
        if len(bits) < HEADER_BITS:
            raise CorruptStego("payload shorter than its length header")
        length = int(bits[:HEADER_BITS], 2)
        tail = bits[HEADER_BITS + length:]
        if HEADER_BITS + length > len(bits) or len(tail) > slack or "1" in tail:
            raise CorruptStego("length header disagrees with payload size")
        return bits[HEADER_BITS:HEADER_BITS + length]
    if hint is None:
        if len(bits) % 8:
            raise BitLengthRequired(
                f"{len(bits)} payload bits are not byte-aligned; pass the secret bit length"
            )
        return bits
    if hint > len(bits):
        raise CorruptStego(f"expected {hint} secret bits, found {len(bits)}")
    return bits[:hint]


# -- permutation scheme ------------------------------------------------------


def embed_perm_bits(cover, bits: str, params: EmbedParams) -> ColoredDoc:
    cover = _as_cover(cover)
    n = params.palette.size
    t = block_budget(n).t
    payload = _frame(bits, params.mode)
    groups = -(-len(payload) // t)
    need = n * groups
    if need > len(cover.eligible_positions):
        raise CoverTooSmall(need, len(cover.eligible_positions))
    indices = []
    for g in range(groups):
        block = payload[g * t:(g + 1) * t].ljust(t, "0")
        indices.extend(unrank(n, int(block, 2)))
    return _paint(cover, indices, params)


def extract_perm_bits(doc: ColoredDoc, params: EmbedParams, bit_length_hint=None) -> str:
    n = params.palette.size
    t = block_budget(n).t
    indices = _payload_indices(doc, params.palette)
    if len(indices) % n:
        raise CorruptStego(f"{len(indices)} colored characters is not a multiple of {n}")
    blocks = []
    for g in range(0, len(indices), n):
        group = indices[g:g + n]
        if len(set(group)) != n:
            raise CorruptStego(f"repeated color in group starting at payload index {g}")
        r = rank(group)
        if r >> t:
            raise CorruptStego(f"group rank {r} exceeds {t} bits")
        blocks.append(format(r, f"0{t}b"))
    return _unframe("".join(blocks), params.mode, bit_length_hint, slack=t - 1)


def embed_perm(cover, secret: bytes, params: EmbedParams) -> ColoredDoc:
    """Hide ``secret`` with the permutation scheme.

    Raises CoverTooSmall when the cover has fewer than
    ``n * ceil(payload_bits / t)`` eligible characters.
    """
    return embed_perm_bits(cover, bytes_to_bits(secret), params)


def extract_perm(doc: ColoredDoc, params: EmbedParams, bit_length_hint=None) -> bytes:
    return bits_to_bytes(extract_perm_bits(doc, params, bit_length_hint))


# -- base-B scheme -----------------------------------------------------------


def radix_digits(bits: str, params: EmbedParams) -> tuple[int, ...]:
    """Digits the radix scheme paints for ``bits`` (framing applied)."""
    framed = params.mode is Mode.FRAMED
    payload = _frame(bits, params.mode)
    if not payload:
        return ()
    return bits_to_digits(payload, params.palette.size, sentinel=framed).digits


def embed_radix_bits(cover, bits: str, params: EmbedParams) -> ColoredDoc:
    return _paint(_as_cover(cover), radix_digits(bits, params), params)


def extract_radix_bits(doc: ColoredDoc, params: EmbedParams, bit_length_hint=None) -> str:
    digits = _payload_indices(doc, params.palette)
    framed = params.mode is Mode.FRAMED
    if not digits:
        if framed or bit_length_hint:
            raise CorruptStego("no payload-colored characters")
        return ""
    z = DigitString(params.palette.size, tuple(digits))
    try:
        if framed:
            return _unframe(digits_to_bits(z, sentinel=True), Mode.FRAMED, None)
        bits = digits_to_bits(z, sentinel=False, bit_length_hint=bit_length_hint)
    except CorruptPayload as exc:
        raise CorruptStego(str(exc)) from exc
    if bit_length_hint is None:
        # Leading zero bits do not survive the integer; restore byte alignment.
        bits = bits.zfill(-(-len(bits) // 8) * 8)
    return bits


def embed_radix(cover, secret: bytes, params: EmbedParams) -> ColoredDoc:
    return embed_radix_bits(cover, bytes_to_bits(secret), params)


def extract_radix(doc: ColoredDoc, params: EmbedParams, bit_length_hint=None) -> bytes:
    return bits_to_bytes(extract_radix_bits(doc, params, bit_length_hint))


# -- dispatch ----------------------------------------------------------------


def embed(cover, secret: bytes, params: EmbedParams) -> ColoredDoc:
    if params.method is Method.PERM:
        return embed_perm(cover, secret, params)
    return embed_radix(cover, secret, params)


def extract(doc: ColoredDoc, params: EmbedParams, bit_length_hint=None) -> bytes:
    if params.method is Method.PERM:
        return extract_perm(doc, params, bit_length_hint)
    return extract_radix(doc, params, bit_length_hint)
