"""Color-coded text steganography.

Secrets are hidden in the per-character colors of a cover text, either as
permutation ranks (``perm``) or as base-B digits (``radix``).
"""

from .capacity import (
    CapacityFigure,
    measured_capacity,
    stirling_capacity_perm,
    theoretical_capacity_perm,
    theoretical_capacity_radix,
)
from .doc_io import ColoredDoc, Run, from_html, from_markup, to_html, to_markup
from .errors import (
    BitLengthRequired,
    CapacityError,
    CorruptPayload,
    CorruptStego,
    CorruptStream,
    CoverTooSmall,
    DomainError,
    ParseError,
    RankOutOfRange,
    StegoError,
)
from .palette import TERMINATOR, Palette, make_palette
from .permcode import block_budget, factorial, rank, unrank
from .radixcode import DigitString, bits_to_digits, digits_to_bits
from .stego import (
    CoverText,
    EmbedParams,
    Method,
    Mode,
    embed,
    embed_perm,
    embed_radix,
    extract,
    extract_perm,
    extract_radix,
)
