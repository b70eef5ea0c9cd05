"""Deterministic color tables shared by sender and receiver."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .doc_io import RGB, hex_color
from .errors import DomainError

MIN_COLORS = 2
MAX_COLORS = 64
SATURATION = Fraction(3, 4)
VALUE = Fraction(9, 10)
# Any gray has zero saturation, so it can never collide with a palette hue.
TERMINATOR: RGB = (0x77, 0x77, 0x77)


@dataclass(frozen=True)
class Palette:
    colors: tuple[RGB, ...]
    terminator: RGB = TERMINATOR

    def __post_init__(self):
        if not MIN_COLORS <= len(self.colors) <= MAX_COLORS:
            raise DomainError(f"palette size must be {MIN_COLORS}..{MAX_COLORS}")
        if len(set(self.colors)) != len(self.colors):
            raise DomainError("palette colors must be distinct")
        if self.terminator in self.colors:
            raise DomainError("terminator must not be a palette color")

    @property
    def size(self) -> int:
        return len(self.colors)

    @cached_property
    def index(self) -> dict:
        return {rgb: i for i, rgb in enumerate(self.colors)}

    def rows(self):
        """``(label, #rrggbb)`` pairs, terminator last."""
        rows = [(str(i), hex_color(rgb)) for i, rgb in enumerate(self.colors)]
        rows.append(("terminator", hex_color(self.terminator)))
        return rows


def _hsv_to_rgb(hue: Fraction, s: Fraction, v: Fraction) -> RGB:
    """Sector formula on exact rationals; ``hue`` is in turns (0 <= hue < 1).

    Exactness matters: several palette sizes land on channel values of
    exactly k + 0.5, where float evaluation would round either way.
    """
    h6 = hue * 6
    sector = int(h6)
    f = h6 - sector
    p, q, t = v * (1 - s), v * (1 - s * f), v * (1 - s * (1 - f))
    rgb = [(v, t, p), (q, v, p), (p, v, t), (p, q, v), (t, p, v), (v, p, q)][sector]
    return tuple(int(255 * x + Fraction(1, 2)) for x in rgb)


@lru_cache(maxsize=None)
def make_palette(size: int) -> Palette:
    """Evenly spaced hues at saturation 0.75 and value 0.90.

    >>> make_palette(2).colors[0]
    (230, 57, 57)
    """
    if not isinstance(size, int) or not MIN_COLORS <= size <= MAX_COLORS:
        raise DomainError(f"palette size must be {MIN_COLORS}..{MAX_COLORS}, got {size!r}")
    colors = tuple(_hsv_to_rgb(Fraction(k, size), SATURATION, VALUE) for k in range(size))
    return Palette(colors)
