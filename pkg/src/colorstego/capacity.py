"""Theoretical and measured embedding capacity, as percentages.

Capacity is secret bits over cover bits, counting 8 bits per cover
character. Measured figures count every character (whitespace included)
from the start of the document through the last payload-bearing one.
"""

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .doc_io import ColoredDoc
from .errors import DomainError
from .palette import TERMINATOR
from .permcode import block_budget

LOG2_E = 1.442695  # truncated, as used in the Stirling estimate


def round_half_up(x, places: int) -> float:
    q = Decimal(1).scaleb(-places)
    return float(Decimal(str(x)).quantize(q, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class PermCapacityRow:
    n: int
    bits: int  # floor(log2(n!))
    bytes_per_group: float  # bits / 8, rounded to one decimal
    exact: float
    paper: float


def perm_capacity_row(n: int) -> PermCapacityRow:
    """One row of the permutation-scheme capacity table.

    ``paper`` rounds bits/8 to one decimal before dividing by n, then rounds
    the percentage to two decimals (half up). ``exact`` skips both roundings.
    """
    t = block_budget(n).t
    per_group = round_half_up(t / 8, 1)
    return PermCapacityRow(
        n=n,
        bits=t,
        bytes_per_group=per_group,
        exact=100 * t / (8 * n),
        paper=round_half_up(100 * per_group / n, 2),
    )


def theoretical_capacity_perm(n: int, rounding: str = "exact") -> float:
    row = perm_capacity_row(n)
    if rounding == "exact":
        return row.exact
    if rounding == "paper":
        return row.paper
    raise DomainError(f"rounding must be 'exact' or 'paper', got {rounding!r}")


def stirling_bits(n: int) -> float:
    """Stirling approximation of log2(n!)."""
    return n * (math.log2(n) - LOG2_E) + 0.5 * math.log2(2 * math.pi * n)


def stirling_capacity_perm(n: int) -> float:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"need n >= 2, got {n!r}")
    return stirling_bits(n) * 100 / (n * 8)


def theoretical_capacity_radix(base: int, rounding: str = "exact") -> float:
    """100 * log2(B) / 8; ``rounding='paper'`` keeps one decimal."""
    if not isinstance(base, int) or base < 2:
        raise DomainError(f"base must be >= 2, got {base!r}")
    exact = 100 * math.log2(base) / 8
    if rounding == "exact":
        return exact
    if rounding == "paper":
        return round_half_up(exact, 1)
    raise DomainError(f"rounding must be 'exact' or 'paper', got {rounding!r}")


@dataclass(frozen=True)
class CapacityFigure:
    secret_bits: int
    consumed_chars: int

    @property
    def percent(self) -> float:
        return 100 * self.secret_bits / (8 * self.consumed_chars)

    def __str__(self):
        return (
            f"{self.secret_bits} secret bits in {self.consumed_chars} cover characters: "
            f"{format_percent(self.percent)}"
        )


def payload_extent(doc: ColoredDoc, terminator=TERMINATOR) -> int:
    """Characters from the document start through the last payload-bearing one."""
    last = -1
    for i, (ch, color) in enumerate(doc.chars()):
        if ch in " \t\n\r":
            continue
        if color is None or color == terminator:
            break
        last = i
    return last + 1


def measured_capacity(doc: ColoredDoc, secret_bits: int, terminator=TERMINATOR) -> CapacityFigure:
    consumed = payload_extent(doc, terminator)
    if consumed == 0:
        raise DomainError("document carries no payload-colored characters")
    if not 0 < secret_bits <= 8 * consumed:
        raise DomainError(
            f"{secret_bits} secret bits cannot fit in {consumed} cover characters"
        )
    return CapacityFigure(secret_bits, consumed)


def format_percent(x: float, places: int = 2) -> str:
    """``26.25%``, ``62.5%``, ``38%``: fixed places, trailing zeros dropped."""
    text = f"{round_half_up(x, places):.{places}f}".rstrip("0").rstrip(".")
    return text + "%"
