"""Myrvold-Ruskey ranking and unranking of permutations.

Ranks are plain Python ints, so palettes up to 64 colors (295-bit ranks)
need no special handling. Permutations are tuples of color indices.
"""

from dataclasses import dataclass
from math import prod

from .errors import DomainError, RankOutOfRange

MAX_SYMBOLS = 64


def factorial(n: int) -> int:
    """Return ``n!`` exactly for ``0 <= n <= 64``."""
    if not isinstance(n, int) or not 0 <= n <= MAX_SYMBOLS:
        raise DomainError(f"factorial defined for 0..{MAX_SYMBOLS}, got {n!r}")
    return prod(range(2, n + 1))


@dataclass(frozen=True)
class BlockBudget:
    n: int
    t: int  # bits carried by one group of n colored characters


def block_budget(n: int) -> BlockBudget:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"need at least 2 colors to hide a bit, got {n!r}")
    return BlockBudget(n, factorial(n).bit_length() - 1)


def unrank(n: int, r: int) -> tuple[int, ...]:
    """Permutation of ``range(n)`` with Myrvold-Ruskey rank ``r``.

    Starts from the identity and, for k = n..1, swaps slot k-1 with slot
    ``r mod k`` before dividing ``r`` by k.

    >>> unrank(10, 961996)
    (3, 8, 5, 2, 1, 4, 9, 0, 7, 6)
    """
    total = factorial(n)
    if not isinstance(r, int) or not 0 <= r < total:
        raise RankOutOfRange(f"rank must lie in [0, {n}!-1], got {r!r}")
    slots = list(range(n))
    for k in range(n, 0, -1):
        r, j = divmod(r, k)
        slots[k - 1], slots[j] = slots[j], slots[k - 1]
    return tuple(slots)


def _check_permutation(p) -> list[int]:
    slots = list(p)
    n = len(slots)
    if not 1 <= n <= MAX_SYMBOLS:
        raise DomainError(f"permutation length must be 1..{MAX_SYMBOLS}, got {n}")
    if sorted(slots) != list(range(n)):
        raise DomainError(f"not a permutation of 0..{n - 1}: {slots}")
    return slots


def rank(p) -> int:
    """Inverse of :func:`unrank`; ``p`` is left untouched."""
    slots = _check_permutation(p)
    inverse = [0] * len(slots)
    for i, v in enumerate(slots):
        inverse[v] = i
    # Unrolled recursion: the rank is s_n + n*(s_{n-1} + (n-1)*(...)), so
    # collect the digits first and fold them from the innermost level out.
    digits = []
    for k in range(len(slots), 1, -1):
        s = slots[k - 1]
        j = inverse[k - 1]
        slots[k - 1], slots[j] = slots[j], slots[k - 1]
        inverse[s], inverse[k - 1] = inverse[k - 1], inverse[s]
        digits.append((s, k))
    r = 0
    for s, k in reversed(digits):
        r = s + k * r
    return r
