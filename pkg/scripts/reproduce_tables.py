"""Print the LZW size comparison and both theoretical capacity tables."""

import argparse

from colorstego.capacity import (
    format_percent,
    perm_capacity_row,
    stirling_capacity_perm,
    theoretical_capacity_radix,
)
from colorstego.lzw import lzw_fixed_encode, lzw_shared_encode, size_report
from colorstego.samples import SHORT_SECRET

PERM_SIZES = (10, 16, 20, 32, 60, 64)
RADIX_BASES = (2, 4, 8, 10, 16, 32, 64)


def lzw_tables(secret: bytes) -> None:
    print(f"secret: {secret.decode()!r}")
    print("fixed-width codes:", " ".join(map(str, lzw_fixed_encode(secret).codes)))
    dictionary, stream = lzw_shared_encode(secret)
    print(f"shared dictionary ({len(dictionary)} entries): {dictionary.decode()!r}")
    print("shared codes:", " ".join(map(str, stream.codes)))
    print()
    for name, bits in size_report(secret).rows():
        print(f"  {name:<9} {'overflow' if bits is None else bits:>6} bits")


def capacity_tables() -> None:
    print(f"{'n':>3} {'bits':>5} {'bytes':>6} {'exact':>8} {'rounded':>8} {'stirling':>9}")
    for n in PERM_SIZES:
        row = perm_capacity_row(n)
        print(
            f"{n:>3} {row.bits:>5} {row.bytes_per_group:>6} {format_percent(row.exact):>8}"
            f" {format_percent(row.paper):>8} {format_percent(stirling_capacity_perm(n)):>9}"
        )
    print()
    print(f"{'B':>3} {'capacity':>9}")
    for b in RADIX_BASES:
        print(f"{b:>3} {format_percent(theoretical_capacity_radix(b), 2):>9}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--secret", help="file to analyse instead of the built-in sample")
    args = parser.parse_args()
    secret = SHORT_SECRET
    if args.secret:
        with open(args.secret, "rb") as fh:
            secret = fh.read()
    lzw_tables(secret)
    print()
    capacity_tables()


if __name__ == "__main__":
    main()
