"""Embed the two sample secrets at every palette size and report measured capacity.

Runs in the raw (unframed) mode so the figures are comparable with the
published ones, which are printed alongside with the difference.
"""

import argparse
import csv
import sys

from colorstego.capacity import measured_capacity
from colorstego.palette import make_palette
from colorstego.samples import LONG_COVER, LONG_SECRET, REPORTED, SHORT_COVER, SHORT_SECRET
from colorstego.stego import EmbedParams, embed, extract

PAIRS = {"short": (SHORT_COVER, SHORT_SECRET), "long": (LONG_COVER, LONG_SECRET)}


def run():
    for (method, which), table in REPORTED.items():
        cover, secret = PAIRS[which]
        for n, published in table.items():
            params = EmbedParams(method, make_palette(n), "paper")
            doc = embed(cover, secret, params)
            if extract(doc, params, 8 * len(secret)) != secret:
                raise SystemExit(f"roundtrip failed: {method} {which} {n}")
            fig = measured_capacity(doc, 8 * len(secret))
            yield {
                "pair": which,
                "method": method,
                "colors": n,
                "chars": fig.consumed_chars,
                "measured": round(fig.percent, 2),
                "published": published,
                "delta": round(fig.percent - published, 2),
            }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", action="store_true", help="write CSV to stdout")
    args = parser.parse_args()
    rows = list(run())
    if args.csv:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
        return
    print(f"{'pair':<6} {'method':<6} {'n':>3} {'chars':>6} {'measured':>9} {'published':>10} {'delta':>6}")
    for r in rows:
        print(
            f"{r['pair']:<6} {r['method']:<6} {r['colors']:>3} {r['chars']:>6}"
            f" {r['measured']:>8}% {r['published']:>9}% {r['delta']:>+6}"
        )


if __name__ == "__main__":
    main()
