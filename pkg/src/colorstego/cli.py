"""Command-line front end.

Exit codes: 0 success, 2 bad arguments or domain error (including a cover
that is too small), 3 I/O failure, 4 corrupt input, 5 paper-mode
extraction that needs ``--bits``. Failures print one ``error[<code>]:``
line to stderr.
"""

import argparse
import sys
from pathlib import Path

from . import lzw
from .capacity import (
    format_percent,
    measured_capacity,
    perm_capacity_row,
    stirling_capacity_perm,
    theoretical_capacity_radix,
)
from .doc_io import load_document, to_html, to_markup
from .errors import (
    BitLengthRequired,
    CapacityError,
    CorruptStego,
    CorruptStream,
    CoverTooSmall,
    DomainError,
    ParseError,
    StegoError,
)
from .palette import make_palette
from .stego import EmbedParams, embed, extract

PERM_TABLE_SIZES = (10, 16, 20, 32, 60, 64)
RADIX_TABLE_BASES = (2, 4, 8, 10, 16, 32, 64)


class CliError(Exception):
    def __init__(self, code, slug, message):
        super().__init__(message)
        self.code = code
        self.slug = slug


def _read_bytes(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(3, "io", f"cannot read {path}: {exc.strerror}") from exc


def _read_text(path) -> str:
    try:
        return _read_bytes(path).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CliError(3, "io", f"{path} is not valid UTF-8") from exc


def _write(path, data) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise CliError(3, "io", f"cannot write {path}: {exc.strerror}") from exc


def _load_doc(path):
    return load_document(_read_text(path))


def _guess_format(path, explicit):
    if explicit:
        return explicit
    return "html" if str(path).lower().endswith((".html", ".htm")) else "markup"


def cmd_embed(args) -> int:
    params = EmbedParams(args.method, make_palette(args.colors), args.mode, args.seed)
    cover = _read_text(args.cover)
    secret = _read_bytes(args.secret)
    doc = embed(cover, secret, params)
    fmt = _guess_format(args.out, args.format)
    _write(args.out, to_html(doc) if fmt == "html" else to_markup(doc))
    if secret:
        print(measured_capacity(doc, 8 * len(secret), params.palette.terminator))
    else:
        print("empty secret: terminator only")
    return 0


def cmd_extract(args) -> int:
    params = EmbedParams(args.method, make_palette(args.colors), args.mode)
    if args.bits is not None and args.bits < 0:
        raise DomainError("--bits must be nonnegative")
    doc = _load_doc(args.input)
    _write(args.out, extract(doc, params, args.bits))
    return 0


def cmd_capacity(args) -> int:
    if args.action == "measure":
        fig = measured_capacity(_load_doc(args.input), args.secret_bits)
        print(fig)
        return 0
    if args.method == "perm":
        sizes = PERM_TABLE_SIZES if args.colors == "all" else (int(args.colors),)
        rows = [perm_capacity_row(n) for n in sizes]
        if args.colors == "all":
            header = f"{'n':>3} {'bits':>5} {'bytes':>6} {'capacity':>9} {'paper':>8}"
            print(header + (f" {'stirling':>9}" if args.stirling else ""))
        for row in rows:
            line = (
                f"{row.n:>3} {row.bits:>5} {row.bytes_per_group:>6} "
                f"{format_percent(row.exact):>9} {format_percent(row.paper):>8}"
            )
            if args.stirling:
                line += f" {format_percent(stirling_capacity_perm(row.n)):>9}"
            print(line)
        return 0
    bases = RADIX_TABLE_BASES if args.colors == "all" else (int(args.colors),)
    if args.colors == "all":
        print(f"{'B':>3} {'capacity':>9}")
    for b in bases:
        print(f"{b:>3} {format_percent(theoretical_capacity_radix(b, 'paper'), 1):>9}")
    return 0


def cmd_lzw(args) -> int:
    if args.action == "report":
        report = lzw.size_report(_read_bytes(args.input))
        rows = report.rows()
        if args.csv:
            print(",".join(name for name, _ in rows))
            print(",".join("" if v is None else str(v) for _, v in rows))
        else:
            for name, bits in rows:
                print(f"{name:<9} {'overflow' if bits is None else bits:>8}")
        return 0
    variant = lzw.Variant(args.variant)
    if variant is lzw.Variant.SHARED and not args.dict:
        raise CliError(2, "usage", "the shared variant needs --dict")
    data = _read_bytes(args.input)
    if args.action == "encode":
        if variant is lzw.Variant.FIXED:
            stream = lzw.lzw_fixed_encode(data)
        elif variant is lzw.Variant.SHARED:
            dictionary, stream = lzw.lzw_shared_encode(data)
            _write(args.dict, dictionary)
        else:
            stream = lzw.lzw_compress_encode(data)
        _write(args.out, stream.to_bytes())
        print(f"{variant.value}: {stream.payload_bits} bits")
        return 0
    if variant is lzw.Variant.FIXED:
        out = lzw.lzw_fixed_decode(lzw.LzwCodeStream.from_bytes(variant, data))
    elif variant is lzw.Variant.SHARED:
        stream = lzw.LzwCodeStream.from_bytes(variant, data)
        out = lzw.lzw_shared_decode(_read_bytes(args.dict), stream)
    else:
        out = lzw.lzw_compress_decode(data)
    _write(args.out, out)
    return 0


def cmd_palette(args) -> int:
    palette = make_palette(args.colors)
    if args.format == "text":
        for label, color in palette.rows():
            print(f"{label:>10} {color}")
        return 0
    cells = "\n".join(
        f'<tr><td>{label}</td><td style="background:{color};width:4em"></td>'
        f"<td>{color}</td></tr>"
        for label, color in palette.rows()
    )
    print(
        "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\"/>\n"
        f"<title>{palette.size}-color palette</title>\n</head>\n<body>\n"
        f"<table>\n{cells}\n</table>\n</body>\n</html>"
    )
    return 0


def _colors_or_all(text):
    if text == "all":
        return text
    try:
        return str(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer or 'all'") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorstego", description="Hide secrets in the colors of a cover text."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="color a cover text to hide a secret")
    p.add_argument("--method", choices=["perm", "radix"], required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--cover", required=True)
    p.add_argument("--secret", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["markup", "html"])
    p.add_argument("--mode", choices=["paper", "framed"], default="framed")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover a secret from a stego document")
    p.add_argument("--method", choices=["perm", "radix"], required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--mode", choices=["paper", "framed"], default="framed")
    p.add_argument("--bits", type=int, help="secret length in bits (paper mode)")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("capacity", help="theoretical or measured capacity")
    cap = p.add_subparsers(dest="action", required=True)
    t = cap.add_parser("theoretical")
    t.add_argument("--method", choices=["perm", "radix"], required=True)
    t.add_argument("--colors", type=_colors_or_all, required=True)
    t.add_argument("--stirling", action="store_true")
    m = cap.add_parser("measure")
    m.add_argument("--in", dest="input", required=True)
    m.add_argument("--secret-bits", type=int, required=True)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("lzw", help="LZW size analysis and codecs")
    act = p.add_subparsers(dest="action", required=True)
    r = act.add_parser("report")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--csv", action="store_true")
    for name in ("encode", "decode"):
        e = act.add_parser(name)
        e.add_argument("--variant", choices=[v.value for v in lzw.Variant], required=True)
        e.add_argument("--in", dest="input", required=True)
        e.add_argument("--out", required=True)
        e.add_argument("--dict")
    p.set_defaults(func=cmd_lzw)

    p = sub.add_parser("palette", help="print a color table")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--format", choices=["text", "html"], default="text")
    p.set_defaults(func=cmd_palette)
    return parser


def _classify(exc):
    if isinstance(exc, CliError):
        return exc.code, exc.slug
    if isinstance(exc, CoverTooSmall):
        return 2, "cover-too-small"
    if isinstance(exc, BitLengthRequired):
        return 5, "bits-required"
    if isinstance(exc, DomainError):
        return 2, "domain"
    if isinstance(exc, CapacityError):
        return 2, "capacity"
    if isinstance(exc, (CorruptStego, ParseError)):
        return 4, "corrupt-stego"
    if isinstance(exc, CorruptStream):
        return 4, "corrupt-stream"
    return 4, "corrupt"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, StegoError) as exc:
        code, slug = _classify(exc)
        print(f"error[{slug}]: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
