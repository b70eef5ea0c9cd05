"""Colored documents and their two serializations.

Markup grammar (UTF-8)::

    doc     := (plain | colored)*
    plain   := (char - "{}|\\" | escape)+
    colored := "{#" hex6 "|" (char - "{}|\\" | escape)* "}"
    escape  := "\\{" | "\\}" | "\\|" | "\\\\"

``to_markup`` emits lowercase hex and merges adjacent runs of one color.

HTML is a fixed skeleton (``HTML_HEAD`` + body + ``HTML_TAIL``) whose body
holds text and ``<span style="color:#rrggbb">`` runs. ``&``, ``<``, ``>``
and carriage returns are written as character references, and ``\\n``
becomes ``<br/>``. The reader accepts that dialect plus attribute spacing,
uppercase hex and ``<br>``/``<br />``; anything else is a ParseError.
"""

import re
from dataclasses import dataclass
from html.parser import HTMLParser
from typing import Iterable, Optional

from .errors import ParseError

RGB = tuple[int, int, int]


def hex_color(rgb: RGB) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def parse_hex(text: str) -> RGB:
    if not re.fullmatch(r"#[0-9a-fA-F]{6}", text):
        raise ParseError(f"bad color {text!r}")
    return tuple(int(text[i : i + 2], 16) for i in (1, 3, 5))


@dataclass(frozen=True)
class Run:
    text: str
    color: Optional[RGB] = None


class ColoredDoc:
    """Immutable sequence of runs, always kept canonical.

    Canonical means no empty runs and no two adjacent runs with the same
    color, so equal documents compare equal regardless of how they were
    assembled.
    """

    __slots__ = ("runs",)

    def __init__(self, runs: Iterable = ()):
        merged: list[Run] = []
        for run in runs:
            if not isinstance(run, Run):
                run = Run(*run)
            if not run.text:
                continue
            if merged and merged[-1].color == run.color:
                merged[-1] = Run(merged[-1].text + run.text, run.color)
            else:
                merged.append(run)
        self.runs = tuple(merged)

    @classmethod
    def from_chars(cls, pairs) -> "ColoredDoc":
        """Build from ``(character, color-or-None)`` pairs."""
        return cls(Run(ch, color) for ch, color in pairs)

    def chars(self):
        for run in self.runs:
            for ch in run.text:
                yield ch, run.color

    @property
    def text(self) -> str:
        return "".join(run.text for run in self.runs)

    def __eq__(self, other):
        return isinstance(other, ColoredDoc) and self.runs == other.runs

    def __hash__(self):
        return hash(self.runs)

    def __len__(self):
        return sum(len(run.text) for run in self.runs)

    def __repr__(self):
        return f"ColoredDoc({list(self.runs)!r})"


# -- markup ------------------------------------------------------------------

_SPECIAL = "{}|\\"


def _escape_markup(text: str) -> str:
    return "".join("\\" + ch if ch in _SPECIAL else ch for ch in text)


def to_markup(doc: ColoredDoc) -> str:
    parts = []
    for run in doc.runs:
        body = _escape_markup(run.text)
        parts.append(body if run.color is None else f"{{{hex_color(run.color)}|{body}}}")
    return "".join(parts)


def from_markup(s: str) -> ColoredDoc:
    runs = []
    buf: list[str] = []
    color = None
    inside = False
    i, n = 0, len(s)
    while i < n:
        ch = s[i]
        if ch == "\\":
            if i + 1 >= n or s[i + 1] not in _SPECIAL:
                raise ParseError("malformed escape", i)
            buf.append(s[i + 1])
            i += 2
            continue
        if ch == "{":
            if inside:
                raise ParseError("nested colored run", i)
            if s[i + 8 : i + 9] != "|":
                raise ParseError("expected '{#rrggbb|'", i)
            try:
                new_color = parse_hex(s[i + 1 : i + 8])
            except ParseError:
                raise ParseError("bad color in colored run", i + 1) from None
            runs.append(Run("".join(buf), None))
            buf, color, inside = [], new_color, True
            i += 9
            continue
        if ch == "}":
            if not inside:
                raise ParseError("unbalanced '}'", i)
            runs.append(Run("".join(buf), color))
            buf, color, inside = [], None, False
        elif ch == "|":
            raise ParseError("unescaped '|'", i)
        else:
            buf.append(ch)
        i += 1
    if inside:
        raise ParseError("unterminated colored run", n)
    runs.append(Run("".join(buf), None))
    return ColoredDoc(runs)


# -- HTML --------------------------------------------------------------------

HTML_HEAD = (
    "<!DOCTYPE html>\n"
    "<html>\n"
    "<head>\n"
    '<meta charset="utf-8"/>\n'
    "<title>stego-text</title>\n"
    "</head>\n"
    "<body>\n"
    '<p style="white-space:pre-wrap">'
)
HTML_TAIL = "</p>\n</body>\n</html>\n"


def _escape_html(text: str) -> str:
    text = text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    return text.replace("\r", "&#13;").replace("\n", "<br/>")


def to_html(doc: ColoredDoc) -> str:
    parts = [HTML_HEAD]
    for run in doc.runs:
        body = _escape_html(run.text)
        if run.color is None:
            parts.append(body)
        else:
            parts.append(f'<span style="color:{hex_color(run.color)}">{body}</span>')
    parts.append(HTML_TAIL)
    return "".join(parts)


_STYLE_RE = re.compile(r"\s*color\s*:\s*(#[0-9a-fA-F]{6})\s*;?\s*")


class _SpanReader(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.runs: list[Run] = []
        self.color = None
        self.in_span = False

    def _fail(self, message):
        line, col = self.getpos()
        raise ParseError(f"{message} at line {line}, column {col}")

    def handle_starttag(self, tag, attrs):
        if tag == "br":
            self.runs.append(Run("\n", self.color))
        elif tag == "span":
            if self.in_span:
                self._fail("nested <span>")
            attrs = dict(attrs)
            match = _STYLE_RE.fullmatch(attrs.get("style") or "")
            if set(attrs) != {"style"} or not match:
                self._fail("<span> must carry exactly one color style")
            self.in_span = True
            self.color = parse_hex(match.group(1))
        else:
            self._fail(f"unsupported tag <{tag}>")

    def handle_startendtag(self, tag, attrs):
        if tag != "br":
            self._fail(f"unsupported tag <{tag}/>")
        self.handle_starttag(tag, attrs)

    def handle_endtag(self, tag):
        if tag != "span" or not self.in_span:
            self._fail(f"unexpected </{tag}>")
        self.in_span, self.color = False, None

    def handle_data(self, data):
        self.runs.append(Run(data, self.color))


def from_html(s: str) -> ColoredDoc:
    """Parse ``to_html`` output, or a bare fragment of spans, text and breaks."""
    body = s
    if s.startswith(HTML_HEAD) and s.endswith(HTML_TAIL):
        body = s[len(HTML_HEAD) : len(s) - len(HTML_TAIL)]
    reader = _SpanReader()
    reader.feed(body)
    reader.close()
    if reader.in_span:
        raise ParseError("unterminated <span>", len(s))
    return ColoredDoc(reader.runs)


def is_html(serialized: str) -> bool:
    return serialized.lstrip()[:9].lower().startswith(("<!doctype", "<html"))


def load_document(serialized: str) -> ColoredDoc:
    """Parse either serialization; full HTML documents are told apart by their doctype."""
    return from_html(serialized) if is_html(serialized) else from_markup(serialized)


def strip_colors(serialized: str) -> str:
    """Plain cover text from either serialization."""
    return load_document(serialized).text
