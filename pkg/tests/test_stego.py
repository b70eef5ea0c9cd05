import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from colorstego.errors import BitLengthRequired, CorruptStego, CoverTooSmall
from colorstego.palette import make_palette
from colorstego.permcode import block_budget
from colorstego.radixcode import bytes_to_bits
from colorstego.samples import SHORT_COVER, SHORT_SECRET
from colorstego.stego import (
    WHITESPACE,
    CoverText,
    EmbedParams,
    embed,
    embed_perm,
    embed_perm_bits,
    embed_radix,
    embed_radix_bits,
    extract,
    extract_perm,
    extract_perm_bits,
    extract_radix,
    extract_radix_bits,
)

P10 = make_palette(10)


def color_indices(doc, palette):
    """Palette index (or 'T' / None) of each eligible character."""
    out = []
    for ch, color in doc.chars():
        if ch in WHITESPACE:
            assert color is None
            continue
        out.append("T" if color == palette.terminator else palette.index.get(color))
    return out


def test_cover_eligibility():
    c = CoverText("a b\tc\nd\re")
    assert c.eligible_positions == (0, 2, 4, 6, 8)


def test_first_two_blocks_of_short_example():
    params = EmbedParams("perm", P10, "paper", seed=1)
    bits = bytes_to_bits(SHORT_SECRET)
    assert bits[:21] == "011101010110111001100"
    assert bits[21:42] == "100011001010111001001"
    doc = embed_perm(SHORT_COVER, SHORT_SECRET, params)
    idx = color_indices(doc, P10)
    assert idx[:10] == [3, 8, 5, 2, 1, 4, 9, 0, 7, 6]
    assert idx[10:20] == [2, 9, 1, 6, 3, 8, 4, 5, 0, 7]
    # the first group spans "Only boats c"
    first_group_chars = [ch for ch, _ in doc.chars() if ch not in WHITESPACE][:10]
    assert "".join(first_group_chars) == "Onlyboatsc"
    # 14 groups of 10, then terminator, then fill
    assert idx[140] == "T"
    assert all(isinstance(i, int) for i in idx[141:])


def test_group_to_bits():
    cover = "x" * 10
    doc = embed_perm_bits(cover, "011101010110111001100", EmbedParams("perm", P10, "paper"))
    assert color_indices(doc, P10) == [3, 8, 5, 2, 1, 4, 9, 0, 7, 6]
    assert extract_perm_bits(doc, EmbedParams("perm", P10, "paper"), 21) == "011101010110111001100"


def test_short_example_roundtrip_paper_mode():
    for method in ("perm", "radix"):
        params = EmbedParams(method, P10, "paper", seed=3)
        doc = embed(SHORT_COVER, SHORT_SECRET, params)
        assert extract(doc, params, 280) == SHORT_SECRET


def test_empty_secret_gets_terminator_first():
    for method in ("perm", "radix"):
        params = EmbedParams(method, P10, "paper")
        doc = embed("ab cd", b"", params)
        idx = color_indices(doc, P10)
        assert idx[0] == "T"
        assert all(isinstance(i, int) for i in idx[1:])
        assert extract(doc, params, 0) == b""


def test_exact_fit_has_no_terminator():
    params = EmbedParams("perm", P10, "paper")
    doc = embed_perm_bits("abcde fghij", "1" * 21, params)
    assert "T" not in color_indices(doc, P10)
    assert extract_perm_bits(doc, params, 21) == "1" * 21


def test_radix_single_digit():
    params = EmbedParams("radix", P10, "paper")
    doc = embed_radix_bits("ab", "101", params)
    assert color_indices(doc, P10) == [5, "T"]
    assert extract_radix_bits(doc, params, 3) == "101"


def test_radix_sentinel_digits():
    params = EmbedParams("radix", P10, "framed")
    # the framed payload is header + data with a leading sentinel bit
    doc = embed_radix("x" * 30, b"\x01", params)
    assert extract_radix(doc, params) == b"\x01"
    from colorstego.stego import radix_digits
    paper = EmbedParams("radix", P10, "paper")
    assert radix_digits("00000001", paper) == (1,)


def test_radix_short_example_digit_count():
    params = EmbedParams("radix", P10, "paper")
    doc = embed_radix(SHORT_COVER, SHORT_SECRET, params)
    idx = color_indices(doc, P10)
    value = int.from_bytes(SHORT_SECRET, "big")
    assert idx.index("T") == len(str(value)) == 84


def test_cover_too_small():
    with pytest.raises(CoverTooSmall) as info:
        embed_perm("short cover", SHORT_SECRET, EmbedParams("perm", P10, "paper"))
    assert info.value.required == 140
    assert info.value.available == 10
    with pytest.raises(CoverTooSmall):
        embed_radix("tiny", SHORT_SECRET, EmbedParams("radix", P10, "paper"))


def test_paper_mode_needs_bits_when_unaligned():
    params = EmbedParams("perm", P10, "paper")
    doc = embed(SHORT_COVER, SHORT_SECRET, params)
    with pytest.raises(BitLengthRequired):
        extract(doc, params)  # 14 * 21 = 294 bits is not byte aligned


def test_radix_paper_mode_without_hint_restores_bytes():
    params = EmbedParams("radix", P10, "paper")
    doc = embed(SHORT_COVER, SHORT_SECRET, params)
    assert extract(doc, params) == SHORT_SECRET


def test_unknown_color_rejected():
    params = EmbedParams("perm", P10, "paper")
    doc = embed(SHORT_COVER, SHORT_SECRET, params)
    with pytest.raises(CorruptStego):
        extract(doc, EmbedParams("perm", make_palette(16), "paper"), 280)


def test_repeated_color_rejected():
    params = EmbedParams("perm", P10, "paper")
    doc = embed_perm_bits("x" * 10, "0" * 21, params)
    chars = list(doc.chars())
    chars[0] = (chars[0][0], chars[1][1])
    from colorstego.doc_io import ColoredDoc
    with pytest.raises(CorruptStego):
        extract_perm_bits(ColoredDoc.from_chars(chars), params, 21)


def test_partial_group_rejected():
    params = EmbedParams("perm", P10, "paper")
    doc = embed_perm_bits("x" * 10, "0" * 21, params)
    from colorstego.doc_io import ColoredDoc
    truncated = ColoredDoc.from_chars(list(doc.chars())[:9])
    with pytest.raises(CorruptStego):
        extract_perm_bits(truncated, params, 21)


def test_determinism_and_seed_isolation():
    a = embed(SHORT_COVER, b"hi", EmbedParams("perm", P10, "framed", seed=1))
    b = embed(SHORT_COVER, b"hi", EmbedParams("perm", P10, "framed", seed=1))
    c = embed(SHORT_COVER, b"hi", EmbedParams("perm", P10, "framed", seed=2))
    assert a == b
    ia, ic = color_indices(a, P10), color_indices(c, P10)
    end = ia.index("T")
    assert ia[: end + 1] == ic[: end + 1]
    assert ia != ic


# -- properties --------------------------------------------------------------

words = st.text(alphabet=st.characters(blacklist_characters=" \t\n\r", blacklist_categories=("Cs",)), min_size=1, max_size=8)
seps = st.sampled_from([" ", "  ", "\t", "\n", "\r\n"])
covers = st.lists(st.tuples(words, seps), min_size=1, max_size=120).map(
    lambda parts: "".join(w + s for w, s in parts)
)


def needed_chars(method, n, nbits, mode):
    payload = nbits + (32 if mode == "framed" else 0)
    if method == "perm":
        return n * math.ceil(payload / block_budget(n).t)
    if mode == "framed":
        payload += 1
    return max(1, math.ceil(payload / math.log2(n)))


@settings(max_examples=150, deadline=None)
@given(
    cover=covers,
    secret=st.binary(max_size=24),
    method=st.sampled_from(["perm", "radix"]),
    n=st.sampled_from([10, 16, 32, 64]),
    seed=st.integers(0, 2**64 - 1),
)
def test_framed_roundtrip(cover, secret, method, n, seed):
    params = EmbedParams(method, make_palette(n), "framed", seed)
    try:
        doc = embed(cover, secret, params)
    except CoverTooSmall:
        assume(False)
    assert doc.text == cover
    assert extract(doc, params) == secret


@settings(max_examples=80, deadline=None)
@given(
    cover=covers,
    secret=st.binary(min_size=1, max_size=16),
    method=st.sampled_from(["perm", "radix"]),
    n=st.sampled_from([10, 16, 32, 64]),
)
def test_paper_roundtrip_with_hint(cover, secret, method, n):
    params = EmbedParams(method, make_palette(n), "paper")
    try:
        doc = embed(cover, secret, params)
    except CoverTooSmall:
        assume(False)
    assert extract(doc, params, 8 * len(secret)) == secret


@settings(max_examples=60, deadline=None)
@given(
    secret=st.binary(max_size=12),
    method=st.sampled_from(["perm", "radix"]),
    extra=st.lists(st.sampled_from([" ", "\n", "\t"]), min_size=1, max_size=40),
    data=st.data(),
)
def test_whitespace_neutrality(secret, method, extra, data):
    cover = "abcdefghij" * 40
    params = EmbedParams(method, make_palette(16), "framed", 9)
    chars = list(cover)
    for ws in extra:
        chars.insert(data.draw(st.integers(0, len(chars))), ws)
    padded = "".join(chars)
    assert extract(embed(padded, secret, params), params) == extract(embed(cover, secret, params), params) == secret


@given(st.binary(max_size=10), st.sampled_from(["perm", "radix"]))
def test_terminator_never_a_palette_color(secret, method):
    params = EmbedParams(method, P10, "framed")
    doc = embed("z" * 400, secret, params)
    idx = color_indices(doc, P10)
    assert idx.count("T") == 1
    assert None not in idx
