"""The two cover/secret pairs used for the capacity experiments."""

SHORT_SECRET = b"underlying physiological mechanisms"

SHORT_COVER = (
    "Only boats catch connotes of the islands sober wines only ships wrap the "
    "slips on the cleats of twining lines only flags flap in tags with color "
    "that assigns only passage on vessels"
)

# The double space after "presence" is part of the original secret.
LONG_SECRET = (
    b"behind using a cover text is to hide the presence  of secret messages "
    b"the presence of embedded messages in the resulting stego-text cannot be "
    b"easily discovered by anyone except the intended recipient."
)

LONG_COVER = (
    "in the research area of text steganography, algorithms based on font "
    "format have advantages of great capacity, good imperceptibility and wide "
    "application range. However, little work on steganalysis for such "
    "algorithms has been reported in the literature. based on the fact that "
    "the statistic features of font format will be changed after using "
    "font-format-based steganographic algorithms, we present a novel support "
    "vector machine-based steganalysis algorithm to detect whether hidden "
    "information exists or not. this algorithm can not only effectively "
    "detect the existence of hidden information, but also estimate the hidden "
    "information length according to variations of font attribute value. as "
    "shown by experimental results, the detection accuracy of our algorithm "
    "reaches as high as 99.3 % when the hidden information length is at least "
    "16 bits. Our scheme present experimentation based on different colors "
    "number."
)

# Published capacities (percent) by palette size, per scheme and pair.
REPORTED = {
    ("perm", "short"): {10: 20.58, 16: 25.5, 32: 29.5, 64: 45.45},
    ("radix", "short"): {10: 34.31, 16: 41.17, 32: 52.23},
    ("perm", "long"): {10: 22.32, 16: 29.64, 32: 38.0, 64: 44.0},
    ("radix", "long"): {10: 35.29, 16: 42.85, 32: 53.22},
}
