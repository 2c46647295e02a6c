#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from Python's unicodedata.

Emits two tables:
  kLetterRanges    -- inclusive codepoint ranges with general category L*
  kSimpleLowerMap  -- 1:1 lowercase mappings (codepoints whose lowercase
                      form is a single, different codepoint)

Run from the repository root:  python3 tools/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000


def letter_ranges():
    ranges = []
    start = None
    for cp in range(MAX_CP):
        is_letter = unicodedata.category(chr(cp)).startswith("L")
        if is_letter and start is None:
            start = cp
        elif not is_letter and start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def simple_lower_map():
    pairs = []
    for cp in range(MAX_CP):
        low = chr(cp).lower()
        if len(low) == 1 and low != chr(cp):
            pairs.append((cp, ord(low)))
    return pairs


def main(out_path):
    ranges = letter_ranges()
    lowers = simple_lower_map()
    with open(out_path, "w", encoding="utf-8") as f:
        f.write("// Generated by tools/gen_unicode_tables.py (unicodedata %s).\n"
                % unicodedata.unidata_version)
        f.write("// Do not edit by hand.\n\n")
        f.write("static constexpr CodepointRange kLetterRanges[] = {\n")
        for lo, hi in ranges:
            f.write("    {0x%X, 0x%X},\n" % (lo, hi))
        f.write("};\n\n")
        f.write("static constexpr CodepointPair kSimpleLowerMap[] = {\n")
        for cp, low in lowers:
            f.write("    {0x%X, 0x%X},\n" % (cp, low))
        f.write("};\n")
    print("wrote %s: %d letter ranges, %d lowercase pairs"
          % (out_path, len(ranges), len(lowers)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/unicode_tables.inc")
