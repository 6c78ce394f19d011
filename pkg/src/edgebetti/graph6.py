"""graph6 text codec for interchange with standard graph-enumeration tools.

Only the short single-byte-size form (n <= 62) is implemented; the library's
own vertex ceiling is 31.  Decoding is strict: size and payload length must
match exactly and padding bits must be zero.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph


class Graph6Error(ValueError):
    pass


def _pair_bits(n: int):
    """Upper-triangle bit order used by the format: column by column."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def graph6_encode(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("graph6 short form supports at most 62 vertices")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for i, j in _pair_bits(g.n):
        acc = (acc << 1) | (g.rows[j] >> i & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = 0
            nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    if not text:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in text):
        raise Graph6Error("graph6 characters must be in the range 63..126")
    n = ord(text[0]) - 63
    if n == 63:
        raise Graph6Error("multi-byte graph6 sizes not supported")
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph on {n} vertices exceeds the ceiling {MAX_VERTICES}")
    npairs = n * (n - 1) // 2
    expect = (npairs + 5) // 6
    payload = text[1:]
    if len(payload) != expect:
        raise Graph6Error(
            f"payload length {len(payload)} does not match {expect} for n={n}"
        )
    bits = 0
    for c in payload:
        bits = (bits << 6) | (ord(c) - 63)
    pad = 6 * expect - npairs
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    for t, (i, j) in enumerate(_pair_bits(n)):
        if bits >> (npairs - 1 - t) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))
