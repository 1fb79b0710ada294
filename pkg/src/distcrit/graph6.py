"""graph6 text codec and a DOT exporter.

graph6 packs the upper triangle of the adjacency matrix in column order
((0,1), (0,2), (1,2), (0,3), ...) into 6-bit groups, each printed as the
ASCII character 63 + value.  The size header is chr(63 + n) for n <= 62
and '~' plus three 6-bit digits for larger n.  Encoding always emits the
minimal-length header and zero padding bits, so equal graphs map to equal
strings byte for byte.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, bits


class Graph6Error(ValueError):
    """Raised for malformed graph6 text; the message names the defect."""


def _data_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 string (no trailing newline) into a Graph."""
    if not text:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in text:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
        vals.append(o - 63)

    if vals[0] != 63:
        n = vals[0]
        pos = 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise Graph6Error("truncated long-form size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated long-form size header")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds supported {MAX_VERTICES}")

    need = _data_len(n)
    if len(vals) - pos < need:
        raise Graph6Error(f"truncated adjacency data: {len(vals) - pos} of {need} groups")
    if len(vals) - pos > need:
        raise Graph6Error(f"trailing characters after {need} adjacency groups")

    adj = [0] * n
    bit_index = 0
    nbits = n * (n - 1) // 2
    # column-major upper triangle: pair index k covers column j, row i
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for v in vals[pos:]:
        for k in range(5, -1, -1):
            bit = v >> k & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits")
                bit_index += 1
                continue
            if bit:
                i, j = pairs[bit_index]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit_index += 1
    return Graph(n, adj, check=False)


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 text: minimal size header, zero padding."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise Graph6Error(f"vertex count {n} exceeds supported {MAX_VERTICES}")
    out = list(head)
    group = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return "".join(map(chr, out))


def to_dot(g: Graph) -> str:
    """Graphviz DOT text; vertices 0..n-1, undirected edges, no attributes."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {x} -- {y};" for x, y in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
