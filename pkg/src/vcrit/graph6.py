"""graph6 encoding and decoding.

Layout: a size prefix N(n), then the upper triangle of the adjacency matrix
read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
big-endian into 6-bit groups, zero padded, each group offset by 63.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 258047


class Graph6Error(ValueError):
    pass


def _size_prefix(n: int) -> str:
    if n < 0:
        raise Graph6Error(f"negative order {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= MAX_ORDER:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_ORDER}")


def encode_graph6(g: Graph) -> str:
    n = g.n
    out = [_size_prefix(n)]
    acc = 0
    width = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = 0
                width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def _decode_size(data: str) -> tuple[int, int]:
    """Return (n, number of characters consumed by the prefix)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != "~":
        return ord(data[0]) - 63, 1
    if len(data) >= 2 and data[1] == "~":
        if len(data) < 8:
            raise Graph6Error("malformed size prefix: truncated 8-byte form")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (ord(c) - 63)
        if n <= MAX_ORDER:
            raise Graph6Error(f"malformed size prefix: 8-byte form used for order {n}")
        raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if len(data) < 4:
        raise Graph6Error("malformed size prefix: truncated 4-byte form")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (ord(c) - 63)
    if n <= 62:
        raise Graph6Error(f"malformed size prefix: 4-byte form used for order {n}")
    return n, 4


def decode_graph6(s: str) -> Graph:
    data = s.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    for pos, c in enumerate(data):
        if not 63 <= ord(c) <= 126:
            raise Graph6Error(f"character {c!r} at position {pos} outside the graph6 range 63..126")
    n, start = _decode_size(data)
    body = data[start:]
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) < need:
        raise Graph6Error(f"truncated bit vector: expected {need} characters for order {n}, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data: expected {need} characters for order {n}, got {len(body)}")
    pad = need * 6 - nbits
    if pad and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    groups = [ord(c) - 63 for c in body]
    for j in range(1, n):
        for i in range(j):
            if groups[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(rows))


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in lines:
        line = line.strip()
        if line:
            yield decode_graph6(line)


def write_graph6(graphs: Iterable[Graph], fh: IO[str]) -> None:
    for g in graphs:
        fh.write(encode_graph6(g) + "\n")
