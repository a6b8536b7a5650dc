"""graph6 text codec: 6-bit chunks of the upper-triangular adjacency matrix,
column-major, offset 63.  One graph per line is the interchange convention
used by the CLI and the test fixtures.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, build_graph


class Graph6Error(ValueError):
    """Malformed graph6 input."""


_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    raise Graph6Error(f"order {n} exceeds the supported graph6 range")


def _decode_order(s: str) -> tuple[int, int]:
    """Return (n, number of characters consumed)."""
    if not s:
        raise Graph6Error("empty graph6 string")
    c0 = ord(s[0])
    if c0 == 126:  # '~'
        if len(s) >= 2 and ord(s[1]) == 126:
            raise Graph6Error("graph6 orders above 258047 are not supported")
        if len(s) < 4:
            raise Graph6Error("truncated multi-byte order field")
        n = 0
        for ch in s[1:4]:
            v = ord(ch) - 63
            if not 0 <= v <= 63:
                raise Graph6Error(f"character {ch!r} out of graph6 range")
            n = (n << 6) | v
        return n, 4
    if not 63 <= c0 <= 126:
        raise Graph6Error(f"character {s[0]!r} out of graph6 range")
    return c0 - 63, 1


def graph6_encode(g: Graph) -> str:
    """Encode a graph; inverse of graph6_decode up to vertex order."""
    n = g.n
    bits: list[int] = []
    for v in range(1, n):
        row = g.adj[v]
        row_set = set(row)
        for u in range(v):
            bits.append(1 if u in row_set else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [_encode_order(n)]
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i:i + 6]:
            chunk = (chunk << 1) | b
        chars.append(chr(chunk + 63))
    return "".join(chars)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    n, consumed = _decode_order(s)
    body = s[consumed:]
    nbits = n * (n - 1) // 2
    expected_chars = (nbits + 5) // 6
    if len(body) != expected_chars:
        raise Graph6Error(
            f"body length {len(body)} does not match order {n} (expected {expected_chars} characters)"
        )
    bits: list[int] = []
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"character {ch!r} out of graph6 range")
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    try:
        return build_graph(n, edges)
    except GraphError as exc:  # pragma: no cover - decoder never produces these
        raise Graph6Error(str(exc)) from exc


def write_graph6_lines(graphs) -> str:
    return "".join(graph6_encode(g) + "\n" for g in graphs)


def read_graph6_lines(text: str) -> list[Graph]:
    return [graph6_decode(line) for line in text.splitlines() if line.strip()]
