"""graph6 encoding (the format used by nauty/geng), bit-exact."""

from __future__ import annotations

from .graph import Graph

HEADER = b">>graph6<<"


class MalformedGraph6(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, header length)."""
    if not data:
        raise MalformedGraph6("empty input")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated size field")
        chunks, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated size field")
        chunks, start = data[1:4], 4
    n = 0
    for c in chunks:
        if not 63 <= c <= 126:
            raise MalformedGraph6(f"bad size byte {c}")
        n = (n << 6) | (c - 63)
    return n, start


def encode(G: Graph) -> bytes:
    """Upper triangle in column order, packed 6 bits per byte, offset by 63."""
    out = bytearray(_encode_n(G.n))
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if data[:1] in (b":", b";", b"&"):
        raise MalformedGraph6("sparse6/digraph6 input is not graph6")
    n, pos = _decode_n(data)
    if n < 0:
        raise MalformedGraph6("bad size byte")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) != need:
        raise MalformedGraph6(f"expected {need} payload bytes for n={n}, got {len(payload)}")
    adj = [0] * n
    k = 0
    bits = []
    for c in payload:
        if not 63 <= c <= 126:
            raise MalformedGraph6(f"bad payload byte {c}")
        x = c - 63
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    return Graph(n, tuple(adj))


def read_file(path) -> list[Graph]:
    with open(path, "rb") as fh:
        return [decode(line) for line in fh if line.strip()]
