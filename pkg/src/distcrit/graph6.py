"""graph6 reading and writing.

Only plain graph6 is handled.  Upper-triangle bits are packed column by
column, x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per byte, offset by 63.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _payload_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: str | bytes, strict: bool = False) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty record")
    if text.startswith(">>sparse6<<") or text.startswith(":"):
        raise Graph6Error("sparse6 is not supported, only graph6")
    if text.startswith(">>digraph6<<") or text.startswith("&"):
        raise Graph6Error("digraph6 is not supported, only graph6")
    data = [ord(c) - 63 for c in text]
    for i, b in enumerate(data):
        if not 0 <= b <= 63:
            raise Graph6Error(f"byte {text[i]!r} at offset {i} outside printable range 63..126")

    if data[0] < 63:
        n, pos = data[0], 1
    else:
        if len(data) < 4:
            raise Graph6Error("truncated extended header")
        if data[1] == 63:
            if len(data) < 8:
                raise Graph6Error("truncated extended header")
            n = 0
            for b in data[2:8]:
                n = n << 6 | b
            pos = 8
        else:
            n = data[1] << 12 | data[2] << 6 | data[3]
            pos = 4
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds capacity {MAX_ORDER}")

    need = _payload_len(n)
    payload = data[pos:]
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: expected {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"trailing bytes: expected {need} payload bytes, got {len(payload)}")

    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if payload[k // 6] >> (5 - k % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    if strict and k % 6 and payload[-1] & ((1 << (6 - k % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    acc = nbits = 0
    for v in range(1, n):
        row = g.rows[v]
        for u in range(v):
            acc = acc << 1 | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return "".join(map(chr, out))


def stream_graph6(source: IO | Iterable[str | bytes], strict: bool = False) -> Iterator[Graph]:
    """Yield graphs from a line-oriented source, skipping blanks and '>>' comments."""
    for lineno, raw in enumerate(source, start=1):
        line = raw.decode("ascii", errors="replace") if isinstance(raw, bytes) else raw
        line = line.strip()
        if not line:
            continue
        if line.startswith(">>") and not line.startswith(HEADER):
            continue
        try:
            yield parse_graph6(line, strict=strict)
        except Graph6Error as exc:
            raise Graph6Error(str(exc), line=lineno) from None


def write_stream(graphs: Iterable[Graph], out: IO[str]) -> int:
    count = 0
    for g in graphs:
        out.write(write_graph6(g) + "\n")
        count += 1
    return count
