"""graph6 reading and writing (orders up to 62, single-byte order field)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 record; ``offset`` is the byte index of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def parse_graph6(line: str) -> Graph:
    text = line.rstrip("\r\n")
    base = 0
    if text.startswith(HEADER):
        text = text[len(HEADER):]
        base = len(HEADER)
    if not text:
        raise Graph6Error("empty record", base)
    n = ord(text[0]) - 63
    if n < 0 or n > MAX_ORDER:
        raise Graph6Error(f"order byte {text[0]!r} out of range", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, found {len(body)}",
                          base + 1 + min(len(body), nbytes))
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for pos, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"byte {ch!r} outside graph6 range", base + 1 + pos)
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k >= nbits:
                if bit:
                    raise Graph6Error("non-zero padding bit", base + 1 + pos)
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, tuple(adj))


def serialize_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise ValueError(f"graph6 writer supports n <= {MAX_ORDER}, got {n}")
    out = [chr(n + 63)]
    adj = g.adj
    val = 0
    filled = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            val = (val << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(val + 63))
                val = 0
                filled = 0
    if filled:
        out.append(chr((val << (6 - filled)) + 63))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(iter_graph6(fh))


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(serialize_graph6(g) + "\n")
