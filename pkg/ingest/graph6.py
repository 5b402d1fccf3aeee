"""
Lectura y escritura graph6 exacta bit a bit.

El tamaño se codifica como n+63 (n <= 62), '~' + 3 bytes (n <= 258047) o
'~~' + 6 bytes; después va el triángulo superior por columnas en trozos de
6 bits, cada uno +63, con relleno a cero. La cabecera ">>graph6<<" se acepta
y se ignora.
"""
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Tuple, Union

import networkx as nx

from graphcore import BadHeader, Graph, Graph6Error, TrailingGarbage, TruncatedBits
from events.event_bus import on_malformed_input
from utils.utils import Utils


GRAPH6_HEADER = b">>graph6<<"


def _as_bytes(line: Union[bytes, str]) -> bytes:
    if isinstance(line, str):
        try:
            line = line.encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6Error(f"non-ASCII character in graph6 line: {e}") from e
    return line.strip()


def _decode_size(data: bytes) -> Tuple[int, int]:
    """Returns (n, header length)."""
    if not data:
        raise BadHeader("empty graph6 line")
    if data[0] != 126:
        if not 63 <= data[0] <= 125:
            raise BadHeader(f"size byte {data[0]!r} outside 63..126")
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start:start + width]
    if len(chunk) < width:
        raise BadHeader(f"size header needs {width} bytes after '~', got {len(chunk)}")
    n = 0
    for byte in chunk:
        if not 63 <= byte <= 126:
            raise BadHeader(f"size byte {byte!r} outside 63..126")
        n = (n << 6) | (byte - 63)
    return n, start + width


def parse_graph6(line: Union[bytes, str]) -> Graph:
    """
    Decodes one graph6 line.

    Args:
        line: graph6 text, with or without trailing newline and ">>graph6<<" prefix.

    Returns:
        Graph with the encoded vertex order.

    Raises:
        BadHeader: Empty line or invalid size bytes.
        TruncatedBits: Fewer adjacency bytes than n requires.
        TrailingGarbage: Extra bytes or non-zero padding bits.
        Graph6Error: Adjacency byte outside 63..126.
    """
    data = _as_bytes(line)
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    n, offset = _decode_size(data)
    body = data[offset:]
    n_bits = n * (n - 1) // 2
    expected = (n_bits + 5) // 6
    if len(body) < expected:
        raise TruncatedBits(f"n={n} needs {expected} adjacency bytes, got {len(body)}")
    if len(body) > expected:
        raise TrailingGarbage(f"n={n} needs {expected} adjacency bytes, got {len(body)}")
    for byte in body:
        if not 63 <= byte <= 126:
            raise Graph6Error(f"adjacency byte {byte!r} outside 63..126")
    padding = expected * 6 - n_bits
    if padding and (body[-1] - 63) & ((1 << padding) - 1):
        raise TrailingGarbage("non-zero padding bits")
    return Graph.from_networkx(nx.from_graph6_bytes(data))


def write_graph6(g: Graph) -> bytes:
    """graph6 bytes of g without header or newline; vertex order is preserved."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n")


@dataclass
class Graph6Reader:
    """
    Streams graphs from graph6 lines. Malformed lines are logged, published
    as MALFORMED_INPUT events and counted instead of aborting the stream.

    Attributes:
        lines: Source lines (bytes or str).
        source: Name shown in logs, e.g. a file path.
        malformed: (line number, error) of every rejected line.
    """
    lines: Iterable[Union[bytes, str]]
    source: str = "stdin"
    malformed: List[Tuple[int, str]] = field(default_factory=list)

    def __iter__(self) -> Iterator[Graph]:
        for number, line in enumerate(self.lines, start=1):
            stripped = _as_bytes(line) if isinstance(line, bytes) else line.strip()
            if not stripped or stripped in (GRAPH6_HEADER, GRAPH6_HEADER.decode()):
                continue
            try:
                yield parse_graph6(stripped)
            except Graph6Error as e:
                where = f"{self.source}:{number}"
                self.malformed.append((number, str(e)))
                Utils.log("Ingest", f"⚠️ {where}: {e}")
                on_malformed_input(where, str(e))


def read_graph6_stream(lines: Iterable[Union[bytes, str]], source: str = "stdin") -> Graph6Reader:
    """Iterable over the valid graphs of a graph6 stream; see Graph6Reader."""
    return Graph6Reader(lines, source)
