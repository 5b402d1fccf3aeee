"""
Ingesta de listas de aristas (SNAP, Network Repository / Matrix Market) y
extracción de la componente conexa mayor.
"""
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, Hashable, Iterable, List, Optional, Tuple, Union

from pydantic import BaseModel

from graphcore import EdgeListError, Graph, build_graph
from utils.utils import Utils


MATRIX_MARKET_BANNER = "%%MatrixMarket"


class EdgeListOptions(BaseModel):
    """
    Attributes:
        numeric: Labels must be integers (error otherwise); string labels when False.
        first_two_columns: Keep the first two tokens of each line (weighted lists).
        matrix_market: Skip the size line of a Matrix Market coordinate file.
            None detects it from the "%%MatrixMarket" banner.
    """
    numeric: bool = False
    first_two_columns: bool = False
    matrix_market: Optional[bool] = None


@dataclass(frozen=True)
class LabeledGraph:
    """
    Graph plus the external labels of its vertices.

    Attributes:
        graph: Graph on dense ids.
        labels: labels[v] is the external label of vertex v.
        duplicates: Repeated edges dropped while parsing.
        self_loops: Self-loops dropped while parsing.
        dropped: Vertices removed by largest_component.
    """
    graph: Graph
    labels: Tuple[Hashable, ...]
    duplicates: int = 0
    self_loops: int = 0
    dropped: int = 0
    _index: Dict[Hashable, int] = field(default_factory=dict, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise EdgeListError(f"{len(self.labels)} labels for {self.graph.n} vertices")
        if not self._index:
            self._index.update({label: v for v, label in enumerate(self.labels)})
        if len(self._index) != len(self.labels):
            raise EdgeListError("labels are not unique")

    def id_of(self, label: Hashable) -> int:
        return self._index[label]

    def label_of(self, v: int) -> Hashable:
        return self.labels[v]

    def labeled_edges(self) -> List[Tuple[Hashable, Hashable]]:
        return [(self.labels[u], self.labels[v]) for u, v in self.graph.edges()]

    def to_dict(self) -> dict:
        return {
            'n': self.graph.n,
            'm': self.graph.edge_count,
            'duplicates': self.duplicates,
            'self_loops': self.self_loops,
            'dropped': self.dropped,
        }


def _label(token: str, numeric: bool, where: str) -> Hashable:
    if not numeric:
        return token
    try:
        return int(token)
    except ValueError:
        raise EdgeListError(f"{where}: non-numeric label {token!r}") from None


def parse_edge_list(
    lines: Iterable[str],
    options: Optional[EdgeListOptions] = None,
    source: str = "edges",
) -> LabeledGraph:
    """
    Parses a whitespace-separated edge list.

    Lines starting with '#' or '%' are comments. Labels get dense ids in
    first-seen order; duplicate edges (in either direction) and self-loops are
    dropped and counted.

    Args:
        lines: Text lines.
        options: Parsing options.
        source: Name used in error messages.

    Raises:
        EdgeListError: Odd token count, missing columns or non-numeric label in numeric mode.
    """
    options = options or EdgeListOptions()
    index: Dict[Hashable, int] = {}
    labels: List[Hashable] = []
    edges = set()
    duplicates = self_loops = 0
    matrix_market = options.matrix_market
    size_line_pending = bool(matrix_market)

    def intern(label: Hashable) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if number == 1 and matrix_market is None and line.startswith(MATRIX_MARKET_BANNER):
            matrix_market = size_line_pending = True
        if not line or line[0] in "#%":
            continue
        if size_line_pending:
            size_line_pending = False
            continue
        where = f"{source}:{number}"
        tokens = line.split()
        if options.first_two_columns:
            if len(tokens) < 2:
                raise EdgeListError(f"{where}: expected at least two columns, got {len(tokens)}")
            tokens = tokens[:2]
        elif len(tokens) % 2:
            raise EdgeListError(f"{where}: odd token count ({len(tokens)})")
        for i in range(0, len(tokens), 2):
            u = intern(_label(tokens[i], options.numeric, where))
            v = intern(_label(tokens[i + 1], options.numeric, where))
            if u == v:
                self_loops += 1
                continue
            key = (u, v) if u < v else (v, u)
            if key in edges:
                duplicates += 1
            else:
                edges.add(key)

    graph = build_graph(len(labels), edges)
    if duplicates or self_loops:
        Utils.log("Ingest", f"{source}: dropped {duplicates} duplicate edges and {self_loops} self-loops")
    return LabeledGraph(graph, tuple(labels), duplicates=duplicates, self_loops=self_loops)


def load_edge_list(path: Union[str, Path], options: Optional[EdgeListOptions] = None) -> LabeledGraph:
    """Reads an edge-list file (UTF-8). `.mtx` files are read as Matrix Market."""
    path = Path(path)
    options = options or EdgeListOptions()
    if options.matrix_market is None and path.suffix == ".mtx":
        options = options.model_copy(update={'matrix_market': True})
    with open(path, "r", encoding="utf-8") as f:
        return parse_edge_list(f, options, source=path.name)


def largest_component(lg: LabeledGraph) -> LabeledGraph:
    """
    Induced subgraph on the largest connected component, labels preserved.
    Ties go to the component holding the smallest label; `dropped` counts
    the removed vertices.
    """
    components = lg.graph.components()
    if len(components) <= 1:
        return lg
    size = max(len(c) for c in components)
    candidates = [c for c in components if len(c) == size]
    chosen = min(candidates, key=lambda comp: min(lg.labels[v] for v in comp))
    sub, kept = lg.graph.induced_subgraph(chosen)
    return replace(
        lg,
        graph=sub,
        labels=tuple(lg.labels[v] for v in kept),
        dropped=lg.graph.n - sub.n,
        _index={},
    )


def format_edge_list(lg: LabeledGraph) -> str:
    """One "u v" line per edge, preceded by a '#' summary line."""
    lines = [f"# n={lg.graph.n} m={lg.graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in lg.labeled_edges())
    return "\n".join(lines) + "\n"
