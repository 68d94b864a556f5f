"""Graph-algorithm primitives that compute ground-truth answers.

All operations are pure and read-only over a GraphSpec. A GraphIndex caches
the derived lookup tables (adjacency, name maps, line membership) so batch
question generation does not rebuild them per call; every public operation
accepts either a GraphSpec or a prebuilt GraphIndex.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .model import EdgeSpec, GraphSpec, NodeSpec, adjacency


@dataclass(frozen=True)
class NodePredicate:
    """Match nodes whose attribute equals (or, negated, differs from) a value."""

    attr_key: str
    expected: object
    negate: bool = False

    def matches(self, node: NodeSpec) -> bool:
        hit = node.attrs[self.attr_key] == self.expected
        return not hit if self.negate else hit


@dataclass(frozen=True)
class PathResult:
    node_sequence: tuple[str, ...]

    @property
    def hop_count(self) -> int:
        return len(self.node_sequence) - 1


class GraphIndex:
    """Read-only lookup tables derived from one GraphSpec."""

    def __init__(self, g: GraphSpec):
        self.graph = g
        self.adj = adjacency(g)
        self.nodes_by_id = {n.id: n for n in g.nodes}
        self.nodes_by_name = {n.name: n for n in g.nodes}
        self.lines_by_id = {ln.id: ln for ln in g.lines}
        self.lines_by_name = {ln.name: ln for ln in g.lines}
        # line membership via non-connector edges, in edge storage order
        self._line_stations: dict[str, list[str]] = {ln.id: [] for ln in g.lines}
        self._node_lines: dict[str, list[str]] = {n.id: [] for n in g.nodes}
        for e in g.edges:
            if e.is_connector or e.line_id is None:
                continue
            for nid in (e.endpoint_a, e.endpoint_b):
                stations = self._line_stations[e.line_id]
                if nid not in stations:
                    stations.append(nid)
                lines = self._node_lines[nid]
                if e.line_id not in lines:
                    lines.append(e.line_id)

    @staticmethod
    def of(g) -> "GraphIndex":
        return g if isinstance(g, GraphIndex) else GraphIndex(g)

    def node(self, node_id: str) -> NodeSpec:
        return self.nodes_by_id[node_id]

    def line_station_ids(self, line_id: str) -> list[str]:
        return self._line_stations[line_id]

    def node_line_ids(self, node_id: str) -> list[str]:
        return self._node_lines[node_id]

    def edge_between(self, a: str, b: str) -> EdgeSpec | None:
        """First stored edge joining the pair, ignoring line multiplicity."""
        want = frozenset((a, b))
        for e in self.graph.edges:
            if e.pair() == want:
                return e
        return None


def _require_nodes(gi: GraphIndex, *node_ids: str) -> None:
    for nid in node_ids:
        if nid not in gi.nodes_by_id:
            raise KeyError(f"unknown node id: {nid!r}")


def shortest_path(g, src: str, dst: str, avoid: NodePredicate | None = None) -> PathResult | None:
    """Minimal-hop path whose interior nodes all fail the avoid predicate.

    Endpoints are exempt from the predicate. Among equal-length paths the
    lexicographically smallest node-id sequence wins. Returns None when dst
    is unreachable under the constraint.
    """
    gi = GraphIndex.of(g)
    _require_nodes(gi, src, dst)
    if src == dst:
        return PathResult((src,))

    def allowed(nid: str) -> bool:
        if nid == src or nid == dst:
            return True
        return avoid is None or not avoid.matches(gi.node(nid))

    # BFS from dst gives every node its remaining distance; the greedy
    # min-id descent from src then picks the lexicographically smallest
    # sequence among all minimal-hop paths.
    dist = {dst: 0}
    queue = deque([dst])
    while queue:
        cur = queue.popleft()
        for v in gi.adj[cur]:
            if v not in dist and allowed(v):
                dist[v] = dist[cur] + 1
                queue.append(v)
    if src not in dist:
        return None
    seq = [src]
    cur = src
    while cur != dst:
        cur = min(v for v in gi.adj[cur] if allowed(v) and dist.get(v) == dist[cur] - 1)
        seq.append(cur)
    return PathResult(tuple(seq))


def count_between(g, src: str, dst: str, avoid: NodePredicate | None = None) -> int | None:
    """Number of stations strictly between the endpoints on the shortest path."""
    path = shortest_path(g, src, dst, avoid)
    if path is None:
        return None
    return max(path.hop_count - 1, 0)


def distinct_routes(g, src: str, dst: str, cap: int = 64) -> int | None:
    """Count simple paths from src to dst by DFS, or None once cap is hit."""
    gi = GraphIndex.of(g)
    _require_nodes(gi, src, dst)
    if src == dst:
        raise ValueError("distinct_routes requires src != dst")
    count = 0
    on_path = {src}
    stack: list[tuple[str, list[str]]] = [(src, list(gi.adj[src]))]
    while stack:
        cur, pending = stack[-1]
        if not pending:
            stack.pop()
            on_path.discard(cur)
            continue
        nxt = pending.pop()
        if nxt == dst:
            count += 1
            if count >= cap:
                return None
            continue
        if nxt in on_path:
            continue
        on_path.add(nxt)
        stack.append((nxt, list(gi.adj[nxt])))
    return count


def in_cycle(g, v: str) -> bool:
    """True iff v lies on some simple cycle of length >= 3.

    Equivalent test: two distinct neighbors of v stay connected in G - v.
    Parallel edges do not count as cycles.
    """
    gi = GraphIndex.of(g)
    _require_nodes(gi, v)
    neighbors = gi.adj[v]
    if len(neighbors) < 2:
        return False
    comp: dict[str, int] = {}
    label = 0
    for start in neighbors:
        if start in comp:
            continue
        stack = [start]
        comp[start] = label
        while stack:
            cur = stack.pop()
            for u in gi.adj[cur]:
                if u != v and u not in comp:
                    comp[u] = label
                    stack.append(u)
        label += 1
    return len({comp[u] for u in neighbors}) < len(neighbors)


def k_hop_count(g, v: str, k: int) -> int:
    """Number of other nodes within k hops of v."""
    if k < 1:
        raise ValueError("k must be >= 1")
    gi = GraphIndex.of(g)
    _require_nodes(gi, v)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        cur = queue.popleft()
        if dist[cur] == k:
            continue
        for u in gi.adj[cur]:
            if u not in dist:
                dist[u] = dist[cur] + 1
                queue.append(u)
    return len(dist) - 1


def most_common(values: list) -> object | None:
    """Modal value; None on empty input or a tie for the top count."""
    if not values:
        return None
    counts = Counter(values)
    ranked = counts.most_common()
    if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
        return None
    return ranked[0][0]


def line_stations(g, line_id: str) -> list[str]:
    """Node ids incident to a non-connector edge of the line, in first-seen order."""
    gi = GraphIndex.of(g)
    if line_id not in gi.lines_by_id:
        raise KeyError(f"unknown line id: {line_id!r}")
    return list(gi.line_station_ids(line_id))


def filter_count(g, node_ids: list[str], pred: NodePredicate) -> int:
    gi = GraphIndex.of(g)
    return sum(1 for nid in node_ids if pred.matches(gi.node(nid)))


def path_attr_aggregate(g, path: PathResult, attr_key: str, mode: str, on: str = "edge"):
    """Aggregate one attribute along a path.

    on="edge" reads the first stored edge joining each consecutive pair;
    on="node" reads every node on the path, endpoints included. Modes:
    most_common (tie -> None), min, max (extreme original value by numeric
    order when values parse as ints), and span (max - min as a number).
    """
    gi = GraphIndex.of(g)
    if on == "edge":
        values = []
        for a, b in zip(path.node_sequence, path.node_sequence[1:]):
            edge = gi.edge_between(a, b)
            if edge is None:
                raise ValueError(f"path nodes {a!r}, {b!r} are not adjacent")
            values.append(edge.attrs[attr_key])
    elif on == "node":
        values = [gi.node(nid).attrs[attr_key] for nid in path.node_sequence]
    else:
        raise ValueError(f"unknown aggregation target: {on!r}")
    if mode == "most_common":
        return most_common(values)
    numeric = [int(v) for v in values]
    if mode == "min":
        return values[numeric.index(min(numeric))]
    if mode == "max":
        return values[numeric.index(max(numeric))]
    if mode == "span":
        return max(numeric) - min(numeric)
    raise ValueError(f"unknown aggregation mode: {mode!r}")


def line_intersection_count(g, line_a: str, line_b: str) -> int:
    gi = GraphIndex.of(g)
    if line_a == line_b:
        raise ValueError("line_intersection_count requires distinct lines")
    for lid in (line_a, line_b):
        if lid not in gi.lines_by_id:
            raise KeyError(f"unknown line id: {lid!r}")
    return len(set(gi.line_station_ids(line_a)) & set(gi.line_station_ids(line_b)))


def compare_by_count(label_a: str, count_a: int, label_b: str, count_b: int) -> str | None:
    """Label with the strictly greater count; None on a tie."""
    if count_a > count_b:
        return label_a
    if count_b > count_a:
        return label_b
    return None


def common_neighbors(g, a: str, b: str) -> list[str]:
    """Nodes adjacent to both a and b (excluding a and b), sorted."""
    gi = GraphIndex.of(g)
    _require_nodes(gi, a, b)
    shared = set(gi.adj[a]) & set(gi.adj[b])
    shared.discard(a)
    shared.discard(b)
    return sorted(shared)
