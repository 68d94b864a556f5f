"""Core graph-domain types, structural validation, and JSON persistence.

A GraphSpec is immutable after construction; every downstream module (question
forging, textualization, evaluation) treats it as read-only shared data.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import vocab

TRANSIT = "transit"
NETWORK = "network"
DOMAINS = (TRANSIT, NETWORK)
SIZE_CLASSES = ("standard", "large")


@dataclass(frozen=True)
class LineSpec:
    id: str
    name: str
    color: str
    stroke: str
    built: str
    has_aircon: bool

    def edge_attrs(self) -> dict:
        """Attribute dict inherited by this line's edges."""
        return {
            "line_name": self.name,
            "line_color": self.color,
            "line_stroke": self.stroke,
            "line_has_aircon": self.has_aircon,
            "line_built": self.built,
        }


@dataclass(frozen=True)
class NodeSpec:
    id: str
    name: str
    x: float
    y: float
    attrs: dict


@dataclass(frozen=True)
class EdgeSpec:
    endpoint_a: str
    endpoint_b: str
    line_id: str | None
    attrs: dict
    is_connector: bool = False

    def pair(self) -> frozenset:
        return frozenset((self.endpoint_a, self.endpoint_b))


@dataclass(frozen=True)
class GraphSpec:
    domain: str
    seed: int
    size_class: str
    lines: tuple[LineSpec, ...]
    nodes: tuple[NodeSpec, ...]
    edges: tuple[EdgeSpec, ...]


@dataclass(frozen=True)
class GenConfig:
    """Knobs for one graph generation run; all randomness derives from seed."""

    domain: str
    seed: int
    size_class: str = "standard"
    # transit
    n_lines: int = 6
    stations_per_line: int = 6
    # shared geometry
    map_radius: float = 10.0
    merge_threshold: float = 1.25
    coord_noise_sigma: float = 0.2
    # network
    avg_degree: float = 4.0
    n_nodes: int = 24
    integer_names: bool = False

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise ValueError(f"unknown domain: {self.domain!r}")
        if self.size_class not in SIZE_CLASSES:
            raise ValueError(f"unknown size_class: {self.size_class!r}")
        if self.map_radius <= 0:
            raise ValueError("map_radius must be > 0")
        if self.merge_threshold < 0:
            raise ValueError("merge_threshold must be >= 0")
        if self.domain == TRANSIT and (self.n_lines < 1 or self.stations_per_line < 1):
            raise ValueError("n_lines and stations_per_line must be >= 1")
        if self.domain == NETWORK and (self.n_nodes < 1 or self.avg_degree < 1):
            raise ValueError("n_nodes and avg_degree must be >= 1")


def adjacency(g: GraphSpec) -> dict[str, list[str]]:
    """Undirected neighbor map, deduplicated across parallel edges.

    Neighbor lists are sorted; every node appears as a key (isolated nodes
    map to an empty list). Unknown-node lookups fail as plain KeyErrors.
    """
    neigh: dict[str, set[str]] = {n.id: set() for n in g.nodes}
    for e in g.edges:
        if e.endpoint_a == e.endpoint_b:
            continue
        neigh[e.endpoint_a].add(e.endpoint_b)
        neigh[e.endpoint_b].add(e.endpoint_a)
    return {nid: sorted(s) for nid, s in neigh.items()}


def connected_components(g: GraphSpec) -> list[list[str]]:
    """Components as node-id lists, ordered by first appearance in g.nodes."""
    adj = adjacency(g)
    seen: set[str] = set()
    comps: list[list[str]] = []
    for n in g.nodes:
        if n.id in seen:
            continue
        comp = []
        stack = [n.id]
        seen.add(n.id)
        while stack:
            cur = stack.pop()
            comp.append(cur)
            for v in adj[cur]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(comp)
    return comps


def is_connected(g: GraphSpec) -> bool:
    return len(connected_components(g)) <= 1


def validate_graph(g: GraphSpec) -> list[str]:
    """Check every structural invariant; return violations (empty when valid).

    Violations are data, not exceptions: each entry names the broken
    invariant and the offending entity id.
    """
    violations: list[str] = []

    line_ids = [ln.id for ln in g.lines]
    if len(set(line_ids)) != len(line_ids):
        dupes = sorted({i for i in line_ids if line_ids.count(i) > 1})
        violations.append(f"duplicate line id: {', '.join(dupes)}")
    seen_pairs: dict[tuple[str, str], str] = {}
    for ln in g.lines:
        key = (ln.color, ln.stroke)
        if key in seen_pairs:
            violations.append(
                f"duplicate color/stroke pair: {ln.color}/{ln.stroke} "
                f"on lines {seen_pairs[key]} and {ln.id}"
            )
        else:
            seen_pairs[key] = ln.id
    line_names = [ln.name for ln in g.lines]
    if len(set(line_names)) != len(line_names):
        violations.append("duplicate line name")

    node_ids = [n.id for n in g.nodes]
    if len(set(node_ids)) != len(node_ids):
        violations.append("duplicate node id")
    node_names = [n.name for n in g.nodes]
    if len(set(node_names)) != len(node_names):
        violations.append("duplicate node name")

    schema = set(vocab.node_schema(g.domain))
    for n in g.nodes:
        if set(n.attrs.keys()) != schema:
            violations.append(f"attribute schema mismatch: node {n.id}")

    known = set(node_ids)
    lines_by_id = {ln.id: ln for ln in g.lines}
    edge_keys = set(vocab.edge_schema(g.domain))
    seen_triples: set[tuple[frozenset, str | None]] = set()
    for e in g.edges:
        tag = f"{e.endpoint_a}-{e.endpoint_b}"
        if e.endpoint_a == e.endpoint_b:
            violations.append(f"self-loop edge: {tag}")
        if e.endpoint_a not in known or e.endpoint_b not in known:
            violations.append(f"dangling edge endpoint: {tag}")
        if set(e.attrs.keys()) != edge_keys:
            violations.append(f"attribute schema mismatch: edge {tag}")
        triple = (e.pair(), e.line_id)
        if triple in seen_triples:
            violations.append(f"duplicate edge triple: {tag} line {e.line_id}")
        seen_triples.add(triple)
        if g.domain == TRANSIT:
            line = lines_by_id.get(e.line_id)
            if line is None:
                violations.append(f"edge references unknown line: {tag} line {e.line_id}")
            else:
                expected = line.edge_attrs()
                if e.is_connector:
                    expected["line_stroke"] = "dotted"
                if e.attrs != expected:
                    violations.append(f"edge attrs do not match parent line: {tag}")
        else:
            if e.line_id is not None:
                violations.append(f"network edge has line_id: {tag}")

    if g.domain == NETWORK and g.lines:
        violations.append("network graph has lines")

    if not is_connected(g):
        violations.append("graph not connected")

    return violations


# -- JSON persistence ---------------------------------------------------------
# Key order is part of the on-disk contract:
# {"domain","seed","size_class","lines":[...],"nodes":[...],"edges":[...]}


def graph_to_dict(g: GraphSpec) -> dict:
    return {
        "domain": g.domain,
        "seed": g.seed,
        "size_class": g.size_class,
        "lines": [asdict(ln) for ln in g.lines],
        "nodes": [asdict(n) for n in g.nodes],
        "edges": [asdict(e) for e in g.edges],
    }


def graph_from_dict(d: dict) -> GraphSpec:
    return GraphSpec(
        domain=d["domain"],
        seed=d["seed"],
        size_class=d["size_class"],
        lines=tuple(LineSpec(**ln) for ln in d["lines"]),
        nodes=tuple(NodeSpec(**n) for n in d["nodes"]),
        edges=tuple(EdgeSpec(**e) for e in d["edges"]),
    )
