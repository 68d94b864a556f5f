"""Six-stage subway-map generator.

Stages: line synthesis, station placement along cubic Bezier curves, spatial
coalescing of nearby stations into interchanges, per-line edge construction,
connectivity assurance via dotted connector edges, and optional replacement
of all names with unique integer strings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import vocab
from .coalesce import MergeMap, coalesce
from .model import (
    TRANSIT,
    EdgeSpec,
    GenConfig,
    GraphSpec,
    LineSpec,
    NodeSpec,
    connected_components,
)
from .rng import seeded_rng


@dataclass(frozen=True)
class StationDraft:
    """A pre-merge station: one sampled point on one line's curve."""

    provisional_id: str
    line_id: str
    order_on_line: int
    x: float
    y: float
    name: str
    attrs: dict

    @property
    def id(self) -> str:
        return self.provisional_id


def bezier_point(control: list[tuple[float, float]], t: float) -> tuple[float, float]:
    """Evaluate a cubic Bezier curve with 4 control points at parameter t."""
    if len(control) != 4:
        raise ValueError("cubic Bezier needs exactly 4 control points")
    (x0, y0), (x1, y1), (x2, y2), (x3, y3) = control
    u = 1.0 - t
    b0, b1, b2, b3 = u**3, 3 * u**2 * t, 3 * u * t**2, t**3
    return (
        b0 * x0 + b1 * x1 + b2 * x2 + b3 * x3,
        b0 * y0 + b1 * y1 + b2 * y2 + b3 * y3,
    )


def point_in_disk(rng: np.random.Generator, radius: float) -> tuple[float, float]:
    """Draw one point uniformly from the disk of the given radius."""
    r = radius * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return (r * math.cos(theta), r * math.sin(theta))


def sample_station_attrs(rng: np.random.Generator) -> dict:
    return {
        "disabled_access": bool(rng.random() < 0.5),
        "has_rail": bool(rng.random() < 0.5),
        "music": str(rng.choice(vocab.MUSIC)),
        "architecture": str(rng.choice(vocab.ARCHITECTURE)),
        "size": str(rng.choice(vocab.SIZES)),
        "cleanliness": str(rng.choice(vocab.CLEANLINESS)),
    }


def sample_unused_name(
    rng: np.random.Generator,
    firsts: tuple[str, ...],
    seconds: tuple[str, ...],
    used: set[str],
) -> str:
    """Draw an unused "{first} {second}" name; mutates `used`."""
    capacity = len(firsts) * len(seconds)
    if len(used) >= capacity:
        raise ValueError("name vocabulary exhausted")
    while True:
        name = f"{rng.choice(firsts)} {rng.choice(seconds)}"
        if name not in used:
            used.add(name)
            return name


def gen_lines(cfg: GenConfig, rng: np.random.Generator) -> list[LineSpec]:
    """Create cfg.n_lines lines with unique names and (color, stroke) pairs."""
    pairs = [(c, s) for c in vocab.COLORS for s in vocab.STROKES]
    if cfg.n_lines > len(pairs):
        raise ValueError(
            f"n_lines={cfg.n_lines} exceeds {len(pairs)} distinct color/stroke pairs"
        )
    chosen = rng.choice(len(pairs), size=cfg.n_lines, replace=False)
    used_names: set[str] = set()
    lines = []
    for i, pair_idx in enumerate(chosen):
        color, stroke = pairs[int(pair_idx)]
        name = sample_unused_name(rng, vocab.LINE_WORDS, vocab.LINE_SUFFIXES, used_names)
        built = str(int(rng.integers(vocab.BUILT_YEAR_MIN, vocab.BUILT_YEAR_MAX + 1)))
        lines.append(
            LineSpec(
                id=f"l{i}",
                name=name,
                color=color,
                stroke=stroke,
                built=built,
                has_aircon=bool(rng.random() < 0.5),
            )
        )
    return lines


def place_stations(
    line: LineSpec,
    cfg: GenConfig,
    rng: np.random.Generator,
    *,
    id_offset: int = 0,
    used_names: set[str] | None = None,
    control_points: list[tuple[float, float]] | None = None,
) -> list[StationDraft]:
    """Place cfg.stations_per_line drafts along a random cubic Bezier curve.

    Stations sit at evenly spaced curve parameters t_i = i/(k-1), each nudged
    by independent N(0, coord_noise_sigma^2) noise on x and y. Control points
    default to 4 uniform draws from the map-radius disk; tests may inject them.
    """
    k = cfg.stations_per_line
    if k < 2:
        raise ValueError("stations_per_line must be >= 2")
    if control_points is None:
        control_points = [point_in_disk(rng, cfg.map_radius) for _ in range(4)]
    if used_names is None:
        used_names = set()
    drafts = []
    for i in range(k):
        t = i / (k - 1)
        x, y = bezier_point(control_points, t)
        x += float(rng.normal(0.0, cfg.coord_noise_sigma))
        y += float(rng.normal(0.0, cfg.coord_noise_sigma))
        name = sample_unused_name(rng, vocab.STATION_ADJECTIVES, vocab.STATION_NOUNS, used_names)
        drafts.append(
            StationDraft(
                provisional_id=f"s{id_offset + i}",
                line_id=line.id,
                order_on_line=i,
                x=x,
                y=y,
                name=name,
                attrs=sample_station_attrs(rng),
            )
        )
    return drafts


def coalesce_stations(
    drafts: list[StationDraft], threshold: float
) -> tuple[list[NodeSpec], MergeMap]:
    """Merge drafts within the threshold (transitively) into single nodes.

    Each merge class survives as its lowest-provisional-id member, keeping
    that member's id, coordinates, name, and attributes.
    """
    survivors, merge_map = coalesce(drafts, threshold)
    nodes = [
        NodeSpec(id=d.provisional_id, name=d.name, x=d.x, y=d.y, attrs=d.attrs)
        for d in survivors
    ]
    return nodes, merge_map


def build_edges(
    line_orders: dict[str, list[str]],
    merge_map: MergeMap,
    lines: list[LineSpec],
) -> list[EdgeSpec]:
    """Link consecutive surviving stations along each line.

    Consecutive drafts that merged into the same node produce no edge, and a
    (pair, line) combination is emitted at most once.
    """
    lines_by_id = {ln.id: ln for ln in lines}
    edges: list[EdgeSpec] = []
    seen: set[tuple[frozenset, str]] = set()
    for line_id, order in line_orders.items():
        line = lines_by_id[line_id]
        reps = [merge_map.resolve(pid) for pid in order]
        for a, b in zip(reps, reps[1:]):
            if a == b:
                continue
            key = (frozenset((a, b)), line_id)
            if key in seen:
                continue
            seen.add(key)
            edges.append(
                EdgeSpec(
                    endpoint_a=a,
                    endpoint_b=b,
                    line_id=line_id,
                    attrs=line.edge_attrs(),
                    is_connector=False,
                )
            )
    return edges


def ensure_connectivity(g: GraphSpec, rng: np.random.Generator) -> GraphSpec:
    """Add dotted connector edges until the graph is a single component.

    Each connector joins one uniformly drawn node from each of the two first
    components (by node creation order) and is assigned to a uniformly drawn
    existing line. Already-connected graphs pass through unchanged.
    """
    comps = connected_components(g)
    if len(comps) <= 1:
        return g
    if g.domain == TRANSIT and not g.lines:
        raise ValueError("cannot add connector edges: transit graph has no lines")
    edges = list(g.edges)
    while len(comps) > 1:
        node_a = comps[0][int(rng.integers(len(comps[0])))]
        node_b = comps[1][int(rng.integers(len(comps[1])))]
        if g.domain == TRANSIT:
            line = g.lines[int(rng.integers(len(g.lines)))]
            attrs = line.edge_attrs()
            attrs["line_stroke"] = "dotted"
            line_id = line.id
        else:
            from .network import sample_link_attrs  # local import avoids a cycle

            attrs = sample_link_attrs(rng)
            line_id = None
        edges.append(
            EdgeSpec(
                endpoint_a=node_a,
                endpoint_b=node_b,
                line_id=line_id,
                attrs=attrs,
                is_connector=True,
            )
        )
        comps[0] = comps[0] + comps[1]
        del comps[1]
    return GraphSpec(
        domain=g.domain,
        seed=g.seed,
        size_class=g.size_class,
        lines=g.lines,
        nodes=g.nodes,
        edges=tuple(edges),
    )


def apply_integer_names(g: GraphSpec, rng: np.random.Generator) -> GraphSpec:
    """Replace node and line names with unique integer strings.

    Integers are drawn without replacement from 0..9999 across nodes and
    lines together; ids are updated to equal the new names, and edge
    references are rewritten consistently.
    """
    total = len(g.nodes) + len(g.lines)
    drawn = rng.choice(10000, size=total, replace=False)
    labels = [str(int(v)) for v in drawn]
    node_labels = labels[: len(g.nodes)]
    line_labels = labels[len(g.nodes) :]
    node_id_map = {n.id: lab for n, lab in zip(g.nodes, node_labels)}
    line_id_map = {ln.id: lab for ln, lab in zip(g.lines, line_labels)}

    lines = tuple(
        LineSpec(
            id=line_id_map[ln.id],
            name=line_id_map[ln.id],
            color=ln.color,
            stroke=ln.stroke,
            built=ln.built,
            has_aircon=ln.has_aircon,
        )
        for ln in g.lines
    )
    nodes = tuple(
        NodeSpec(id=node_id_map[n.id], name=node_id_map[n.id], x=n.x, y=n.y, attrs=n.attrs)
        for n in g.nodes
    )
    edges = []
    for e in g.edges:
        attrs = dict(e.attrs)
        if "line_name" in attrs and e.line_id is not None:
            attrs["line_name"] = line_id_map[e.line_id]
        edges.append(
            EdgeSpec(
                endpoint_a=node_id_map[e.endpoint_a],
                endpoint_b=node_id_map[e.endpoint_b],
                line_id=line_id_map[e.line_id] if e.line_id is not None else None,
                attrs=attrs,
                is_connector=e.is_connector,
            )
        )
    return GraphSpec(
        domain=g.domain,
        seed=g.seed,
        size_class=g.size_class,
        lines=lines,
        nodes=nodes,
        edges=tuple(edges),
    )


def generate_transit_graph(cfg: GenConfig) -> GraphSpec:
    """Run the full pipeline; a pure function of the config."""
    if cfg.domain != TRANSIT:
        raise ValueError("generate_transit_graph requires a transit config")
    lines = gen_lines(cfg, seeded_rng(cfg.seed, "transit/lines"))

    rng_stations = seeded_rng(cfg.seed, "transit/stations")
    drafts: list[StationDraft] = []
    used_names: set[str] = set()
    for line in lines:
        drafts.extend(
            place_stations(
                line, cfg, rng_stations, id_offset=len(drafts), used_names=used_names
            )
        )

    nodes, merge_map = coalesce_stations(drafts, cfg.merge_threshold)
    line_orders = {ln.id: [] for ln in lines}
    for d in drafts:
        line_orders[d.line_id].append(d.provisional_id)
    edges = build_edges(line_orders, merge_map, lines)

    g = GraphSpec(
        domain=TRANSIT,
        seed=cfg.seed,
        size_class=cfg.size_class,
        lines=tuple(lines),
        nodes=tuple(nodes),
        edges=tuple(edges),
    )
    g = ensure_connectivity(g, seeded_rng(cfg.seed, "transit/connect"))
    if cfg.integer_names:
        g = apply_integer_names(g, seeded_rng(cfg.seed, "transit/integer-names"))
    return g
