"""Computer-network graph generator.

Node-centric variant of the transit pipeline: nodes are scattered uniformly
in the map square, nearby nodes coalesce into hubs, and edges emerge from a
k-nearest-neighbor query instead of pre-defined line paths. Edge attributes
are intrinsic to each link rather than inherited from any line.
"""

from __future__ import annotations

import numpy as np
from scipy.spatial import cKDTree

from . import vocab
from .coalesce import MergeMap, coalesce
from .model import NETWORK, EdgeSpec, GenConfig, GraphSpec, NodeSpec
from .rng import seeded_rng
from .transit import apply_integer_names, ensure_connectivity, sample_unused_name


def sample_node_attrs(rng: np.random.Generator) -> dict:
    return {
        "status": str(rng.choice(vocab.STATUS)),
        "security_level": str(rng.choice(vocab.SECURITY_LEVELS)),
        "location_sector": str(rng.choice(vocab.SECTORS)),
        "firmware_version": str(rng.choice(vocab.FIRMWARE)),
        "power_consumption_units": int(rng.integers(*vocab.POWER_RANGE, endpoint=True)),
    }


def sample_link_attrs(rng: np.random.Generator) -> dict:
    return {
        "bandwidth_units": int(rng.integers(*vocab.BANDWIDTH_RANGE, endpoint=True)),
        "latency_ms": int(rng.integers(*vocab.LATENCY_RANGE, endpoint=True)),
        "encryption_status": str(rng.choice(vocab.ENCRYPTION)),
    }


def place_network_nodes(cfg: GenConfig, rng: np.random.Generator) -> list[NodeSpec]:
    """Scatter cfg.n_nodes system nodes uniformly in the map square."""
    used_names: set[str] = set()
    nodes = []
    for i in range(cfg.n_nodes):
        x = float(rng.uniform(-cfg.map_radius, cfg.map_radius))
        y = float(rng.uniform(-cfg.map_radius, cfg.map_radius))
        name = sample_unused_name(rng, vocab.NETWORK_PREFIXES, vocab.NETWORK_DEVICES, used_names)
        nodes.append(NodeSpec(id=f"n{i}", name=name, x=x, y=y, attrs=sample_node_attrs(rng)))
    return nodes


def coalesce_hubs(nodes: list[NodeSpec], threshold: float) -> tuple[list[NodeSpec], MergeMap]:
    """Merge nodes closer than the threshold; same contract as station coalescing."""
    return coalesce(nodes, threshold)


def knn_edges(
    nodes: list[NodeSpec], avg_degree: float, rng: np.random.Generator
) -> list[EdgeSpec]:
    """Link every node to its k nearest neighbors, k = round(avg_degree / 2).

    k is clamped to [1, len(nodes)-1]; the undirected edge set is
    deduplicated and each surviving edge draws fresh intrinsic attributes.
    """
    n = len(nodes)
    if n < 2:
        raise ValueError("knn_edges needs at least 2 nodes")
    if avg_degree < 1:
        raise ValueError("avg_degree must be >= 1")
    k = min(max(round(avg_degree / 2), 1), n - 1)
    pts = np.array([[nd.x, nd.y] for nd in nodes])
    tree = cKDTree(pts)
    _, idx = tree.query(pts, k=k + 1)
    idx = np.atleast_2d(idx)
    pairs: set[tuple[int, int]] = set()
    for i in range(n):
        neighbors = [int(j) for j in idx[i] if int(j) != i][:k]
        for j in neighbors:
            pairs.add((min(i, j), max(i, j)))
    edges = []
    for i, j in sorted(pairs):
        edges.append(
            EdgeSpec(
                endpoint_a=nodes[i].id,
                endpoint_b=nodes[j].id,
                line_id=None,
                attrs=sample_link_attrs(rng),
                is_connector=False,
            )
        )
    return edges


def generate_network_graph(cfg: GenConfig) -> GraphSpec:
    """place -> coalesce -> knn -> connect; a pure function of the config."""
    if cfg.domain != NETWORK:
        raise ValueError("generate_network_graph requires a network config")
    placed = place_network_nodes(cfg, seeded_rng(cfg.seed, "network/place"))
    nodes, _ = coalesce_hubs(placed, cfg.merge_threshold)
    edges = knn_edges(nodes, cfg.avg_degree, seeded_rng(cfg.seed, "network/edges"))
    g = GraphSpec(
        domain=NETWORK,
        seed=cfg.seed,
        size_class=cfg.size_class,
        lines=(),
        nodes=tuple(nodes),
        edges=tuple(edges),
    )
    g = ensure_connectivity(g, seeded_rng(cfg.seed, "network/connect"))
    if cfg.integer_names:
        g = apply_integer_names(g, seeded_rng(cfg.seed, "network/integer-names"))
    return g
