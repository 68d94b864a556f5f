"""Template plumbing: slot substitution, samplers, and answer serialization.

A template couples a text pattern with two functions over a GraphIndex: a
sampler that draws slot bindings for one graph, and an oracle that derives
the typed answer from those bindings alone. Keeping the oracle independent
of the sampler is what makes stored answers re-derivable from the record.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..oracles import GraphIndex

SLOT_RE = re.compile(r"\{([^{}]+)\}")

# answer: bool | int | str | list[str]; None signals a rejected instance
Answer = object
Sampler = Callable[[GraphIndex, np.random.Generator], Optional[list[str]]]
Oracle = Callable[[GraphIndex, list[str]], Optional[Answer]]

OUTPUT_TYPES = ("string", "boolean", "numeric", "list")
SCOPES = ("node", "edge", "subgraph")
GROUPS = (
    "lookup", "filtering", "aggregation", "path_reasoning",
    "topology", "count", "comparison",
)


@dataclass(frozen=True)
class TemplateSpec:
    template_id: str
    subset: str
    domain: str
    text_pattern: str
    output_type: str
    scope: str
    group: str
    sampler: Sampler
    oracle: Oracle

    def __post_init__(self):
        if self.output_type not in OUTPUT_TYPES:
            raise ValueError(f"bad output_type {self.output_type!r} in {self.template_id}")
        if self.scope not in SCOPES:
            raise ValueError(f"bad scope {self.scope!r} in {self.template_id}")
        if self.group not in GROUPS:
            raise ValueError(f"bad group {self.group!r} in {self.template_id}")

    @property
    def slots(self) -> list[str]:
        return SLOT_RE.findall(self.text_pattern)


@dataclass(frozen=True)
class QuestionInstance:
    template_id: str
    question_text: str
    answer: Answer
    output_type: str
    group: str
    scope: str
    slot_bindings: tuple[tuple[str, str], ...]

    @property
    def answer_text(self) -> str:
        return serialize_answer(self.answer, self.output_type)


def render(pattern: str, values: list[str]) -> str:
    """Substitute slot occurrences, left to right, with the given values."""
    parts = SLOT_RE.split(pattern)
    # parts alternates literal, slotname, literal, ...
    n_slots = len(parts) // 2
    if n_slots != len(values):
        raise ValueError(f"pattern has {n_slots} slots, got {len(values)} values")
    out = []
    for i, part in enumerate(parts):
        out.append(values[i // 2] if i % 2 else part)
    return "".join(out)


def binding_keys(pattern: str) -> list[str]:
    """Slot-binding keys: the slot token, suffixed _2, _3... on repeats."""
    keys = []
    seen: dict[str, int] = {}
    for token in SLOT_RE.findall(pattern):
        seen[token] = seen.get(token, 0) + 1
        keys.append(token if seen[token] == 1 else f"{token}_{seen[token]}")
    return keys


def serialize_answer(answer: Answer, output_type: str) -> str:
    """Canonical string form: True/False, decimal integers, comma+space lists."""
    if output_type == "boolean":
        return "True" if answer else "False"
    if output_type == "numeric":
        return str(int(answer))
    if output_type == "list":
        return ", ".join(answer)
    return str(answer)


# -- sampling helpers ----------------------------------------------------------


def pick(rng: np.random.Generator, seq):
    """Uniform element of a non-empty sequence (None when empty)."""
    if not seq:
        return None
    return seq[int(rng.integers(len(seq)))]


def pick_two_distinct(rng: np.random.Generator, seq):
    if len(seq) < 2:
        return None
    i = int(rng.integers(len(seq)))
    j = int(rng.integers(len(seq) - 1))
    if j >= i:
        j += 1
    return seq[i], seq[j]


def node_names(gi: GraphIndex) -> list[str]:
    return [n.name for n in gi.graph.nodes]


def line_names(gi: GraphIndex) -> list[str]:
    return [ln.name for ln in gi.graph.lines]


def sample_fake_name(
    gi: GraphIndex,
    rng: np.random.Generator,
    firsts: tuple[str, ...],
    seconds: tuple[str, ...],
) -> str:
    """A name guaranteed absent from the graph, in the graph's naming style."""
    used = set(gi.nodes_by_name) | set(gi.lines_by_name)
    if used and all(name.isdigit() for name in gi.nodes_by_name):
        while True:
            candidate = str(int(rng.integers(10000)))
            if candidate not in used:
                return candidate
    while True:
        candidate = f"{pick(rng, firsts)} {pick(rng, seconds)}"
        if candidate not in used:
            return candidate
