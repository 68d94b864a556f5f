"""Closed attribute vocabularies and name word lists.

Every categorical attribute is drawn from one of these fixed lists so that
exact-match scoring and instance-validity filtering stay decidable.
"""

from __future__ import annotations

MUSIC = ("classical", "rock", "jazz", "pop", "electronic", "none")
ARCHITECTURE = ("victorian", "modernist", "art_deco", "brutalist", "futuristic")
SIZES = ("small", "medium", "large")
CLEANLINESS = ("clean", "dirty")

COLORS = (
    "red", "blue", "green", "yellow", "orange", "purple",
    "pink", "brown", "black", "white", "cyan", "magenta",
)
STROKES = ("solid", "dashed", "dotted")
BUILT_YEAR_MIN = 1850
BUILT_YEAR_MAX = 2020

STATUS = ("Operational", "Offline", "Overloaded")
SECURITY_LEVELS = ("Public", "Internal", "Restricted")
SECTORS = ("Sector_Red", "Sector_Blue", "Sector_Green", "Sector_Yellow")
FIRMWARE = ("v1.0", "v1.1", "v2.0", "v2.1")
ENCRYPTION = ("Encrypted", "Unencrypted")
BANDWIDTH_RANGE = (1, 100)
LATENCY_RANGE = (1, 500)
POWER_RANGE = (1, 50)

# Attribute schemas: node/edge attr dicts must carry exactly these keys.
TRANSIT_NODE_KEYS = (
    "disabled_access", "has_rail", "music", "architecture", "size", "cleanliness",
)
NETWORK_NODE_KEYS = (
    "status", "security_level", "location_sector", "firmware_version",
    "power_consumption_units",
)
TRANSIT_EDGE_KEYS = (
    "line_name", "line_color", "line_stroke", "line_has_aircon", "line_built",
)
NETWORK_EDGE_KEYS = ("bandwidth_units", "latency_ms", "encryption_status")

# Word lists for human-readable entity names (adjective + noun pairs).
STATION_ADJECTIVES = (
    "Silent", "Golden", "Crimson", "Misty", "Ancient", "Bright", "Hollow",
    "Velvet", "Amber", "Frozen", "Emerald", "Quiet", "Radiant", "Shadow",
    "Ivory", "Copper", "Distant", "Gentle", "Hidden", "Lunar", "Mossy",
    "Northern", "Obsidian", "Pale", "Rusty", "Solar", "Twilight", "Windy",
)
STATION_NOUNS = (
    "Harbor", "Meadow", "Summit", "Crossing", "Garden", "Bridge", "Hollow",
    "Terrace", "Market", "Orchard", "Quay", "Plaza", "Grove", "Fountain",
    "Junction", "Court", "Fields", "Gate", "Heights", "Landing", "Mews",
    "Parade", "Square", "Vale", "Walk", "Wharf", "Yard", "Commons",
    "Arches", "Basin", "Cliffs", "Docks",
)
LINE_WORDS = (
    "Blue", "Red", "Green", "Circle", "Central", "Coastal", "District",
    "Eastern", "Grand", "Harbour", "Jubilee", "Meridian", "Northern",
    "Orbital", "Pioneer", "Riverside", "Southern", "Summit", "Union",
    "Valley", "Victory", "Western", "Zenith", "Aurora",
)
LINE_SUFFIXES = ("Line", "Express", "Loop", "Link")

NETWORK_PREFIXES = (
    "Alpha", "Beta", "Gamma", "Delta", "Epsilon", "Zeta", "Theta", "Iota",
    "Kappa", "Lambda", "Sigma", "Tau", "Omega", "Nova", "Orion", "Vega",
    "Lyra", "Atlas", "Borealis", "Cygnus", "Draco", "Helios", "Janus", "Kronos",
)
NETWORK_DEVICES = (
    "Server", "Router", "Switch", "Gateway", "Hub", "Relay", "Firewall", "Bridge",
)


def node_schema(domain: str) -> tuple[str, ...]:
    """Exact attribute-key set required on nodes of the given domain."""
    if domain == "transit":
        return TRANSIT_NODE_KEYS
    if domain == "network":
        return NETWORK_NODE_KEYS
    raise ValueError(f"unknown domain: {domain!r}")


def edge_schema(domain: str) -> tuple[str, ...]:
    """Exact attribute-key set required on edges of the given domain."""
    if domain == "transit":
        return TRANSIT_EDGE_KEYS
    if domain == "network":
        return NETWORK_EDGE_KEYS
    raise ValueError(f"unknown domain: {domain!r}")
