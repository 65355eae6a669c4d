"""Deterministic DOT emission of Hasse diagrams.

Nodes are ordered lexicographically on the canonical bit vector of each
point's member mask, so identical inputs give byte-identical output; edges
are the covering relations, drawn bottom-to-top from generic to closed
points.
"""

from .bitset import bits, bitstring
from .correspondence import j_map, ring_xspace
from .errors import InvalidParameter
from .posets import FinitePoset, xspace
from .rings import spec
from .sprimes import hull_kernel_space

SPACES = ("spec", "sprimes", "xspace")


def _mask_of_point(point):
    members = getattr(point, "members", None)
    if members is None:
        raise InvalidParameter("points carry no member mask")
    return members


def hasse_dot(poset: FinitePoset, labels, width: int, graph_name="hasse") -> str:
    """DOT text for the Hasse diagram of a poset whose points carry masks."""
    keyed = sorted(range(poset.n),
                   key=lambda i: bitstring(_mask_of_point(poset.points[i]), width))
    node_id = {orig: f"n{k}" for k, orig in enumerate(keyed)}
    lines = [f"digraph {graph_name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for orig in keyed:
        label = labels[orig].replace('"', r'\"')
        lines.append(f'  {node_id[orig]} [label="{label}"];')
    edges = sorted(((node_id[i], node_id[j]) for i, j in poset.covering_pairs()),
                   key=lambda e: (int(e[0][1:]), int(e[1][1:])))
    for a, b in edges:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _prime_labels(ring):
    primes, _ = spec(ring)
    return {p.members: p.short_label() for p in primes}


def sprime_label(ring, q) -> str:
    """A semigroup prime shown as the union of its maximal primes."""
    by_mask = _prime_labels(ring)
    parts = [by_mask[p.members] for p in j_map(ring, q).points()]
    # drop primes below another listed prime (none for finite rings, kept cheap)
    return "∪".join(sorted(parts))


def spec_dot(ring) -> str:
    primes, poset = spec(ring)
    labels = [p.short_label() for p in primes]
    return hasse_dot(poset, labels, ring.n, graph_name="spec")


def sprimes_dot(ring) -> str:
    space = hull_kernel_space(ring)
    labels = [sprime_label(ring, q) for q in space.primes]
    return hasse_dot(space.order, labels, ring.n, graph_name="sprimes")


def xspace_dot_for_ring(ring) -> str:
    order, _ = ring_xspace(ring)
    primes, _ = spec(ring)
    prime_label = [p.short_label() for p in primes]
    labels = []
    for ds in order.points:
        labels.append("{" + ",".join(prime_label[i] for i in bits(ds.members)) + "}")
    return hasse_dot(order, labels, len(primes), graph_name="xspace")


def xspace_dot_for_poset(poset: FinitePoset) -> str:
    order, _ = xspace(poset)
    labels = ["{" + ",".join(map(str, ds.points())) + "}" for ds in order.points]
    return hasse_dot(order, labels, poset.n, graph_name="xspace")


def export_dot(space: str, obj) -> str:
    """DOT text for one of the three spaces attached to a ring, or the
    down-set space of a poset."""
    if space not in SPACES:
        raise InvalidParameter(f"unknown space {space!r}; expected one of {SPACES}")
    if isinstance(obj, FinitePoset):
        if space != "xspace":
            raise InvalidParameter("poset inputs only support the xspace view")
        return xspace_dot_for_poset(obj)
    if space == "spec":
        return spec_dot(obj)
    if space == "sprimes":
        return sprimes_dot(obj)
    return xspace_dot_for_ring(obj)
