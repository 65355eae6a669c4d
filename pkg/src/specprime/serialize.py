"""JSON input schemas.

Ring specs:      {"kind": "zmod", "n": 12}
                 {"kind": "product", "factors": [<ring spec>, ...]}
                 {"kind": "polyquot", "p": 2, "modulus": [1, 1, 1]}
                   (coefficients low-to-high degree, monic)
Hom specs:       {"source": <ring spec>, "target": <ring spec>,
                  "map": [target index per source index]}
Poset specs:     {"points": [...], "leq": [[i, j], ...]}  (index pairs, i <= j)
Profile specs:   {"free_rank": 0, "torsion_invariants": [2, 4]}
"""

from .correspondence import ClassGroupProfile
from .errors import InvalidParameter
from .posets import from_relation
from .rings import build_hom, build_poly_quotient, build_product, build_zmod

RING_KINDS = ("zmod", "product", "polyquot")


def ring_from_spec(obj):
    if not isinstance(obj, dict) or obj.get("kind") not in RING_KINDS:
        raise InvalidParameter(f"not a ring spec: {obj!r}")
    kind = obj["kind"]
    if kind == "zmod":
        return build_zmod(obj.get("n", 0))
    if kind == "product":
        factors = obj.get("factors")
        if not isinstance(factors, list):
            raise InvalidParameter("product spec needs a 'factors' list")
        return build_product([ring_from_spec(f) for f in factors])
    modulus = obj.get("modulus")
    if not isinstance(modulus, list):
        raise InvalidParameter("polyquot spec needs a 'modulus' coefficient list")
    return build_poly_quotient(obj.get("p", 0), modulus)


def hom_from_spec(obj):
    for key in ("source", "target", "map"):
        if key not in obj:
            raise InvalidParameter(f"hom spec missing {key!r}")
    source = ring_from_spec(obj["source"])
    target = ring_from_spec(obj["target"])
    return build_hom(source, target, obj["map"])


def poset_from_spec(obj):
    points = obj.get("points")
    pairs = obj.get("leq", [])
    if not isinstance(points, list) or not isinstance(pairs, list):
        raise InvalidParameter("poset spec needs 'points' and 'leq'")
    for pair in pairs:
        if (not isinstance(pair, list) or len(pair) != 2
                or any(not isinstance(i, int) or not 0 <= i < len(points) for i in pair)):
            raise InvalidParameter(f"bad order pair {pair!r}")
    return from_relation(points, [tuple(p) for p in pairs])


def profile_from_spec(obj):
    if "free_rank" not in obj:
        raise InvalidParameter("profile spec needs 'free_rank'")
    return ClassGroupProfile(int(obj["free_rank"]),
                             tuple(obj.get("torsion_invariants", ())))


def parse_input(obj):
    """Classify one job input and build it.  Returns (kind, object, label)."""
    if not isinstance(obj, dict):
        raise InvalidParameter(f"inputs must be JSON objects, got {obj!r}")
    kind = obj.get("kind")
    if kind in RING_KINDS:
        ring = ring_from_spec(obj)
        return "ring", ring, ring.label
    if kind == "hom" or {"source", "target", "map"} <= set(obj):
        hom = hom_from_spec(obj)
        return "hom", hom, f"{hom.source.label} -> {hom.target.label}"
    if kind == "poset" or "points" in obj:
        poset = poset_from_spec(obj)
        return "poset", poset, obj.get("label", f"poset-{poset.n}")
    if kind == "profile" or "free_rank" in obj:
        profile = profile_from_spec(obj)
        return "profile", profile, f"Cl={profile.label()}"
    raise InvalidParameter(f"unrecognized input object: {obj!r}")
