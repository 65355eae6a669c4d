"""Subsets of an indexed universe encoded as integer bit masks (bit i = member i)."""


def bit(i: int) -> int:
    return 1 << i


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int):
    """Yield the indices of the set bits, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def bitstring(mask: int, width: int) -> str:
    """Canonical bit-vector form, index 0 first; used for deterministic ordering."""
    return "".join("1" if mask >> i & 1 else "0" for i in range(width))
