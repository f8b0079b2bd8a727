"""Bit-vector helpers for point sets. A point set over n points is an int mask."""


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bits(mask: int):
    """Yield the set bit indices of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def singletons(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def submasks(mask: int):
    """Yield every submask of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def sort_key(mask: int):
    """Canonical family order: by size first, then numeric value."""
    return (mask.bit_count(), mask)


def canonical(masks) -> tuple[int, ...]:
    """Deduplicate and sort a family of masks canonically."""
    return tuple(sorted(set(masks), key=sort_key))
