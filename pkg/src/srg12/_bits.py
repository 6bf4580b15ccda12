"""Small helpers for graphs stored as per-vertex bit rows."""


def iter_bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_index_table(n):
    """Map each unordered pair (i, j), i < j, to its slot in the packed edge code.

    Slot order is lexicographic: (0,1), (0,2), ..., (0,n-1), (1,2), ...
    """
    table = {}
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            table[(i, j)] = pos
            pos += 1
    return table
