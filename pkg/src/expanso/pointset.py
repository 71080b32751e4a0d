"""Point sets of a finite space, stored as integer bit masks.

Bit ``p`` of a mask is set iff point ``p`` belongs to the set.  All sets are
interpreted relative to one space's point count.
"""


def mask(points):
    """Bit mask of an iterable of point indices."""
    m = 0
    for p in points:
        if p < 0:
            raise ValueError(f"negative point index {p}")
        m |= 1 << p
    return m


def members(m):
    """Sorted list of the points in mask ``m``."""
    out = []
    p = 0
    while m:
        if m & 1:
            out.append(p)
        m >>= 1
        p += 1
    return out


def full(n):
    return (1 << n) - 1


def size(m):
    return bin(m).count("1")


def subset(a, b):
    return a & ~b == 0


def fmt(m):
    return "{" + ",".join(map(str, members(m))) + "}"
