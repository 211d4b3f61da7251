"""Pure-Python distance kernels, the fallback twin of the compiled module.

Addresses arrive byte-encoded (l=0, r=1, u=2).  Python integers keep the
arithmetic exact at any level, so this twin also serves levels beyond the
64-bit range of the compiled kernels.
"""


def corner_triple(codes):
    """Distances from `codes` to the corners 0^n, 1^n, 2^n.

    Appending a letter keeps the distance to the matching corner and adds
    2^(n-1) to the other two, hence one weighted pass: position 1 weighs
    1, position i weighs 2^(i-2).
    """
    d0 = d1 = d2 = 0
    w = 1
    for j, c in enumerate(codes):
        if j >= 2:
            w += w
        if c != 0:
            d0 += w
        if c != 1:
            d1 += w
        if c != 2:
            d2 += w
    return d0, d1, d2


def pair_distance(x, y):
    """Shortest-path length between two same-level encoded addresses.

    Strip the common coarse suffix (a geodesic between vertices of one
    copy never needs to leave it), then the path either crosses the single
    corner shared by the two copies or transits the third copy between its
    two shared corners, which sit 2^(m-2) apart.
    """
    m = len(x)
    if len(y) != m:
        raise ValueError("encoded lengths differ")
    while m > 0 and x[m - 1] == y[m - 1]:
        m -= 1
    if m == 0:
        return 0
    if m == 1:
        return 1
    s = x[m - 1]
    t = y[m - 1]
    z = 3 - s - t
    at_ = az = bs = bz = 0
    w = 1
    for j in range(m - 1):
        if j >= 2:
            w += w
        cx = x[j]
        cy = y[j]
        if cx != t:
            at_ += w
        if cx != z:
            az += w
        if cy != s:
            bs += w
        if cy != z:
            bz += w
    cross = at_ + bs
    via = az + (1 << (m - 2)) + bz
    return cross if cross < via else via
