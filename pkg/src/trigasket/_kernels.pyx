# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled distance kernels over byte-encoded addresses (l=0, r=1, u=2).

Unsigned 64-bit arithmetic, exact through level 60; the dispatcher in
`kernels` routes longer addresses to the pure-Python twin.
"""


def corner_triple(const unsigned char[::1] codes):
    """Distances to the corners 0^n, 1^n, 2^n as a 3-tuple."""
    cdef Py_ssize_t n = codes.shape[0]
    cdef Py_ssize_t j
    cdef unsigned long long d0 = 0, d1 = 0, d2 = 0, w = 1
    cdef unsigned char c
    for j in range(n):
        if j >= 2:
            w += w
        c = codes[j]
        if c != 0:
            d0 += w
        if c != 1:
            d1 += w
        if c != 2:
            d2 += w
    return d0, d1, d2


def pair_distance(const unsigned char[::1] x, const unsigned char[::1] y):
    """Shortest-path length between two same-level encoded addresses."""
    cdef Py_ssize_t m = x.shape[0]
    cdef Py_ssize_t j
    cdef unsigned char s, t, z, cx, cy
    cdef unsigned long long at_ = 0, az = 0, bs = 0, bz = 0, w = 1
    cdef unsigned long long cross, via
    if y.shape[0] != m:
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
    via = az + ((<unsigned long long> 1) << (m - 2)) + bz
    return cross if cross < via else via
