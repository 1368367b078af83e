# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled collision/vector kernels.

Keep the arithmetic expression-for-expression identical to _fallback.py:
the build disables FP contraction so both produce the same doubles.
"""

from libc.math cimport sqrt

IMPLEMENTATION = "native"


def overlap_pairs(xs, ys, zs, radii):
    """All index pairs (i, j), i < j, whose spheres overlap or touch."""
    cdef Py_ssize_t n = len(xs)
    cdef Py_ssize_t i, j
    cdef double xi, yi, zi, ri, dx, dy, dz, rs, d2
    cdef list cx = [float(v) for v in xs]
    cdef list cy = [float(v) for v in ys]
    cdef list cz = [float(v) for v in zs]
    cdef list cr = [float(v) for v in radii]
    pairs = []
    for i in range(n):
        xi = cx[i]
        yi = cy[i]
        zi = cz[i]
        ri = cr[i]
        for j in range(i + 1, n):
            dx = <double>cx[j] - xi
            dy = <double>cy[j] - yi
            dz = <double>cz[j] - zi
            rs = <double>cr[j] + ri
            d2 = dx * dx + dy * dy + dz * dz
            if d2 <= rs * rs:
                pairs.append((i, j))
    return pairs


def displace(double x, double y, double z,
             double dx, double dy, double dz,
             double step):
    """Move (x, y, z) by step units along the direction (dx, dy, dz)."""
    cdef double norm2 = dx * dx + dy * dy + dz * dz
    cdef double scale
    if norm2 == 0.0:
        return (x, y, z)
    scale = step / sqrt(norm2)
    return (x + dx * scale, y + dy * scale, z + dz * scale)
