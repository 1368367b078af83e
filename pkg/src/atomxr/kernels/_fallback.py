"""Pure-Python kernels, bit-identical to the compiled versions.

Expression structure must match _native.pyx operation for operation:
both run IEEE-754 double arithmetic, so keeping the same order of
multiplies and adds makes the two implementations interchangeable without
breaking byte-identical traces.
"""

from __future__ import annotations

import math

IMPLEMENTATION = "python"


def overlap_pairs(xs, ys, zs, radii) -> list[tuple[int, int]]:
    """All index pairs (i, j), i < j, whose spheres overlap or touch."""
    n = len(xs)
    pairs: list[tuple[int, int]] = []
    for i in range(n):
        xi = xs[i]
        yi = ys[i]
        zi = zs[i]
        ri = radii[i]
        for j in range(i + 1, n):
            dx = xs[j] - xi
            dy = ys[j] - yi
            dz = zs[j] - zi
            rs = radii[j] + ri
            d2 = dx * dx + dy * dy + dz * dz
            if d2 <= rs * rs:
                pairs.append((i, j))
    return pairs


def displace(x: float, y: float, z: float,
             dx: float, dy: float, dz: float,
             step: float) -> tuple[float, float, float]:
    """Move (x, y, z) by step units along the direction (dx, dy, dz).

    A zero direction is a no-op rather than an error.
    """
    norm2 = dx * dx + dy * dy + dz * dz
    if norm2 == 0.0:
        return (x, y, z)
    scale = step / math.sqrt(norm2)
    return (x + dx * scale, y + dy * scale, z + dz * scale)
