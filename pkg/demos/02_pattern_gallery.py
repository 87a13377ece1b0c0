"""Angular patterns for a handful of impact parameters, with their labels.

Each grid here is 61 x 61 so the whole script runs in seconds. Use the
``pattern`` subcommand of the CLI for publication-sized 201 x 201 grids.
"""

import time

from airy_born import (
    AiryPacketParams,
    AngularGrid,
    BeamKinematics,
    classify_pattern,
    hydrogen_spec,
    pattern_grid,
    special_point,
)

kin = BeamKinematics(10.0)
pot = hydrogen_spec()
grid = AngularGrid(nx=61, ny=61)


def at(sigma, m, n):
    base = AiryPacketParams.symmetric(sigma)
    sp = special_point(base, m, n)
    return base.with_impact(sp.b_x if m else 0.0, sp.b_y if n else 0.0)


cases = {
    "head-on, sigma = a": AiryPacketParams.symmetric(1.0),
    "Type1 (1,1), sigma = a": at(1.0, 1, 1),
    "Type2 x-only, sigma = 5a": at(5.0, 1, 0),
    "Type2 y-only, sigma = 5a": at(5.0, 0, 1),
    "b = (4, 4) sigma, sigma = a": AiryPacketParams.symmetric(1.0).with_impact(4.0, 4.0),
}

for label, packet in cases.items():
    t0 = time.perf_counter()
    pg = pattern_grid(grid, packet, kin, pot, threads=0)
    c = grid.nx // 2
    cls = classify_pattern(pg)
    print(f"{label:30s} -> {cls.kind.value:12s} peak {pg.density.max():.2e}, "
          f"forward/peak {pg.density[c, c] / pg.density.max():.1e}  ({time.perf_counter() - t0:.0f} s)")
