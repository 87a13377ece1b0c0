"""Azimuthal asymmetry for a single atom and how a finite target blurs it."""

import math

import numpy as np

from airy_born import (
    AiryPacketParams,
    BeamKinematics,
    TargetDistribution,
    azimuthal_ratio,
    azimuthal_variation,
    hydrogen_spec,
    special_point,
)

kin = BeamKinematics(10.0)
pot = hydrogen_spec()
base = AiryPacketParams.symmetric(1.0)
sp = special_point(base, 1, 1)
packet = base.with_impact(sp.b_x, sp.b_y)

# Ratio dnu(phi) / dnu(pi/4) on a ring of theta = 0.1 rad.
phi = np.linspace(0.0, 2 * math.pi, 13)[:-1]
ratio = azimuthal_ratio(0.1, phi, packet, kin, pot)
for p, r in zip(phi, ratio):
    print(f"  phi = {math.degrees(p):5.0f} deg  ratio = {r:.4f}")

# A Gaussian spread of atoms around the special point averages the pattern.
# Each width takes a few seconds; wider targets flatten the ratio.
print("max - min of the ratio:")
print(f"  single atom        {azimuthal_variation(0.1, packet, kin, pot, n_phi=36):.3e}")
for sb in (1.0, 3.0):
    target = TargetDistribution(sp.b_x, sp.b_y, sb)
    v = azimuthal_variation(0.1, packet, kin, pot, target=target, n_phi=36)
    print(f"  sigma_b = {sb:g} a  {v:.3e}")
