"""A very wide target forgets the Airy phase: only sigma_perp survives.

The averaged cross section of an Airy packet is compared with that of a
Gaussian packet of the same width, and with a direct integral of the Airy
amplitude over impact parameters.
"""

import math

from airy_born import AiryPacketParams, BeamKinematics, hydrogen_spec, macroscopic_cross_section, special_point
from airy_born.observables import impact_integrated_density

kin = BeamKinematics(10.0)
pot = hydrogen_spec()
base = AiryPacketParams.symmetric(1.0)
sp = special_point(base, 1, 1)
airy = base.with_impact(sp.b_x, sp.b_y)
gauss = AiryPacketParams(1.0, 0.0, 0.0)

for theta, phi in [(0.05, 0.3), (0.15, 1.2), (0.25, 4.0)]:
    g = macroscopic_cross_section(theta, phi, gauss, kin, pot)
    a = macroscopic_cross_section(theta, phi, airy, kin, pot)
    direct = 2 * math.pi * impact_integrated_density(theta, phi, airy, kin, pot, (-40.0, 140.0))
    print(f"theta = {theta:.2f}: Gaussian {g:.6e}  Airy {a:.6e}  impact integral {direct:.6e}")
