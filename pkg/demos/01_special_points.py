"""Where do the zeros of an Airy packet sit, and what do they do to scattering?

Run with ``python3 demos/01_special_points.py``.
"""

import numpy as np

from airy_born import (
    AiryPacketParams,
    BeamKinematics,
    airy_zeros,
    critical_size,
    effective_spatial_wavefunction,
    kinetic_energy_ev,
    special_point,
)

# A symmetric packet with sigma_perp = a and xi = 2 sigma_perp on both axes.
packet = AiryPacketParams.symmetric(1.0)
print("first Airy zeros:", np.round(airy_zeros(3), 4))

# Placing the atom on a zero of the packet gives a "special point".
for m in (1, 2, 3):
    sp = special_point(packet, m, m)
    print(f"  Type1 point ({m},{m}): b_x = b_y = {sp.b_x:.4f} a")

# The packet density really does vanish there, compared with its peak.
sp = special_point(packet, 1, 1)
x = np.linspace(-10.0, 25.0, 351)
X, Y = np.meshgrid(x, x, indexing="ij")
dens = np.abs(effective_spatial_wavefunction(packet, X, Y)) ** 2
at_zero = abs(effective_spatial_wavefunction(packet, np.array([sp.b_x]), np.array([sp.b_y]))[0]) ** 2
print(f"|psi|^2 at the first zero relative to its peak: {at_zero / dens.max():.1e}")

# How broad may a target be before the side lobes wash out?
print(f"critical target width at the first point: {critical_size(sp.b_x, 2.0, 1.0):.3f} a")

kin = BeamKinematics(10.0)
print(f"p_i a = 10 with a = Bohr radius is {kinetic_energy_ev(kin) / 1e3:.3f} keV electrons")
