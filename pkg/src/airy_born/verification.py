"""Randomized cross-check of the 1D amplitude against the 2D oracle.

Shared by the ``verify`` subcommand and the test suite so both exercise the
same parameter distribution.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .amplitude import momentum_transfer, scattering_amplitude, scattering_amplitude_oracle2d
from .packet import AiryPacketParams, BeamKinematics
from .potentials import PotentialSpec, hydrogen_spec, yukawa_spec

__all__ = ["VerificationDraw", "VerificationResult", "draw_parameters", "run_draw", "run_suite"]

VERIFY_RTOL = 1e-6


@dataclass(frozen=True)
class VerificationDraw:
    packet: AiryPacketParams
    kinematics: BeamKinematics
    potential: PotentialSpec
    theta: float
    phi: float


@dataclass(frozen=True)
class VerificationResult:
    draw: VerificationDraw
    amplitude_1d: complex
    amplitude_2d: complex

    @property
    def relative_difference(self):
        return abs(self.amplitude_1d - self.amplitude_2d) / abs(self.amplitude_2d)

    @property
    def passed(self):
        return self.relative_difference <= VERIFY_RTOL


def draw_parameters(rng: np.random.Generator, count: int):
    """Random configurations spanning the documented verification ranges.

    sigma_perp in [0.5, 10], xi per axis in [0.5, 3] sigma_perp, |b| in
    [0, 12] sigma_perp, theta in [0, 0.3], p_i in {5, 10, 20}; hydrogen and
    Yukawa potentials alternate. The impact direction is kept in the first
    quadrant, where the Airy lobes are; opposite it the amplitude decays
    faster than any power and a relative comparison loses meaning.
    """
    draws = []
    for i in range(count):
        sigma = float(rng.uniform(0.5, 10.0))
        xi_x = float(rng.uniform(0.5, 3.0)) * sigma
        xi_y = float(rng.uniform(0.5, 3.0)) * sigma
        bmag = float(rng.uniform(0.0, 12.0)) * sigma
        ang = float(rng.uniform(0.0, math.pi / 2))
        packet = AiryPacketParams(sigma, xi_x, xi_y, bmag * math.cos(ang), bmag * math.sin(ang))
        kin = BeamKinematics(float(rng.choice([5.0, 10.0, 20.0])))
        if i % 2 == 0:
            pot = hydrogen_spec()
        else:
            pot = yukawa_spec(V0=float(rng.uniform(0.2, 2.0)), mu=float(rng.uniform(1.0, 4.0)))
        draws.append(VerificationDraw(packet, kin, pot, float(rng.uniform(0.0, 0.3)),
                                      float(rng.uniform(0.0, 2 * math.pi))))
    return draws


def run_draw(draw: VerificationDraw, rtol: float = 1e-8) -> VerificationResult:
    Q = momentum_transfer(draw.kinematics, draw.theta, draw.phi)
    f1 = scattering_amplitude(Q, draw.packet, draw.potential, rtol=rtol).value
    f2 = scattering_amplitude_oracle2d(Q, draw.packet, draw.potential, rtol=rtol).value
    return VerificationResult(draw, f1, f2)


def run_suite(seed: int = 0, count: int = 100, rtol: float = 1e-8, threads=1):
    draws = draw_parameters(np.random.default_rng(seed), count)
    if threads is not None and threads != 1:
        with ThreadPoolExecutor(max_workers=None if threads == 0 else threads) as ex:
            return list(ex.map(lambda d: run_draw(d, rtol), draws))
    return [run_draw(d, rtol) for d in draws]
