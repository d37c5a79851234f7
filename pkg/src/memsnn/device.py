"""Empirical memristor switching model.

A device is a single resistive state (ohms). Under a bias voltage it
drifts toward a voltage-dependent boundary resistance, with a rate
proportional to the squared distance from that boundary:

    dR/dt = A_p * (exp(|v|/t_p) - 1) * H(r_p(v) - R) * (r_p(v) - R)^2   (v > 0)
    dR/dt = A_n * (exp(|v|/t_n) - 1) * H(R - r_n(v)) * (R - r_n(v))^2   (v <= 0)

where r_{p,n}(v) = a0_{p,n} + a1_{p,n} * v and H is the Heaviside step
with H(0) = 0. Positive bias raises R toward r_p(v); negative bias lowers
it toward r_n(v); zero bias is a fixed point everywhere.

Pulses are applied by explicit forward-Euler integration. All functions
are pure: a device state is just a float, replaced rather than mutated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class DeviceParams:
    """Fitted switching-model constants.

    ``dt`` selects the integration mode for pulse application:

    * ``None`` (default): every pulse integrates with ``substeps`` Euler
      steps of size ``width / substeps``, so the integrated time always
      equals the pulse width.
    * a positive float: literal fixed-step mode, ``N = int(width / dt)``
      steps of size ``dt``. A pulse shorter than ``dt`` then performs
      zero steps and leaves the state untouched.
    """

    A_p: float
    A_n: float
    t_p: float
    t_n: float
    a0_p: float
    a1_p: float
    a0_n: float
    a1_n: float
    dt: float | None = None
    substeps: int = 100

    def __post_init__(self) -> None:
        if not self.A_p > 0:
            raise ValueError(f"A_p must be > 0, got {self.A_p}")
        if not self.A_n < 0:
            raise ValueError(f"A_n must be < 0, got {self.A_n}")
        if not (self.t_p > 0 and self.t_n > 0):
            raise ValueError("t_p and t_n must be > 0")
        if self.dt is not None and not self.dt > 0:
            raise ValueError(f"dt must be > 0 when set, got {self.dt}")
        if self.substeps < 1:
            raise ValueError(f"substeps must be >= 1, got {self.substeps}")


@dataclass(frozen=True)
class PulseSpec:
    """A programming pulse: signed voltage (volts) and width (seconds)."""

    voltage: float
    width: float

    def __post_init__(self) -> None:
        if not self.width > 0:
            raise ValueError(f"pulse width must be > 0, got {self.width}")
        if self.voltage == 0:
            raise ValueError("pulse voltage must be nonzero")


def boundary(params: DeviceParams, v: float) -> float:
    """Boundary resistance r_p(v) for v > 0, r_n(v) otherwise."""
    if v > 0:
        return params.a0_p + params.a1_p * v
    return params.a0_n + params.a1_n * v


def switching_rate(params: DeviceParams, resistance: float, v: float) -> float:
    """dR/dt (ohms per second) at the given state and bias.

    Zero when v = 0 (the exponential factor vanishes), when the state
    sits exactly on the active boundary, or when the Heaviside gate is
    closed (state already past the boundary).
    """
    bound = boundary(params, v)
    if v > 0:
        gap = bound - resistance
        if gap <= 0:
            return 0.0
        return params.A_p * (math.exp(abs(v) / params.t_p) - 1.0) * gap * gap
    gap = resistance - bound
    if gap <= 0:
        return 0.0
    return params.A_n * (math.exp(abs(v) / params.t_n) - 1.0) * gap * gap


def apply_pulse(params: DeviceParams, resistance: float, pulse: PulseSpec) -> float:
    """New resistance after one pulse, by explicit Euler integration.

    Steps never cross the active boundary: an overshooting Euler step is
    clamped to boundary(v), which is where the continuous model saturates.
    Deterministic; read noise lives in the crossbar layer, not here.
    """
    if params.dt is None:
        n_steps = params.substeps
        dt = pulse.width / n_steps
    else:
        n_steps = int(pulse.width / params.dt)
        dt = params.dt

    v = pulse.voltage
    bound = boundary(params, v)
    # Constant factors hoisted out of the step loop.
    if v > 0:
        coeff = params.A_p * (math.exp(abs(v) / params.t_p) - 1.0)
    else:
        coeff = params.A_n * (math.exp(abs(v) / params.t_n) - 1.0)

    r = resistance
    if v > 0:
        for _ in range(n_steps):
            gap = bound - r
            if gap <= 0:
                break
            r += coeff * gap * gap * dt
            if r > bound:
                r = bound
                break
    else:
        for _ in range(n_steps):
            gap = r - bound
            if gap <= 0:
                break
            r += coeff * gap * gap * dt
            if r < bound:
                r = bound
                break
    return r
