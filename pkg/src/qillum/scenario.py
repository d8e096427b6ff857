"""Hypothesis-conditioned states for the target-detection problem.

Two transmitters are modeled.  The entangled transmitter sends the signal
half of a two-mode squeezed vacuum into the interrogated region and retains
the idler; the returned mode mixes the (possibly reflected) signal with a
bright thermal bath on a transmissivity-``kappa`` beamsplitter.  The bath is
drawn at occupation ``N_B / (1 - kappa)`` so the mean noise photon number in
the return mode is ``N_B`` whether or not the target is present.  The
classical benchmark sends a coherent state of the same per-mode energy and
receives a mean field of 0 or ``sqrt(kappa N_S)`` embedded in thermal noise
``N_B``; the noise level is taken hypothesis-independent for this
transmitter as well.

Everything here is a pure function of ``ScenarioParams``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import gaussian_core as gc
from .errors import DomainError


@dataclass(frozen=True)
class ScenarioParams:
    """The four physical knobs of one detection problem.

    ``n_s``: mean signal photons per mode; ``n_b``: mean background photons
    per mode; ``kappa``: round-trip transmissivity in [0, 1]; ``m``: number
    of signal-idler mode pairs per decision.
    """

    n_s: float
    n_b: float
    kappa: float
    m: int = 1

    def __post_init__(self):
        if self.n_s < 0:
            raise DomainError(f"n_s must be nonnegative, got {self.n_s}")
        if self.n_b < 0:
            raise DomainError(f"n_b must be nonnegative, got {self.n_b}")
        if not 0.0 <= self.kappa <= 1.0:
            raise DomainError(f"kappa must lie in [0, 1], got {self.kappa}")
        if int(self.m) != self.m or self.m < 1:
            raise DomainError(f"m must be a positive integer, got {self.m}")
        object.__setattr__(self, "m", int(self.m))


class Hypothesis(enum.Enum):
    H0 = 0  # target absent
    H1 = 1  # target present


#: Parameter point used throughout for the headline comparison figure.
FIGURE_PARAMS = ScenarioParams(n_s=0.01, n_b=20.0, kappa=0.01)


def _expected_return_idler(n_s: float, n_b: float, kappa: float) -> np.ndarray:
    """Closed-form second-moment matrix of the (return, idler) pair."""
    c = math.sqrt(kappa * n_s * (n_s + 1.0))
    nr = kappa * n_s + n_b
    return np.array(
        [
            [nr + 1.0, 0.0, 0.0, c],
            [0.0, n_s + 1.0, c, 0.0],
            [0.0, c, nr, 0.0],
            [c, 0.0, 0.0, n_s],
        ],
        dtype=complex,
    )


def return_idler_state(params: ScenarioParams, h: Hypothesis) -> gc.GaussianState:
    """Joint (return, idler) state for the entangled transmitter.

    Target absent: a product of thermal states with occupations
    ``(n_b, n_s)``.  Target present: built constructively by mixing the
    signal with the rescaled bath on the beamsplitter and discarding the
    bath output; the result is checked entrywise against the closed form.
    The lossless edge ``kappa = 1`` is built without a bath mode.
    """
    if h is Hypothesis.H0:
        return gc.tensor(gc.thermal_state(params.n_b), gc.thermal_state(params.n_s))

    if params.kappa == 1.0:
        state = gc.tmsv_state(params.n_s)
        expected = _expected_return_idler(params.n_s, 0.0, 1.0)
    else:
        bath = gc.thermal_state(params.n_b / (1.0 - params.kappa))
        full = gc.tensor(gc.tmsv_state(params.n_s), bath)  # (signal, idler, bath)
        mixed = gc.apply_mode_map(full, gc.beamsplitter_map(params.kappa), [0, 2])
        state = gc.partial_state(mixed, [0, 1])
        expected = _expected_return_idler(params.n_s, params.n_b, params.kappa)

    scale = max(1.0, float(np.max(np.abs(expected))))
    if np.max(np.abs(state.smatrix - expected)) > 1e-12 * scale:
        raise RuntimeError("constructive return-idler state deviates from closed form")
    return state


def coherent_return_state(params: ScenarioParams, h: Hypothesis) -> gc.GaussianState:
    """Received mode for the coherent-state transmitter.

    Thermal covariance at occupation ``n_b`` under both hypotheses; the mean
    field is 0 (target absent) or ``sqrt(kappa n_s)`` (target present).
    """
    mean = 0.0
    if h is Hypothesis.H1:
        mean = math.sqrt(params.kappa * params.n_s)
    thermal = gc.thermal_state(params.n_b)
    return gc.GaussianState(1, np.array([mean], dtype=complex), thermal.smatrix)
