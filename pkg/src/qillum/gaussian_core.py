"""Moment calculus for multimode Gaussian bosonic states.

A state is tracked through its first moments and the 2n x 2n second-moment
matrix ``V`` with ``V[j, k] = <v_j vbar_k>`` taken about the mean, where
``v = [a_1 .. a_n, a_1+ .. a_n+]`` and ``vbar = [a_1+ .. a_n+, a_1 .. a_n]``.
For a single thermal mode this gives ``V = [[N+1, 0], [0, N]]``; for the
two-mode squeezed vacuum the (1,1) entry is ``N_S + 1`` and the (1,4) entry
``sqrt(N_S (N_S + 1))``.  The n-mode ordering (all annihilators first, then
all creators) generalizes that two-mode layout.

Physicality is checked in the symmetrized quadrature picture
(``q = (a + a+)/sqrt(2)``, ``p = (a - a+)/(i sqrt(2))``, vacuum variance
1/2), where every symplectic eigenvalue of a physical covariance is >= 1/2.

All functions are pure and the returned states are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PhysicalityError

#: Absolute tolerance on the symplectic-eigenvalue deficit below 1/2.
TOL_PHYS = 1e-9


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class GaussianState:
    """Zero- or nonzero-mean Gaussian state of ``n_modes`` bosonic modes.

    Attributes
    ----------
    n_modes : int
        Number of modes.
    mean : ndarray, shape (n_modes,)
        Mode amplitudes ``<a_j>``.
    smatrix : ndarray, shape (2 n_modes, 2 n_modes)
        Central second moments ``<v_j vbar_k>`` in the ordering above.
    """

    n_modes: int
    mean: np.ndarray
    smatrix: np.ndarray

    def __post_init__(self):
        n = self.n_modes
        if n < 1:
            raise DomainError("state needs at least one mode")
        mean = np.asarray(self.mean, dtype=complex).reshape(n)
        smatrix = np.asarray(self.smatrix, dtype=complex)
        if smatrix.shape != (2 * n, 2 * n):
            raise DomainError(
                f"second-moment matrix must be {2 * n}x{2 * n}, got {smatrix.shape}"
            )
        object.__setattr__(self, "mean", _readonly(mean))
        object.__setattr__(self, "smatrix", _readonly(smatrix))

    @property
    def photon_numbers(self) -> np.ndarray:
        """``<a_j+ a_j>`` per mode, mean-field contribution included."""
        n = self.n_modes
        diag = np.real(np.diag(self.smatrix)[n:])
        return diag + np.abs(self.mean) ** 2


@dataclass(frozen=True)
class ModeMap:
    """Linear bosonic (Bogoliubov) transform ``a'_j = sum_k A_jk a_k + B_jk a_k+``."""

    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=complex)
        B = np.asarray(self.B, dtype=complex)
        if A.shape != B.shape or A.ndim != 2:
            raise DomainError("A and B must be matrices of identical shape")
        object.__setattr__(self, "A", _readonly(A))
        object.__setattr__(self, "B", _readonly(B))

    @property
    def n_in(self) -> int:
        return self.A.shape[1]

    @property
    def n_out(self) -> int:
        return self.A.shape[0]

    def validate(self, tol: float = TOL_PHYS) -> None:
        """Check commutator preservation: ``A A+ - B B+ = I`` and ``A B^T`` symmetric."""
        A, B = self.A, self.B
        eye = np.eye(self.n_out)
        d1 = np.max(np.abs(A @ A.conj().T - B @ B.conj().T - eye))
        abt = A @ B.T
        d2 = np.max(np.abs(abt - abt.T)) if abt.size else 0.0
        if d1 > tol or d2 > tol:
            raise DomainError(
                f"mode map does not preserve commutators (deficits {d1:.3e}, {d2:.3e})"
            )


@dataclass(frozen=True)
class Moments:
    """Operator moments with mean-field contributions folded in."""

    amplitudes: np.ndarray  # <a_j>
    photon_numbers: np.ndarray  # <a_j+ a_j>, real
    phase_sensitive: np.ndarray  # <a_j a_k>
    phase_insensitive: np.ndarray  # <a_j+ a_k>


# ---------------------------------------------------------------------------
# internal helpers


def _blocks(V: np.ndarray):
    n = V.shape[0] // 2
    return V[:n, :n], V[:n, n:], V[n:, :n], V[n:, n:]


def _assemble(P, Q, R, S) -> np.ndarray:
    return np.block([[P, Q], [R, S]])


def _enforce_symmetry(V: np.ndarray) -> np.ndarray:
    """Average ``V`` with its required symmetry image.

    The constraints are ``P = S^T + I`` (commutator offset), ``Q`` symmetric,
    ``R = conj(Q)`` and ``S`` Hermitian.
    """
    n = V.shape[0] // 2
    P, Q, R, S = _blocks(V)
    eye = np.eye(n)
    S_est = (S + S.conj().T + (P.T - eye) + (P.T - eye).conj().T) / 4.0
    Q_est = (Q + Q.T + R.conj() + R.conj().T) / 4.0
    return _assemble(S_est.T + eye, Q_est, Q_est.conj(), S_est)


def _quadrature_covariance(V: np.ndarray) -> np.ndarray:
    """Symmetrized covariance of ``(q_1..q_n, p_1..p_n)`` from ``V``."""
    n = V.shape[0] // 2
    eye = np.eye(n)
    L = np.block([[eye, eye], [-1j * eye, 1j * eye]]) / math.sqrt(2.0)
    sigma = np.real(L @ V @ L.conj().T)
    return (sigma + sigma.T) / 2.0


def symplectic_eigenvalues(state: GaussianState) -> np.ndarray:
    """Symplectic spectrum of the quadrature covariance, sorted descending.

    Physical states have every value >= 1/2; pure states sit exactly at 1/2.
    """
    n = state.n_modes
    sigma = _quadrature_covariance(state.smatrix)
    eye = np.eye(n)
    zero = np.zeros((n, n))
    omega = np.block([[zero, eye], [-eye, zero]])
    ev = np.linalg.eigvals(omega @ sigma)
    nu = np.sort(np.abs(ev))
    return nu[::2][::-1]  # |eigvals| come in +-inu pairs


def _finalize(n_modes: int, mean: np.ndarray, V: np.ndarray,
              tol: float = TOL_PHYS) -> GaussianState:
    """Symmetry-renormalize, physicality-check, and freeze a state."""
    state = GaussianState(n_modes, mean, _enforce_symmetry(V))
    nu_min = symplectic_eigenvalues(state).min()
    if nu_min < 0.5 - tol:
        raise PhysicalityError(
            f"unphysical covariance: min symplectic eigenvalue {nu_min!r} < 1/2"
        )
    diag = np.diag(state.smatrix)[n_modes:]
    if np.any(np.real(diag) < -tol) or np.any(np.abs(np.imag(diag)) > tol):
        raise PhysicalityError("photon-number diagonal must be real and nonnegative")
    return state


# ---------------------------------------------------------------------------
# constructors


def vacuum_state(n_modes: int = 1) -> GaussianState:
    """Multimode vacuum."""
    n = int(n_modes)
    V = _assemble(np.eye(n), np.zeros((n, n)), np.zeros((n, n)), np.zeros((n, n)))
    return _finalize(n, np.zeros(n), V)


def thermal_state(n_mean: float) -> GaussianState:
    """Single-mode thermal state with ``n_mean`` photons on average."""
    if n_mean < 0:
        raise DomainError(f"thermal occupation must be nonnegative, got {n_mean}")
    V = np.array([[n_mean + 1.0, 0.0], [0.0, n_mean]], dtype=complex)
    return _finalize(1, np.zeros(1), V)


def coherent_state(alpha: complex) -> GaussianState:
    """Single-mode coherent state: displaced vacuum with ``<a> = alpha``."""
    V = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    return _finalize(1, np.array([alpha], dtype=complex), V)


def tmsv_state(n_s: float) -> GaussianState:
    """Two-mode squeezed vacuum with ``n_s`` photons per mode.

    Mode order is (signal, idler).  The state is pure and maximally
    entangled at fixed energy; both symplectic eigenvalues equal 1/2.
    """
    if n_s < 0:
        raise DomainError(f"mean photon number must be nonnegative, got {n_s}")
    c = math.sqrt(n_s * (n_s + 1.0))
    P = np.diag([n_s + 1.0, n_s + 1.0])
    S = np.diag([n_s, n_s])
    Q = np.array([[0.0, c], [c, 0.0]])
    return _finalize(2, np.zeros(2), _assemble(P, Q, Q, S))


def tensor(*states: GaussianState) -> GaussianState:
    """Product state; modes are concatenated in argument order."""
    if not states:
        raise DomainError("tensor of zero states")
    n = sum(s.n_modes for s in states)
    mean = np.concatenate([s.mean for s in states])
    P = np.zeros((n, n), dtype=complex)
    Q = np.zeros((n, n), dtype=complex)
    R = np.zeros((n, n), dtype=complex)
    S = np.zeros((n, n), dtype=complex)
    at = 0
    for s in states:
        k = s.n_modes
        sl = slice(at, at + k)
        p, q, r, ss = _blocks(s.smatrix)
        P[sl, sl], Q[sl, sl], R[sl, sl], S[sl, sl] = p, q, r, ss
        at += k
    return _finalize(n, mean, _assemble(P, Q, R, S))


def extend_with_vacuum(state: GaussianState, n_extra: int) -> GaussianState:
    """Append ``n_extra`` vacuum ancilla modes after the existing ones."""
    return tensor(state, vacuum_state(n_extra))


# ---------------------------------------------------------------------------
# standard maps


def identity_map(n_modes: int) -> ModeMap:
    n = int(n_modes)
    return ModeMap(np.eye(n), np.zeros((n, n)))


def beamsplitter_map(transmissivity: float) -> ModeMap:
    """Two-mode beamsplitter: ``a'_1 = sqrt(t) a_1 + sqrt(1-t) a_2``."""
    if not 0.0 <= transmissivity <= 1.0:
        raise DomainError(f"transmissivity must lie in [0, 1], got {transmissivity}")
    t = math.sqrt(transmissivity)
    r = math.sqrt(1.0 - transmissivity)
    A = np.array([[t, r], [-r, t]])
    return ModeMap(A, np.zeros((2, 2)))


def two_mode_squeezer_map(gain: float) -> ModeMap:
    """Two-mode squeezer: ``a'_1 = sqrt(G) a_1 + sqrt(G-1) a_2+`` (and 1<->2).

    ``gain = 2`` with a vacuum first input realizes phase conjugation of the
    second input, ``a'_1 = sqrt(2) a_vac + a_2+``.
    """
    if gain < 1.0:
        raise DomainError(f"squeezer gain must be >= 1, got {gain}")
    g = math.sqrt(gain)
    h = math.sqrt(gain - 1.0)
    A = np.diag([g, g])
    B = np.array([[0.0, h], [h, 0.0]])
    return ModeMap(A, B)


def compose_maps(second: ModeMap, first: ModeMap) -> ModeMap:
    """Map equivalent to applying ``first`` then ``second``."""
    if second.n_in != first.n_out:
        raise DomainError("map shapes do not compose")
    A = second.A @ first.A + second.B @ first.B.conj()
    B = second.A @ first.B + second.B @ first.A.conj()
    return ModeMap(A, B)


# ---------------------------------------------------------------------------
# operations


def apply_mode_map(state: GaussianState, mode_map: ModeMap,
                   input_modes: tuple[int, ...] | list[int]) -> GaussianState:
    """Apply a square Bogoliubov map to the selected modes.

    Ancillas are never created implicitly; extend the state with vacuum
    modes first when a map needs them.
    """
    mode_map.validate()
    sel = list(input_modes)
    n = state.n_modes
    if len(set(sel)) != len(sel):
        raise DomainError("input modes must be distinct")
    if any(not 0 <= j < n for j in sel):
        raise DomainError(f"mode index out of range for {n}-mode state")
    if mode_map.n_in != mode_map.n_out:
        raise DomainError("apply_mode_map requires a square map")
    if mode_map.n_in != len(sel):
        raise DomainError("map size does not match the number of selected modes")

    A = np.eye(n, dtype=complex)
    B = np.zeros((n, n), dtype=complex)
    ix = np.ix_(sel, sel)
    A[ix] = mode_map.A
    B[ix] = mode_map.B
    T = np.block([[A, B], [B.conj(), A.conj()]])
    mean = A @ state.mean + B @ state.mean.conj()
    V = T @ state.smatrix @ T.conj().T
    return _finalize(n, mean, V)


def partial_state(state: GaussianState, keep: tuple[int, ...] | list[int]) -> GaussianState:
    """Reduced state on the ``keep`` modes (in the given order)."""
    sel = list(keep)
    n = state.n_modes
    if not sel:
        raise DomainError("must keep at least one mode")
    if len(set(sel)) != len(sel) or any(not 0 <= j < n for j in sel):
        raise DomainError("kept modes must be distinct and in range")
    idx = sel + [j + n for j in sel]
    V = state.smatrix[np.ix_(idx, idx)]
    return _finalize(len(sel), state.mean[sel], V)


def moments(state: GaussianState) -> Moments:
    """Photon numbers and pairwise second moments, mean contributions included."""
    n = state.n_modes
    _, Q, _, S = _blocks(state.smatrix)
    m = state.mean
    phase_insensitive = S + np.outer(m.conj(), m)
    phase_sensitive = Q + np.outer(m, m)
    photon = np.real(np.diag(phase_insensitive)).copy()
    return Moments(
        amplitudes=m.copy(),
        photon_numbers=photon,
        phase_sensitive=phase_sensitive,
        phase_insensitive=phase_insensitive,
    )
