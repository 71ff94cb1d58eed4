"""Hamiltonian flow integration with per-sample invariant diagnostics.

Integrates da/dt = dH/dlambda, dlambda/dt = -dH/da with a fixed-step
classical Runge-Kutta scheme or an adaptive RK45 (scipy).  No projection
back onto the unit-determinant locus is performed: determinant drift is
kept visible as an integrator-error diagnostic.  Each stored sample
records the Hamiltonian value, det(a), the horizontality residual of the
body-frame velocity, and (for n = 2) the five conserved quantities.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from . import sl2
from .distribution import DistributionSpec, generating_set
from .hamiltonian import CotangentPoint, gradient_function, hamiltonian_value

log = logging.getLogger(__name__)

METHODS = ("rk4_fixed", "rk45_adaptive")

_SINGULAR_DET = 1e-8
_DET_WARN = 1e-4


@dataclass(frozen=True)
class IntegratorConfig:
    step: float = 1e-3
    horizon: float = 1.0
    method: str = "rk4_fixed"
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    sample_stride: int = 1

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if not (self.step > 0 and self.horizon > 0):
            raise ValueError("step and horizon must be positive")
        if self.step > self.horizon:
            raise ValueError("step must not exceed the horizon")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.sample_stride < 1:
            raise ValueError("sample_stride must be a positive integer")


@dataclass
class Trajectory:
    """Time-ordered phase-space samples with per-sample diagnostics."""

    spec: DistributionSpec
    times: np.ndarray  # (S,)
    a: np.ndarray  # (S, n, n)
    lam: np.ndarray  # (S, n, n)
    H: np.ndarray  # (S,)
    det_a: np.ndarray  # (S,)
    horiz_residual: np.ndarray  # (S,), NaN where a is numerically singular
    C: np.ndarray | None  # (S, 5) for n = 2, else None
    warnings: list[str] = field(default_factory=list)
    aborted: bool = False

    @property
    def n_samples(self) -> int:
        return len(self.times)

    def point(self, idx: int) -> CotangentPoint:
        return CotangentPoint(self.a[idx], self.lam[idx])


@dataclass(frozen=True)
class DriftReport:
    """Worst-case deviations of the monitored quantities along a trajectory."""

    max_H_drift: float
    max_det_drift: float
    max_horiz_residual: float
    max_C_drift: np.ndarray | None  # (5,) for n = 2


def _rk4_path(rhs, y0, cfg: IntegratorConfig):
    """Fixed-step classical RK4; returns sampled (t, y) pairs."""
    n_full = int(np.floor(cfg.horizon / cfg.step + 1e-9))
    plan = [(i * cfg.step, cfg.step) for i in range(1, n_full + 1)]
    rem = cfg.horizon - n_full * cfg.step
    if rem > 1e-12 * max(1.0, cfg.horizon):
        plan.append((cfg.horizon, rem))
    elif plan:
        plan[-1] = (cfg.horizon, plan[-1][1])

    times = [0.0]
    states = [y0.copy()]
    y = y0
    aborted = False
    for idx, (t_next, h) in enumerate(plan, start=1):
        k1 = rhs(y)
        k2 = rhs(y + 0.5 * h * k1)
        k3 = rhs(y + 0.5 * h * k2)
        k4 = rhs(y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(y)):
            aborted = True
            break
        if idx % cfg.sample_stride == 0 or idx == len(plan):
            times.append(t_next)
            states.append(y.copy())
    return np.array(times), np.array(states), aborted


def _rk45_path(rhs, y0, cfg: IntegratorConfig):
    """Adaptive RK45 via scipy, sampled on the stride grid."""
    from scipy.integrate import solve_ivp

    dt = cfg.step * cfg.sample_stride
    k = int(np.floor(cfg.horizon / dt + 1e-9))
    t_eval = [i * dt for i in range(k + 1)]
    if cfg.horizon - t_eval[-1] > 1e-12 * max(1.0, cfg.horizon):
        t_eval.append(cfg.horizon)
    else:
        t_eval[-1] = cfg.horizon

    try:
        sol = solve_ivp(
            lambda t, y: rhs(y),
            (0.0, cfg.horizon),
            y0,
            method="RK45",
            t_eval=t_eval,
            atol=cfg.abs_tol,
            rtol=cfg.rel_tol,
        )
    except (ValueError, FloatingPointError) as exc:
        return np.array([0.0]), np.array([y0.copy()]), True, str(exc)
    states = sol.y.T
    finite = np.all(np.isfinite(states), axis=1)
    if sol.success and np.all(finite):
        return sol.t, states, False, ""
    keep = int(np.argmin(finite)) if not np.all(finite) else len(states)
    return sol.t[:keep], states[:keep], True, sol.message


def integrate(spec: DistributionSpec, init: CotangentPoint, cfg: IntegratorConfig) -> Trajectory:
    """Integrate the Hamiltonian system from an on-manifold initial point."""
    n = spec.n
    if init.dim != n:
        raise ValueError(f"initial point dimension {init.dim} does not match n={n}")
    if abs(np.linalg.det(init.a) - 1.0) >= 1e-8:
        raise ValueError("initial group point must have unit determinant")

    grad = gradient_function(spec)
    nn = n * n

    def rhs(y):
        a = y[:nn].reshape(n, n)
        lam = y[nn:].reshape(n, n)
        d_a, d_l = grad(a, lam)
        return np.concatenate((d_l.ravel(), -d_a.ravel()))

    y0 = np.concatenate((init.a.ravel(), init.lam.ravel()))
    warnings: list[str] = []
    if cfg.method == "rk4_fixed":
        times, states, aborted = _rk4_path(rhs, y0, cfg)
        if aborted:
            warnings.append("non-finite state encountered; integration aborted early")
    else:
        times, states, aborted, msg = _rk45_path(rhs, y0, cfg)
        if aborted:
            warnings.append(f"adaptive integration aborted: {msg}")

    S = len(times)
    a_samples = states[:, :nn].reshape(S, n, n)
    lam_samples = states[:, nn:].reshape(S, n, n)

    # orthonormal basis of the flattened generator span, for the
    # horizontality residual of the body-frame velocity
    gens = generating_set(spec).matrices
    q_span, _ = np.linalg.qr(gens.reshape(len(gens), nn).T)

    H = np.empty(S)
    det_a = np.empty(S)
    resid = np.empty(S)
    C = np.empty((S, 5)) if n == 2 else None
    worst_det = 0.0
    for i in range(S):
        a = a_samples[i]
        lam = lam_samples[i]
        pt = CotangentPoint(a, lam)
        H[i] = hamiltonian_value(spec, pt)
        det_a[i] = np.linalg.det(a)
        worst_det = max(worst_det, abs(det_a[i] - 1.0))
        if abs(det_a[i]) < _SINGULAR_DET:
            resid[i] = np.nan
        else:
            _, d_l = grad(a, lam)
            v = np.linalg.solve(a, d_l).ravel()
            resid[i] = float(np.linalg.norm(v - q_span @ (q_span.T @ v)))
        if C is not None:
            C[i] = sl2.conserved_constants(pt)

    if worst_det > _DET_WARN:
        msg = f"determinant drift {worst_det:.3e} exceeds {_DET_WARN:.0e}"
        warnings.append(msg)
        log.warning(msg)

    return Trajectory(
        spec=spec,
        times=times,
        a=a_samples,
        lam=lam_samples,
        H=H,
        det_a=det_a,
        horiz_residual=resid,
        C=C,
        warnings=warnings,
        aborted=aborted,
    )


def monitor_invariants(traj: Trajectory) -> DriftReport:
    """Worst-case drift of the conserved and structural quantities."""
    if traj.n_samples == 0:
        raise ValueError("empty trajectory")
    max_h = float(np.max(np.abs(traj.H - traj.H[0])))
    max_det = float(np.max(np.abs(traj.det_a - 1.0)))
    finite = traj.horiz_residual[np.isfinite(traj.horiz_residual)]
    max_resid = float(np.max(finite)) if len(finite) else float("nan")
    max_c = None
    if traj.C is not None:
        max_c = np.max(np.abs(traj.C - traj.C[0]), axis=0)
    return DriftReport(max_h, max_det, max_resid, max_c)


def trajectory_to_csv(traj: Trajectory, path):
    """Write the trajectory in the flat CSV layout, 17 significant digits."""
    n = traj.spec.n
    cols = ["t"]
    cols += [f"a{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    cols += [f"l{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    cols += ["H", "det", "horiz_residual"]
    if traj.C is not None:
        cols += [f"C{k}" for k in range(1, 6)]
    lines = [",".join(cols)]
    for i in range(traj.n_samples):
        row = [traj.times[i]]
        row += list(traj.a[i].ravel())
        row += list(traj.lam[i].ravel())
        row += [traj.H[i], traj.det_a[i], traj.horiz_residual[i]]
        if traj.C is not None:
            row += list(traj.C[i])
        lines.append(",".join(f"{v:.17g}" for v in row))
    text = "\n".join(lines) + "\n"
    if hasattr(path, "write"):
        path.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)
