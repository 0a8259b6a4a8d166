"""Continuous-time vector fields, RK4 integration, and box propagation.

Vector fields are registered under string names so a problem spec can refer
to them symbolically; the kinematic bicycle is built in.  Reachable boxes are
propagated with a growth-matrix bound: the box center follows the exact
(numerically integrated) flow while the radius is inflated by exp(L * tau),
where L bounds the Jacobian magnitude componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import expm

from .errors import GeometryError, NonFinite


@dataclass(frozen=True)
class VectorField:
    """A named control system dx/dt = f(x, u).

    eval_fn must broadcast: x may be a single state (n,) or a batch (N, n);
    u is a single input (m,).  growth_matrix is a componentwise bound on
    |df_i/dx_j| over the whole operating domain, used for box propagation.
    """

    name: str
    dim_state: int
    dim_input: int
    eval_fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    growth_matrix: np.ndarray = field(default=None)

    def __post_init__(self):
        L = np.asarray(
            self.growth_matrix
            if self.growth_matrix is not None
            else np.zeros((self.dim_state, self.dim_state)),
            dtype=float,
        )
        if L.shape != (self.dim_state, self.dim_state):
            raise GeometryError("growth matrix must be n x n")
        if np.any(L < 0):
            raise GeometryError("growth matrix entries must be non-negative")
        L.setflags(write=False)
        object.__setattr__(self, "growth_matrix", L)

    def __call__(self, x, u):
        return self.eval_fn(np.asarray(x, dtype=float), np.asarray(u, dtype=float))


# --- kinematic bicycle --------------------------------------------------------

# Steering is limited to [-1, 1]; the slip angle alpha = atan(tan(u2)/2)
# therefore never exceeds alpha_max below, and 1/cos(alpha_max) bounds
# |df_{1,2}/dx3| over the whole input box (f depends on x only through x3).
ALPHA_MAX = np.arctan(np.tan(1.0) / 2.0)
BICYCLE_GROWTH_C = 1.0 / np.cos(ALPHA_MAX)


def bicycle_f(x, u):
    """Kinematic bicycle: state (pos1, pos2, heading), input (speed, steering).

    Broadcasts over a leading batch axis in x.
    """
    x = np.asarray(x, dtype=float)
    u = np.asarray(u, dtype=float)
    alpha = np.arctan(np.tan(u[..., 1]) / 2.0)
    heading = x[..., 2]
    inv_cos_a = 1.0 / np.cos(alpha)
    return np.stack(
        [
            u[..., 0] * np.cos(alpha + heading) * inv_cos_a,
            u[..., 0] * np.sin(alpha + heading) * inv_cos_a,
            u[..., 0] * np.tan(u[..., 1]) * np.ones_like(heading),
        ],
        axis=-1,
    )


BICYCLE = VectorField(
    name="bicycle",
    dim_state=3,
    dim_input=2,
    eval_fn=bicycle_f,
    growth_matrix=np.array(
        [
            [0.0, 0.0, BICYCLE_GROWTH_C],
            [0.0, 0.0, BICYCLE_GROWTH_C],
            [0.0, 0.0, 0.0],
        ]
    ),
)

_REGISTRY: dict[str, VectorField] = {}


def register_field(vf: VectorField):
    _REGISTRY[vf.name] = vf


def get_field(name: str) -> VectorField:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise GeometryError(f"unknown vector field '{name}'") from None


register_field(BICYCLE)


# --- integration --------------------------------------------------------------


def integrate(f, x0, u, tau, substeps=5, wrap=None):
    """Fixed-step classic RK4 over [0, tau] with zero-order-hold input u.

    x0 may be a single state or an (N, n) batch.  wrap, when given, is a
    callable applied to the final state (periodic coordinate wrapping).
    Raises NonFinite if any intermediate value blows up.
    """
    if tau <= 0:
        raise GeometryError("tau must be positive")
    if substeps < 1:
        raise GeometryError("substeps must be >= 1")
    x = np.array(x0, dtype=float)
    u = np.asarray(u, dtype=float)
    h = tau / substeps
    for _ in range(substeps):
        k1 = f(x, u)
        k2 = f(x + 0.5 * h * k1, u)
        k3 = f(x + 0.5 * h * k2, u)
        k4 = f(x + h * k3, u)
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if not np.all(np.isfinite(x)):
        raise NonFinite("integration produced non-finite state")
    if wrap is not None:
        x = wrap(x)
    return x


def integrate_path(f, x0, u, tau, substeps=5, wrap=None):
    """Like integrate, but returns every substep state: (substeps + 1, n)."""
    if tau <= 0:
        raise GeometryError("tau must be positive")
    x = np.array(x0, dtype=float)
    u = np.asarray(u, dtype=float)
    h = tau / substeps
    path = [x.copy()]
    for _ in range(substeps):
        k1 = f(x, u)
        k2 = f(x + 0.5 * h * k1, u)
        k3 = f(x + 0.5 * h * k2, u)
        k4 = f(x + h * k3, u)
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        path.append(x.copy())
    if not np.all(np.isfinite(x)):
        raise NonFinite("integration produced non-finite state")
    if wrap is not None:
        path[-1] = wrap(path[-1])
    return np.array(path)


def growth_factor(vf: VectorField, tau: float) -> np.ndarray:
    """exp(L * tau) for the field's growth matrix."""
    return expm(vf.growth_matrix * tau)


def propagate_box(vf: VectorField, center, radius, u, tau, substeps=5, wrap=None):
    """Sound image of the box center +- radius under the sampled flow.

    Returns (center', radius') with center' the RK4 endpoint of the center
    and radius' = exp(L tau) * radius, inflated by one ulp per component to
    preserve containment under floating-point rounding.
    """
    radius = np.asarray(radius, dtype=float)
    if np.any(radius < 0):
        raise GeometryError("radius must be non-negative")
    new_center = integrate(vf, center, u, tau, substeps=substeps, wrap=wrap)
    new_radius = growth_factor(vf, tau) @ radius
    new_radius = np.nextafter(new_radius, np.inf)
    return new_center, new_radius
