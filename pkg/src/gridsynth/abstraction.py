"""Finite transition system construction over a uniform grid.

For every (cell, input) pair the one-period reachable set is over-approximated
by propagating the cell box through the sampled dynamics (growth-bound
inflation), and the successor set is every grid cell the propagated box
touches.  Pairs whose box exits the gridded domain in a non-periodic
dimension are marked blocked: no transition is claimed, which is the
conservative choice.

The relation is stored CSR-style (flat successor array + offsets) so that
construction order, memory layout, and iteration order are all deterministic.
"""

from __future__ import annotations

import itertools
import struct
from dataclasses import dataclass, field

import numpy as np

from .dynamics import VectorField, growth_factor
from .errors import EmptyInputSet, EmptyTarget, GeometryError
from .geometry import SNAP_TOL, HyperRect, UniformGrid, snap

MAGIC = b"GSYN1"


def build_input_grid(input_bounds: HyperRect, eta_u) -> np.ndarray:
    """Quantized input set: lattice points k*eta_u inside the closed input box.

    Enumerated row-major; returns an (num_inputs, m) array.
    """
    eta_u = np.asarray(eta_u, dtype=float)
    if eta_u.shape != input_bounds.lower.shape:
        raise GeometryError("eta_u dimension mismatch with input bounds")
    if np.any(eta_u <= 0):
        raise GeometryError("eta_u must be positive componentwise")
    axes = []
    for i in range(input_bounds.dim):
        k_min = int(np.ceil(snap(input_bounds.lower[i] / eta_u[i])))
        k_max = int(np.floor(snap(input_bounds.upper[i] / eta_u[i])))
        if k_min > k_max:
            raise EmptyInputSet(
                f"no multiple of {eta_u[i]} inside "
                f"[{input_bounds.lower[i]}, {input_bounds.upper[i]}]"
            )
        axes.append(np.arange(k_min, k_max + 1) * eta_u[i])
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)


@dataclass
class FiniteTransitionSystem:
    """Sparse transition relation over abstract states and inputs.

    Pair (state s, input u) lives at index u * num_states + s; its successor
    list is succ[indptr[q]:indptr[q+1]], sorted and duplicate-free.
    """

    num_states: int
    num_inputs: int
    indptr: np.ndarray  # int64, length num_states * num_inputs + 1
    succ: np.ndarray  # int64
    blocked: np.ndarray  # bool, length num_states * num_inputs
    eta: np.ndarray = None
    tau: float = 0.0
    nonfinite_pairs: int = 0
    _reverse: tuple = field(default=None, repr=False, compare=False)

    def pair_id(self, s: int, u: int) -> int:
        return u * self.num_states + s

    def delta(self, s: int, u: int) -> np.ndarray:
        q = self.pair_id(s, u)
        return self.succ[self.indptr[q] : self.indptr[q + 1]]

    def is_blocked(self, s: int, u: int) -> bool:
        return bool(self.blocked[self.pair_id(s, u)])

    @property
    def num_transitions(self) -> int:
        return int(self.succ.size)

    def reverse(self):
        """Predecessor map: for each state s', the pair ids q with s' in succ(q).

        Returns (rev_indptr, rev_pairs) CSR over states; built once, cached.
        """
        if self._reverse is None:
            pair_of_edge = np.repeat(
                np.arange(self.num_states * self.num_inputs, dtype=np.int64),
                np.diff(self.indptr),
            )
            order = np.argsort(self.succ, kind="stable")
            rev_pairs = pair_of_edge[order]
            rev_indptr = np.zeros(self.num_states + 1, dtype=np.int64)
            np.add.at(rev_indptr[1:], self.succ, 1)
            np.cumsum(rev_indptr, out=rev_indptr)
            self._reverse = (rev_indptr, rev_pairs)
        return self._reverse


def _rk4_batch(f, x0, u, tau, substeps):
    x = np.array(x0, dtype=float)
    h = tau / substeps
    for _ in range(substeps):
        k1 = f(x, u)
        k2 = f(x + 0.5 * h * k1, u)
        k3 = f(x + 0.5 * h * k2, u)
        k4 = f(x + h * k3, u)
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return x


def build_abstraction(
    grid: UniformGrid,
    inputs: np.ndarray,
    f: VectorField,
    tau: float,
    substeps: int = 5,
) -> FiniteTransitionSystem:
    """Construct the transition relation for every (cell, input) pair.

    Inputs are iterated in the outer loop with all cells handled as one
    vectorized batch, so output is deterministic and the buffers merge in
    pair-id order.
    """
    if grid.n != f.dim_state:
        raise GeometryError("grid/state dimension mismatch")
    inputs = np.asarray(inputs, dtype=float)
    if inputs.ndim != 2 or inputs.shape[1] != f.dim_input:
        raise GeometryError("inputs must be a (num_inputs, m) array")

    S = grid.num_cells
    n = grid.n
    centers = grid.all_centers()
    radius = grid.eta / 2.0
    new_radius = np.nextafter(growth_factor(f, tau) @ radius, np.inf)
    shape = np.array(grid.shape, dtype=np.int64)
    strides = grid._strides
    periodic = np.array(grid.periodic, dtype=bool)
    lower = grid.bounds.lower
    upper = grid.bounds.upper

    succ_blocks = []
    count_blocks = []
    blocked_blocks = []
    nonfinite_pairs = 0

    for u_vec in inputs:
        endc = _rk4_batch(f, centers, u_vec, tau, substeps)
        finite = np.all(np.isfinite(endc), axis=1)
        nonfinite_pairs += int(np.sum(~finite))
        endc = np.where(finite[:, None], endc, 0.0)

        box_lo = endc - new_radius
        box_hi = endc + new_radius
        exits = np.any(
            (~periodic)
            & ((box_lo < lower - SNAP_TOL) | (box_hi > upper + SNAP_TOL)),
            axis=1,
        )
        blocked = exits | ~finite

        v_lo = snap((box_lo - lower) / grid.eta)
        v_hi = snap((box_hi - lower) / grid.eta)
        k_min = np.ceil(v_lo - 1.0).astype(np.int64)
        k_max = np.floor(v_hi).astype(np.int64)
        # periodic dims wrap (span clipped to a full revolution); others clamp
        span = k_max - k_min + 1
        span = np.where(periodic, np.minimum(span, shape), span)
        k_min = np.where(~periodic, np.maximum(k_min, 0), k_min)
        k_max_c = np.where(~periodic, np.minimum(k_max, shape - 1), k_min + span - 1)
        span = np.where(~periodic, k_max_c - k_min + 1, span)
        span = np.maximum(span, 0)

        counts = np.where(blocked, 0, np.prod(span, axis=1))
        total = int(counts.sum())
        offsets = np.concatenate([[0], np.cumsum(counts)[:-1]])
        row = np.repeat(np.arange(S, dtype=np.int64), counts)
        r = np.arange(total, dtype=np.int64) - np.repeat(offsets, counts)

        flat = np.zeros(total, dtype=np.int64)
        for i in range(n - 1, -1, -1):
            d = r % span[row, i]
            r //= span[row, i]
            k = k_min[row, i] + d
            if periodic[i]:
                k %= shape[i]
            flat += k * strides[i]

        # successor lists must be sorted within each pair (wrapping breaks order)
        if np.any(periodic):
            order = np.lexsort((flat, row))
            flat = flat[order]

        succ_blocks.append(flat)
        count_blocks.append(counts)
        blocked_blocks.append(blocked)

    counts_all = np.concatenate(count_blocks)
    indptr = np.zeros(counts_all.size + 1, dtype=np.int64)
    np.cumsum(counts_all, out=indptr[1:])
    return FiniteTransitionSystem(
        num_states=S,
        num_inputs=inputs.shape[0],
        indptr=indptr,
        succ=np.concatenate(succ_blocks) if succ_blocks else np.zeros(0, np.int64),
        blocked=np.concatenate(blocked_blocks),
        eta=grid.eta,
        tau=float(tau),
        nonfinite_pairs=nonfinite_pairs,
    )


# --- cell labeling -------------------------------------------------------------


@dataclass(frozen=True)
class LabeledCells:
    obstacle_cells: frozenset
    target_stages: tuple  # one frozenset per sequential stage
    initial_cells: frozenset


def extend_rect(rect: HyperRect, grid: UniformGrid) -> HyperRect:
    """Extend a low-dimensional rect over the full range of remaining dimensions."""
    if rect.dim == grid.n:
        return rect
    if rect.dim > grid.n:
        raise GeometryError("rectangle has more dimensions than the grid")
    tail = HyperRect(grid.bounds.lower[rect.dim :], grid.bounds.upper[rect.dim :])
    return rect.extend(tail)


def _point_cells(grid: UniformGrid, point: np.ndarray):
    """Cells of a possibly low-dimensional point (all layers of free dimensions)."""
    point = np.asarray(point, dtype=float)
    d = point.size
    if d == grid.n:
        return {grid.cell_of(point).flat_id}
    partial = grid.cell_of(
        np.concatenate([point, grid.bounds.lower[d:] + grid.eta[d:] / 2])
    ).multi_index[:d]
    free_axes = [range(grid.shape[i]) for i in range(d, grid.n)]
    return {
        int(np.dot(partial + rest, grid._strides))
        for rest in itertools.product(*free_axes)
    }


def label_cells(grid: UniformGrid, spec) -> LabeledCells:
    """Mark obstacle, target, and initial cells of a canonicalized ProblemSpec.

    Obstacles (clearance-inflated) are marked by closed intersection,
    conservative outward; targets by full-cell containment, conservative
    inward; where the two collide the obstacle wins.
    """
    obstacle_cells = set()
    for rect in spec.inflated_obstacle_rects:
        obstacle_cells |= grid.cells_overlapping(extend_rect(rect, grid))

    target_stages = []
    for i, rect in enumerate(spec.target_rects):
        cells = grid.cells_contained(extend_rect(rect, grid)) - obstacle_cells
        if not cells:
            raise EmptyTarget(
                f"target stage {i} covers no full grid cell (grid too coarse)"
            )
        target_stages.append(frozenset(cells))

    if spec.initial_point is not None:
        initial = _point_cells(grid, spec.initial_point)
    else:
        initial = grid.cells_overlapping(extend_rect(spec.initial_rect, grid))

    return LabeledCells(
        obstacle_cells=frozenset(obstacle_cells),
        target_stages=tuple(target_stages),
        initial_cells=frozenset(initial),
    )


# --- binary cache ---------------------------------------------------------------


def save_fts(fts: FiniteTransitionSystem, path):
    """Bit-exact binary dump: magic, header, then the CSR arrays (little-endian)."""
    eta = np.asarray(fts.eta if fts.eta is not None else [], dtype="<f8")
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(
            struct.pack(
                "<qqqqd",
                eta.size,
                fts.num_states,
                fts.num_inputs,
                fts.succ.size,
                fts.tau,
            )
        )
        fh.write(eta.tobytes())
        fh.write(fts.indptr.astype("<i8").tobytes())
        fh.write(fts.succ.astype("<i8").tobytes())
        fh.write(fts.blocked.astype("<u1").tobytes())


def load_fts(path) -> FiniteTransitionSystem:
    with open(path, "rb") as fh:
        if fh.read(5) != MAGIC:
            raise GeometryError(f"{path}: not a transition-system cache")
        n, S, U, nsucc, tau = struct.unpack("<qqqqd", fh.read(40))
        eta = np.frombuffer(fh.read(8 * n), dtype="<f8")
        indptr = np.frombuffer(fh.read(8 * (S * U + 1)), dtype="<i8").copy()
        succ = np.frombuffer(fh.read(8 * nsucc), dtype="<i8").copy()
        blocked = np.frombuffer(fh.read(S * U), dtype="<u1").astype(bool)
    return FiniteTransitionSystem(
        num_states=S,
        num_inputs=U,
        indptr=indptr,
        succ=succ,
        blocked=blocked,
        eta=eta if n else None,
        tau=tau,
    )
