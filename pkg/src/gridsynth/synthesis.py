"""Reach-avoid game solving on the finite abstraction.

The winning set is the least fixed point of the controllable-predecessor
operator under worst-case nondeterminism: an input certifies a state only
when every abstract successor is already winning.  The solver runs a
backward breadth-first sweep over the precomputed reverse relation with
per-(state, input) outstanding-successor counters, so it is linear in the
number of transitions.  Ties between certifying inputs break toward the
smallest input id, making the extracted controller deterministic.
"""

from __future__ import annotations

import io
import warnings
from dataclasses import dataclass, field

import numpy as np

from .abstraction import FiniteTransitionSystem, LabeledCells
from .errors import GeometryError, OutsideWinningSet
from .geometry import HyperRect, UniformGrid


@dataclass
class StagePolicy:
    """Winning set, certified input choice, and step-to-goal value for one stage."""

    winning: np.ndarray  # bool per state
    choice: np.ndarray  # input id per state, -1 where none (goal or losing)
    value: np.ndarray  # worst-case steps to goal, -1 where losing
    goal: frozenset  # the (possibly shrunk) goal cells of this stage
    input_vec: np.ndarray = field(default=None)  # per-cell inputs, set on import


@dataclass
class SymbolicController:
    """Ordered stage policies plus the quantized input table."""

    stages: list
    inputs: np.ndarray  # (num_inputs, m); may be empty on import
    input_dim: int = 0

    def __post_init__(self):
        if self.inputs is not None and self.inputs.size:
            self.input_dim = self.inputs.shape[1]

    @property
    def num_stages(self):
        return len(self.stages)

    # single-stage conveniences
    @property
    def winning(self):
        return self.stages[0].winning

    @property
    def value(self):
        return self.stages[0].value

    @property
    def choice(self):
        return self.stages[0].choice

    def input_for(self, stage: int, cell: int) -> np.ndarray:
        pol = self.stages[stage]
        if pol.input_vec is not None:
            return pol.input_vec[cell]
        cid = int(pol.choice[cell])
        if cid < 0:
            return np.zeros(self.input_dim)
        return self.inputs[cid]


def _solve_stage(fts: FiniteTransitionSystem, obstacle_set, goal_set) -> StagePolicy:
    """Backward fixed point for a single reach-avoid stage."""
    S, U = fts.num_states, fts.num_inputs
    obstacle = np.zeros(S, dtype=bool)
    if obstacle_set:
        obstacle[np.fromiter(obstacle_set, dtype=np.int64)] = True

    winning = np.zeros(S, dtype=bool)
    value = np.full(S, -1, dtype=np.int64)
    choice = np.full(S, -1, dtype=np.int64)

    goal = np.fromiter(goal_set, dtype=np.int64) if goal_set else np.zeros(0, np.int64)
    goal = goal[~obstacle[goal]]
    winning[goal] = True
    value[goal] = 0

    rev_indptr, rev_pairs = fts.reverse()
    outstanding = np.diff(fts.indptr).copy()

    frontier = np.sort(goal)
    level = 0
    while frontier.size:
        level += 1
        # every reverse edge into the frontier decrements its pair counter
        slices = [rev_pairs[rev_indptr[s] : rev_indptr[s + 1]] for s in frontier]
        if not slices:
            break
        qs = np.concatenate(slices) if slices else np.zeros(0, np.int64)
        if qs.size == 0:
            break
        np.subtract.at(outstanding, qs, 1)
        cand = np.unique(qs)
        cand = cand[outstanding[cand] == 0]
        s = cand % S
        u = cand // S
        keep = ~winning[s] & ~obstacle[s]
        s, u = s[keep], u[keep]
        if s.size == 0:
            frontier = np.zeros(0, np.int64)
            continue
        # smallest certifying input id per newly winning state
        order = np.lexsort((u, s))
        s, u = s[order], u[order]
        first = np.concatenate([[True], s[1:] != s[:-1]])
        s, u = s[first], u[first]
        winning[s] = True
        value[s] = level
        choice[s] = u
        frontier = s
    return StagePolicy(
        winning=winning, choice=choice, value=value, goal=frozenset(int(g) for g in goal)
    )


def solve_reach_avoid(
    fts: FiniteTransitionSystem, labels: LabeledCells, stage: int = 0
) -> SymbolicController:
    """Maximal winning set and deterministic policy for one target stage."""
    if not 0 <= stage < len(labels.target_stages):
        raise GeometryError(f"stage {stage} out of range")
    pol = _solve_stage(fts, labels.obstacle_cells, labels.target_stages[stage])
    if labels.initial_cells and not any(pol.winning[c] for c in labels.initial_cells):
        warnings.warn("no initial cell is winning (EmptyWinningSet)", stacklevel=2)
    return SymbolicController(stages=[pol], inputs=None)


def solve_sequential(fts: FiniteTransitionSystem, labels: LabeledCells) -> SymbolicController:
    """Solve all target stages last-to-first.

    Stage i's goal is shrunk to the part of its target that is winning for
    stage i+1, so a runtime stage handover always lands in the next stage's
    winning set.
    """
    stages = [None] * len(labels.target_stages)
    next_pol = None
    for i in range(len(labels.target_stages) - 1, -1, -1):
        goal = set(labels.target_stages[i])
        if next_pol is not None:
            goal = {c for c in goal if next_pol.winning[c]}
        pol = _solve_stage(fts, labels.obstacle_cells, goal)
        if labels.initial_cells and i == 0:
            if not any(pol.winning[c] for c in labels.initial_cells):
                warnings.warn(
                    "no initial cell is winning for stage 0 (EmptyWinningSet)",
                    stacklevel=2,
                )
        stages[i] = pol
        next_pol = pol
    return SymbolicController(stages=stages, inputs=None)


class ConcreteController:
    """Feedback concretization of a symbolic controller.

    Quantizes the measured state, looks up the certified abstract input, and
    advances its own stage counter when the state's cell enters the current
    stage's goal.  One instance per execution (the counter is the only
    mutable state).
    """

    def __init__(self, controller: SymbolicController, grid: UniformGrid):
        self.controller = controller
        self.grid = grid
        self.stage = 0

    @property
    def final_goal(self):
        return self.controller.stages[-1].goal

    def done(self, x) -> bool:
        """True when x sits in the final stage's goal with all prior stages passed."""
        cell = self.grid.cell_of(x).flat_id
        self._advance(cell)
        return self.stage == self.controller.num_stages - 1 and cell in self.final_goal

    def _advance(self, cell: int):
        while (
            self.stage < self.controller.num_stages - 1
            and cell in self.controller.stages[self.stage].goal
        ):
            self.stage += 1

    def __call__(self, x) -> np.ndarray:
        return concretize(self, self.grid, x)


def concretize(ctrl: ConcreteController, grid: UniformGrid, x) -> np.ndarray:
    """Input for the continuous state x at the controller's current stage."""
    cell = grid.cell_of(x).flat_id
    ctrl._advance(cell)
    pol = ctrl.controller.stages[ctrl.stage]
    if not pol.winning[cell]:
        raise OutsideWinningSet(
            f"cell {cell} is not winning at stage {ctrl.stage}; halting is required"
        )
    return ctrl.controller.input_for(ctrl.stage, cell)


# --- portable controller table ---------------------------------------------------


def export_controller(ctrl: SymbolicController, grid: UniformGrid, stream=None) -> str:
    """Self-describing text table: one line per winning cell and stage.

    Columns: flat_id stage value input-components.  The header records the
    grid so the file can be replayed without the original spec object.
    """
    buf = io.StringIO()
    fmt = lambda v: " ".join(repr(float(x)) for x in v)  # noqa: E731
    buf.write("# gridsynth controller v1\n")
    buf.write(f"# state_lower: {fmt(grid.bounds.lower)}\n")
    buf.write(f"# state_upper: {fmt(grid.bounds.upper)}\n")
    buf.write(f"# eta: {fmt(grid.eta)}\n")
    buf.write(f"# periodic: {' '.join(str(int(p)) for p in grid.periodic)}\n")
    buf.write(f"# stages: {ctrl.num_stages}\n")
    buf.write(f"# input_dim: {ctrl.input_dim}\n")
    buf.write("# columns: flat_id stage value inputs...\n")
    for stage_i, pol in enumerate(ctrl.stages):
        for cell in np.flatnonzero(pol.winning):
            u = ctrl.input_for(stage_i, int(cell))
            buf.write(f"{int(cell)} {stage_i} {int(pol.value[cell])} {fmt(u)}\n")
    text = buf.getvalue()
    if stream is not None:
        stream.write(text)
    return text


def load_controller(text: str):
    """Parse an exported controller table. Returns (SymbolicController, UniformGrid)."""
    header = {}
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, val = body.partition(":")
                header[key.strip()] = val.strip()
            continue
        rows.append(line.split())
    try:
        lower = np.array([float(v) for v in header["state_lower"].split()])
        upper = np.array([float(v) for v in header["state_upper"].split()])
        eta = np.array([float(v) for v in header["eta"].split()])
        periodic = [bool(int(v)) for v in header["periodic"].split()]
        num_stages = int(header["stages"])
        input_dim = int(header["input_dim"])
    except KeyError as exc:
        raise GeometryError(f"controller file missing header field {exc}") from None
    grid = UniformGrid(HyperRect(lower, upper), eta, periodic)
    S = grid.num_cells
    stages = []
    for _ in range(num_stages):
        stages.append(
            StagePolicy(
                winning=np.zeros(S, dtype=bool),
                choice=np.full(S, -1, dtype=np.int64),
                value=np.full(S, -1, dtype=np.int64),
                goal=frozenset(),
                input_vec=np.zeros((S, input_dim)),
            )
        )
    goals = [set() for _ in range(num_stages)]
    for parts in rows:
        cell, stage_i, val = int(parts[0]), int(parts[1]), int(parts[2])
        u = np.array([float(v) for v in parts[3 : 3 + input_dim]])
        pol = stages[stage_i]
        pol.winning[cell] = True
        pol.value[cell] = val
        pol.input_vec[cell] = u
        if val == 0:
            goals[stage_i].add(cell)
    for pol, goal in zip(stages, goals):
        pol.goal = frozenset(goal)
    ctrl = SymbolicController(stages=stages, inputs=None, input_dim=input_dim)
    return ctrl, grid
