"""The formal problem-specification language.

A problem spec is a strict UTF-8 JSON document; it is the contract between
the agent layer (or a human) and the synthesis engine.  Parsing is
unforgiving on purpose: unknown keys are rejected so that malformed agent
output is refused rather than guessed at.

Top-level keys (all required):
    system, state_bounds, periodic, input_bounds, eta_x, eta_u, tau,
    obstacles, targets, initial, clearance

Rectangles are tagged unions:
    {"kind": "vertices4",    "vertices": [[x,y],[x,y],[x,y],[x,y]]}
    {"kind": "diagonal",     "points": [[...],[...]]}
    {"kind": "center_sides", "center": [...], "sides": [...]}

initial is {"point": [...]} or {"rect": <tagged rectangle>}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import DimensionMismatch, GeometryError, SchemaError
from .geometry import (
    CenterAndSides,
    FourVertices,
    HyperRect,
    TwoDiagonalVertices,
    UniformGrid,
    rect_from_encoding,
    snap_eta_periodic,
)

TOP_KEYS = {
    "system",
    "state_bounds",
    "periodic",
    "input_bounds",
    "eta_x",
    "eta_u",
    "tau",
    "obstacles",
    "targets",
    "initial",
    "clearance",
}

RECT_KEYS = {
    "vertices4": {"kind", "vertices"},
    "diagonal": {"kind", "points"},
    "center_sides": {"kind", "center", "sides"},
}


@dataclass(frozen=True)
class ProblemSpec:
    """Canonical reach-avoid problem description.

    obstacles/targets hold the original encodings as written; the *_rects
    fields are filled by canonicalize().
    """

    system_name: str
    state_bounds: HyperRect
    periodic: tuple
    input_bounds: HyperRect
    eta_x: tuple
    eta_u: tuple
    tau: float
    obstacles: tuple  # RectEncoding
    targets: tuple  # RectEncoding, visit order
    initial_point: np.ndarray = None  # exactly one of point / rect is set
    initial_rect: HyperRect = None
    clearance: float = 0.0
    canonical: bool = False
    obstacle_rects: tuple = field(default=())
    inflated_obstacle_rects: tuple = field(default=())
    target_rects: tuple = field(default=())

    def build_grid(self) -> UniformGrid:
        """State grid with eta snapped to an exact divisor on periodic dimensions."""
        eta = snap_eta_periodic(self.state_bounds, self.eta_x, self.periodic)
        return UniformGrid(self.state_bounds, eta, self.periodic)


def _expect(cond, message, path):
    if not cond:
        raise SchemaError(message, path)


def _num_list(value, path, length=None):
    _expect(isinstance(value, list), "expected a list of numbers", path)
    _expect(
        all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value),
        "expected numeric entries",
        path,
    )
    if length is not None:
        _expect(len(value) == length, f"expected {length} entries", path)
    return [float(v) for v in value]


def _parse_bounds(obj, path):
    _expect(isinstance(obj, dict), "expected an object", path)
    _expect(set(obj) == {"lower", "upper"}, "keys must be exactly lower/upper", path)
    lo = _num_list(obj["lower"], path + ".lower")
    hi = _num_list(obj["upper"], path + ".upper", length=len(lo))
    try:
        return HyperRect(lo, hi)
    except GeometryError as exc:
        raise GeometryError(f"{path}: {exc}") from None


def _parse_rect_encoding(obj, path):
    _expect(isinstance(obj, dict), "expected a tagged rectangle object", path)
    kind = obj.get("kind")
    _expect(kind in RECT_KEYS, f"unknown rectangle kind {kind!r}", path)
    _expect(
        set(obj) == RECT_KEYS[kind],
        f"keys for kind {kind!r} must be exactly {sorted(RECT_KEYS[kind])}",
        path,
    )
    if kind == "vertices4":
        vs = obj["vertices"]
        _expect(isinstance(vs, list) and len(vs) == 4, "need four vertices", path)
        return FourVertices(tuple(tuple(_num_list(v, path + ".vertices")) for v in vs))
    if kind == "diagonal":
        pts = obj["points"]
        _expect(isinstance(pts, list) and len(pts) == 2, "need two points", path)
        a = _num_list(pts[0], path + ".points[0]")
        b = _num_list(pts[1], path + ".points[1]", length=len(a))
        return TwoDiagonalVertices(tuple(a), tuple(b))
    center = _num_list(obj["center"], path + ".center")
    sides = _num_list(obj["sides"], path + ".sides", length=len(center))
    return CenterAndSides(tuple(center), tuple(sides))


def _position_box(spec_bounds: HyperRect, dim: int) -> HyperRect:
    return HyperRect(spec_bounds.lower[:dim], spec_bounds.upper[:dim])


def _check_rect_in_bounds(rect: HyperRect, bounds: HyperRect, what: str):
    if rect.dim > bounds.dim:
        raise GeometryError(f"{what}: dimension {rect.dim} exceeds state dimension")
    box = _position_box(bounds, rect.dim)
    if np.any(rect.lower < box.lower - 1e-9) or np.any(rect.upper > box.upper + 1e-9):
        raise GeometryError(f"{what}: outside state bounds")


def parse_spec(text: str) -> ProblemSpec:
    """Strict parse of a spec document. Raises SchemaError / GeometryError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    _expect(isinstance(doc, dict), "top level must be an object", "$")
    extra = set(doc) - TOP_KEYS
    missing = TOP_KEYS - set(doc)
    _expect(not extra, f"unknown keys {sorted(extra)}", "$")
    _expect(not missing, f"missing keys {sorted(missing)}", "$")

    _expect(isinstance(doc["system"], str) and doc["system"], "system must be a name", "$.system")
    state_bounds = _parse_bounds(doc["state_bounds"], "$.state_bounds")
    n = state_bounds.dim
    periodic = doc["periodic"]
    _expect(
        isinstance(periodic, list)
        and len(periodic) == n
        and all(isinstance(p, bool) for p in periodic),
        f"expected {n} booleans",
        "$.periodic",
    )
    input_bounds = _parse_bounds(doc["input_bounds"], "$.input_bounds")
    eta_x = _num_list(doc["eta_x"], "$.eta_x", length=n)
    _expect(all(v > 0 for v in eta_x), "eta_x must be positive", "$.eta_x")
    eta_u = _num_list(doc["eta_u"], "$.eta_u", length=input_bounds.dim)
    _expect(all(v > 0 for v in eta_u), "eta_u must be positive", "$.eta_u")
    tau = doc["tau"]
    _expect(
        isinstance(tau, (int, float)) and not isinstance(tau, bool) and tau > 0,
        "tau must be a positive number",
        "$.tau",
    )
    clearance = doc["clearance"]
    _expect(
        isinstance(clearance, (int, float))
        and not isinstance(clearance, bool)
        and clearance >= 0,
        "clearance must be non-negative",
        "$.clearance",
    )

    _expect(isinstance(doc["obstacles"], list), "expected a list", "$.obstacles")
    obstacles = tuple(
        _parse_rect_encoding(o, f"$.obstacles[{i}]")
        for i, o in enumerate(doc["obstacles"])
    )
    _expect(
        isinstance(doc["targets"], list) and len(doc["targets"]) >= 1,
        "at least one target required",
        "$.targets",
    )
    targets = tuple(
        _parse_rect_encoding(t, f"$.targets[{i}]") for i, t in enumerate(doc["targets"])
    )

    initial = doc["initial"]
    _expect(isinstance(initial, dict), "expected an object", "$.initial")
    _expect(
        set(initial) in ({"point"}, {"rect"}),
        "initial must carry exactly one of point/rect",
        "$.initial",
    )
    initial_point = None
    initial_rect = None
    if "point" in initial:
        pt = _num_list(initial["point"], "$.initial.point")
        _expect(len(pt) in (2, n), f"point must have 2 or {n} coordinates", "$.initial.point")
        initial_point = np.array(pt)
    else:
        initial_rect = rect_from_encoding(
            _parse_rect_encoding(initial["rect"], "$.initial.rect")
        )

    spec = ProblemSpec(
        system_name=doc["system"],
        state_bounds=state_bounds,
        periodic=tuple(periodic),
        input_bounds=input_bounds,
        eta_x=tuple(eta_x),
        eta_u=tuple(eta_u),
        tau=float(tau),
        obstacles=obstacles,
        targets=targets,
        initial_point=initial_point,
        initial_rect=initial_rect,
        clearance=float(clearance),
    )
    _validate_geometry(spec)
    return spec


def _validate_geometry(spec: ProblemSpec):
    for i, enc in enumerate(spec.obstacles):
        _check_rect_in_bounds(rect_from_encoding(enc), spec.state_bounds, f"obstacle {i}")
    for i, enc in enumerate(spec.targets):
        _check_rect_in_bounds(rect_from_encoding(enc), spec.state_bounds, f"target {i}")
    if spec.initial_point is not None:
        box = _position_box(spec.state_bounds, len(spec.initial_point))
        if not box.contains(spec.initial_point, tol=1e-9):
            raise GeometryError("initial point outside state bounds")
    else:
        _check_rect_in_bounds(spec.initial_rect, spec.state_bounds, "initial set")
    # grid consistency (divisibility; periodic eta is snapped, not rejected)
    spec.build_grid()


def canonicalize(spec: ProblemSpec) -> ProblemSpec:
    """Resolve all encodings, sort obstacles, and fold clearance into
    inflated obstacle copies (inf-norm Minkowski sum, clipped to bounds)."""
    obstacle_rects = sorted(
        (rect_from_encoding(e) for e in spec.obstacles),
        key=lambda r: (tuple(r.lower), tuple(r.upper)),
    )
    pos_box = _position_box(
        spec.state_bounds, obstacle_rects[0].dim if obstacle_rects else 2
    )
    inflated = tuple(
        r.inflate(spec.clearance).clip_to(pos_box) for r in obstacle_rects
    )
    target_rects = tuple(rect_from_encoding(e) for e in spec.targets)
    return replace(
        spec,
        canonical=True,
        obstacle_rects=tuple(obstacle_rects),
        inflated_obstacle_rects=inflated,
        target_rects=target_rects,
    )


# --- serialization ----------------------------------------------------------------


def _encoding_to_json(enc):
    if isinstance(enc, FourVertices):
        return {"kind": "vertices4", "vertices": [list(v) for v in enc.vertices]}
    if isinstance(enc, TwoDiagonalVertices):
        return {"kind": "diagonal", "points": [list(enc.a), list(enc.b)]}
    return {"kind": "center_sides", "center": list(enc.center), "sides": list(enc.sides)}


def serialize_spec(spec: ProblemSpec) -> str:
    doc = {
        "system": spec.system_name,
        "state_bounds": {
            "lower": list(spec.state_bounds.lower),
            "upper": list(spec.state_bounds.upper),
        },
        "periodic": list(spec.periodic),
        "input_bounds": {
            "lower": list(spec.input_bounds.lower),
            "upper": list(spec.input_bounds.upper),
        },
        "eta_x": list(spec.eta_x),
        "eta_u": list(spec.eta_u),
        "tau": spec.tau,
        "obstacles": [_encoding_to_json(e) for e in spec.obstacles],
        "targets": [_encoding_to_json(e) for e in spec.targets],
        "initial": (
            {"point": list(spec.initial_point)}
            if spec.initial_point is not None
            else {
                "rect": {
                    "kind": "diagonal",
                    "points": [
                        list(spec.initial_rect.lower),
                        list(spec.initial_rect.upper),
                    ],
                }
            }
        ),
        "clearance": spec.clearance,
    }
    return json.dumps(doc, indent=2)


# --- semantic diffing ----------------------------------------------------------------


@dataclass(frozen=True)
class MismatchEntry:
    category: str  # missing_obstacle, extra_obstacle, geometry_mismatch,
    # wrong_target, wrong_target_order, wrong_initial, wrong_bounds, wrong_clearance
    detail: str
    expected: object = None
    actual: object = None


@dataclass(frozen=True)
class MismatchReport:
    entries: tuple

    @property
    def ok(self):
        return len(self.entries) == 0

    def text(self) -> str:
        if self.ok:
            return "specs are semantically equivalent"
        return "\n".join(f"[{e.category}] {e.detail}" for e in self.entries)


def _rect_distance(a: HyperRect, b: HyperRect) -> float:
    if a.dim != b.dim:
        return float("inf")
    return float(
        max(np.max(np.abs(a.lower - b.lower)), np.max(np.abs(a.upper - b.upper)))
    )


def _rect_str(r: HyperRect) -> str:
    return f"[{', '.join(f'{v:g}' for v in r.lower)}] .. [{', '.join(f'{v:g}' for v in r.upper)}]"


def semantic_diff(
    reference: ProblemSpec, candidate: ProblemSpec, tol: float = 1e-6
) -> MismatchReport:
    """Componentwise geometric comparison of two canonicalized specs.

    Obstacles are matched by nearest-pair assignment; target order is
    compared exactly because visit order is part of the semantics.
    """
    if reference.state_bounds.dim != candidate.state_bounds.dim:
        raise DimensionMismatch(
            f"state dims {reference.state_bounds.dim} vs {candidate.state_bounds.dim}"
        )
    if not reference.canonical or not candidate.canonical:
        raise GeometryError("semantic_diff requires canonicalized specs")
    entries = []

    def add(category, detail, expected=None, actual=None):
        entries.append(MismatchEntry(category, detail, expected, actual))

    if not reference.state_bounds.approx_equal(candidate.state_bounds, tol):
        add(
            "wrong_bounds",
            f"state bounds {_rect_str(candidate.state_bounds)} != "
            f"{_rect_str(reference.state_bounds)}",
            reference.state_bounds,
            candidate.state_bounds,
        )
    if not reference.input_bounds.approx_equal(candidate.input_bounds, tol):
        add(
            "wrong_bounds",
            f"input bounds {_rect_str(candidate.input_bounds)} != "
            f"{_rect_str(reference.input_bounds)}",
            reference.input_bounds,
            candidate.input_bounds,
        )

    if abs(reference.clearance - candidate.clearance) > tol:
        add(
            "wrong_clearance",
            f"clearance {candidate.clearance:g} != {reference.clearance:g}",
            reference.clearance,
            candidate.clearance,
        )

    # initial set
    def initial_as_rect(s):
        if s.initial_point is not None:
            return HyperRect(s.initial_point, s.initial_point)
        return s.initial_rect

    ri, ci = initial_as_rect(reference), initial_as_rect(candidate)
    if ri.dim != ci.dim or _rect_distance(ri, ci) > tol:
        add(
            "wrong_initial",
            f"initial {_rect_str(ci)} != {_rect_str(ri)}",
            ri,
            ci,
        )

    # targets: order is semantic
    rt, ct = reference.target_rects, candidate.target_rects
    if len(rt) != len(ct):
        add(
            "wrong_target",
            f"target count {len(ct)} != {len(rt)}",
            rt,
            ct,
        )
    else:
        index_mismatch = [
            i for i in range(len(rt)) if _rect_distance(rt[i], ct[i]) > tol
        ]
        if index_mismatch:
            # same multiset but permuted -> ordering error, else geometry
            def multiset_match():
                used = set()
                for r in rt:
                    hit = next(
                        (
                            j
                            for j, c in enumerate(ct)
                            if j not in used and _rect_distance(r, c) <= tol
                        ),
                        None,
                    )
                    if hit is None:
                        return False
                    used.add(hit)
                return True

            if multiset_match():
                add(
                    "wrong_target_order",
                    f"targets visited in the wrong order (positions {index_mismatch})",
                    rt,
                    ct,
                )
            else:
                for i in index_mismatch:
                    add(
                        "wrong_target",
                        f"target {i}: {_rect_str(ct[i])} != {_rect_str(rt[i])}",
                        rt[i],
                        ct[i],
                    )

    # obstacles: nearest-pair assignment on canonical rects
    ro, co = reference.obstacle_rects, candidate.obstacle_rects
    if ro and co:
        cost = np.array([[_rect_distance(a, b) for b in co] for a in ro])
        cost = np.where(np.isfinite(cost), cost, 1e18)
        rows, cols = linear_sum_assignment(cost)
        matched_r, matched_c = set(), set()
        for i, j in zip(rows, cols):
            if cost[i, j] <= tol:
                matched_r.add(i)
                matched_c.add(j)
            elif cost[i, j] < 1e17 and len(ro) == len(co):
                matched_r.add(i)
                matched_c.add(j)
                add(
                    "geometry_mismatch",
                    f"obstacle {_rect_str(co[j])} differs from {_rect_str(ro[i])} "
                    f"by {cost[i, j]:g}",
                    ro[i],
                    co[j],
                )
        for i in range(len(ro)):
            if i not in matched_r:
                add(
                    "missing_obstacle",
                    f"obstacle {_rect_str(ro[i])} missing from candidate",
                    ro[i],
                    None,
                )
        for j in range(len(co)):
            if j not in matched_c:
                add(
                    "extra_obstacle",
                    f"candidate has extra obstacle {_rect_str(co[j])}",
                    None,
                    co[j],
                )
    elif ro:
        for r in ro:
            add("missing_obstacle", f"obstacle {_rect_str(r)} missing from candidate", r, None)
    elif co:
        for c in co:
            add("extra_obstacle", f"candidate has extra obstacle {_rect_str(c)}", None, c)

    return MismatchReport(entries=tuple(entries))
