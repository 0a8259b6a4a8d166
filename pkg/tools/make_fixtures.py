"""Regenerate the shipped benchmark fixtures (cases/<id>/spec.json + paraphrases).

Run from the repo root:  python3 tools/make_fixtures.py
"""

import json
import math
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "gridsynth" / "fixtures" / "cases"

PI = math.pi


def spec(bounds, obstacles, targets, initial, clearance=0.0):
    return {
        "system": "bicycle",
        "state_bounds": {"lower": [0.0, 0.0, -PI], "upper": [bounds, bounds, PI]},
        "periodic": [False, False, True],
        "input_bounds": {"lower": [-1.0, -1.0], "upper": [1.0, 1.0]},
        "eta_x": [0.2, 0.2, 0.2],
        "eta_u": [0.3, 0.3],
        "tau": 0.3,
        "obstacles": obstacles,
        "targets": targets,
        "initial": {"point": list(initial)},
        "clearance": clearance,
    }


def diag(a, b):
    return {"kind": "diagonal", "points": [list(a), list(b)]}


def cs(center, sides):
    return {"kind": "center_sides", "center": list(center), "sides": list(sides)}


def v4(lo, hi):
    return {
        "kind": "vertices4",
        "vertices": [
            [lo[0], lo[1]],
            [hi[0], lo[1]],
            [hi[0], hi[1]],
            [lo[0], hi[1]],
        ],
    }


CASES = {
    "case01_warehouse_crate": (
        spec(4.0, [diag((1.6, 1.6), (2.4, 2.4))], [diag((3.0, 3.0), (3.8, 3.8))], (0.5, 0.5, 0.0)),
        [
            "A mobile robot works on a square warehouse floor 4 units on a side, "
            "with the origin in the south-west corner. A crate occupies the block "
            "with opposite corners (1.6, 1.6) and (2.4, 2.4). Starting from "
            "(0.5, 0.5) facing east, drive to the staging area that spans from "
            "(3.0, 3.0) to (3.8, 3.8) without hitting the crate.",
            "The floor is 4 by 4. One crate sits in the middle; its footprint "
            "runs from (1.6, 1.6) up to (2.4, 2.4). The robot begins at position "
            "(0.5, 0.5) pointing along the positive x axis and must end up "
            "anywhere inside the square whose corners are (3.0, 3.0) and "
            "(3.8, 3.8), avoiding the crate the whole way.",
            "Inside a 4x4 workspace a single obstacle is present: the rectangle "
            "between (1.6, 1.6) and (2.4, 2.4). Reach the goal region "
            "[3.0, 3.8] x [3.0, 3.8] from the start point (0.5, 0.5) with "
            "initial heading 0, never touching the obstacle.",
        ],
    ),
    "case02_parking_garage": (
        spec(5.0, [cs((2.5, 1.5), (1.0, 1.0)), cs((2.5, 3.5), (1.0, 1.0))],
             [diag((4.0, 2.0), (4.8, 3.0))], (0.4, 2.4, 0.0)),
        [
            "A 5 by 5 parking garage has two concrete pillars, both 1 unit "
            "square: one centered at (2.5, 1.5) and another centered at "
            "(2.5, 3.5). The vehicle starts at (0.4, 2.4) heading east and must "
            "park inside the bay stretching from (4.0, 2.0) to (4.8, 3.0).",
            "Two square pillars, each with side 1, stand in a 5x5 garage at "
            "centers (2.5, 1.5) and (2.5, 3.5). Drive from the entrance point "
            "(0.4, 2.4), initially facing the positive x direction, into the "
            "parking bay whose diagonal corners are (4.0, 2.0) and (4.8, 3.0), "
            "avoiding both pillars.",
            "In a garage measuring 5 units on each side, avoid the pillar "
            "occupying [2.0, 3.0] x [1.0, 2.0] and the pillar occupying "
            "[2.0, 3.0] x [3.0, 4.0]. The goal is the region between (4.0, 2.0) "
            "and (4.8, 3.0); the run begins at (0.4, 2.4) with heading 0.",
        ],
    ),
    "case03_vineyard_rows": (
        spec(6.0, [diag((1.0, 0.0), (1.4, 4.4)), diag((3.0, 1.6), (3.4, 6.0))],
             [diag((5.0, 5.0), (5.8, 5.8))], (0.3, 0.3, 1.5707963267948966)),
        [
            "An agricultural robot crosses a 6 by 6 vineyard. Two long hedge "
            "rows block the way: one from (1.0, 0.0) to (1.4, 4.4) and one from "
            "(3.0, 1.6) to (3.4, 6.0). Starting at (0.3, 0.3) facing north, "
            "reach the collection point between (5.0, 5.0) and (5.8, 5.8).",
            "The field is 6 units square. Hedge row A occupies the strip "
            "[1.0, 1.4] x [0.0, 4.4]; hedge row B occupies [3.0, 3.4] x "
            "[1.6, 6.0]. From the south-west start (0.3, 0.3), heading along "
            "the positive y axis, drive to the square goal with corners "
            "(5.0, 5.0) and (5.8, 5.8) without touching either hedge.",
            "Navigate a 6x6 plot containing two thin rectangular obstacles: "
            "one spanning (1.0, 0.0) to (1.4, 4.4), the other spanning "
            "(3.0, 1.6) to (3.4, 6.0). The vehicle begins at (0.3, 0.3) "
            "pointing north and must finish inside [5.0, 5.8] x [5.0, 5.8].",
        ],
    ),
    "case04_loading_dock_sequence": (
        spec(5.0, [cs((2.5, 2.5), (1.0, 1.0))],
             [diag((0.2, 4.0), (1.2, 4.8)), diag((4.0, 0.2), (4.8, 1.2))],
             (0.5, 0.5, 0.0)),
        [
            "On a 5 by 5 depot floor, first visit the pickup shelf between "
            "(0.2, 4.0) and (1.2, 4.8), then deliver to the dock between "
            "(4.0, 0.2) and (4.8, 1.2). A storage bin, 1 unit square centered "
            "at (2.5, 2.5), must be avoided. Start at (0.5, 0.5) facing east.",
            "The task has two stops in order: stop one is the region with "
            "corners (0.2, 4.0) and (1.2, 4.8); stop two is the region with "
            "corners (4.0, 0.2) and (4.8, 1.2). The floor is 5 units square, "
            "the robot leaves from (0.5, 0.5) heading 0, and the square bin "
            "centered at (2.5, 2.5) with side 1 is off limits.",
            "Reach the south-east dock [4.0, 4.8] x [0.2, 1.2] after visiting "
            "the north-west shelf [0.2, 1.2] x [4.0, 4.8], all inside a 5x5 "
            "hall whose center holds a 1x1 obstacle at (2.5, 2.5). The run "
            "starts at (0.5, 0.5) with heading 0.",
        ],
    ),
    "case05_clearance_tank": (
        spec(4.0, [cs((2.0, 2.0), (0.8, 0.8))], [diag((3.2, 3.2), (3.8, 3.8))],
             (0.3, 0.3, 0.0), clearance=0.4),
        [
            "A chemical tank with a square footprint, side 0.8, stands at the "
            "center (2.0, 2.0) of a 4 by 4 hall. For safety you must not get "
            "closer than 0.4 units to the tank. Drive from (0.3, 0.3), facing "
            "east, into the corner region between (3.2, 3.2) and (3.8, 3.8).",
            "Inside a 4x4 room, keep a safety margin of at least 0.4 units from "
            "the 0.8 by 0.8 tank centered at (2.0, 2.0). The goal is the square "
            "with corners (3.2, 3.2) and (3.8, 3.8); the start is (0.3, 0.3) "
            "with heading 0.",
            "The hall measures 4 units per side. One obstacle: a square of side "
            "0.8 centered at (2.0, 2.0); a clearance of 0.4 units around it is "
            "mandatory. Beginning at (0.3, 0.3) pointed along +x, reach "
            "[3.2, 3.8] x [3.2, 3.8].",
        ],
    ),
    "case06_city_block": (
        spec(6.0, [v4((1.0, 1.0), (2.2, 2.2)), v4((3.8, 1.0), (5.0, 2.2)),
                   v4((1.0, 3.8), (2.2, 5.0)), v4((3.8, 3.8), (5.0, 5.0))],
             [diag((2.6, 5.2), (3.4, 5.8))], (3.0, 0.3, 1.5707963267948966)),
        [
            "An autonomous shuttle crosses a 6 by 6 city block with four "
            "buildings, each 1.2 units square, at corners (1.0, 1.0), "
            "(3.8, 1.0), (1.0, 3.8) and (3.8, 3.8) (those are their south-west "
            "corners). From (3.0, 0.3) heading north, reach the plaza between "
            "(2.6, 5.2) and (3.4, 5.8) without touching any building.",
            "Four square buildings of side 1.2 occupy [1.0, 2.2] x [1.0, 2.2], "
            "[3.8, 5.0] x [1.0, 2.2], [1.0, 2.2] x [3.8, 5.0] and [3.8, 5.0] x "
            "[3.8, 5.0] inside a 6x6 district. Drive from (3.0, 0.3), initially "
            "facing +y, to the goal region with corners (2.6, 5.2) and "
            "(3.4, 5.8).",
            "The map is 6 units on each side and contains four identical "
            "obstacles: squares with opposite corners (1.0, 1.0)-(2.2, 2.2), "
            "(3.8, 1.0)-(5.0, 2.2), (1.0, 3.8)-(2.2, 5.0) and "
            "(3.8, 3.8)-(5.0, 5.0). Start at (3.0, 0.3) facing north; finish "
            "anywhere in [2.6, 3.4] x [5.2, 5.8].",
        ],
    ),
    "case07_open_field": (
        spec(4.0, [], [diag((3.0, 0.4), (3.8, 1.2))], (0.4, 3.4, -1.5707963267948966)),
        [
            "A delivery robot operates on an empty 4 by 4 lawn with no "
            "obstacles at all. It starts at (0.4, 3.4) facing south and must "
            "reach the drop zone between (3.0, 0.4) and (3.8, 1.2).",
            "No obstacles are present on the 4x4 field. From the start point "
            "(0.4, 3.4) with heading -pi/2, drive into the rectangle whose "
            "diagonal corners are (3.0, 0.4) and (3.8, 1.2).",
            "The workspace is a clear square of side 4. Reach the goal area "
            "[3.0, 3.8] x [0.4, 1.2] from (0.4, 3.4), initially pointing in "
            "the negative y direction.",
        ],
    ),
    "case08_narrow_gap": (
        spec(4.0, [diag((0.0, 1.8), (1.6, 2.2)), diag((2.4, 1.8), (4.0, 2.2))],
             [diag((1.6, 3.2), (2.4, 3.8))], (2.0, 0.4, 1.5707963267948966)),
        [
            "A wall with a narrow gap splits a 4 by 4 room in two: the wall "
            "segments run from (0.0, 1.8) to (1.6, 2.2) and from (2.4, 1.8) to "
            "(4.0, 2.2), leaving an opening between x = 1.6 and x = 2.4. Start "
            "at (2.0, 0.4) facing north and reach the alcove between "
            "(1.6, 3.2) and (2.4, 3.8).",
            "Two wall pieces occupy [0.0, 1.6] x [1.8, 2.2] and [2.4, 4.0] x "
            "[1.8, 2.2] inside a 4x4 room; the only passage is the gap between "
            "them. From (2.0, 0.4) with heading pi/2, drive through the gap "
            "into the region with corners (1.6, 3.2) and (2.4, 3.8).",
            "The room is 4 units square. Obstacle one spans (0.0, 1.8) to "
            "(1.6, 2.2); obstacle two spans (2.4, 1.8) to (4.0, 2.2). The goal "
            "is [1.6, 2.4] x [3.2, 3.8]; the run begins at (2.0, 0.4) pointing "
            "along +y.",
        ],
    ),
    "case09_museum_patrol": (
        spec(5.0, [cs((1.5, 2.5), (1.0, 3.0)), cs((3.5, 2.5), (1.0, 3.0))],
             [diag((2.2, 4.2), (2.8, 4.8))], (2.5, 0.3, 1.5707963267948966)),
        [
            "Two display cases stand in a 5 by 5 museum hall: each is 1 unit "
            "wide and 3 units deep, centered at (1.5, 2.5) and (3.5, 2.5). A "
            "patrol robot starts at (2.5, 0.3) facing north and must reach the "
            "alarm panel area between (2.2, 4.2) and (2.8, 4.8) through the "
            "central corridor.",
            "The hall is 5x5. Display case one occupies [1.0, 2.0] x "
            "[1.0, 4.0]; display case two occupies [3.0, 4.0] x [1.0, 4.0]. "
            "From the start (2.5, 0.3), heading +y, drive to the goal square "
            "with corners (2.2, 4.2) and (2.8, 4.8).",
            "Inside a 5 by 5 gallery, avoid two cabinets, each 1 by 3, "
            "centered at (1.5, 2.5) and (3.5, 2.5). The destination is "
            "[2.2, 2.8] x [4.2, 4.8]; the start pose is (2.5, 0.3) facing "
            "north.",
        ],
    ),
    "case10_harbor_buoys": (
        spec(6.0, [cs((2.0, 2.0), (0.8, 0.8)), cs((4.0, 3.0), (0.8, 0.8)),
                   cs((2.0, 4.4), (0.8, 0.8))],
             [diag((5.0, 5.0), (5.8, 5.8))], (0.4, 0.4, 0.7853981633974483)),
        [
            "A harbor vessel navigates a 6 by 6 basin with three moored "
            "platforms, each 0.8 units square, centered at (2.0, 2.0), "
            "(4.0, 3.0) and (2.0, 4.4). From (0.4, 0.4) heading north-east "
            "(pi/4), sail to the berth between (5.0, 5.0) and (5.8, 5.8).",
            "Three square platforms of side 0.8 float in a 6x6 basin at "
            "centers (2.0, 2.0), (4.0, 3.0) and (2.0, 4.4). Starting at "
            "(0.4, 0.4) with heading 0.7853981633974483, reach the region "
            "whose opposite corners are (5.0, 5.0) and (5.8, 5.8).",
            "The basin is 6 units on each side. Avoid the obstacles "
            "[1.6, 2.4] x [1.6, 2.4], [3.6, 4.4] x [2.6, 3.4] and [1.6, 2.4] x "
            "[4.0, 4.8]. Goal: [5.0, 5.8] x [5.0, 5.8]. Start: (0.4, 0.4), "
            "heading pi/4.",
        ],
    ),
    "case11_clearance_corridor": (
        spec(5.0, [diag((2.2, 0.0), (2.8, 3.0))], [diag((4.0, 4.0), (4.8, 4.8))],
             (0.4, 0.4, 0.0), clearance=0.2),
        [
            "A 5 by 5 workshop has a partition wall from (2.2, 0.0) to "
            "(2.8, 3.0). Machines near the wall require a clearance of 0.2 "
            "units. From (0.4, 0.4) facing east, drive around the wall to the "
            "charging pad between (4.0, 4.0) and (4.8, 4.8).",
            "Keep at least 0.2 units away from the partition occupying "
            "[2.2, 2.8] x [0.0, 3.0] inside the 5x5 workshop. The goal region "
            "has corners (4.0, 4.0) and (4.8, 4.8); the start is (0.4, 0.4) "
            "with heading 0.",
            "Inside a square workshop of side 5, one wall spans (2.2, 0.0) to "
            "(2.8, 3.0) and carries a mandatory 0.2-unit safety margin. Reach "
            "[4.0, 4.8] x [4.0, 4.8] starting from (0.4, 0.4) pointing along "
            "the positive x axis.",
        ],
    ),
    "case12_figure_eight": (
        spec(6.0, [cs((3.0, 3.0), (1.2, 1.2))],
             [diag((4.8, 4.8), (5.6, 5.6)), diag((0.4, 0.4), (1.2, 1.2))],
             (0.4, 3.0, 0.0)),
        [
            "On a 6 by 6 test track with a 1.2-unit-square island centered at "
            "(3.0, 3.0), first drive to the checkpoint between (4.8, 4.8) and "
            "(5.6, 5.6), then return to the pit area between (0.4, 0.4) and "
            "(1.2, 1.2). The car starts at (0.4, 3.0) facing east.",
            "The track is 6x6 with one central obstacle occupying [2.4, 3.6] x "
            "[2.4, 3.6]. Visit two regions in order: first [4.8, 5.6] x "
            "[4.8, 5.6], then [0.4, 1.2] x [0.4, 1.2]. Start pose: (0.4, 3.0), "
            "heading 0.",
            "Starting at (0.4, 3.0) facing +x on a 6 by 6 course, reach the "
            "pit square with corners (0.4, 0.4) and (1.2, 1.2) after first "
            "visiting the checkpoint square with corners (4.8, 4.8) and "
            "(5.6, 5.6). The square island of side 1.2 centered at (3.0, 3.0) "
            "must never be touched.",
        ],
    ),
    "case13_office_desks": (
        spec(5.0, [v4((0.8, 0.8), (2.0, 1.6)), v4((3.0, 0.8), (4.2, 1.6)),
                   v4((0.8, 3.4), (2.0, 4.2)), v4((3.0, 3.4), (4.2, 4.2))],
             [diag((2.2, 2.2), (2.8, 2.8))], (0.3, 2.4, 0.0)),
        [
            "A cleaning robot works in a 5 by 5 office with four desks, each "
            "1.2 by 0.8: their south-west corners sit at (0.8, 0.8), "
            "(3.0, 0.8), (0.8, 3.4) and (3.0, 3.4). From (0.3, 2.4) facing "
            "east, reach the center area between (2.2, 2.2) and (2.8, 2.8).",
            "Four desks occupy [0.8, 2.0] x [0.8, 1.6], [3.0, 4.2] x "
            "[0.8, 1.6], [0.8, 2.0] x [3.4, 4.2] and [3.0, 4.2] x [3.4, 4.2] "
            "in a 5x5 office. Drive from (0.3, 2.4) with heading 0 to the "
            "square whose corners are (2.2, 2.2) and (2.8, 2.8).",
            "The office floor is 5 units square. Avoiding all four desks "
            "(rectangles (0.8, 0.8)-(2.0, 1.6), (3.0, 0.8)-(4.2, 1.6), "
            "(0.8, 3.4)-(2.0, 4.2), (3.0, 3.4)-(4.2, 4.2)), reach the goal "
            "[2.2, 2.8] x [2.2, 2.8] from the start (0.3, 2.4) facing +x.",
        ],
    ),
    "case14_river_crossing": (
        spec(6.0, [diag((0.0, 2.6), (2.6, 3.4)), diag((3.4, 2.6), (6.0, 3.4))],
             [diag((2.8, 5.0), (3.6, 5.8)), diag((5.0, 0.4), (5.8, 1.2))],
             (0.4, 0.4, 0.0)),
        [
            "A river crosses a 6 by 6 map as the band 2.6 <= y <= 3.4, with a "
            "single bridge gap between x = 2.6 and x = 3.4. First cross to the "
            "north camp between (2.8, 5.0) and (3.6, 5.8), then come back "
            "south-east to the depot between (5.0, 0.4) and (5.8, 1.2). Start "
            "at (0.4, 0.4) facing east.",
            "Two impassable water strips occupy [0.0, 2.6] x [2.6, 3.4] and "
            "[3.4, 6.0] x [2.6, 3.4] on a 6x6 map. Visit, in order, the region "
            "with corners (2.8, 5.0) and (3.6, 5.8) and then the region with "
            "corners (5.0, 0.4) and (5.8, 1.2), starting from (0.4, 0.4) with "
            "heading 0.",
            "On a 6-unit-square map, the only way north is the ford at "
            "2.6 < x < 3.4 between the water obstacles (0.0, 2.6)-(2.6, 3.4) "
            "and (3.4, 2.6)-(6.0, 3.4). From (0.4, 0.4) facing +x, first reach "
            "[2.8, 3.6] x [5.0, 5.8], afterwards reach [5.0, 5.8] x "
            "[0.4, 1.2].",
        ],
    ),
    "case15_greenhouse": (
        spec(4.0, [diag((1.0, 1.0), (1.4, 3.0)), diag((2.6, 1.0), (3.0, 3.0))],
             [diag((1.7, 3.3), (2.3, 3.9))], (2.0, 0.3, 1.5707963267948966)),
        [
            "Two planting tables run north-south in a 4 by 4 greenhouse: one "
            "from (1.0, 1.0) to (1.4, 3.0), the other from (2.6, 1.0) to "
            "(3.0, 3.0). A watering robot starts at (2.0, 0.3) facing north "
            "and must reach the pump between (1.7, 3.3) and (2.3, 3.9).",
            "The greenhouse is 4x4. Avoid the tables occupying [1.0, 1.4] x "
            "[1.0, 3.0] and [2.6, 3.0] x [1.0, 3.0]. Drive from (2.0, 0.3) "
            "with heading pi/2 to the goal square with corners (1.7, 3.3) and "
            "(2.3, 3.9).",
            "Inside a 4-unit-square greenhouse with two thin obstacles, "
            "(1.0, 1.0)-(1.4, 3.0) and (2.6, 1.0)-(3.0, 3.0), reach "
            "[1.7, 2.3] x [3.3, 3.9] from the start pose (2.0, 0.3) facing "
            "the positive y direction.",
        ],
    ),
    "case16_clearance_forklift": (
        spec(6.0, [cs((3.0, 1.5), (1.6, 1.0)), cs((3.0, 4.5), (1.6, 1.0))],
             [diag((5.0, 2.6), (5.8, 3.4))], (0.4, 3.0, 0.0), clearance=0.3),
        [
            "Two pallet racks, each 1.6 units wide and 1 unit deep, are "
            "centered at (3.0, 1.5) and (3.0, 4.5) in a 6 by 6 warehouse. A "
            "forklift must keep 0.3 units of clearance from both racks. From "
            "(0.4, 3.0) facing east, reach the bay between (5.0, 2.6) and "
            "(5.8, 3.4).",
            "Keep a 0.3-unit margin from the racks occupying [2.2, 3.8] x "
            "[1.0, 2.0] and [2.2, 3.8] x [4.0, 5.0] on the 6x6 floor. The goal "
            "has corners (5.0, 2.6) and (5.8, 3.4); the start is (0.4, 3.0) "
            "with heading 0.",
            "The warehouse measures 6 units per side. Obstacles: two 1.6 by "
            "1.0 racks centered at (3.0, 1.5) and (3.0, 4.5), plus a mandatory "
            "0.3-unit safety distance around each. Drive from "
            "(0.4, 3.0), heading +x, into [5.0, 5.8] x [2.6, 3.4] through the "
            "central aisle.",
        ],
    ),
    "case17_airport_apron": (
        spec(6.0, [v4((1.6, 1.6), (4.4, 2.4))],
             [diag((0.4, 4.8), (1.2, 5.6)), diag((4.8, 4.8), (5.6, 5.6))],
             (3.0, 0.4, 3.141592653589793)),
        [
            "A baggage tug on a 6 by 6 apron must first visit gate A, the area "
            "between (0.4, 4.8) and (1.2, 5.6), and then gate B, the area "
            "between (4.8, 4.8) and (5.6, 5.6). A parked aircraft occupies the "
            "rectangle with corners (1.6, 1.6), (4.4, 1.6), (4.4, 2.4) and "
            "(1.6, 2.4). The tug starts at (3.0, 0.4) facing west.",
            "On the 6x6 apron avoid the aircraft footprint [1.6, 4.4] x "
            "[1.6, 2.4]. Stops in order: first [0.4, 1.2] x [4.8, 5.6], then "
            "[4.8, 5.6] x [4.8, 5.6]. Start pose: (3.0, 0.4), heading pi.",
            "Starting at (3.0, 0.4) facing the negative x direction on a "
            "6-unit-square apron, reach the square with corners (4.8, 4.8) and "
            "(5.6, 5.6) after first visiting the square with corners "
            "(0.4, 4.8) and (1.2, 5.6); the parked aircraft, a rectangle from "
            "(1.6, 1.6) to (4.4, 2.4), must never be touched.",
        ],
    ),
    "case18_mining_tunnel": (
        spec(5.0, [diag((0.0, 0.0), (3.4, 0.8)), diag((1.6, 1.6), (5.0, 2.4)),
                   diag((0.0, 3.2), (3.4, 4.0))],
             [diag((4.0, 4.4), (4.8, 5.0))], (4.4, 0.4, 3.141592653589793)),
        [
            "A mining robot zig-zags through a 5 by 5 gallery. Three rock "
            "shelves block it: (0.0, 0.0) to (3.4, 0.8), (1.6, 1.6) to "
            "(5.0, 2.4), and (0.0, 3.2) to (3.4, 4.0). From (4.4, 0.4) facing "
            "west, reach the exit shaft between (4.0, 4.4) and (4.8, 5.0).",
            "Three rectangular obstacles occupy [0.0, 3.4] x [0.0, 0.8], "
            "[1.6, 5.0] x [1.6, 2.4] and [0.0, 3.4] x [3.2, 4.0] in a 5x5 "
            "gallery. Starting at (4.4, 0.4) with heading pi, drive to the "
            "goal with corners (4.0, 4.4) and (4.8, 5.0).",
            "The gallery is 5 units square; the free space snakes between "
            "three shelves, (0.0, 0.0)-(3.4, 0.8), (1.6, 1.6)-(5.0, 2.4) and "
            "(0.0, 3.2)-(3.4, 4.0). Reach [4.0, 4.8] x [4.4, 5.0] from "
            "(4.4, 0.4), initial heading pi.",
        ],
    ),
    "case19_hospital_wing": (
        spec(5.0, [cs((1.25, 1.25), (1.5, 1.5)), cs((3.75, 3.75), (1.5, 1.5))],
             [diag((3.8, 0.4), (4.6, 1.2))], (0.4, 4.4, -1.5707963267948966), clearance=0.2),
        [
            "A supply cart crosses a 5 by 5 hospital wing with two ward "
            "blocks, each 1.5 units square, centered at (1.25, 1.25) and "
            "(3.75, 3.75). Carts must stay 0.2 units away from ward walls. "
            "From (0.4, 4.4) facing south, deliver to the pharmacy between "
            "(3.8, 0.4) and (4.6, 1.2).",
            "Inside the 5x5 wing, keep at least 0.2 units from the blocks "
            "occupying [0.5, 2.0] x [0.5, 2.0] and [3.0, 4.5] x [3.0, 4.5]. "
            "Start at (0.4, 4.4) with heading -pi/2 and reach the region whose "
            "corners are (3.8, 0.4) and (4.6, 1.2).",
            "Two square ward blocks of side 1.5 sit at centers (1.25, 1.25) "
            "and (3.75, 3.75) in a 5-unit-square wing; a 0.2-unit clearance "
            "applies to both. The cart departs from (0.4, 4.4) facing the "
            "negative y direction and must reach [3.8, 4.6] x [0.4, 1.2].",
        ],
    ),
    "case20_spiral_course": (
        spec(6.0, [diag((1.2, 1.2), (4.8, 1.6)), diag((4.4, 1.6), (4.8, 4.8)),
                   diag((1.2, 4.4), (4.4, 4.8)), diag((1.2, 1.6), (1.6, 3.6))],
             [diag((2.6, 2.6), (3.4, 3.4))], (0.3, 0.3, 0.0)),
        [
            "A 6 by 6 driving course forms a spiral: walls run from "
            "(1.2, 1.2) to (4.8, 1.6), from (4.4, 1.6) to (4.8, 4.8), from "
            "(1.2, 4.4) to (4.4, 4.8), and from (1.2, 1.6) to (1.6, 3.6). "
            "Starting outside at (0.3, 0.3) facing east, wind into the center "
            "goal between (2.6, 2.6) and (3.4, 3.4).",
            "Four wall segments occupy [1.2, 4.8] x [1.2, 1.6], [4.4, 4.8] x "
            "[1.6, 4.8], [1.2, 4.4] x [4.4, 4.8] and [1.2, 1.6] x [1.6, 3.6] "
            "on a 6x6 course. From (0.3, 0.3) with heading 0, reach the "
            "central square with corners (2.6, 2.6) and (3.4, 3.4).",
            "The course is 6 units per side and spirals inward between the "
            "walls (1.2, 1.2)-(4.8, 1.6), (4.4, 1.6)-(4.8, 4.8), "
            "(1.2, 4.4)-(4.4, 4.8) and (1.2, 1.6)-(1.6, 3.6). Drive from "
            "(0.3, 0.3), initially heading +x, to the goal region "
            "[2.6, 3.4] x [2.6, 3.4].",
        ],
    ),
}


def main():
    for cid, (doc, paraphrases) in CASES.items():
        d = OUT / cid
        d.mkdir(parents=True, exist_ok=True)
        (d / "spec.json").write_text(json.dumps(doc, indent=2) + "\n")
        assert len(paraphrases) == 3, cid
        for i, text in enumerate(paraphrases, start=1):
            (d / f"paraphrase_{i}.txt").write_text(text + "\n")
    print(f"wrote {len(CASES)} cases to {OUT}")


if __name__ == "__main__":
    main()
