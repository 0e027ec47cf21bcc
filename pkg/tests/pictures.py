"""Trees drawn as LaTeX ``picture`` environments, rebuilt as rotation systems.

Open circles are white vertices, filled circles black.  A ``\\line`` joins the
two vertices nearest its endpoints; the counterclockwise order of neighbours
comes from the drawing's coordinates.  Labels and formulas are ignored.
"""

import math
import re
from pathlib import Path

from dessin.tree import PlaneTree

SOURCE = Path(__file__).resolve().parent.parent / "paper.md"

_PICTURE = re.compile(r"\\begin\{picture\}.*?\\end\{picture\}", re.S)
_CIRCLE = re.compile(r"\\put\((-?[\d.]+),(-?[\d.]+)\)\{\\circle(\*?)\{[\d.]+\}\}")
_LINE = re.compile(r"\\put\((-?[\d.]+),(-?[\d.]+)\)\{\\line\((-?\d+),(-?\d+)\)\{([\d.]+)\}\}")


def pictures(text=None):
    text = SOURCE.read_text() if text is None else text
    return [(m.start(), m.group(0)) for m in _PICTURE.finditer(text)]


def _components(vertices, edges):
    parent = list(range(len(vertices)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for u, v in edges:
        parent[find(u)] = find(v)
    groups = {}
    for i in range(len(vertices)):
        groups.setdefault(find(i), []).append(i)
    return [g for g in groups.values() if len(g) > 1]


def _project(x, y, ex, ey, vx, vy, tol=4.0):
    """Position of a vertex along a segment, or None if it is off the segment."""
    dx, dy = ex - x, ey - y
    seg2 = dx * dx + dy * dy
    t = ((vx - x) * dx + (vy - y) * dy) / seg2
    if t < -tol / math.sqrt(seg2) or t > 1 + tol / math.sqrt(seg2):
        return None
    px, py = x + t * dx, y + t * dy
    return t if math.hypot(vx - px, vy - py) <= tol else None


def trees_in(picture: str) -> list[PlaneTree]:
    """Every tree drawn in one picture, left to right."""
    vertices = []
    for x, y, star in _CIRCLE.findall(picture):
        v = (float(x), float(y), star == "")
        if v not in vertices:  # some circles are drawn twice
            vertices.append(v)
    edges = []
    for x, y, dx, dy, length in _LINE.findall(picture):
        x, y, dx, dy, length = float(x), float(y), int(dx), int(dy), float(length)
        if dx == 0:
            ex, ey = x, y + math.copysign(length, dy)
        else:
            ex, ey = x + math.copysign(length, dx), y + length * dy / abs(dx)

        # a drawn segment may run through several vertices
        on = []
        for i, (vx, vy, _) in enumerate(vertices):
            t = _project(x, y, ex, ey, vx, vy)
            if t is not None:
                on.append((t, i))
        on.sort()
        if len(on) < 2:
            raise ValueError(f"line at {(x, y)} does not join two vertices")
        for (_, u), (_, v) in zip(on, on[1:]):
            if (u, v) not in edges and (v, u) not in edges:
                edges.append((u, v))
    out = []
    comps = _components(vertices, edges)
    comps.sort(key=lambda g: min(vertices[i][0] for i in g))
    for comp in comps:
        members = set(comp)
        rotation = {}
        for i in comp:
            nbrs = [v for u, v in edges if u == i] + [u for u, v in edges if v == i]
            nbrs = [j for j in nbrs if j in members]
            x0, y0 = vertices[i][:2]
            nbrs.sort(key=lambda j: math.atan2(vertices[j][1] - y0, vertices[j][0] - x0))
            rotation[i] = nbrs
        white = [i for i in comp if vertices[i][2]]
        out.append(PlaneTree.from_embedding(rotation, white))
    return out


def all_drawn_trees():
    """(offset in the source, tree) for every drawn tree."""
    return [(pos, t) for pos, pic in pictures() for t in trees_in(pic)]


# (picture ordinal, tree positions left to right); None takes every tree
FIGURES = {
    "example_1_1": (0, [0]),
    "reduction_source": (1, [0]),
    "reduction_target": (1, [1]),
    "symmetric_six": (2, [0]),
    "asymmetric_six": (2, [1]),
    "type48_rational": (3, [0]),
    "type71_rational": (4, [0]),
    "type64_symmetric": (5, None),
    "type66_symmetric": (6, None),
    "type76_symmetric": (7, None),
    "type78_symmetric": (8, None),
    "type75_symmetric": (9, None),
    "type16_T1_T2": (10, None),
    "type16_T3": (11, [0]),
    "type16_T4": (12, [0]),
    "type16_T4_root": (13, [0]),
    "type47_symmetric": (14, [0]),
    "type47_rational": (15, [0]),
    "chain5": (16, [0]),
    "type61_rational": (17, [0]),
    "type61_root": (18, [0]),
    "type33_rational": (19, [0]),
    "type43_rational": (20, [0]),
    "type50_symmetric": (21, None),
    "type50_special": (22, [0]),
    "type83": (23, None),
}


def figure(name: str) -> list[PlaneTree]:
    ordinal, which = FIGURES[name]
    drawn = trees_in(pictures()[ordinal][1])
    return drawn if which is None else [drawn[i] for i in which]
