"""Built-in quivers addressable by name from the command line."""

import re

from .errors import QuiverError
from .quiver import Quiver

DEFAULT_N = {"example83": 3}


def example83():
    """Three vertices with a loop in the middle: v1 -a-> v2 -b-> v3, x: v2 -> v2."""
    return Quiver.from_labels(
        ["v1", "v2", "v3"],
        [("a", "v1", "v2"), ("x", "v2", "v2"), ("b", "v2", "v3")],
    )


def loop():
    return Quiver.from_labels(["v"], [("x", "v", "v")])


def cycle(c):
    """Oriented c-cycle; arrow v_i goes from p_i to p_{i+1}."""
    if c < 1:
        raise QuiverError("cycle length must be positive")
    verts = [f"p{i}" for i in range(1, c + 1)]
    arrows = [(f"v{i}", verts[i - 1], verts[i % c]) for i in range(1, c + 1)]
    return Quiver.from_labels(verts, arrows)


def tensor(r):
    """One vertex with r loops x1..xr."""
    if r < 1:
        raise QuiverError("need at least one loop")
    return Quiver.from_labels(["v"], [(f"x{i}", "v", "v") for i in range(1, r + 1)])


def linear(n):
    """Linear A_n quiver v1 -> v2 -> ... -> vn."""
    if n < 1:
        raise QuiverError("A_n needs n >= 1")
    verts = [f"v{i}" for i in range(1, n + 1)]
    return Quiver.from_labels(verts, [(f"a{i}", verts[i - 1], verts[i]) for i in range(1, n)])


def example7_2():
    """Two 2-cycles glued at w2 (arrows named so the movement chain reads v1 v2 v3 v4)."""
    return Quiver.from_labels(
        ["w1", "w2", "w3"],
        [("v2", "w2", "w1"), ("v3", "w1", "w2"), ("v4", "w2", "w3"), ("v1", "w3", "w2")],
    )


def diamond():
    """Acyclic quiver with branching: two length-2 routes and a shortcut from v1 to v4."""
    return Quiver.from_labels(
        ["v1", "v2", "v3", "v4"],
        [("a", "v1", "v2"), ("b", "v2", "v4"), ("c", "v1", "v3"), ("d", "v3", "v4"),
         ("e", "v1", "v4")],
    )


def builtin(name):
    """Look up a built-in quiver by name."""
    fixed = {
        "example83": example83,
        "loop": loop,
        "example7-1": lambda: cycle(4),
        "example7-2": example7_2,
        "diamond": diamond,
    }
    if name in fixed:
        return fixed[name]()
    for prefix, build in (("cycle", cycle), ("tensor", tensor), ("a", linear)):
        m = re.fullmatch(prefix + r"(\d+)", name)
        if m:
            return build(int(m.group(1)))
    raise QuiverError(f"unknown built-in quiver {name!r}")


BUILTIN_NAMES = ("example83", "loop", "cycle<c>", "tensor<r>", "a<n>", "example7-1",
                 "example7-2", "diamond")
