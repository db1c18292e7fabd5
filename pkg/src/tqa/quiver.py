"""Quivers, paths, parallel pairs and the quiver description format."""

from __future__ import annotations

import json
import re
import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import QuiverError, QuiverSyntaxError, ResourceLimitError

DEFAULT_CAP = 1_000_000

_LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Path(NamedTuple):
    """A path stored as arrow indices plus its endpoints.

    A vertex path has ``arrows == ()`` and ``src == tgt``.  Tuple ordering
    compares the arrow sequence first, so sorting paths of a fixed length
    gives lexicographic order by arrow declaration index (vertices sort by
    vertex index).
    """

    arrows: tuple
    src: int
    tgt: int

    def __len__(self):
        return len(self.arrows)

    @property
    def is_vertex(self):
        return not self.arrows


class ParallelPair(NamedTuple):
    first: Path
    second: Path


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph; loops and multiple arrows are allowed.

    ``arrows`` holds ``(label, source index, target index)`` triples in
    declaration order.
    """

    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex label")
        labels = [a[0] for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise QuiverError("duplicate arrow label")
        if set(labels) & set(self.vertices):
            raise QuiverError("arrow and vertex labels must be distinct")
        nv = len(self.vertices)
        for label, s, t in self.arrows:
            if not (0 <= s < nv and 0 <= t < nv):
                raise QuiverError(f"arrow {label!r} references an undeclared vertex")

    @classmethod
    def from_labels(cls, vertices, arrows):
        """Build from vertex labels and ``(label, source label, target label)``."""
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        out = []
        for label, s, t in arrows:
            for v in (s, t):
                if v not in index:
                    raise QuiverError(f"arrow {label!r} references unknown vertex {v!r}")
            out.append((label, index[s], index[t]))
        return cls(vertices, tuple(out))

    # --- basic structure -------------------------------------------------

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_arrows(self):
        return len(self.arrows)

    def source(self, a):
        return self.arrows[a][1]

    def target(self, a):
        return self.arrows[a][2]

    @cached_property
    def out_arrows(self):
        out = [[] for _ in self.vertices]
        for i, (_, s, _t) in enumerate(self.arrows):
            out[s].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arrows(self):
        inc = [[] for _ in self.vertices]
        for i, (_, _s, t) in enumerate(self.arrows):
            inc[t].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def arrow_index(self):
        return {a[0]: i for i, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    # --- path construction ----------------------------------------------

    def vertex(self, v):
        """Length-zero path at vertex index ``v``."""
        return Path((), v, v)

    def arrow(self, a):
        if isinstance(a, str):
            a = self.arrow_index[a]
        return Path((a,), self.source(a), self.target(a))

    def path(self, arrows, vertex=None):
        """Path from an arrow-index sequence; ``vertex`` is used when empty."""
        arrows = tuple(arrows)
        if not arrows:
            if vertex is None:
                raise ValueError("empty arrow sequence needs a vertex")
            return Path((), vertex, vertex)
        for a, b in zip(arrows, arrows[1:]):
            if self.target(a) != self.source(b):
                raise QuiverError("arrows do not compose")
        return Path(arrows, self.source(arrows[0]), self.target(arrows[-1]))

    def subpath(self, p, i, j):
        """Arrows ``i:j`` of ``p``; an empty slice is the vertex at position i."""
        arrows = p.arrows[i:j]
        if arrows:
            return Path(arrows, self.source(arrows[0]), self.target(arrows[-1]))
        v = p.src if i == 0 else self.target(p.arrows[i - 1])
        return Path((), v, v)

    def vertex_at(self, p, i):
        """Vertex visited after the first ``i`` arrows of ``p``."""
        return p.src if i == 0 else self.target(p.arrows[i - 1])

    # --- printing and parsing paths ---------------------------------------

    def format_path(self, p, powers=True):
        """``axb`` style; repeated arrows collapse to ``x^3`` when ``powers``."""
        if p.is_vertex:
            return self.vertices[p.src]
        labels = [self.arrows[a][0] for a in p.arrows]
        if not powers:
            return "".join(labels)
        out = []
        i = 0
        while i < len(labels):
            j = i
            while j < len(labels) and labels[j] == labels[i]:
                j += 1
            out.append(labels[i] if j - i == 1 else f"{labels[i]}^{j - i}")
            i = j
        return "".join(out)

    def parse_path(self, text):
        """Inverse of :meth:`format_path`; accepts ``x^3`` powers.

        Labels are matched greedily (longest label first), so multi-character
        labels such as ``v1`` work as long as the labelling is unambiguous.
        """
        text = text.strip()
        if text in self.vertex_index:
            return self.vertex(self.vertex_index[text])
        labels = sorted(self.arrow_index, key=len, reverse=True)
        arrows = []
        pos = 0
        while pos < len(text):
            if text[pos] in " *.":
                pos += 1
                continue
            for lab in labels:
                if text.startswith(lab, pos):
                    break
            else:
                raise QuiverError(f"cannot parse path {text!r} at position {pos}")
            pos += len(lab)
            power = 1
            m = re.match(r"\^(\d+)", text[pos:])
            if m:
                power = int(m.group(1))
                pos += m.end()
            arrows.extend([self.arrow_index[lab]] * power)
        if not arrows:
            raise QuiverError(f"empty path {text!r}")
        return self.path(arrows)

    # --- structure -------------------------------------------------------

    @cached_property
    def sinks(self):
        return tuple(v for v in range(self.num_vertices) if not self.out_arrows[v])

    @cached_property
    def sources(self):
        return tuple(v for v in range(self.num_vertices) if not self.in_arrows[v])

    @cached_property
    def is_connected(self):
        if not self.vertices:
            return True
        adj = [set() for _ in self.vertices]
        for _, s, t in self.arrows:
            adj[s].add(t)
            adj[t].add(s)
        seen = {0}
        todo = deque([0])
        while todo:
            v = todo.popleft()
            for w in adj[v] - seen:
                seen.add(w)
                todo.append(w)
        return len(seen) == self.num_vertices

    @cached_property
    def is_acyclic(self):
        indeg = [len(self.in_arrows[v]) for v in range(self.num_vertices)]
        todo = deque(v for v in range(self.num_vertices) if indeg[v] == 0)
        removed = 0
        while todo:
            v = todo.popleft()
            removed += 1
            for a in self.out_arrows[v]:
                t = self.target(a)
                indeg[t] -= 1
                if indeg[t] == 0:
                    todo.append(t)
        return removed == self.num_vertices

    @cached_property
    def is_oriented_cycle(self):
        if not self.vertices:
            return False
        for v in range(self.num_vertices):
            if len(self.out_arrows[v]) != 1 or len(self.in_arrows[v]) != 1:
                return False
        return self.is_connected


def structure_flags(q):
    return {
        "is_oriented_cycle": q.is_oriented_cycle,
        "has_sink": bool(q.sinks),
        "has_source": bool(q.sources),
        "is_acyclic": q.is_acyclic,
        "is_connected": q.is_connected,
    }


# --- enumeration -----------------------------------------------------------

_path_cache = {}


def paths(q, n, cap=DEFAULT_CAP):
    """All paths of length ``n``, lexicographic by arrow declaration index."""
    if n < 0:
        raise ValueError("path length must be non-negative")
    key = (q, n)
    if key in _path_cache:
        found = _path_cache[key]
        if len(found) > cap:
            raise ResourceLimitError(f"{len(found)} paths of length {n} exceed cap {cap}")
        return found
    if n == 0:
        result = tuple(q.vertex(v) for v in range(q.num_vertices))
    else:
        prev = paths(q, n - 1, cap)
        out = []
        if n == 1:
            out = [q.arrow(a) for a in range(q.num_arrows)]
        else:
            for p in prev:
                for a in q.out_arrows[p.tgt]:
                    out.append(Path(p.arrows + (a,), p.src, q.target(a)))
                    if len(out) > cap:
                        raise ResourceLimitError(f"more than {cap} paths of length {n}")
            out.sort()
        result = tuple(out)
    if len(result) > cap:
        raise ResourceLimitError(f"{len(result)} paths of length {n} exceed cap {cap}")
    _path_cache[key] = result
    return result


def concat(p, r):
    """Concatenation in the path algebra (no truncation); None if t(p) != o(r)."""
    if p.tgt != r.src:
        return None
    return Path(p.arrows + r.arrows, p.src, r.tgt)


def paths_between(q, n, cap=DEFAULT_CAP):
    """Map ``(source, target) -> [paths of length n]`` preserving path order."""
    table = {}
    for p in paths(q, n, cap):
        table.setdefault((p.src, p.tgt), []).append(p)
    return table


def parallel_pairs(q, i, m, cap=DEFAULT_CAP):
    """All ``(alpha, pi)`` with ``|alpha| = i``, ``|pi| = m``, same endpoints."""
    if i < 0 or m < 0:
        raise ValueError("path lengths must be non-negative")
    seconds = paths_between(q, m, cap)
    out = []
    for a in paths(q, i, cap):
        for p in seconds.get((a.src, a.tgt), ()):
            out.append(ParallelPair(a, p))
            if len(out) > cap:
                raise ResourceLimitError(f"more than {cap} parallel pairs")
    return out


# --- text formats --------------------------------------------------------------


def parse_quiver(text):
    """Parse the line-oriented quiver format; returns ``(quiver, N)``.

    Accepts the JSON form too when the text starts with ``{``.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    vertices = None
    arrows = []
    N = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        if body.startswith("vertices:"):
            if vertices is not None:
                raise QuiverSyntaxError("vertices declared twice", lineno, col)
            labels = body[len("vertices:"):].split()
            if not labels:
                raise QuiverSyntaxError("no vertex labels", lineno, col)
            for lab in labels:
                _check_label(lab, lineno, raw)
            if len(set(labels)) != len(labels):
                raise QuiverSyntaxError("duplicate vertex label", lineno, col)
            vertices = labels
        elif body.startswith("arrow"):
            m = re.match(r"arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s*\Z", body)
            if not m:
                raise QuiverSyntaxError("expected 'arrow <label>: <src> -> <dst>'", lineno, col)
            lab, s, t = m.groups()
            for tok in (lab, s, t):
                _check_label(tok, lineno, raw)
            arrows.append((lab, s, t, lineno, raw.index(lab) + 1))
        elif body.startswith("truncation:"):
            value = body[len("truncation:"):].strip()
            if not re.fullmatch(r"\d+", value):
                raise QuiverSyntaxError("truncation must be an integer", lineno, raw.index(":") + 2)
            N = int(value)
        else:
            raise QuiverSyntaxError(f"unrecognised statement {body.split()[0]!r}", lineno, col)
    if vertices is None:
        raise QuiverSyntaxError("missing 'vertices:' line", 1, 1)
    if N is None:
        raise QuiverSyntaxError("missing 'truncation:' line", 1, 1)
    known = set(vertices)
    seen = set()
    for lab, s, t, lineno, col in arrows:
        if lab in seen:
            raise QuiverSyntaxError(f"duplicate arrow label {lab!r}", lineno, col)
        seen.add(lab)
        for v in (s, t):
            if v not in known:
                raise QuiverSyntaxError(f"unknown vertex {v!r} in arrow {lab!r}", lineno, col)
    q = Quiver.from_labels(vertices, [(lab, s, t) for lab, s, t, _, _ in arrows])
    return _finish(q, N)


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    try:
        vertices = [str(v) for v in data["vertices"]]
        arrows = [(a["label"], a["source"], a["target"]) for a in data["arrows"]]
        N = int(data["N"])
    except (KeyError, TypeError, ValueError) as exc:
        raise QuiverError(f"malformed quiver JSON: {exc}") from None
    for lab in vertices + [a[0] for a in arrows]:
        if not _LABEL.match(lab):
            raise QuiverError(f"invalid label {lab!r}")
    return _finish(Quiver.from_labels(vertices, arrows), N)


def _finish(q, N):
    if N < 2:
        raise QuiverError(f"truncation length must be at least 2, got {N}")
    if not q.is_connected:
        warnings.warn("quiver is not connected; cohomology is the direct sum over components",
                      stacklevel=3)
    return q, N


def _check_label(tok, lineno, raw):
    if not _LABEL.match(tok):
        raise QuiverSyntaxError(f"invalid label {tok!r}", lineno, raw.find(tok) + 1)


def format_quiver(q, N):
    lines = ["vertices: " + " ".join(q.vertices)]
    for lab, s, t in q.arrows:
        lines.append(f"arrow {lab}: {q.vertices[s]} -> {q.vertices[t]}")
    lines.append(f"truncation: {N}")
    return "\n".join(lines) + "\n"
