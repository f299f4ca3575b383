"""Finite median graphs given explicitly: validation and wall classes.

These are the 1-skeleta of finite CAT(0) cube complexes.  The module
checks the median property by brute force (every vertex triple must have
a unique median), computes the edge classes that play the role of
hyperplanes, and splits the graph into the two halfspaces of each class.

An :class:`ExplicitGraph` implements the same provider protocol as
:class:`cubemedian.racg.DefiningGraph`, so everything in
:mod:`cubemedian.geometry` runs over it unchanged.  It is meant for
hand-built finite instances; boundary and fingerprint machinery needs
the group provider, since a finite graph has no boundary.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import Iterable, Optional

import numpy as np

from .errors import InternalCheckError, InvalidInputError


class ExplicitGraph:
    """A finite connected simple graph with a basepoint.

    Edges may carry explicit colors; when they do not, the wall-class
    index doubles as the edge color (computed on demand, which requires
    the graph to be median).
    """

    def __init__(self, vertex_count: int, edges: Iterable, basepoint: int = 0,
                 colors: Optional[dict] = None):
        n = int(vertex_count)
        if n <= 0:
            raise InvalidInputError("vertex_count must be positive")
        seen = set()
        adjacency = [[] for _ in range(n)]
        edge_list = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise InvalidInputError(f"edge ({u}, {v}) is a loop")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidInputError(f"edge ({u}, {v}) is duplicated")
            seen.add(key)
            edge_list.append(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        if not (0 <= int(basepoint) < n):
            raise InvalidInputError(f"basepoint {basepoint} out of range")
        self.vertex_count = n
        self.edges = tuple(sorted(edge_list))
        self._basepoint = int(basepoint)
        self._adjacency = tuple(tuple(sorted(a)) for a in adjacency)
        self._colors = None
        if colors is not None:
            self._colors = {}
            for (u, v), c in colors.items():
                key = (min(int(u), int(v)), max(int(u), int(v)))
                if key not in seen:
                    raise InvalidInputError(f"color given for non-edge {key}")
                self._colors[key] = int(c)
            if set(self._colors) != seen:
                raise InvalidInputError("colors must cover every edge or none")
        self._dist: Optional[np.ndarray] = None
        self._median_check: Optional[MedianCheck] = None
        self._theta: Optional[ThetaClasses] = None
        self._require_connected()

    def _require_connected(self):
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.vertex_count:
            raise InvalidInputError("graph is not connected")

    # -- metric ------------------------------------------------------------

    def distance_matrix(self) -> np.ndarray:
        """All-pairs BFS distances as an (n, n) int array."""
        if self._dist is None:
            n = self.vertex_count
            dist = np.full((n, n), -1, dtype=np.int64)
            for src in range(n):
                row = dist[src]
                row[src] = 0
                frontier = [src]
                d = 0
                while frontier:
                    d += 1
                    nxt = []
                    for u in frontier:
                        for w in self._adjacency[u]:
                            if row[w] < 0:
                                row[w] = d
                                nxt.append(w)
                    frontier = nxt
            self._dist = dist
        return self._dist

    def distance(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return int(self.distance_matrix()[u, v])

    def _check_vertex(self, v):
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self.vertex_count):
            raise InvalidInputError(f"vertex {v!r} out of range")

    # -- provider protocol ---------------------------------------------------

    @property
    def basepoint(self) -> int:
        return self._basepoint

    def neighbors(self, v: int):
        self._check_vertex(v)
        out = [(w, self.edge_color(v, w)) for w in self._adjacency[v]]
        out.sort(key=lambda t: (t[1], t[0]))
        return out

    def edge_color(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        if self._colors is not None:
            try:
                return self._colors[key]
            except KeyError:
                raise InvalidInputError(f"{u} and {v} are not adjacent") from None
        return self.wall(u, v)

    def wall(self, u: int, v: int) -> int:
        """Wall class index of the edge {u, v}."""
        theta = theta_classes(self)
        key = (min(u, v), max(u, v))
        try:
            return theta.class_of_edge[key]
        except KeyError:
            raise InvalidInputError(f"{u} and {v} are not adjacent") from None

    def walls_separating(self, u: int, v: int) -> frozenset:
        theta = theta_classes(self)
        bits_u = theta.side_bits[u]
        bits_v = theta.side_bits[v]
        return frozenset(
            k for k in range(len(theta.halves)) if bits_u[k] != bits_v[k]
        )

    def side_of_wall(self, wall: int, v: int) -> bool:
        """True iff v lies in the basepoint's halfspace of the wall."""
        theta = theta_classes(self)
        return bool(theta.side_bits[v][wall] == theta.side_bits[self._basepoint][wall])

    def vertex_sort_key(self, v: int):
        return v

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": [list(e) for e in self.edges],
            "basepoint": self._basepoint,
        }


@dataclass(frozen=True)
class MedianCheck:
    """Outcome of the median-graph test, with the first failing triple."""

    ok: bool
    witness: Optional[tuple]
    median_count: Optional[int]


@dataclass(frozen=True)
class ThetaClasses:
    """Partition of the edges into wall classes, with their halfspaces.

    ``halves[k]`` is a pair of sorted vertex tuples; the first one
    contains the basepoint.  ``side_bits[v][k]`` tells which half vertex
    v is in (1 means the basepoint side).
    """

    class_of_edge: dict
    halves: tuple
    side_bits: tuple


def validate_median(graph: ExplicitGraph) -> MedianCheck:
    """Check that every vertex triple has exactly one median.

    The median of (x, y, z) is the common point of the three pairwise
    intervals.  On failure, the lexicographically first bad triple is
    reported together with how many medians it has.
    """
    if graph._median_check is not None:
        return graph._median_check
    n = graph.vertex_count
    dist = graph.distance_matrix()
    # between[x][w, y]  <=>  w lies on a geodesic from x to y
    between = [dist[x][:, None] + dist == dist[x][None, :] for x in range(n)]
    result = MedianCheck(True, None, None)
    for x in range(n):
        bx = between[x]
        for y in range(x + 1, n):
            in_xy = bx[:, y]
            counts = (in_xy[:, None] & between[y] & bx).sum(axis=0)
            bad = np.nonzero(counts[y + 1:] != 1)[0]
            if bad.size:
                z = y + 1 + int(bad[0])
                result = MedianCheck(False, (x, y, z), int(counts[z]))
                break
        if not result.ok:
            break
    graph._median_check = result
    return result


def theta_classes(graph: ExplicitGraph) -> ThetaClasses:
    """Group the edges into wall classes and compute their halfspaces.

    Two edges (u, v) and (x, y) land in the same class exactly when the
    splits they induce coincide, which on median graphs is the relation
    d(u, x) + d(v, y) != d(u, y) + d(v, x).  Class indices follow the
    first occurrence in the sorted edge list.  Requires a median graph.
    """
    if graph._theta is not None:
        return graph._theta
    check = validate_median(graph)
    if not check.ok:
        raise InvalidInputError(
            f"graph is not median (witness triple {check.witness}); "
            "wall classes are not defined"
        )
    dist = graph.distance_matrix()
    class_of_edge = {}
    halves = []
    key_to_class = {}
    for (u, v) in graph.edges:
        closer_u = dist[u] < dist[v]
        if not (closer_u | (dist[v] < dist[u])).all():
            raise InternalCheckError("median graph with an odd cycle")
        side = frozenset(np.nonzero(closer_u)[0].tolist())
        k = key_to_class.get(side)
        if k is None:
            other = frozenset(range(graph.vertex_count)) - side
            key_to_class[side] = k = len(halves)
            key_to_class[other] = k
            if graph.basepoint in side:
                halves.append((tuple(sorted(side)), tuple(sorted(other))))
            else:
                halves.append((tuple(sorted(other)), tuple(sorted(side))))
        class_of_edge[(u, v)] = k
    for k, (first, second) in enumerate(halves):
        for part in (first, second):
            if not _connected_within(graph, set(part)):
                raise InternalCheckError(f"halfspace of class {k} is disconnected")
    n = graph.vertex_count
    base_sides = [set(first) for first, _ in halves]
    side_bits = tuple(
        tuple(1 if v in base_sides[k] else 0 for k in range(len(halves)))
        for v in range(n)
    )
    theta = ThetaClasses(
        class_of_edge=class_of_edge,
        halves=tuple(halves),
        side_bits=side_bits,
    )
    graph._theta = theta
    return theta


def halfspaces(graph: ExplicitGraph, wall: int):
    """The two halfspaces of a wall class, basepoint side first."""
    theta = theta_classes(graph)
    if not (0 <= wall < len(theta.halves)):
        raise InvalidInputError(f"wall class {wall} out of range")
    return theta.halves[wall]


def _connected_within(graph: ExplicitGraph, part: set) -> bool:
    start = next(iter(part))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in graph._adjacency[u]:
            if w in part and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(part)


def load_explicit_graph(source) -> ExplicitGraph:
    """Build a graph from a dict, a JSON string, or a file path."""
    if isinstance(source, dict):
        data = source
    else:
        text = None
        if isinstance(source, (str, FsPath)) and os.path.exists(str(source)):
            text = FsPath(source).read_text(encoding="utf-8")
        elif isinstance(source, str):
            text = source
        if text is None:
            raise InvalidInputError(f"cannot read graph from {source!r}")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"graph file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InvalidInputError("graph file must be a JSON object")
    if "vertices" not in data:
        raise InvalidInputError("graph file is missing field 'vertices'")
    if "edges" not in data or not isinstance(data["edges"], list):
        raise InvalidInputError("graph file field 'edges' must be a list")
    return ExplicitGraph(
        vertex_count=data["vertices"],
        edges=[tuple(e) for e in data["edges"]],
        basepoint=data.get("basepoint", 0),
    )
