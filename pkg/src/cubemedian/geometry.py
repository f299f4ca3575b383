"""Combinatorial geometry over a complex view: geodesics, medians, projections.

Every function here takes a *view* as its first argument: either a
:class:`cubemedian.racg.DefiningGraph` (the lazy Cayley-graph provider)
or a :class:`cubemedian.medgraph.ExplicitGraph`.  A view supplies

  ``basepoint``                    a distinguished vertex
  ``neighbors(v)``                 list of (vertex, color), ascending color
  ``distance(u, v)``               exact graph distance
  ``wall(u, v)``                   hashable wall dual to an edge
  ``walls_separating(u, v)``       frozenset of walls between two vertices
  ``side_of_wall(wall, v)``        True iff v is on the basepoint side
  ``vertex_sort_key(v)``           total order for deterministic output

Distances are globally exact with both providers (word metric on one
side, all-pairs BFS on the other) and neighbor lists are always
complete, so interval and hull enumeration is complete by construction
and no frontier-margin bookkeeping is needed.  The only limits are
explicit caps: geodesic enumeration truncates with a flag, ball and
hull materialization raise :class:`ResourceCapError`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .errors import InternalCheckError, InvalidInputError, ResourceCapError

DEFAULT_GEODESIC_CAP = 64
DEFAULT_HULL_CAP = 100_000
DEFAULT_BALL_CAP = 500_000


@dataclass(frozen=True)
class Path:
    """An edge path: consecutive vertices are adjacent in the view.

    ``colors`` carries the view's color of each traversed edge, so a
    path of n edges has n colors.
    """

    vertices: tuple
    colors: tuple

    def __len__(self):
        return len(self.colors)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]


def path_from_vertices(view, vertices) -> Path:
    """Build a path, validating adjacency and deriving edge colors."""
    vs = tuple(vertices)
    if not vs:
        raise InvalidInputError("a path needs at least one vertex")
    colors = []
    for u, v in zip(vs, vs[1:]):
        adj = {w: c for w, c in view.neighbors(u)}
        if v not in adj:
            raise InvalidInputError(f"path vertices {u} and {v} are not adjacent")
        colors.append(adj[v])
    return Path(vs, tuple(colors))


def path_from_colors(view, start, colors) -> Path:
    """Walk from a start vertex along a color sequence."""
    vertices = [start]
    for c in colors:
        step = {col: w for w, col in view.neighbors(vertices[-1])}
        if c not in step:
            raise InvalidInputError(f"no edge of color {c!r} at {vertices[-1]}")
        vertices.append(step[c])
    return Path(tuple(vertices), tuple(colors))


@dataclass(frozen=True)
class GeodesicCheck:
    ok: bool
    repeated_wall: object = None


def is_geodesic(view, path: Path) -> GeodesicCheck:
    """Test the wall criterion: a path is geodesic iff no wall repeats.

    On success, cross-checks that the length equals the endpoint
    distance; a mismatch means the provider is broken.
    """
    seen = set()
    for u, v in zip(path.vertices, path.vertices[1:]):
        w = view.wall(u, v)
        if w in seen:
            return GeodesicCheck(False, w)
        seen.add(w)
    if view.distance(path.start, path.end) != len(path):
        raise InternalCheckError(
            "path crosses each wall once but is longer than the distance"
        )
    return GeodesicCheck(True)


def interval(view, u, v) -> frozenset:
    """All vertices on some geodesic from u to v."""
    total = view.distance(u, v)
    members = {u}
    frontier = [u]
    remaining = total
    while remaining > 0:
        remaining -= 1
        nxt = []
        for w in frontier:
            for nb, _c in view.neighbors(w):
                if nb not in members and view.distance(nb, v) == remaining:
                    members.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return frozenset(members)


@dataclass(frozen=True)
class GeodesicEnumeration:
    paths: tuple
    truncated: bool


def geodesics_between(view, u, v, cap: int = DEFAULT_GEODESIC_CAP) -> GeodesicEnumeration:
    """Enumerate geodesics from u to v, smallest colors first.

    The first path is the canonical one (lexicographically least color
    word).  Enumeration stops at ``cap`` paths with a truncation flag;
    truncation is reported, never silent and never fatal.
    """
    total = view.distance(u, v)
    out = []
    truncated = False

    class _Stop(Exception):
        pass

    def extend(prefix, remaining):
        nonlocal truncated
        if remaining == 0:
            if len(out) < cap:
                out.append(path_from_vertices(view, prefix))
                return
            truncated = True
            raise _Stop
        for nb, _c in view.neighbors(prefix[-1]):
            if view.distance(nb, v) == remaining - 1:
                extend(prefix + [nb], remaining - 1)

    try:
        extend([u], total)
    except _Stop:
        pass
    return GeodesicEnumeration(tuple(out), truncated)


def median(view, u, v, w):
    """The unique common point of the three pairwise intervals."""
    common = interval(view, u, v) & interval(view, v, w) & interval(view, u, w)
    if len(common) != 1:
        raise InvalidInputError(
            f"triple has {len(common)} medians; the view is not a median graph"
        )
    return next(iter(common))


@dataclass(frozen=True)
class ConvexSet:
    """An interval-closed vertex set tied to its view."""

    vertices: frozenset
    view: object = field(compare=False, repr=False)

    def __contains__(self, v):
        return v in self.vertices

    def __len__(self):
        return len(self.vertices)


def is_convex(view, vertices) -> bool:
    """Interval-closure test: every pairwise interval stays inside."""
    vs = frozenset(vertices)
    for a, b in itertools.combinations(vs, 2):
        if not interval(view, a, b) <= vs:
            return False
    return True


def convex_set(view, vertices) -> ConvexSet:
    """Wrap a vertex set after checking convexity."""
    vs = frozenset(vertices)
    if not vs:
        raise InvalidInputError("a convex set must be nonempty")
    if not is_convex(view, vs):
        raise InvalidInputError("vertex set is not convex")
    return ConvexSet(vs, view)


def convex_hull(view, vertices, cap: int = DEFAULT_HULL_CAP) -> ConvexSet:
    """Smallest convex set containing the input: iterate interval closure."""
    current = frozenset(vertices)
    if not current:
        raise InvalidInputError("hull of the empty set is undefined")
    while True:
        grown = set(current)
        for a, b in itertools.combinations(current, 2):
            grown |= interval(view, a, b)
        if len(grown) > cap:
            raise ResourceCapError(f"convex hull exceeded cap {cap}")
        if len(grown) == len(current):
            return ConvexSet(frozenset(grown), view)
        current = frozenset(grown)


def _convex_vertices(view, target):
    if isinstance(target, ConvexSet):
        return target.vertices
    return convex_set(view, target).vertices


def project(view, v, target):
    """Nearest-point projection of a vertex to a convex set.

    Convexity makes the nearest vertex unique; a tie means the target
    was not convex after all.
    """
    vs = _convex_vertices(view, target)
    best = None
    best_d = None
    tied = False
    for y in vs:
        d = view.distance(v, y)
        if best_d is None or d < best_d:
            best, best_d, tied = y, d, False
        elif d == best_d:
            tied = True
    if tied:
        raise InvalidInputError("nearest vertex is not unique; set is not convex")
    return best


def walls_separating_set(view, v, target) -> frozenset:
    """Walls with v on one side and the whole target set on the other.

    Computed by intersecting the separating-wall sets over the target's
    vertices, independently of any projection, so it can serve as an
    oracle for projection distances.
    """
    vs = _convex_vertices(view, target)
    walls = None
    for y in vs:
        sep = view.walls_separating(v, y)
        walls = sep if walls is None else walls & sep
        if not walls:
            return frozenset()
    return walls


@dataclass(frozen=True)
class EdgeProjection:
    """Which case of the edge-projection dichotomy an edge falls in.

    case 1: the wall of the edge misses the convex set and both
    endpoints project to the same vertex.  case 2: the wall crosses the
    set, the projections are adjacent, and the wall separating them is
    the wall of the original edge.
    """

    case: int
    wall: object
    image_u: object
    image_v: object


def project_edge(view, u, v, target) -> EdgeProjection:
    vs = _convex_vertices(view, target)
    if view.distance(u, v) != 1:
        raise InvalidInputError("project_edge needs adjacent vertices")
    h = view.wall(u, v)
    pu = project(view, u, ConvexSet(vs, view))
    pv = project(view, v, ConvexSet(vs, view))
    sides = {view.side_of_wall(h, y) for y in vs}
    meets = len(sides) == 2
    if not meets:
        if pu != pv:
            raise InternalCheckError(
                "edge wall misses the convex set but projections differ"
            )
        return EdgeProjection(1, h, pu, pv)
    if view.distance(pu, pv) != 1 or view.walls_separating(pu, pv) != frozenset({h}):
        raise InternalCheckError(
            "edge wall meets the convex set but projections are not "
            "adjacent across that wall"
        )
    return EdgeProjection(2, h, pu, pv)


def project_path(view, path: Path, target) -> Path:
    """Project a geodesic through a convex set; the image is geodesic.

    Consecutive duplicate images are collapsed; the result can be a
    single vertex.
    """
    check = is_geodesic(view, path)
    if not check.ok:
        raise InvalidInputError("project_path requires a geodesic input")
    vs = ConvexSet(_convex_vertices(view, target), view)
    images = []
    for v in path.vertices:
        img = project(view, v, vs)
        if not images or images[-1] != img:
            images.append(img)
    out = path_from_vertices(view, images)
    if not is_geodesic(view, out).ok:
        raise InternalCheckError("projected image of a geodesic is not geodesic")
    return out


def ball_around(view, center, radius: int, cap: int = DEFAULT_BALL_CAP) -> tuple:
    """Vertices within the given distance of a center, BFS order with
    deterministic ties."""
    if radius < 0:
        raise InvalidInputError("radius must be nonnegative")
    layers = [[center]]
    seen = {center}
    total = 1
    for _ in range(radius):
        nxt = set()
        for v in layers[-1]:
            for nb, _c in view.neighbors(v):
                if nb not in seen:
                    nxt.add(nb)
        layer = sorted(nxt, key=view.vertex_sort_key)
        total += len(layer)
        if total > cap:
            raise ResourceCapError(f"ball around {center} exceeds vertex cap {cap}")
        if not layer:
            break
        seen.update(layer)
        layers.append(layer)
    return tuple(v for layer in layers for v in layer)


@dataclass(frozen=True)
class DeltaEstimate:
    """Observed thin-triangle constant on a finite window.

    ``value`` is the largest thinness defect seen: the distance from a
    point on one side of a geodesic triangle to the union of the other
    two sides.  It is a lower bound for the true constant; ``capped``
    records that some side had more geodesics than were enumerated.
    """

    value: int
    radius: int
    triangles_checked: int
    capped: bool


def delta_estimate(view, radius: int, geodesic_cap: int = 64,
                   center=None, ball_cap: int = DEFAULT_BALL_CAP) -> DeltaEstimate:
    """Scan all vertex triples in a ball for the worst thinness defect.

    Every combination of enumerated geodesic sides counts as a separate
    triangle.  For a point p on one side, the worst defect over the
    independent choices of the other two sides is
    min(max_choice d(p, side1), max_choice d(p, side2)), so the triple
    scan never iterates the full product of side choices.
    """
    if center is None:
        center = view.basepoint
    points = ball_around(view, center, radius, cap=ball_cap)
    geo_cache: dict = {}
    vert_cache: dict = {}
    far_cache: dict = {}

    def pair(a, b):
        if view.vertex_sort_key(a) <= view.vertex_sort_key(b):
            return (a, b)
        return (b, a)

    def sides(key):
        got = geo_cache.get(key)
        if got is None:
            got = geodesics_between(view, key[0], key[1], cap=geodesic_cap)
            geo_cache[key] = got
        return got

    def side_vertices(key):
        got = vert_cache.get(key)
        if got is None:
            verts = set()
            for g in sides(key).paths:
                verts.update(g.vertices)
            got = tuple(verts)
            vert_cache[key] = got
        return got

    def farthest(p, key):
        """max over enumerated geodesics of d(p, geodesic)."""
        fkey = (p, key)
        got = far_cache.get(fkey)
        if got is None:
            got = max(
                min(view.distance(p, q) for q in g.vertices)
                for g in sides(key).paths
            )
            far_cache[fkey] = got
        return got

    value = 0
    checked = 0
    capped = False
    for x, y, z in itertools.combinations(points, 3):
        kxy, kyz, kxz = pair(x, y), pair(y, z), pair(x, z)
        exy, eyz, exz = sides(kxy), sides(kyz), sides(kxz)
        capped = capped or exy.truncated or eyz.truncated or exz.truncated
        checked += len(exy.paths) * len(eyz.paths) * len(exz.paths)
        for side_key, other1, other2 in (
            (kxy, kyz, kxz),
            (kyz, kxy, kxz),
            (kxz, kxy, kyz),
        ):
            for p in side_vertices(side_key):
                d = min(farthest(p, other1), farthest(p, other2))
                if d > value:
                    value = d
    return DeltaEstimate(value=value, radius=radius,
                         triangles_checked=checked, capped=capped)


def ray_surgery(view, x, y, ray: Path, depth: int) -> Path:
    """Reroute a geodesic ray from y so that it starts at the neighbor x.

    Let h be the wall between x and y.  If the ray never crosses h
    within ``depth`` edges, prepending the edge (x, y) keeps it
    geodesic.  Otherwise the ray is cut at the first vertex z past h and
    a geodesic from x to z is spliced onto the tail; the splice is
    guaranteed to be geodesic, so a verification failure raises.
    """
    if view.distance(x, y) != 1:
        raise InvalidInputError("ray_surgery needs adjacent x and y")
    if ray.start != y:
        raise InvalidInputError("ray must start at y")
    if len(ray) < depth:
        raise InvalidInputError(f"ray has {len(ray)} edges, need {depth}")
    if not is_geodesic(view, Path(ray.vertices[: depth + 1],
                                  ray.colors[:depth])).ok:
        raise InvalidInputError("ray is not geodesic to the requested depth")
    h = view.wall(x, y)
    crossing = None
    for i in range(depth):
        if view.wall(ray.vertices[i], ray.vertices[i + 1]) == h:
            crossing = i
            break
    if crossing is None:
        out = path_from_vertices(view, (x,) + ray.vertices[: depth + 1])
    else:
        z = ray.vertices[crossing + 1]
        to_z = geodesics_between(view, x, z).paths[0]
        out = path_from_vertices(
            view, to_z.vertices + ray.vertices[crossing + 2 : depth + 1]
        )
    if not is_geodesic(view, out).ok:
        raise InternalCheckError("ray surgery produced a non-geodesic path")
    return out
