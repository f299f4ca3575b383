"""Boundary points as eventually periodic rays, and interval experiments.

A boundary point of the group's Davis complex is represented by a
:class:`RaySpec`: a base vertex plus an eventually periodic color word.
These are the finitely describable boundary points.  The module
validates such specs (geodesy to a depth, plus a power certificate for
the period), measures fellow traveling between two rays, computes the
truncated interval of vertices lying toward the boundary point, and
runs the symmetric-difference experiment that probes how intervals
based at two different vertices agree outside a finite set.

Everything here needs the group provider; a finite explicit graph has
no boundary.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import Optional

from . import geometry
from .errors import InvalidInputError
from .racg import DefiningGraph, GroupElement, parse_word

DEFAULT_WINDOW = 4
DEFAULT_STABILIZATION_WINDOW = 3
DEFAULT_DEPTH_CAP = 24
DEFAULT_CERT_POWER = 6


@dataclass(frozen=True)
class RaySpec:
    """An eventually periodic geodesic ray: base vertex, then colors.

    The color word is ``preperiod`` followed by ``period`` repeated
    forever.  Not every spec is a geodesic ray; run
    :func:`validate_ray_spec` before trusting one.
    """

    base: GroupElement
    preperiod: tuple
    period: tuple

    def __post_init__(self):
        if not self.period:
            raise InvalidInputError("ray period must be nonempty")

    @property
    def group(self) -> DefiningGraph:
        return self.base.group

    def color_at(self, t: int) -> int:
        if t < len(self.preperiod):
            return self.preperiod[t]
        return self.period[(t - len(self.preperiod)) % len(self.period)]

    def colors(self, n: int) -> tuple:
        return tuple(self.color_at(t) for t in range(n))

    def tail(self) -> "RaySpec":
        """The same boundary point viewed one step along the ray."""
        first = self.color_at(0)
        base = self.group.compose(self.base, self.group.normalize([first]))
        if self.preperiod:
            return RaySpec(base, self.preperiod[1:], self.period)
        return RaySpec(base, (), self.period[1:] + self.period[:1])

    def translate(self, g: GroupElement) -> "RaySpec":
        """Left-translate the ray; colors are invariant under the action."""
        return RaySpec(self.group.compose(g, self.base), self.preperiod, self.period)

    def to_dict(self) -> dict:
        gens = self.group.generators
        return {
            "base": "".join(gens[i] for i in self.base.word),
            "preperiod": [gens[i] for i in self.preperiod],
            "period": [gens[i] for i in self.period],
        }


def ray_spec(group: DefiningGraph, base="", preperiod=(), period=()) -> RaySpec:
    """Convenience constructor accepting symbols or indices."""
    return RaySpec(
        base=group.element_from_symbols(base) if not isinstance(base, GroupElement) else base,
        preperiod=tuple(group.generator_index(c) for c in preperiod),
        period=tuple(group.generator_index(c) for c in period),
    )


def load_ray_spec(group: DefiningGraph, source) -> RaySpec:
    """Read a ray spec from a dict, a JSON string, or a file path."""
    if isinstance(source, dict):
        data = source
    else:
        text = None
        if isinstance(source, (str, FsPath)) and os.path.exists(str(source)):
            text = FsPath(source).read_text(encoding="utf-8")
        elif isinstance(source, str):
            text = source
        if text is None:
            raise InvalidInputError(f"cannot read ray spec from {source!r}")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"ray spec is not valid JSON: {exc}") from None
    if "period" not in data or not data["period"]:
        raise InvalidInputError("ray spec field 'period' must be a nonempty list")
    base_word = parse_word(group, data.get("base", ""))
    return RaySpec(
        base=group.normalize(base_word),
        preperiod=tuple(group.generator_index(c) for c in data.get("preperiod", [])),
        period=tuple(group.generator_index(c) for c in data["period"]),
    )


def materialize(spec: RaySpec, n: int) -> geometry.Path:
    """The first n edges of the ray, as a path starting at the base."""
    if n < 0:
        raise InvalidInputError("ray length must be nonnegative")
    group = spec.group
    vertices = [spec.base]
    colors = spec.colors(n)
    for c in colors:
        vertices.append(
            GroupElement(group, group._rmul_word(vertices[-1].word, c))
        )
    return geometry.Path(tuple(vertices), colors)


@dataclass(frozen=True)
class RaySpecCertificate:
    """Outcome of ray validation.

    ``geodesic_to`` is the checked depth.  ``failing_prefix`` is the
    length of the shortest non-geodesic prefix when validation fails on
    geodesy.  ``power_lengths`` maps k to |period^k|; the spec is
    accepted only if that length is k * |period| for every checked k,
    which certifies that the period keeps making progress.
    """

    ok: bool
    geodesic_to: int
    failing_prefix: Optional[int]
    power_lengths: dict


def validate_ray_spec(spec: RaySpec, depth_cap: int = DEFAULT_DEPTH_CAP,
                      cert_power: int = DEFAULT_CERT_POWER) -> RaySpecCertificate:
    """Check that a spec describes a geodesic ray, as far as a desk check can.

    Both conditions are required: the materialized path must be geodesic
    to ``depth_cap``, and powers of the period word must have full
    length up to ``cert_power``.
    """
    group = spec.group
    path = materialize(spec, depth_cap)
    failing = None
    check = geometry.is_geodesic(group, path)
    if not check.ok:
        # locate the shortest bad prefix for the report
        for n in range(1, depth_cap + 1):
            if not geometry.is_geodesic(group, materialize(spec, n)).ok:
                failing = n
                break
    period_word = tuple(spec.period)
    powers = {}
    ok_powers = True
    for k in range(1, cert_power + 1):
        length = len(group.normalize(period_word * k).word)
        powers[k] = length
        if length != k * len(period_word):
            ok_powers = False
    return RaySpecCertificate(
        ok=check.ok and ok_powers,
        geodesic_to=depth_cap,
        failing_prefix=failing,
        power_lengths=powers,
    )


@dataclass(frozen=True)
class FellowTravelReport:
    """Distance profile of two rays walked in parallel.

    ``verdict`` is "same" when the distances stay within the threshold
    2*delta + d(base1, base2) through the whole depth, "diverged" when
    they exceed it and keep growing over the trailing window, and
    "inconclusive" otherwise.  The threshold accounts for the offset of
    the two base vertices; with a common base it is the classical
    2*delta fellow-traveling bound.
    """

    verdict: str
    max_distance: int
    threshold: int
    first_exceed: Optional[int]


def fellow_travel(spec1: RaySpec, spec2: RaySpec, depth: int, delta: int,
                  trailing_window: int = DEFAULT_WINDOW) -> FellowTravelReport:
    group = spec1.group
    if spec2.group != group:
        raise InvalidInputError("ray specs use different presentations")
    w1 = materialize(spec1, depth).vertices
    w2 = materialize(spec2, depth).vertices
    threshold = 2 * delta + group.distance(spec1.base, spec2.base)
    dists = [group.distance(a, b) for a, b in zip(w1, w2)]
    max_d = max(dists)
    first_exceed = next((t for t, d in enumerate(dists) if d > threshold), None)
    if first_exceed is None:
        return FellowTravelReport("same", max_d, threshold, None)
    tail = dists[-(trailing_window + 1):]
    growing = all(b >= a for a, b in zip(tail, tail[1:]))
    verdict = "diverged" if growing else "inconclusive"
    return FellowTravelReport(verdict, max_d, threshold, first_exceed)


@dataclass(frozen=True)
class GeoSetResult:
    """Truncated interval toward a boundary point.

    ``members`` satisfied the tier's betweenness test at every depth of
    the window; ``unstable`` satisfied it at some depths but not all.
    The strict tier demands exact betweenness, which certifies
    membership on trees; the slack tier allows a defect up to 2*delta,
    since a true member is only guaranteed betweenness up to a bounded
    defect.
    """

    members: frozenset
    radius: int
    window: tuple
    unstable: frozenset
    tier: str


def geo_set(spec: RaySpec, x: GroupElement, radius: int, *, delta: int = 0,
            tier: str = "strict", window: int = DEFAULT_WINDOW,
            n0: Optional[int] = None, slack: Optional[int] = None,
            ball_cap: int = geometry.DEFAULT_BALL_CAP) -> GeoSetResult:
    """Vertices within ``radius`` of x that head toward the boundary point.

    A candidate y is tested against the ray targets at depths n0 ..
    n0 + window: strict membership needs d(x,y) + d(y, ray(n)) equal to
    d(x, ray(n)) at every one, slack membership allows a defect of
    2*delta.  n0 defaults to radius + slack with slack = 2*delta + 2,
    keeping the targets well past the candidate ball.
    """
    if tier not in ("strict", "slack"):
        raise InvalidInputError(f"unknown tier {tier!r}")
    group = spec.group
    if x.group != group:
        raise InvalidInputError("basepoint uses a different presentation")
    if slack is None:
        slack = 2 * delta + 2
    if n0 is None:
        n0 = radius + slack
    if n0 < radius + slack:
        raise InvalidInputError(
            f"window start {n0} is closer than radius + slack = {radius + slack}"
        )
    ray = materialize(spec, n0 + window).vertices
    targets = ray[n0 : n0 + window + 1]
    allowance = 0 if tier == "strict" else 2 * delta
    members = set()
    unstable = set()
    target_dx = [group.distance(x, t) for t in targets]
    for y in geometry.ball_around(group, x, radius, cap=ball_cap):
        dxy = group.distance(x, y)
        good = 0
        for t, dxt in zip(targets, target_dx):
            defect = dxy + group.distance(y, t) - dxt
            if defect <= allowance:
                good += 1
        if good == len(targets):
            members.add(y)
        elif good > 0:
            unstable.add(y)
    return GeoSetResult(
        members=frozenset(members),
        radius=radius,
        window=(n0, n0 + window),
        unstable=frozenset(unstable),
        tier=tier,
    )


@dataclass(frozen=True)
class GeoDiffReport:
    """Growth of the symmetric difference of two truncated intervals.

    For each radius R the two interval sets are compared inside the
    common ball (vertices within R of both basepoints), which keeps
    frontier artifacts out of the difference.  The verdict is
    "stabilized" when the size is constant over the trailing window of
    radii.
    """

    x: GroupElement
    y: GroupElement
    radii: tuple
    sizes: tuple
    differences: tuple
    tier: str
    verdict: str
    plateau: Optional[int]


def geo_diff_experiment(spec: RaySpec, x: GroupElement, y: GroupElement,
                        r_max: int, *, delta: int = 0, tier: str = "strict",
                        window: int = DEFAULT_WINDOW,
                        slack: Optional[int] = None,
                        stabilization_window: int = DEFAULT_STABILIZATION_WINDOW,
                        ball_cap: int = geometry.DEFAULT_BALL_CAP) -> GeoDiffReport:
    group = spec.group
    sizes = []
    diffs = []
    for radius in range(1, r_max + 1):
        gx = geo_set(spec, x, radius, delta=delta, tier=tier, window=window,
                     slack=slack, ball_cap=ball_cap)
        gy = geo_set(spec, y, radius, delta=delta, tier=tier, window=window,
                     slack=slack, ball_cap=ball_cap)
        mx = {v for v in gx.members if group.distance(y, v) <= radius}
        my = {v for v in gy.members if group.distance(x, v) <= radius}
        diff = mx ^ my
        sizes.append(len(diff))
        diffs.append(tuple(sorted(diff, key=group.vertex_sort_key)))
    stabilized = (
        len(sizes) >= stabilization_window
        and len(set(sizes[-stabilization_window:])) == 1
    )
    return GeoDiffReport(
        x=x,
        y=y,
        radii=tuple(range(1, r_max + 1)),
        sizes=tuple(sizes),
        differences=tuple(diffs),
        tier=tier,
        verdict="stabilized" if stabilized else "not stabilized",
        plateau=sizes[-1] if stabilized else None,
    )


def sample_ray_specs(group: DefiningGraph, count: int, *, seed: int,
                     period_lengths=(2, 3, 4), preperiod_lengths=(0, 1),
                     base_radius: int = 1,
                     depth_cap: int = DEFAULT_DEPTH_CAP,
                     cert_power: int = DEFAULT_CERT_POWER,
                     max_tries: int = 20_000) -> list:
    """Deterministically sample valid ray specs for experiments.

    Candidates are drawn from the seeded generator and kept when
    :func:`validate_ray_spec` accepts them; the result depends only on
    the arguments.
    """
    rng = random.Random(seed)
    rank = group.rank
    out = []
    seen = set()
    for _ in range(max_tries):
        if len(out) >= count:
            break
        period = tuple(rng.randrange(rank)
                       for _ in range(rng.choice(period_lengths)))
        pre = tuple(rng.randrange(rank)
                    for _ in range(rng.choice(preperiod_lengths)))
        base = group.normalize(
            [rng.randrange(rank) for _ in range(rng.randint(0, base_radius))]
        )
        spec = RaySpec(base, pre, period)
        if spec in seen:
            continue
        seen.add(spec)
        if validate_ray_spec(spec, depth_cap, cert_power).ok:
            out.append(spec)
    if len(out) < count:
        raise InvalidInputError(
            f"could only sample {len(out)} valid ray specs in {max_tries} tries"
        )
    return out
