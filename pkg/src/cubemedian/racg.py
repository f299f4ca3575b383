"""Right-angled Coxeter groups: ShortLex normal forms, walls, and balls.

A presentation is a finite simple graph on the generator set: every
generator is an involution, and two generators commute exactly when they
are joined by an edge.  Group elements are kept in ShortLex normal form
(shortest word, lexicographically least among its commutation class), so
equality of elements is equality of words.  The Cayley graph of such a
group is the 1-skeleton of its Davis complex, a CAT(0) cube complex: the
word metric is the l^1 metric, and walls (hyperplanes) are identified
with reflections, the conjugates w s w^{-1} of generators.

A :class:`DefiningGraph` doubles as the lazy "complex view" provider
consumed by :mod:`cubemedian.geometry`: it exposes ``basepoint``,
``neighbors``, ``distance``, ``wall``, ``walls_separating``,
``side_of_wall`` and ``vertex_sort_key`` with globally exact answers, so
geometric queries never need a pre-materialized window.
"""

from __future__ import annotations

import functools
import hashlib
import itertools
import json
import math
import os
from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import Iterable, Sequence

from .errors import InternalCheckError, InvalidInputError, ResourceCapError

DEFAULT_VERTEX_CAP = 500_000


class DefiningGraph:
    """A right-angled Coxeter presentation: generators plus commuting pairs.

    The order of ``generators`` is the fixed color order used everywhere
    downstream: ShortLex comparisons, edge colors, and the lexicographic
    order on color strings all refer to it.  Instances are immutable and
    hashable; all operations are pure.
    """

    def __init__(self, generators: Sequence[str], commuting: Iterable = ()):
        gens = tuple(str(g) for g in generators)
        if not gens:
            raise InvalidInputError("at least one generator is required")
        if len(set(gens)) != len(gens):
            raise InvalidInputError("generator symbols must be distinct")
        self.generators = gens
        self._index = {g: i for i, g in enumerate(gens)}
        commutes = [set() for _ in gens]
        pairs = set()
        for a, b in commuting:
            i, j = self.generator_index(a), self.generator_index(b)
            if i == j:
                raise InvalidInputError(
                    f"commuting pair ({gens[i]}, {gens[j]}) is reflexive"
                )
            commutes[i].add(j)
            commutes[j].add(i)
            pairs.add((min(i, j), max(i, j)))
        self._commutes = tuple(frozenset(s) for s in commutes)
        self.commuting = frozenset(pairs)
        self._key = (self.generators, tuple(sorted(self.commuting)))
        # memo tables; keys are normal-form word tuples, so entries are
        # shared by every operation that touches the same elements
        self._rmul_cache: dict = {}
        self._dist_cache: dict = {}
        self._wall_cache: dict = {}

    # -- identity, hashing ------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, DefiningGraph) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        pairs = sorted(
            (self.generators[i], self.generators[j]) for i, j in self.commuting
        )
        return f"DefiningGraph({list(self.generators)!r}, {pairs!r})"

    @property
    def rank(self) -> int:
        return len(self.generators)

    def generator_index(self, g) -> int:
        """Resolve a generator given as symbol or index."""
        if isinstance(g, str):
            try:
                return self._index[g]
            except KeyError:
                raise InvalidInputError(f"unknown generator symbol {g!r}") from None
        i = int(g)
        if not 0 <= i < len(self.generators):
            raise InvalidInputError(f"generator index {i} out of range")
        return i

    def commute(self, i: int, j: int) -> bool:
        return j in self._commutes[i]

    # -- normal forms ------------------------------------------------------

    def _insert(self, word: list, x: int) -> None:
        """Pile one letter onto a ShortLex normal form, in place.

        Scanning from the right, the letter cancels against an equal one
        if everything in between commutes with it; otherwise it is placed
        at the leftmost commutation-legal position that keeps the word
        lexicographically least.
        """
        commutes = self._commutes
        j = len(word) - 1
        while j >= 0:
            y = word[j]
            if y == x:
                del word[j]
                return
            if x not in commutes[y]:
                break
            j -= 1
        pos = len(word)
        for p in range(j + 1, len(word)):
            if x < word[p]:
                pos = p
                break
        word.insert(pos, x)

    def normalize(self, word) -> "GroupElement":
        """ShortLex normal form of a word (symbols or indices).

        Idempotent; the length of the result is the distance from the
        identity.
        """
        letters = [self.generator_index(x) for x in word]
        nf: list = []
        for x in letters:
            self._insert(nf, x)
        return GroupElement(self, tuple(nf))

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, ())

    def generator_element(self, g) -> "GroupElement":
        return GroupElement(self, (self.generator_index(g),))

    def element_from_symbols(self, text) -> "GroupElement":
        """Parse a word string like ``"aca"`` (or an iterable of symbols)."""
        return self.normalize(parse_word(self, text))

    def _check_same(self, g: "GroupElement"):
        if g.group != self:
            raise InvalidInputError("element belongs to a different presentation")

    def _rmul_word(self, word: tuple, s: int) -> tuple:
        """Right-multiply a normal form by one generator (memoized)."""
        key = (word, s)
        out = self._rmul_cache.get(key)
        if out is None:
            nf = list(word)
            self._insert(nf, s)
            out = tuple(nf)
            self._rmul_cache[key] = out
        return out

    def compose(self, g: "GroupElement", h: "GroupElement") -> "GroupElement":
        """Product g*h in normal form."""
        self._check_same(g)
        self._check_same(h)
        word = g.word
        for s in h.word:
            word = self._rmul_word(word, s)
        return GroupElement(self, word)

    def invert(self, g: "GroupElement") -> "GroupElement":
        """Inverse; generators are involutions, so just reverse the word."""
        self._check_same(g)
        return self.normalize(reversed(g.word))

    def distance(self, g: "GroupElement", h: "GroupElement") -> int:
        """Word-metric (equivalently l^1) distance between two vertices."""
        self._check_same(g)
        self._check_same(h)
        a, b = g.word, h.word
        if a == b:
            return 0
        if a > b:
            a, b = b, a
        key = (a, b)
        d = self._dist_cache.get(key)
        if d is None:
            word = tuple(reversed(a))
            for s in b:
                word = self._rmul_word(word, s)
            d = len(word)
            self._dist_cache[key] = d
        return d

    # -- walls -------------------------------------------------------------

    def wall_of_edge(self, g: "GroupElement", s) -> "Hyperplane":
        """The wall dual to the edge {g, gs}, as a canonical reflection.

        The reflection g s g^{-1} has a unique normal form, which does not
        depend on the endpoint used to present the edge: conjugating by gs
        yields the same group element.
        """
        self._check_same(g)
        si = self.generator_index(s)
        key = (g.word, si)
        wall = self._wall_cache.get(key)
        if wall is None:
            refl = self.normalize(g.word + (si,) + tuple(reversed(g.word)))
            wall = Hyperplane(refl)
            self._wall_cache[key] = wall
        return wall

    def walls_separating(self, g: "GroupElement", h: "GroupElement") -> frozenset:
        """All walls separating two vertices.

        These are the walls dual to the edges of any combinatorial
        geodesic from g to h; the count equals the distance.
        """
        self._check_same(g)
        self._check_same(h)
        u = self.compose(self.invert(g), h)
        walls = []
        prefix = g
        for s in u.word:
            walls.append(self.wall_of_edge(prefix, s))
            prefix = GroupElement(self, self._rmul_word(prefix.word, s))
        out = frozenset(walls)
        if len(out) != len(u.word):
            raise InternalCheckError("prefix reflections of a reduced word collided")
        return out

    # -- provider protocol (consumed by cubemedian.geometry) ---------------

    @property
    def basepoint(self) -> "GroupElement":
        return self.identity

    def neighbors(self, v: "GroupElement"):
        """All Cayley-graph neighbors with edge colors, ascending color."""
        self._check_same(v)
        return [
            (GroupElement(self, self._rmul_word(v.word, s)), s)
            for s in range(len(self.generators))
        ]

    def wall(self, u: "GroupElement", v: "GroupElement") -> "Hyperplane":
        """Wall dual to the edge {u, v}; the two must be adjacent."""
        s = self.edge_color(u, v)
        return self.wall_of_edge(u, s)

    def edge_color(self, u: "GroupElement", v: "GroupElement") -> int:
        """Color (generator) of the edge {u, v}."""
        diff = self.compose(self.invert(u), v)
        if len(diff.word) != 1:
            raise InvalidInputError(f"vertices {u} and {v} are not adjacent")
        return diff.word[0]

    def side_of_wall(self, wall: "Hyperplane", v: "GroupElement") -> bool:
        """True iff v lies on the same side of the wall as the identity."""
        return wall not in self.walls_separating(self.identity, v)

    def vertex_sort_key(self, v: "GroupElement"):
        return v.sort_key

    # -- balls ---------------------------------------------------------------

    def ball(self, radius: int, cap: int = DEFAULT_VERTEX_CAP,
             cache_dir=None) -> "Ball":
        """Materialize the ball of the given radius around the identity.

        Vertices come in BFS order with ShortLex ties, so the list for
        radius R is a prefix of the list for R+1.  Exceeding ``cap``
        vertices is an error, never a silent truncation.  If ``cache_dir``
        is given, the ball is loaded from / stored to a snapshot file
        keyed by the presentation and radius.
        """
        if radius < 0:
            raise InvalidInputError("radius must be nonnegative")
        if cache_dir is not None:
            cached = _load_ball_snapshot(self, radius, cache_dir)
            if cached is not None:
                return cached
        words: list = [()]
        seen = {()}
        frontier = [()]
        for _ in range(radius):
            nxt = set()
            for w in frontier:
                for s in range(len(self.generators)):
                    h = self._rmul_word(w, s)
                    if len(h) == len(w) + 1 and h not in seen:
                        nxt.add(h)
            frontier = sorted(nxt)
            seen.update(frontier)
            words.extend(frontier)
            if len(words) > cap:
                raise ResourceCapError(
                    f"ball({radius}) exceeds vertex cap {cap}"
                )
            if not frontier:
                break
        index = {w: i for i, w in enumerate(words)}
        edges = []
        for i, w in enumerate(words):
            for s in range(len(self.generators)):
                h = self._rmul_word(w, s)
                j = index.get(h)
                if j is not None:
                    edges.append((i, j, s))
        ball = Ball(
            group=self,
            radius=radius,
            vertices=tuple(GroupElement(self, w) for w in words),
            edges=tuple(edges),
            _index=index,
        )
        if cache_dir is not None:
            _store_ball_snapshot(ball, cache_dir)
        return ball

    def sphere_sizes(self, radius: int) -> list:
        """Sphere cardinalities |S(0)|..|S(radius)| from the clique series.

        The growth series of a right-angled Coxeter group is the rational
        function (1+t)^c / A(t) with A(t) = sum over cliques sigma of the
        defining graph of (-t)^{|sigma|} (1+t)^{c-|sigma|}, c the largest
        clique size.  This is an independent check on BFS enumeration.
        """
        cliques = self._cliques()
        c = max(len(q) for q in cliques)
        acoeff = [0] * (c + 1)
        for q in cliques:
            k = len(q)
            # (-t)^k (1+t)^(c-k)
            for m in range(c - k + 1):
                acoeff[k + m] += (-1) ** k * math.comb(c - k, m)
        target = [math.comb(c, m) for m in range(c + 1)]
        sizes = []
        for n in range(radius + 1):
            t = target[n] if n <= c else 0
            acc = t - sum(
                acoeff[i] * sizes[n - i] for i in range(1, min(n, c) + 1)
            )
            sizes.append(acc)  # acoeff[0] == 1
        return sizes

    def _cliques(self):
        out = [()]
        n = len(self.generators)
        for size in range(1, n + 1):
            found = False
            for combo in itertools.combinations(range(n), size):
                if all(
                    self.commute(i, j) for i, j in itertools.combinations(combo, 2)
                ):
                    out.append(combo)
                    found = True
            if not found:
                break
        return out

    def is_hyperbolic(self) -> bool:
        """True iff the defining graph has no induced 4-cycle.

        Gates the pipeline pieces that rely on thin triangles: a
        right-angled Coxeter group is word-hyperbolic exactly when its
        defining graph contains no induced square.
        """
        n = len(self.generators)
        for quad in itertools.combinations(range(n), 4):
            for w, x, y, z in _cycle_orderings(quad):
                if (
                    self.commute(w, x)
                    and self.commute(x, y)
                    and self.commute(y, z)
                    and self.commute(z, w)
                    and not self.commute(w, y)
                    and not self.commute(x, z)
                ):
                    return False
        return True

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "commuting": [
                [self.generators[i], self.generators[j]]
                for i, j in sorted(self.commuting)
            ],
        }


def _cycle_orderings(quad):
    # the three ways a 4-set can be arranged into a cyclic order
    a, b, c, d = quad
    return ((a, b, c, d), (a, b, d, c), (a, c, b, d))


@functools.total_ordering
@dataclass(frozen=True)
class GroupElement:
    """A group element as a ShortLex-reduced word of generator indices.

    Construct via :meth:`DefiningGraph.normalize` (or operations built on
    it); the constructor itself trusts the word.  Ordering is ShortLex,
    which is also the BFS vertex order of the Cayley graph.
    """

    group: DefiningGraph
    word: tuple

    @property
    def sort_key(self):
        return (len(self.word), self.word)

    def __lt__(self, other):
        if not isinstance(other, GroupElement) or other.group != self.group:
            return NotImplemented
        return self.sort_key < other.sort_key

    def __len__(self):
        return len(self.word)

    def __mul__(self, other):
        if isinstance(other, GroupElement):
            return self.group.compose(self, other)
        return NotImplemented

    def inverse(self) -> "GroupElement":
        return self.group.invert(self)

    def symbols(self) -> tuple:
        return tuple(self.group.generators[i] for i in self.word)

    def __str__(self):
        # "1" for the identity: "e" would collide with a generator name
        return "".join(self.symbols()) if self.word else "1"

    def __repr__(self):
        return f"<{self}>"


@dataclass(frozen=True)
class Hyperplane:
    """A wall of the Davis complex, identified by its reflection.

    The reflection is an involution w s w^{-1} in normal form; the normal
    form is unique per wall, so hyperplanes are hashable identities.
    """

    reflection: GroupElement

    def is_involution(self) -> bool:
        g = self.reflection
        return len(g.word) > 0 and g.group.compose(g, g).word == ()

    def __str__(self):
        return str(self.reflection)

    def __repr__(self):
        return f"Hyperplane({self.reflection!r})"


@dataclass(frozen=True)
class Ball:
    """A materialized ball in the Cayley graph.

    ``vertices`` are in BFS order with ShortLex ties; ``edges`` are the
    induced directed colored edges as (source index, target index, color),
    with both orientations present.
    """

    group: DefiningGraph
    radius: int
    vertices: tuple
    edges: tuple
    _index: dict

    def __contains__(self, v) -> bool:
        if isinstance(v, GroupElement):
            return v.word in self._index
        return tuple(v) in self._index

    def index_of(self, v: GroupElement) -> int:
        try:
            return self._index[v.word]
        except KeyError:
            raise InvalidInputError(f"{v} is not in ball({self.radius})") from None

    def sphere_sizes(self) -> list:
        counts = [0] * (self.radius + 1)
        for v in self.vertices:
            counts[len(v.word)] += 1
        return counts


# -- presentation and ball serialization ------------------------------------


def parse_word(graph: DefiningGraph, text) -> list:
    """Parse a word over the presentation's generator symbols.

    Accepts an iterable of symbols/indices, or a string: per character
    when every generator is a single character, otherwise split on
    whitespace.  The empty string is the identity.
    """
    if isinstance(text, str):
        if text.strip() == "":
            return []
        if all(len(g) == 1 for g in graph.generators):
            items = list(text.strip())
        else:
            items = text.split()
    else:
        items = list(text)
    return [graph.generator_index(x) for x in items]


def word_to_text(g: GroupElement) -> str:
    """Serialize a word so that parse_word round-trips it; identity is ""."""
    gens = g.group.generators
    if all(len(s) == 1 for s in gens):
        return "".join(gens[i] for i in g.word)
    return " ".join(gens[i] for i in g.word)


def load_defining_graph(source) -> DefiningGraph:
    """Build a presentation from a dict, a JSON string, or a file path."""
    data = _load_json(source, "presentation")
    for fld in ("generators",):
        if fld not in data:
            raise InvalidInputError(f"presentation file is missing field {fld!r}")
    if not isinstance(data["generators"], list):
        raise InvalidInputError("presentation field 'generators' must be a list")
    commuting = data.get("commuting", [])
    if not isinstance(commuting, list):
        raise InvalidInputError("presentation field 'commuting' must be a list")
    for pair in commuting:
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            raise InvalidInputError(
                f"presentation field 'commuting' entry {pair!r} is not a pair"
            )
    return DefiningGraph(data["generators"], [tuple(p) for p in commuting])


def _load_json(source, what: str) -> dict:
    if isinstance(source, dict):
        return source
    text = None
    if isinstance(source, (str, FsPath)) and os.path.exists(str(source)):
        text = FsPath(source).read_text(encoding="utf-8")
    elif isinstance(source, str):
        text = source
    if text is None:
        raise InvalidInputError(f"cannot read {what} from {source!r}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{what} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InvalidInputError(f"{what} must be a JSON object")
    return data


def presentation_digest(graph: DefiningGraph) -> str:
    blob = json.dumps(graph.to_dict(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _snapshot_path(graph, radius, cache_dir) -> FsPath:
    return FsPath(cache_dir) / f"ball-{presentation_digest(graph)}-r{radius}.json"


def _load_ball_snapshot(graph, radius, cache_dir):
    path = _snapshot_path(graph, radius, cache_dir)
    if not path.exists():
        return None
    data = json.loads(path.read_text(encoding="utf-8"))
    words = [tuple(w) for w in data["vertices"]]
    return Ball(
        group=graph,
        radius=data["radius"],
        vertices=tuple(GroupElement(graph, w) for w in words),
        edges=tuple((u, v, c) for u, v, c in data["edges"]),
        _index={w: i for i, w in enumerate(words)},
    )


def _store_ball_snapshot(ball: Ball, cache_dir):
    path = _snapshot_path(ball.group, ball.radius, cache_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "radius": ball.radius,
        "vertices": [list(v.word) for v in ball.vertices],
        "edges": [list(e) for e in ball.edges],
    }
    path.write_text(json.dumps(payload), encoding="utf-8")
