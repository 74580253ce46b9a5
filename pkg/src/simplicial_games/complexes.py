"""Simplicial complexes over the vertex set {1, ..., n} and their queries.

Faces are immutable 64-bit vertex bitmasks (hard cap n <= 64), so subset
tests are O(1).  A complex materializes its full face set eagerly at
construction: every downstream formula sums over faces or links, and the
canonical ordering (cardinality, then lexicographic on the vertex tuple)
is fixed wherever output order matters.

Links are returned as complexes over the *same* ground set [n], not
relabeled, so per-face weight tables index directly into them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import (
    EmptyComplex,
    FaceNotInComplex,
    ParseError,
    TooManyVertices,
    VertexOutOfRange,
)

MAX_VERTICES = 64

FVector = tuple[int, ...]


@dataclass(frozen=True)
class Face:
    """An immutable subset of {1, ..., n}, stored as a bitmask.

    Vertex id v occupies bit v-1. The empty face is ``Face(0)``.
    """

    mask: int = 0

    @classmethod
    def from_vertices(cls, vertices: Iterable[int]) -> "Face":
        mask = 0
        for v in vertices:
            if not isinstance(v, int) or v < 1:
                raise VertexOutOfRange(f"vertex ids must be integers >= 1, got {v!r}")
            bit = 1 << (v - 1)
            if mask & bit:
                raise VertexOutOfRange(f"duplicate vertex id {v}")
            mask |= bit
        return cls(mask)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    @property
    def cardinality(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, vertex: int) -> bool:
        return vertex >= 1 and self.mask >> (vertex - 1) & 1 == 1

    def issubset(self, other: "Face") -> bool:
        return self.mask & other.mask == self.mask

    def isdisjoint(self, other: "Face") -> bool:
        return self.mask & other.mask == 0

    def union(self, other: "Face") -> "Face":
        return Face(self.mask | other.mask)

    def intersection(self, other: "Face") -> "Face":
        return Face(self.mask & other.mask)

    def difference(self, other: "Face") -> "Face":
        return Face(self.mask & ~other.mask)

    def with_vertex(self, vertex: int) -> "Face":
        return Face(self.mask | 1 << (vertex - 1))

    def without_vertex(self, vertex: int) -> "Face":
        return Face(self.mask & ~(1 << (vertex - 1)))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.cardinality, self.vertices)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.vertices) + "}"

    def __repr__(self) -> str:
        return f"Face({{{','.join(str(v) for v in self.vertices)}}})"


EMPTY_FACE = Face(0)

FaceLike = Union[Face, Iterable[int]]


def as_face(obj: FaceLike) -> Face:
    return obj if isinstance(obj, Face) else Face.from_vertices(obj)


def _subfaces(face: Face) -> Iterator[Face]:
    """All subsets of ``face``, the face itself included (submask walk)."""
    mask = face.mask
    sub = mask
    while True:
        yield Face(sub)
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """A downward-closed family of faces, with its facet list and rank.

    Construct via :meth:`from_facets`; ``faces`` is the full closure in
    canonical order, ``facets`` the inclusion-maximal members, ``rank`` the
    largest face cardinality (-1 for the empty family).
    """

    __slots__ = ("n", "faces", "facets", "rank", "_face_masks", "_link_cache")

    def __init__(self, n: int, faces: Iterable[Face]):
        if n > MAX_VERTICES:
            raise TooManyVertices(f"at most {MAX_VERTICES} vertices supported, got n={n}")
        if n < 0:
            raise VertexOutOfRange(f"vertex count must be >= 0, got {n}")
        face_set = frozenset(faces)
        limit = (1 << n) - 1
        for f in face_set:
            if f.mask & ~limit:
                raise VertexOutOfRange(
                    f"face {f} has vertices outside 1..{n}"
                )
        self.n = n
        self.faces: tuple[Face, ...] = tuple(sorted(face_set, key=Face.sort_key))
        self._face_masks = frozenset(f.mask for f in face_set)
        self.facets: tuple[Face, ...] = tuple(
            f
            for f in self.faces
            if not any(f.mask != g.mask and f.issubset(g) for g in face_set)
        )
        self.rank = max((f.cardinality for f in face_set), default=-1)
        self._link_cache: dict[int, "SimplicialComplex"] = {}

    @classmethod
    def from_facets(cls, n: int, facet_list: Iterable[FaceLike]) -> "SimplicialComplex":
        """Build the downward closure of the given faces.

        Redundant (non-maximal) inputs are absorbed; the facet list is
        recomputed from the closure.
        """
        closure: set[Face] = set()
        for raw in facet_list:
            face = as_face(raw)
            closure.update(_subfaces(face))
        return cls(n, closure)

    # -- membership ---------------------------------------------------

    def has_face(self, face: FaceLike) -> bool:
        return as_face(face).mask in self._face_masks

    def require_face(self, face: FaceLike) -> Face:
        f = as_face(face)
        if f.mask not in self._face_masks:
            raise FaceNotInComplex(f"{f} is not a face of the complex")
        return f

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if (1 << (v - 1)) in self._face_masks)

    def is_empty(self) -> bool:
        return not self.faces

    # -- queries -------------------------------------------------------

    def link(self, s: FaceLike) -> "SimplicialComplex":
        """Faces disjoint from s whose union with s is again a face.

        For a vertex this is exactly the set of coalitions the player can
        join. The result lives on the same ground set [n].
        """
        s = self.require_face(s)
        cached = self._link_cache.get(s.mask)
        if cached is not None:
            return cached
        members = [
            t for t in self.faces if t.isdisjoint(s) and self.has_face(t.union(s))
        ]
        result = SimplicialComplex(self.n, members)
        self._link_cache[s.mask] = result
        return result

    def star(self, s: FaceLike) -> frozenset[Face]:
        """All faces contained in some face that contains s."""
        s = self.require_face(s)
        out: set[Face] = set()
        for t in self.faces:
            if s.issubset(t):
                out.update(_subfaces(t))
        return frozenset(out)

    def f_vector(self) -> FVector:
        """(f_{-1}, f_0, ..., f_{rank-1}): face counts by cardinality."""
        if self.is_empty():
            raise EmptyComplex("f-vector of the empty complex is undefined")
        counts = [0] * (self.rank + 1)
        for f in self.faces:
            counts[f.cardinality] += 1
        return tuple(counts)

    def skeleton(self, k: int) -> "SimplicialComplex":
        """The subcomplex of faces of cardinality at most k."""
        if k < 0:
            raise VertexOutOfRange(f"skeleton bound must be >= 0, got {k}")
        return SimplicialComplex(self.n, [f for f in self.faces if f.cardinality <= k])

    def has_pure_links(self) -> bool:
        """True iff every vertex link has all facets of cardinality rank-1."""
        if self.is_empty() or not self.vertices:
            raise EmptyComplex("pure-links test needs at least one vertex")
        want = self.rank - 1
        for v in self.vertices:
            lk = self.link(Face.from_vertices([v]))
            if any(f.cardinality != want for f in lk.facets):
                return False
        return True

    def extension_set(self, t: FaceLike) -> frozenset[int]:
        """Vertices j outside t with t+j again a face."""
        t = self.require_face(t)
        return frozenset(
            j
            for j in range(1, self.n + 1)
            if j not in t and self.has_face(t.with_vertex(j))
        )

    def facets_containing(self, s: FaceLike) -> tuple[Face, ...]:
        s = self.require_face(s)
        return tuple(f for f in self.facets if s.issubset(f))

    # -- equality ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self._face_masks == other._face_masks

    def __hash__(self) -> int:
        return hash((self.n, self._face_masks))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={[str(f) for f in self.facets]})"


def full_simplex(n: int) -> SimplicialComplex:
    """2^[n], the complex where every coalition is feasible."""
    return SimplicialComplex.from_facets(n, [range(1, n + 1)])


# -- JSON interchange --------------------------------------------------

def complex_to_dict(delta: SimplicialComplex) -> dict:
    return {"n": delta.n, "facets": [list(f.vertices) for f in delta.facets]}


def complex_from_dict(data: object) -> SimplicialComplex:
    if not isinstance(data, dict):
        raise ParseError("complex document must be a JSON object")
    try:
        n = data["n"]
        facets = data["facets"]
    except KeyError as e:
        raise ParseError(f"complex document missing key {e.args[0]!r}") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError("'n' must be an integer")
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError("'facets' must be a list of vertex-id lists")
    faces = []
    for f in facets:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in f):
            raise ParseError(f"facet {f!r} contains a non-integer vertex id")
        faces.append(Face.from_vertices(f))
    return SimplicialComplex.from_facets(n, faces)


def load_complex(path: str) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    return complex_from_dict(data)
