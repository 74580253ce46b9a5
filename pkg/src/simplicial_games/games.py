"""Characteristic functions on a complex and the carrier-game families.

Games are stored sparsely (missing faces are worth 0, explicit zeros are
dropped on construction) and the empty coalition is pinned to 0.  Carrier
games v_T (containment) and their strict variants (proper containment) are
the probing basis for every axiom check downstream.
"""

from __future__ import annotations

import json
from fractions import Fraction
from random import Random
from typing import Mapping

from .complexes import EMPTY_FACE, Face, FaceLike, SimplicialComplex, as_face
from .errors import (
    ComplexMismatch,
    EmptyCarrierNotAllowed,
    FaceNotInComplex,
    GameFaceNotInComplex,
    ParseError,
    PermutationNotSymmetry,
    VertexNotInComplex,
)
from .exactnum import format_rational, parse_rational
from .symmetry import Permutation, permutation_preserves


class Game:
    """An exact-rational characteristic function v on a complex, v({}) = 0."""

    __slots__ = ("complex", "values")

    def __init__(
        self, complex: SimplicialComplex, values: Mapping[Face, Fraction | int] = ()
    ):
        self.complex = complex
        cleaned: dict[Face, Fraction] = {}
        for face, worth in dict(values).items():
            face = as_face(face)
            worth = Fraction(worth)
            if not complex.has_face(face):
                raise GameFaceNotInComplex(f"{face} is not a face of the complex")
            if face == EMPTY_FACE:
                if worth != 0:
                    raise ValueError("the empty coalition is always worth 0")
                continue
            if worth != 0:
                cleaned[face] = worth
        self.values = {
            f: cleaned[f] for f in sorted(cleaned, key=Face.sort_key)
        }

    def value(self, face: FaceLike) -> Fraction:
        face = as_face(face)
        if not self.complex.has_face(face):
            raise GameFaceNotInComplex(f"{face} is not a face of the complex")
        return self.values.get(face, Fraction(0))

    def mask_table(self) -> dict[int, Fraction]:
        """All faces as mask -> worth, zeros included (fast lookups)."""
        table = {f.mask: Fraction(0) for f in self.complex.faces}
        for f, w in self.values.items():
            table[f.mask] = w
        return table

    def is_monotone(self) -> bool:
        """v(S) <= v(T) over all comparable pairs; covering pairs suffice."""
        for s in self.complex.faces:
            ws = self.values.get(s, Fraction(0))
            for j in range(1, self.complex.n + 1):
                if j in s:
                    continue
                t = s.with_vertex(j)
                if self.complex.has_face(t) and ws > self.values.get(t, Fraction(0)):
                    return False
        return True

    def is_dummy(self, i: int) -> bool:
        """Does player i add exactly v({i}) to every coalition it can join?"""
        single = Face.from_vertices([i])
        if not self.complex.has_face(single):
            raise VertexNotInComplex(f"vertex {i} is not in the complex")
        vi = self.value(single)
        for t in self.complex.link(single).faces:
            if self.value(t.union(single)) != self.value(t) + vi:
                return False
        return True

    def permuted(self, perm: Permutation) -> "Game":
        """The game T -> v(pi T); pi must preserve the complex."""
        if not permutation_preserves(self.complex, perm):
            bad = next(
                f
                for f in self.complex.facets
                if not self.complex.has_face(perm.apply_face(f))
            )
            raise PermutationNotSymmetry(
                f"{perm} maps face {bad} outside the complex"
            )
        return Game(
            self.complex,
            {
                f: self.value(perm.apply_face(f))
                for f in self.complex.faces
                if f != EMPTY_FACE
            },
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Game):
            return NotImplemented
        return self.complex == other.complex and self.values == other.values

    def __repr__(self) -> str:
        return f"Game({{{', '.join(f'{f}: {w}' for f, w in self.values.items())}}})"


def carrier_game(
    delta: SimplicialComplex, t: FaceLike, strict: bool = False
) -> Game:
    """Indicator of containment of t: 1 on supersets of t (strict: proper ones).

    The non-strict variant for t = {} would be constant 1, clashing with
    v({}) = 0, so it is rejected; the strict variant of {} is the game worth
    1 on every nonempty face.
    """
    t = as_face(t)
    if not delta.has_face(t):
        raise FaceNotInComplex(f"{t} is not a face of the complex")
    if t == EMPTY_FACE and not strict:
        raise EmptyCarrierNotAllowed("carrier game of the empty face must be strict")
    values = {}
    for s in delta.faces:
        if t.issubset(s) and (not strict or s != t):
            values[s] = Fraction(1)
    return Game(delta, values)


def indicator_game(delta: SimplicialComplex, t: FaceLike) -> Game:
    """Worth 1 at exactly the face t (the difference of the two carrier games)."""
    t = as_face(t)
    if not delta.has_face(t):
        raise FaceNotInComplex(f"{t} is not a face of the complex")
    if t == EMPTY_FACE:
        raise EmptyCarrierNotAllowed("the empty face cannot carry an indicator")
    return Game(delta, {t: Fraction(1)})


def scale_add(v: Game, w: Game, a: Fraction | int, b: Fraction | int) -> Game:
    """The pointwise combination a*v + b*w on a shared complex."""
    if v.complex != w.complex:
        raise ComplexMismatch("games live on different complexes")
    a, b = Fraction(a), Fraction(b)
    combined: dict[Face, Fraction] = {}
    for f in set(v.values) | set(w.values):
        combined[f] = a * v.values.get(f, Fraction(0)) + b * w.values.get(f, Fraction(0))
    return Game(v.complex, combined)


# -- seeded generators (used by verification commands and tests) ---------

def random_rational(rng: Random, lo: int = -9, hi: int = 9, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_game(delta: SimplicialComplex, rng: Random) -> Game:
    """Independent random rational worth on every nonempty face."""
    return Game(
        delta,
        {f: random_rational(rng) for f in delta.faces if f != EMPTY_FACE},
    )


def random_monotone_game(delta: SimplicialComplex, rng: Random) -> Game:
    """A nonnegative combination of carrier games, hence monotone."""
    weights = {
        f: random_rational(rng, lo=0) for f in delta.faces if f != EMPTY_FACE
    }
    values = {}
    for s in delta.faces:
        if s == EMPTY_FACE:
            continue
        total = sum(
            (w for t, w in weights.items() if t.issubset(s)), Fraction(0)
        )
        values[s] = total
    return Game(delta, values)


def random_dummy_game(delta: SimplicialComplex, i: int, rng: Random) -> Game:
    """A random game in which player i is dummy by construction.

    Faces without i get independent random worth; every face containing i
    is pinned to v(T) + v({i}) for T the face minus i.
    """
    single = Face.from_vertices([i])
    if not delta.has_face(single):
        raise VertexNotInComplex(f"vertex {i} is not in the complex")
    values: dict[Face, Fraction] = {}
    for f in delta.faces:
        if f == EMPTY_FACE or i in f:
            continue
        values[f] = random_rational(rng)
    vi = random_rational(rng)
    values[single] = vi
    for f in delta.faces:
        if i in f and f != single:
            values[f] = values.get(f.without_vertex(i), Fraction(0)) + vi
    return Game(delta, values)


# -- JSON interchange -----------------------------------------------------

def face_key(face: Face) -> str:
    return ",".join(str(v) for v in face.vertices)


def game_to_dict(v: Game) -> dict:
    return {
        "values": {face_key(f): format_rational(w) for f, w in v.values.items()}
    }


def game_from_dict(data: object, delta: SimplicialComplex) -> Game:
    if not isinstance(data, dict) or "values" not in data:
        raise ParseError("game document must be an object with a 'values' key")
    raw = data["values"]
    if not isinstance(raw, dict):
        raise ParseError("'values' must map coalition keys to rationals")
    values: dict[Face, Fraction] = {}
    for key, text in raw.items():
        if key == "":
            raise ParseError("the empty coalition may not appear in a game file")
        try:
            ids = [int(part) for part in key.split(",")]
        except ValueError:
            raise ParseError(f"bad coalition key {key!r}") from None
        face = Face.from_vertices(ids)
        if not delta.has_face(face):
            raise GameFaceNotInComplex(f"{face} is not a face of the complex")
        if not isinstance(text, str):
            raise ParseError(f"worth of {key!r} must be a rational string")
        values[face] = parse_rational(text)
    return Game(delta, values)


def load_game(path: str, delta: SimplicialComplex) -> Game:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    return game_from_dict(data, delta)
