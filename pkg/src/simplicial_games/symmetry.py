"""Symmetries of a complex and the common-probability linear system.

Symm(D) is the subgroup of S_n whose members map faces to faces; it is
found by exhaustive scan (n <= 10), checking images of facets only, since
a bijection preserving the facet set preserves the whole complex.

The generated subgroup driving the symmetry reduction is built from two
generator families: for every vertex i, the permutation swapping two
equal-cardinality members L, T of the vertex link (realized canonically as
the sorted pairing of L-minus-T with T-minus-L), and every transposition
(i, j) whose vertex links share at least one face.  Generators preserving
the complex imply the generated group does, so containment is checked on
generators only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import TYPE_CHECKING, Mapping

from .complexes import Face, FVector, SimplicialComplex
from .errors import EmptyComplex, GroundSetTooLarge, HypothesisNotMet, NotPureLinks
from .exactnum import LinearSolution, RationalMatrix, solve_exact

if TYPE_CHECKING:
    from .values import ProbabilityTable

SYMM_GROUP_MAX_N = 10


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}; images[k] is the image of vertex k+1."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "Permutation":
        return cls(tuple(mapping.get(v, v) for v in range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        return cls.from_mapping(n, {i: j, j: i})

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, vertex: int) -> int:
        return self.images[vertex - 1]

    def apply_face(self, face: Face) -> Face:
        return Face.from_vertices(self.images[v - 1] for v in face.vertices)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(v) = self(other(v))."""
        return Permutation(tuple(self.images[w - 1] for w in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.images, start=1):
            inv[w - 1] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.images, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen: set[int] = set()
        out = []
        for v in range(1, self.n + 1):
            if v in seen:
                continue
            cyc = [v]
            seen.add(v)
            w = self.apply(v)
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self.apply(w)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "id"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycs)


@dataclass(frozen=True)
class SymmetryGroup:
    """An explicitly enumerated subgroup of S_n."""

    n: int
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm: Permutation) -> bool:
        return perm in set(self.elements)


def permutation_preserves(delta: SimplicialComplex, perm: Permutation) -> bool:
    """Does perm map the complex onto itself? Facet images suffice."""
    return all(delta.has_face(perm.apply_face(f)) for f in delta.facets)


def symm_group(delta: SimplicialComplex) -> SymmetryGroup:
    """All permutations of [n] preserving the complex, by exhaustive scan."""
    if delta.n > SYMM_GROUP_MAX_N:
        raise GroundSetTooLarge(
            f"exhaustive symmetry scan capped at n={SYMM_GROUP_MAX_N}, got n={delta.n}"
        )
    elems = []
    for images in permutations(range(1, delta.n + 1)):
        perm = Permutation(images)
        if permutation_preserves(delta, perm):
            elems.append(perm)
    return SymmetryGroup(delta.n, tuple(elems))


def swap_permutation(n: int, left: Face, right: Face) -> Permutation:
    """The permutation exchanging two equal-cardinality sets.

    The symmetric differences are paired in sorted order; the overlap and
    everything else stay fixed.
    """
    lo = sorted(left.difference(right).vertices)
    ro = sorted(right.difference(left).vertices)
    if len(lo) != len(ro):
        raise ValueError("sets must have equal cardinality")
    mapping = {}
    for a, b in zip(lo, ro):
        mapping[a] = b
        mapping[b] = a
    return Permutation.from_mapping(n, mapping)


def pi_delta_generators(delta: SimplicialComplex) -> tuple[Permutation, ...]:
    """Generators of the subgroup the symmetry reduction quantifies over.

    Deduplicated, in deterministic order: link-pair swaps per vertex first,
    then the link-intersection transpositions.
    """
    out: list[Permutation] = []
    seen: set[tuple[int, ...]] = set()

    def emit(p: Permutation) -> None:
        if not p.is_identity() and p.images not in seen:
            seen.add(p.images)
            out.append(p)

    verts = delta.vertices
    for i in verts:
        lk = delta.link(Face.from_vertices([i]))
        by_card: dict[int, list[Face]] = {}
        for t in lk.faces:
            if t.cardinality > 0:
                by_card.setdefault(t.cardinality, []).append(t)
        for card in sorted(by_card):
            for left, right in combinations(by_card[card], 2):
                emit(swap_permutation(delta.n, left, right))
    for i, j in combinations(verts, 2):
        li = delta.link(Face.from_vertices([i]))
        lj = delta.link(Face.from_vertices([j]))
        if set(li.faces) & set(lj.faces):
            emit(Permutation.transposition(delta.n, i, j))
    return tuple(out)


@dataclass(frozen=True)
class ContainmentReport:
    """Outcome of the generator-preservation check for the generated subgroup."""

    contained: bool
    witness_generator: Permutation | None = None
    witness_face: Face | None = None


def check_pi_delta_contained(delta: SimplicialComplex) -> ContainmentReport:
    """True iff every generator preserves the complex.

    Preservation is closed under composition and inverse, so generators
    suffice.  On failure, reports the offending generator and a face it
    maps outside the complex.
    """
    for gen in pi_delta_generators(delta):
        for f in delta.facets:
            if not delta.has_face(gen.apply_face(f)):
                return ContainmentReport(False, gen, f)
    return ContainmentReport(True)


@dataclass(frozen=True)
class ShapleyClassification:
    """Whether all vertex links share one f-vector (and which)."""

    is_shapley: bool
    s_vector: FVector | None = None
    witness: tuple[int, int] | None = None


def classify_shapley(delta: SimplicialComplex) -> ShapleyClassification:
    """Compare per-vertex link f-vectors; unequal ranks also disqualify."""
    verts = delta.vertices
    if delta.is_empty() or not verts:
        raise EmptyComplex("classification needs at least one vertex")
    first = verts[0]
    s = delta.link(Face.from_vertices([first])).f_vector()
    for v in verts[1:]:
        fv = delta.link(Face.from_vertices([v])).f_vector()
        if fv != s:
            return ShapleyClassification(False, witness=(first, v))
    return ShapleyClassification(True, s_vector=s)


def p_system_rows(delta: SimplicialComplex) -> tuple[tuple[FVector, ...], list[int]]:
    """Deduplicated link f-vector rows of the common-probability system.

    Returns the distinct rows (first-occurrence order over ascending
    vertices) and, per row, a representative vertex.
    """
    if not delta.has_pure_links():
        raise NotPureLinks("the common-probability system requires pure links")
    rows: list[FVector] = []
    reps: list[int] = []
    for v in delta.vertices:
        fv = delta.link(Face.from_vertices([v])).f_vector()
        if fv not in rows:
            rows.append(fv)
            reps.append(v)
    return tuple(rows), reps


def solve_p_system(delta: SimplicialComplex) -> LinearSolution:
    """Solve f(Link(i)) . p = 1 over all vertices i, exactly.

    Rows are the vertex-link f-vectors (all of length rank, thanks to pure
    links), deduplicated before elimination; unknowns are (p_0, ..., p_{r-1}).
    """
    rows, _ = p_system_rows(delta)
    a = RationalMatrix.from_rows([[Fraction(e) for e in row] for row in rows])
    b = [Fraction(1)] * len(rows)
    return solve_exact(a, b)


@dataclass(frozen=True)
class SymmetryReductionReport:
    """Whether per-player weights collapse to per-cardinality constants."""

    ok: bool
    common_p: dict[int, Fraction] | None = None
    violation: tuple[int, Face, Fraction, Fraction] | None = None


def check_symmetry_reduction(
    delta: SimplicialComplex, tables: Mapping[int, "ProbabilityTable"]
) -> SymmetryReductionReport:
    """Verify p_T^i depends only on |T| for nonempty T, across all players.

    Requires the generated-subgroup containment hypothesis; the report
    carries the shared constants (p_1, ..., ) or the first violation
    (player, face, expected, actual).
    """
    report = check_pi_delta_contained(delta)
    if not report.contained:
        raise HypothesisNotMet(
            f"generated subgroup not contained in Symm: generator "
            f"{report.witness_generator} moves {report.witness_face} outside"
        )
    common: dict[int, Fraction] = {}
    for i in delta.vertices:
        table = tables[i]
        lk = delta.link(Face.from_vertices([i]))
        for t in lk.faces:
            if t.cardinality == 0:
                continue
            p = table.weight(t)
            card = t.cardinality
            if card not in common:
                common[card] = p
            elif common[card] != p:
                return SymmetryReductionReport(
                    False, violation=(i, t, common[card], p)
                )
    return SymmetryReductionReport(True, common_p=common)


def link_transposition_bijection(
    delta: SimplicialComplex, i: int, j: int
) -> dict[Face, Face]:
    """The face map T -> T (j not in T) / (T+i)-j (j in T) from Link(i) to Link(j).

    Whenever the transposition (i, j) preserves the complex this is a
    cardinality-preserving bijection, hence the two links share one f-vector.
    """
    lk = delta.link(Face.from_vertices([i]))
    out: dict[Face, Face] = {}
    for t in lk.faces:
        if j in t:
            out[t] = t.with_vertex(i).without_vertex(j)
        else:
            out[t] = t
    return out


def permutation_to_dict(perm: Permutation) -> dict:
    return {"perm": list(perm.images)}


def permutation_from_dict(data: Mapping) -> Permutation:
    return Permutation(tuple(data["perm"]))
