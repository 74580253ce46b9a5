"""Probabilistic values, the generalized Shapley value, efficiency, decomposition.

The probabilistic value of player i is the p-weighted sum of marginal
contributions over the coalitions in the vertex link.  The generalized
Shapley value picks the weights uniformly over coalition sizes and
uniformly within each size, sizes counted by the link f-vector:

    (1 / (r_i + 1)) * sum_T (1 / f_{|T|-1}(Link(i))) * (v(T+i) - v(T))

with r_i the rank of the link.  On a full simplex this reduces exactly to
the classical Shapley value, which is also implemented here independently
(by permutation enumeration, not by the weight formula) so the two routes
can confirm each other.

Efficiency aggregates come from the coefficient construction

    a_T = sum_{i in T} p^i_{T-i} - sum_{j: T in Link(j)} p^j_T   (non-facets)
    a_F = sum_{i in F} p^i_{F-i}                                 (facets)

which makes sum_i phi_i(v) = sum_T a_T v(T) an identity.  The facet
decomposition solves, per coalition T in the link, for weights c_F over
the facets containing T+i so the weighted classical Shapley values on
facet restrictions reproduce the generalized value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations
from random import Random
from typing import Iterable, Mapping

from .complexes import EMPTY_FACE, Face, FaceLike, SimplicialComplex, as_face
from .errors import (
    HypothesisNotMet,
    KeyOutsideLink,
    MissingPlayerTable,
    NotPureLinks,
    PlayerMismatch,
    TooManyPlayers,
    VertexNotInComplex,
)
from .exactnum import RationalMatrix, SolveStatus, solve_exact
from .games import (
    Game,
    carrier_game,
    random_dummy_game,
    random_game,
    random_monotone_game,
    random_rational,
    scale_add,
)
from .symmetry import classify_shapley

ORACLE_MAX_PLAYERS = 10


@dataclass(frozen=True)
class ProbabilityTable:
    """Per-player weights p_T over the coalitions in the player's link."""

    player: int
    weights: Mapping[Face, Fraction]

    def weight(self, face: FaceLike) -> Fraction:
        return self.weights.get(as_face(face), Fraction(0))

    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def is_normalized(self) -> bool:
        return self.total() == 1

    def is_probability(self) -> bool:
        return self.is_normalized() and all(w >= 0 for w in self.weights.values())


GroupValue = dict[int, Fraction]

EfficiencyCoefficients = dict[Face, Fraction]


def _require_vertex(delta: SimplicialComplex, i: int) -> Face:
    single = Face.from_vertices([i])
    if not delta.has_face(single):
        raise VertexNotInComplex(f"vertex {i} is not in the complex")
    return single


def probabilistic_value(v: Game, i: int, table: ProbabilityTable) -> Fraction:
    """sum_T p_T (v(T+i) - v(T)) over the link of i."""
    if table.player != i:
        raise PlayerMismatch(f"table belongs to player {table.player}, not {i}")
    single = _require_vertex(v.complex, i)
    link = v.complex.link(single)
    total = Fraction(0)
    for t, p in table.weights.items():
        if not link.has_face(t):
            raise KeyOutsideLink(f"{t} is not in the link of vertex {i}")
        total += p * (v.value(t.union(single)) - v.value(t))
    return total


def generalized_shapley(v: Game, i: int) -> Fraction:
    """The size-uniform value of player i, exactly."""
    single = _require_vertex(v.complex, i)
    link = v.complex.link(single)
    fv = link.f_vector()
    r_i = link.rank
    total = Fraction(0)
    for t in link.faces:
        total += Fraction(1, fv[t.cardinality]) * (
            v.value(t.union(single)) - v.value(t)
        )
    return total / (r_i + 1)


def _player_set(v: Game, players: Iterable[int] | None) -> tuple[int, ...]:
    if players is None:
        return v.complex.vertices
    return tuple(players)


def classical_shapley_all(
    v: Game, players: Iterable[int] | None = None
) -> dict[int, Fraction]:
    """Classical Shapley values on a simplex, by full permutation enumeration.

    One pass over all orderings accumulates every player's marginal at
    once; values are the per-player averages.  Deliberately a different
    algorithm from the weight-formula path, so agreement is evidence.
    """
    ps = _player_set(v, players)
    if len(ps) > ORACLE_MAX_PLAYERS:
        raise TooManyPlayers(
            f"permutation enumeration capped at {ORACLE_MAX_PLAYERS} players"
        )
    # a prefix of any ordering must be a face, so the players must span one
    v.complex.require_face(Face.from_vertices(ps))
    worth = v.mask_table()
    totals = {p: Fraction(0) for p in ps}
    for order in permutations(ps):
        mask = 0
        prev = Fraction(0)
        for p in order:
            mask |= 1 << (p - 1)
            cur = worth[mask]
            totals[p] += cur - prev
            prev = cur
    count = math.factorial(len(ps))
    return {p: t / count for p, t in totals.items()}


def classical_shapley_oracle(
    v: Game, i: int, players: Iterable[int] | None = None
) -> Fraction:
    """Classical Shapley value of one player, averaged over all orderings.

    ``players`` must span a face whose power set lies in the complex (a
    facet restriction, or the whole ground set of a full simplex).
    """
    ps = _player_set(v, players)
    if i not in ps:
        raise VertexNotInComplex(f"player {i} is not among {ps}")
    return classical_shapley_all(v, ps)[i]


def canonical_shapley_tables(delta: SimplicialComplex) -> dict[int, ProbabilityTable]:
    """The weight tables realizing the generalized Shapley value.

    p_T = 1 / ((r_i + 1) * f_{|T|-1}(Link(i))); each table is a probability
    distribution (the per-size weights telescope to 1).
    """
    tables = {}
    for i in delta.vertices:
        link = delta.link(Face.from_vertices([i]))
        fv = link.f_vector()
        r_i = link.rank
        weights = {
            t: Fraction(1, (r_i + 1) * fv[t.cardinality]) for t in link.faces
        }
        tables[i] = ProbabilityTable(i, weights)
    return tables


def group_value(
    v: Game, tables: Mapping[int, ProbabilityTable]
) -> GroupValue:
    out: GroupValue = {}
    for i in v.complex.vertices:
        if i not in tables:
            raise MissingPlayerTable(f"no table for player {i}")
        out[i] = probabilistic_value(v, i, tables[i])
    return out


def efficiency_coefficients(
    delta: SimplicialComplex, tables: Mapping[int, ProbabilityTable]
) -> EfficiencyCoefficients:
    """The unique a_T with sum_i phi_i(v) = sum_T a_T v(T) for every game."""
    for i in delta.vertices:
        if i not in tables:
            raise MissingPlayerTable(f"no table for player {i}")
    facets = set(delta.facets)
    out: EfficiencyCoefficients = {}
    for t in delta.faces:
        if t == EMPTY_FACE:
            continue
        gain = sum(
            (tables[i].weight(t.without_vertex(i)) for i in t.vertices), Fraction(0)
        )
        if t in facets:
            out[t] = gain
        else:
            loss = sum(
                (tables[j].weight(t) for j in delta.extension_set(t)), Fraction(0)
            )
            out[t] = gain - loss
    return out


def shapley_efficiency_closed_form(
    delta: SimplicialComplex,
) -> EfficiencyCoefficients:
    """Closed-form a_T for an s-Shapley complex with pure links.

    Facets get 1/s_{r-1}; a smaller face T gets
    (1/r) (|T|/s_{|T|-1} - ext(T)/s_{|T|}).
    """
    if not delta.has_pure_links():
        raise NotPureLinks("closed-form coefficients require pure links")
    cls = classify_shapley(delta)
    if not cls.is_shapley:
        raise HypothesisNotMet(
            f"closed-form coefficients require a Shapley complex; links of "
            f"vertices {cls.witness} differ"
        )
    s = cls.s_vector
    r = delta.rank
    facets = set(delta.facets)
    out: EfficiencyCoefficients = {}
    for t in delta.faces:
        if t == EMPTY_FACE:
            continue
        if t in facets:
            out[t] = Fraction(1, s[r - 1])
        else:
            card = t.cardinality
            ext = len(delta.extension_set(t))
            out[t] = (
                Fraction(card, s[card - 1]) - Fraction(ext, s[card])
            ) / r
    return out


@dataclass(frozen=True)
class EfficiencyCheck:
    equal: bool
    lhs: Fraction
    rhs: Fraction
    residual: Fraction


def check_efficiency_identity(
    delta: SimplicialComplex,
    tables: Mapping[int, ProbabilityTable],
    v: Game,
) -> EfficiencyCheck:
    """Compare sum_i phi_i(v) against sum_T a_T v(T), exactly.

    The construction of a_T makes this an identity; a nonzero residual is
    a bug certificate, never a property of the inputs.
    """
    lhs = sum(group_value(v, tables).values(), Fraction(0))
    coeffs = efficiency_coefficients(delta, tables)
    rhs = sum((a * v.value(t) for t, a in coeffs.items()), Fraction(0))
    return EfficiencyCheck(lhs == rhs, lhs, rhs, lhs - rhs)


class DecompositionStatus(Enum):
    EXACT = "exact"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Decomposition:
    """Facet weights writing the generalized value as classical Shapley values.

    ``facet_weights`` (status EXACT) maps each facet containing the player
    to its weight c_F, free variables fixed to 0.  ``c_tilde`` rescales
    per coalition cardinality t: c_F (r_i+1) / (|F| C(|F|-1, t)), so each
    system row reads sum_F c_tilde[(F, t)] * f_{t-1}(Link(i)) = 1.
    ``row_faces``/``matrix``/``rhs`` expose the solved system; for
    INFEASIBLE, ``certificate`` is lam with lam @ matrix = 0, lam @ rhs = 1.
    """

    player: int
    status: DecompositionStatus
    facet_order: tuple[Face, ...]
    row_faces: tuple[Face, ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    facet_weights: dict[Face, Fraction] | None = None
    c_tilde: dict[tuple[Face, int], Fraction] | None = None
    certificate: tuple[Fraction, ...] | None = None


def decompose_shapley(
    delta: SimplicialComplex, i: int, seed: int = 0, check_games: int = 20
) -> Decomposition:
    """Solve for facet weights reproducing the generalized Shapley value.

    One equation per coalition T in the link of i:

        sum_{F facet >= T+i} c_F (1/|F|) / C(|F|-1, |T|)
            = (1/(r_i+1)) / f_{|T|-1}(Link(i))

    Solved exactly in the unknowns c_F over facets containing i; when a
    solution exists it is cross-checked on seeded random games against the
    direct generalized value.
    """
    single = _require_vertex(delta, i)
    link = delta.link(single)
    fv = link.f_vector()
    r_i = link.rank
    facet_order = delta.facets_containing(single)
    col = {f: k for k, f in enumerate(facet_order)}
    rows = []
    rhs = []
    row_faces = []
    for t in link.faces:
        coeffs = [Fraction(0)] * len(facet_order)
        for f in delta.facets_containing(t.union(single)):
            size = f.cardinality
            coeffs[col[f]] += Fraction(1, size * math.comb(size - 1, t.cardinality))
        rows.append(coeffs)
        rhs.append(Fraction(1, (r_i + 1) * fv[t.cardinality]))
        row_faces.append(t)
    solution = solve_exact(RationalMatrix.from_rows(rows), rhs)

    base = dict(
        player=i,
        facet_order=facet_order,
        row_faces=tuple(row_faces),
        matrix=tuple(tuple(r) for r in rows),
        rhs=tuple(rhs),
    )
    if solution.status is SolveStatus.INCONSISTENT:
        return Decomposition(
            status=DecompositionStatus.INFEASIBLE,
            certificate=solution.certificate,
            **base,
        )

    weights = {f: solution.particular[col[f]] for f in facet_order}
    c_tilde = {}
    for f in facet_order:
        size = f.cardinality
        for card in range(size):
            c_tilde[(f, card)] = (
                weights[f] * (r_i + 1) / (size * math.comb(size - 1, card))
            )
    rng = Random(seed)
    for _ in range(check_games):
        v = random_game(delta, rng)
        combined = sum(
            (
                weights[f] * classical_shapley_oracle(v, i, f.vertices)
                for f in facet_order
            ),
            Fraction(0),
        )
        direct = generalized_shapley(v, i)
        if combined != direct:
            raise RuntimeError(
                "decomposition cross-check failed despite a consistent system; "
                "this is a bug"
            )
    return Decomposition(
        status=DecompositionStatus.EXACT,
        facet_weights=weights,
        c_tilde=c_tilde,
        **base,
    )


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    player: int
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class AxiomSuiteReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def axiom_suite(
    delta: SimplicialComplex,
    tables: Mapping[int, ProbabilityTable],
    seed: int = 0,
    rounds: int = 5,
) -> AxiomSuiteReport:
    """Instantiate the axiom conclusions per player on generated games.

    linearity      phi_i(a v + b w) = a phi_i(v) + b phi_i(w)
    star_locality  phi_i ignores changes off the star of i
    dummy          phi_i(v) = v({i}) on games where i is dummy
                   (guaranteed only for normalized tables)
    monotone       phi_i(v) >= 0 on monotone games, including every strict
                   carrier probe (guaranteed only for nonnegative tables)
    """
    for i in delta.vertices:
        if i not in tables:
            raise MissingPlayerTable(f"no table for player {i}")
    rng = Random(seed)
    checks: list[AxiomCheck] = []
    star_cache = {
        i: delta.star(Face.from_vertices([i])) for i in delta.vertices
    }
    for i in delta.vertices:
        table = tables[i]
        single = Face.from_vertices([i])
        link = delta.link(single)

        ok, detail = True, ""
        for _ in range(rounds):
            v, w = random_game(delta, rng), random_game(delta, rng)
            a, b = random_rational(rng), random_rational(rng)
            left = probabilistic_value(scale_add(v, w, a, b), i, table)
            right = a * probabilistic_value(v, i, table) + b * probabilistic_value(
                w, i, table
            )
            if left != right:
                ok, detail = False, f"{left} != {right}"
                break
        checks.append(AxiomCheck("linearity", i, ok, detail))

        ok, detail = True, ""
        off_star = [
            f for f in delta.faces if f != EMPTY_FACE and f not in star_cache[i]
        ]
        for _ in range(rounds):
            v = random_game(delta, rng)
            modified = dict(v.values)
            for f in off_star:
                modified[f] = v.value(f) + random_rational(rng)
            w = Game(delta, modified)
            if probabilistic_value(v, i, table) != probabilistic_value(w, i, table):
                ok, detail = False, "value moved with off-star modification"
                break
        checks.append(AxiomCheck("star_locality", i, ok, detail))

        ok, detail = True, ""
        probes = [carrier_game(delta, single)]
        probes += [random_dummy_game(delta, i, rng) for _ in range(rounds)]
        for v in probes:
            got = probabilistic_value(v, i, table)
            want = v.value(single)
            if got != want:
                ok, detail = False, f"dummy payoff {got} != v(i) = {want}"
                break
        checks.append(AxiomCheck("dummy", i, ok, detail))

        ok, detail = True, ""
        monotone_probes = [carrier_game(delta, t, strict=True) for t in link.faces]
        monotone_probes += [random_monotone_game(delta, rng) for _ in range(rounds)]
        for v in monotone_probes:
            got = probabilistic_value(v, i, table)
            if got < 0:
                ok, detail = False, f"negative value {got} on a monotone game"
                break
        checks.append(AxiomCheck("monotone", i, ok, detail))
    return AxiomSuiteReport(tuple(checks))
