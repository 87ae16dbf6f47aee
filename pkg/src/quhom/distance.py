"""Code distance by two independent routes, plus normalizer predicates.

The symplectic route searches W = r(B)-perp minus r(A) union r(A)-perp
minus r(B); the homological route searches nontrivial cycles and cocycles
of the boundary pair.  The two must agree on any chain-complex-derived
spec; the CLI treats disagreement as a hard failure.

Search order is pinned for deterministic witnesses: weights increase,
supports are enumerated lexicographically, nonzero value assignments in
odometer order, and for each candidate the sides are tested in a fixed
order (cocycle first for the symplectic route, cycle first for the
homological one).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .complex2 import TwoComplex, chain_complex
from .errors import BudgetExceeded, TheoremMismatch
from .pauli import PauliProduct, StabilizerSpec, syndrome
from .zmod import (
    SubmoduleSpan,
    contains,
    kernel_cardinality,
    orthogonal_complement,
    row_span,
    span_cardinality,
)

DEFAULT_BUDGET = 10**7

CYCLE = "cycle"
COCYCLE = "cocycle"


@dataclass(frozen=True)
class DistanceReport:
    """Minimum logical weight, or no_logicals when W is empty.

    A cycle-side witness lifts to a Z-type logical operator, a cocycle-side
    witness to an X-type one.
    """

    distance: int | None
    witness: tuple[int, ...] | None
    witness_side: str | None
    method: str
    examined: int

    @property
    def no_logicals(self) -> bool:
        return self.distance is None


def is_in_normalizer(pauli: PauliProduct, spec: StabilizerSpec) -> bool:
    """Zero syndrome, cross-checked against the submodule characterization.

    Route one is the syndrome; route two asks x in r(B)-perp and z in
    r(A)-perp through the orthogonal-complement machinery.  They are
    proven equal, so disagreement raises.
    """
    by_syndrome = not any(syndrome(pauli, spec))
    by_modules = contains(orthogonal_complement(spec.face_span), pauli.x) and contains(
        orthogonal_complement(spec.vertex_span), pauli.z
    )
    if by_syndrome != by_modules:
        raise TheoremMismatch(
            "syndrome and submodule characterizations of the normalizer disagree"
        )
    return by_syndrome


def is_logical(pauli: PauliProduct, spec: StabilizerSpec) -> bool:
    """In the normalizer but outside the phase-extended stabilizer group."""
    if not is_in_normalizer(pauli, spec):
        return False
    in_group = contains(spec.vertex_span, pauli.x) and contains(spec.face_span, pauli.z)
    return not in_group


def _span_subset(inner: SubmoduleSpan, outer: SubmoduleSpan) -> bool:
    return all(contains(outer, g) for g in inner.generators)


def _weight_shell_search(
    n: int,
    modulus: int,
    sides: Sequence[tuple[str, Callable, Callable]],
    method: str,
    budget: int,
) -> DistanceReport:
    """Shared shell scan; each side is (tag, in_big_set, in_excluded_set)."""
    if not sides:
        return DistanceReport(None, None, None, method, 0)
    examined = 0
    for weight in range(1, n + 1):
        for support in itertools.combinations(range(n), weight):
            for values in itertools.product(range(1, modulus), repeat=weight):
                examined += 1
                if examined > budget:
                    raise BudgetExceeded(
                        f"distance search exceeded budget {budget}", examined=examined
                    )
                vec = [0] * n
                for pos, val in zip(support, values):
                    vec[pos] = val
                vec = tuple(vec)
                for tag, in_big, in_excluded in sides:
                    if in_big(vec) and not in_excluded(vec):
                        return DistanceReport(weight, vec, tag, method, examined)
    return DistanceReport(None, None, None, method, examined)


def distance_css(spec: StabilizerSpec, budget: int = DEFAULT_BUDGET) -> DistanceReport:
    """Minimum Hamming weight over W = r(B)p \\ r(A) union r(A)p \\ r(B).

    A side whose difference set is provably empty (the perp is contained in
    the excluded span) is dropped before scanning; when both drop, the
    report is no_logicals without examining any candidate.
    """
    D = spec.modulus
    n = spec.n
    face_rows = spec.face_matrix.entries
    vertex_rows = spec.vertex_matrix.entries

    def in_face_perp(vec):
        return all(sum(a * b for a, b in zip(row, vec)) % D == 0 for row in face_rows)

    def in_vertex_perp(vec):
        return all(sum(a * b for a, b in zip(row, vec)) % D == 0 for row in vertex_rows)

    sides = []
    if not _span_subset(orthogonal_complement(spec.face_span), spec.vertex_span):
        sides.append((COCYCLE, in_face_perp, spec.vertex_span.membership.contains))
    if not _span_subset(orthogonal_complement(spec.vertex_span), spec.face_span):
        sides.append((CYCLE, in_vertex_perp, spec.face_span.membership.contains))
    return _weight_shell_search(n, D, sides, "css", budget)


def distance_homological(
    complex2: TwoComplex, modulus: int, budget: int = DEFAULT_BUDGET
) -> DistanceReport:
    """Shortest nontrivial cycle or cocycle of the boundary pair.

    Cycle side: ker d1 minus im d2; cocycle side: ker delta2 minus im
    delta1, with the coboundary maps realized as transposes.  Emptiness is
    prechecked through cardinalities: im is always inside ker, so the side
    is empty exactly when |ker| equals |im|.
    """
    chain = chain_complex(complex2, modulus)
    d1 = chain.d1
    delta2 = chain.d2.transpose()
    boundaries = row_span(chain.d2.transpose())  # im d2, as row vectors
    coboundaries = row_span(chain.d1)  # im delta1

    sides = []
    if kernel_cardinality(d1) != span_cardinality(boundaries):
        sides.append(
            (CYCLE, lambda vec: not any(d1.matvec(vec)), boundaries.membership.contains)
        )
    if kernel_cardinality(delta2) != span_cardinality(coboundaries):
        sides.append(
            (
                COCYCLE,
                lambda vec: not any(delta2.matvec(vec)),
                coboundaries.membership.contains,
            )
        )
    return _weight_shell_search(chain.num_edges, modulus, sides, "homological", budget)


def witness_pauli(report: DistanceReport, modulus: int) -> PauliProduct | None:
    """Lift the witness to its pure-type Pauli operator (X for cocycle, Z for cycle)."""
    if report.witness is None:
        return None
    if report.witness_side == COCYCLE:
        return PauliProduct.x_type(modulus, report.witness)
    return PauliProduct.z_type(modulus, report.witness)
