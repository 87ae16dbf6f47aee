"""Combinatorial hypermaps and their conversion to equivalent 2-complexes.

A hypermap is a pair of permutations (alpha, sigma) on the darts {1..n}.
Hyperedges are the orbits of alpha, hypervertices the orbits of sigma, and
faces the orbits of the map i -> sigma(alpha^-1(i)) (the left-to-right
composition convention; the face traversal is i_{s+1} = alpha^-1 sigma (i_s)).

Choosing one special dart per hyperedge makes the dart quotient free with
the non-special darts as basis, which yields the Delta matrices of the
hypermap code and, independently, a 2-complex whose boundary matrices
coincide with them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .complex2 import ChainComplexData, ClosedWalk, SignedEdge, TwoComplex, boundary1, boundary2
from .zmod import ZModMatrix

Permutation = tuple[int, ...]


def permutation_from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    """Build a permutation of {1..n} from disjoint cycles; fixed points may be omitted."""
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for cycle in cycles:
        for dart in cycle:
            if not isinstance(dart, int) or isinstance(dart, bool) or not 1 <= dart <= n:
                raise ValueError(f"dart {dart!r} out of range 1..{n}")
            if dart in seen:
                raise ValueError(f"dart {dart} appears in more than one cycle")
            seen.add(dart)
        for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
            images[a - 1] = b
    perm = tuple(images)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError("cycles do not describe a permutation")
    return perm


def inverse_permutation(perm: Permutation) -> Permutation:
    inv = [0] * len(perm)
    for i, img in enumerate(perm, start=1):
        inv[img - 1] = i
    return tuple(inv)


def orbits(perm: Permutation) -> tuple[tuple[int, ...], ...]:
    """Cycle partition; each orbit traversed from its smallest element."""
    n = len(perm)
    seen = [False] * n
    out = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        orbit = [start]
        seen[start - 1] = True
        cur = perm[start - 1]
        while cur != start:
            orbit.append(cur)
            seen[cur - 1] = True
            cur = perm[cur - 1]
        out.append(tuple(orbit))
    return tuple(out)


def _orbit_lookup(parts: tuple[tuple[int, ...], ...], n: int) -> tuple[int, ...]:
    lookup = [0] * n
    for idx, orbit in enumerate(parts):
        for dart in orbit:
            lookup[dart - 1] = idx
    return tuple(lookup)


@dataclass(frozen=True)
class OrbitStructure:
    """Hyperedges, hypervertices, faces, and dart -> orbit-index lookups."""

    hyperedges: tuple[tuple[int, ...], ...]
    hypervertices: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]
    hyperedge_of: tuple[int, ...]
    hypervertex_of: tuple[int, ...]
    face_of: tuple[int, ...]


@dataclass(frozen=True)
class Hypermap:
    n: int
    alpha: Permutation
    sigma: Permutation

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dart count must be >= 1")
        for name, perm in (("alpha", self.alpha), ("sigma", self.sigma)):
            if sorted(perm) != list(range(1, self.n + 1)):
                raise ValueError(f"{name} is not a permutation of 1..{self.n}")

    @classmethod
    def from_cycles(cls, n: int, alpha: Sequence[Sequence[int]], sigma: Sequence[Sequence[int]]) -> Hypermap:
        return cls(n, permutation_from_cycles(n, alpha), permutation_from_cycles(n, sigma))

    @cached_property
    def alpha_inverse(self) -> Permutation:
        return inverse_permutation(self.alpha)

    @cached_property
    def face_map(self) -> Permutation:
        """i -> sigma(alpha^-1(i))."""
        return tuple(self.sigma[self.alpha_inverse[i - 1] - 1] for i in range(1, self.n + 1))

    def orbit_structure(self) -> OrbitStructure:
        return self._orbit_structure

    @cached_property
    def _orbit_structure(self) -> OrbitStructure:
        hyperedges = orbits(self.alpha)
        hypervertices = orbits(self.sigma)
        faces = orbits(self.face_map)
        return OrbitStructure(
            hyperedges=hyperedges,
            hypervertices=hypervertices,
            faces=faces,
            hyperedge_of=_orbit_lookup(hyperedges, self.n),
            hypervertex_of=_orbit_lookup(hypervertices, self.n),
            face_of=_orbit_lookup(faces, self.n),
        )


@dataclass(frozen=True)
class SpecialDarts:
    """One chosen dart per hyperedge, aligned with the hyperedge orbit order."""

    darts: tuple[int, ...]

    @classmethod
    def default(cls, hypermap: Hypermap) -> SpecialDarts:
        return cls(tuple(orbit[0] for orbit in hypermap.orbit_structure().hyperedges))

    @classmethod
    def from_darts(cls, hypermap: Hypermap, darts: Iterable[int]) -> SpecialDarts:
        chosen = list(darts)
        structure = hypermap.orbit_structure()
        if len(chosen) != len(structure.hyperedges):
            raise ValueError(
                f"need exactly one special dart per hyperedge "
                f"({len(structure.hyperedges)}), got {len(chosen)}"
            )
        if len(set(chosen)) != len(chosen):
            raise ValueError("special darts must be distinct")
        slots: list[int | None] = [None] * len(structure.hyperedges)
        for dart in chosen:
            if not 1 <= dart <= hypermap.n:
                raise ValueError(f"dart {dart} out of range 1..{hypermap.n}")
            idx = structure.hyperedge_of[dart - 1]
            if slots[idx] is not None:
                raise ValueError(f"hyperedge {structure.hyperedges[idx]} has two special darts")
            slots[idx] = dart
        return cls(tuple(slots))  # no None left: counts matched and all distinct

    @cached_property
    def special_set(self) -> frozenset:
        return frozenset(self.darts)

    def non_special(self, n: int) -> tuple[int, ...]:
        return tuple(i for i in range(1, n + 1) if i not in self.special_set)


def d2_matrix(hypermap: Hypermap, modulus: int) -> ZModMatrix:
    """Darts x faces; column f is the indicator of the darts in face f."""
    structure = hypermap.orbit_structure()
    rows = [[0] * len(structure.faces) for _ in range(hypermap.n)]
    for j, face in enumerate(structure.faces):
        for dart in face:
            rows[dart - 1][j] += 1
    return ZModMatrix.from_rows(rows, len(structure.faces), modulus)


def d1_matrix(hypermap: Hypermap, modulus: int) -> ZModMatrix:
    """Hypervertices x darts; column i is v(alpha^-1(i)) - v(i)."""
    structure = hypermap.orbit_structure()
    rows = [[0] * hypermap.n for _ in structure.hypervertices]
    for i in range(1, hypermap.n + 1):
        head = structure.hypervertex_of[hypermap.alpha_inverse[i - 1] - 1]
        tail = structure.hypervertex_of[i - 1]
        rows[head][i - 1] += 1
        rows[tail][i - 1] -= 1
    return ZModMatrix.from_rows(rows, hypermap.n, modulus)


def iota_matrix(hypermap: Hypermap, modulus: int) -> ZModMatrix:
    """Darts x hyperedges; column e is the indicator of the darts in hyperedge e."""
    structure = hypermap.orbit_structure()
    rows = [[0] * len(structure.hyperedges) for _ in range(hypermap.n)]
    for j, hyperedge in enumerate(structure.hyperedges):
        for dart in hyperedge:
            rows[dart - 1][j] += 1
    return ZModMatrix.from_rows(rows, len(structure.hyperedges), modulus)


def reduce_to_basis(
    vector: Sequence[int],
    hypermap: Hypermap,
    specials: SpecialDarts,
    modulus: int,
) -> tuple[int, ...]:
    """Coordinates in the non-special-dart basis of the dart quotient.

    Each special dart satisfies [s_e] = -sum of the other darts of its
    hyperedge, so the coefficient landing on a non-special dart j is
    vector[j] - vector[s_e(j)].
    """
    if len(vector) != hypermap.n:
        raise ValueError("vector length must equal the dart count")
    structure = hypermap.orbit_structure()
    special_of = {
        idx: dart for idx, dart in enumerate(specials.darts)
    }
    out = []
    for j in specials.non_special(hypermap.n):
        s = special_of[structure.hyperedge_of[j - 1]]
        out.append((vector[j - 1] - vector[s - 1]) % modulus)
    return tuple(out)


@dataclass(frozen=True)
class HypermapChain:
    """Delta matrices of the hypermap code in the non-special dart basis."""

    modulus: int
    delta1: ZModMatrix
    delta2: ZModMatrix
    basis: tuple[int, ...]

    def as_chain(self) -> ChainComplexData:
        return ChainComplexData(self.modulus, self.delta1, self.delta2)


def delta_matrices(hypermap: Hypermap, specials: SpecialDarts, modulus: int) -> HypermapChain:
    """Delta2 = reduce(d2 columns), Delta1 = d1 restricted to basis darts."""
    basis = specials.non_special(hypermap.n)
    d2 = d2_matrix(hypermap, modulus)
    d1 = d1_matrix(hypermap, modulus)
    delta2_cols = [
        reduce_to_basis(d2.column(j), hypermap, specials, modulus)
        for j in range(d2.ncols)
    ]
    delta2 = ZModMatrix.from_rows(
        list(zip(*delta2_cols)) if delta2_cols and basis else [() for _ in basis],
        d2.ncols,
        modulus,
    )
    delta1 = ZModMatrix.from_rows(
        [tuple(row[i - 1] for i in basis) for row in d1.entries],
        len(basis),
        modulus,
    )
    chain = HypermapChain(modulus, delta1, delta2, basis)
    if not (delta1 @ delta2).is_zero():
        raise AssertionError("Delta1 @ Delta2 != 0; quotient construction is broken")
    return chain


def to_two_complex(hypermap: Hypermap, specials: SpecialDarts) -> TwoComplex:
    """The 2-complex whose boundary matrices equal the Delta matrices.

    Vertices are the hypervertices, edges the non-special darts (dart i runs
    from v(i) to v(alpha^-1(i))), faces the face orbits.  In each face
    traversal a special dart is replaced by the reversed remainder of its
    hyperedge walked under alpha; a face of nothing but singleton special
    darts degenerates to the empty walk.
    """
    structure = hypermap.orbit_structure()
    vertices = tuple(f"v{orbit[0]}" for orbit in structure.hypervertices)
    basis = specials.non_special(hypermap.n)
    edges = tuple(f"d{i}" for i in basis)
    sources = tuple(vertices[structure.hypervertex_of[i - 1]] for i in basis)
    targets = tuple(
        vertices[structure.hypervertex_of[hypermap.alpha_inverse[i - 1] - 1]]
        for i in basis
    )
    faces = []
    walks = []
    for orbit in structure.faces:
        steps: list[SignedEdge] = []
        for dart in orbit:
            if dart not in specials.special_set:
                steps.append(SignedEdge(f"d{dart}", 1))
                continue
            j = hypermap.alpha[dart - 1]
            while j != dart:
                steps.append(SignedEdge(f"d{j}", -1))
                j = hypermap.alpha[j - 1]
        faces.append(f"f{orbit[0]}")
        walks.append(ClosedWalk.of(steps) if steps else ClosedWalk.degenerate())
    return TwoComplex(
        vertices=vertices,
        edges=edges,
        sources=sources,
        targets=targets,
        faces=tuple(faces),
        walks=tuple(walks),
    )


def verify_equivalence(hypermap: Hypermap, specials: SpecialDarts, modulus: int) -> bool:
    """Entrywise equality of (boundary1, boundary2) with (Delta1, Delta2).

    Both sides are expressed in the same bases: hypervertices, non-special
    darts in increasing order, and face orbits.
    """
    chain = delta_matrices(hypermap, specials, modulus)
    complex2 = to_two_complex(hypermap, specials)
    b1 = boundary1(complex2, modulus)
    b2 = boundary2(complex2, modulus)
    return b1 == chain.delta1 and b2 == chain.delta2
