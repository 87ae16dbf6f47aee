"""Brute-force verification at tiny scale: the slow, trusted path.

Dense operators realize X as the cyclic shift and Z as the diagonal of
D-th roots of unity; qudit 1 is the slowest-varying tensor index, matching
position 1 (leftmost factor) of the symplectic representation.  Everything
here is deliberately independent of the exact-arithmetic production path.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np
import scipy.linalg

from .errors import BudgetExceeded, ScalarViolation
from .pauli import PauliProduct, StabilizerSpec, code_dimension, enumerate_group
from .zmod import SubmoduleSpan, orthogonal_complement, span_cardinality

DENSE_DIMENSION_CAP = 4096
EXHAUSTIVE_CAP = 10**6
RESIDUAL_TOL = 1e-9


def _dense_dimension(modulus: int, n: int, cap: int) -> int:
    dim = modulus**n
    if dim > cap:
        raise BudgetExceeded(f"dense dimension {dim} exceeds cap {cap}")
    return dim


def _digit_table(modulus: int, n: int) -> np.ndarray:
    """(D^n, n) array of basis-state digits, qudit 0 slowest-varying."""
    idx = np.arange(modulus**n)
    table = np.empty((modulus**n, max(n, 1)), dtype=np.int64)
    for q in range(n - 1, -1, -1):
        table[:, q] = idx % modulus
        idx = idx // modulus
    return table[:, :n]


def _pauli_action(pauli: PauliProduct, digits: np.ndarray):
    """Rows hit and phases picked up on each basis column by w^l X^x Z^z."""
    D = pauli.modulus
    n = pauli.num_qudits
    x = np.array(pauli.x, dtype=np.int64)
    z = np.array(pauli.z, dtype=np.int64)
    shifted = (digits + x) % D
    weights = D ** np.arange(n - 1, -1, -1, dtype=np.int64)
    rows = shifted @ weights
    phases = (pauli.phase + digits @ z) % D
    values = np.exp(2j * np.pi * phases / D)
    return rows, values


def dense_pauli(pauli: PauliProduct, cap: int = DENSE_DIMENSION_CAP) -> np.ndarray:
    """Dense matrix of w^l X^x Z^z on D^n dimensions."""
    dim = _dense_dimension(pauli.modulus, pauli.num_qudits, cap)
    digits = _digit_table(pauli.modulus, pauli.num_qudits)
    rows, values = _pauli_action(pauli, digits)
    mat = np.zeros((dim, dim), dtype=np.complex128)
    mat[rows, np.arange(dim)] = values
    return mat


def dense_projector(spec: StabilizerSpec, cap: int = DENSE_DIMENSION_CAP) -> np.ndarray:
    """P = (1/|S|) sum of the group elements, accumulated column-wise."""
    dim = _dense_dimension(spec.modulus, spec.n, cap)
    enum = enumerate_group(spec)
    digits = _digit_table(spec.modulus, spec.n)
    cols = np.arange(dim)
    mat = np.zeros((dim, dim), dtype=np.complex128)
    for phase, x, z in sorted(enum.elements):
        rows, values = _pauli_action(PauliProduct(spec.modulus, phase, x, z), digits)
        mat[rows, cols] += values
    return mat / enum.size


def projector_checks(spec: StabilizerSpec, cap: int = DENSE_DIMENSION_CAP) -> dict:
    """Residuals for P = P-dagger = P-squared and the trace-vs-K identity."""
    proj = dense_projector(spec, cap)
    herm_residual = float(np.abs(proj.conj().T - proj).max())
    idem_residual = float(np.abs(proj @ proj - proj).max())
    trace = complex(np.trace(proj))
    trace_residual = abs(trace - round(trace.real))
    try:
        expected = code_dimension(spec)
    except ScalarViolation:
        expected = 0
    return {
        "hermitian_residual": herm_residual,
        "idempotent_residual": idem_residual,
        "trace": trace,
        "trace_residual": float(trace_residual),
        "rounded_trace": int(round(trace.real)),
        "expected_dimension": expected,
    }


def verify_projector_dimension(spec: StabilizerSpec, cap: int = DENSE_DIMENSION_CAP) -> bool:
    """Trace of the dense projector equals the code dimension, within tolerance."""
    checks = projector_checks(spec, cap)
    return (
        checks["hermitian_residual"] < RESIDUAL_TOL
        and checks["idempotent_residual"] < RESIDUAL_TOL
        and checks["trace_residual"] < RESIDUAL_TOL
        and checks["rounded_trace"] == checks["expected_dimension"]
    )


def _range_basis(projector: np.ndarray, rank: int, block: int = 256) -> np.ndarray:
    """Orthonormal basis of the range: column selection, then orthonormalization.

    Columns with norm above 1e-6 are orthonormalized blockwise (classical
    Gram-Schmidt against the accumulated basis, twice for stability, then a
    pivoted QR inside the block); the scan stops once `rank` directions are
    found.  Blocking keeps the work in level-3 BLAS even at full rank.
    """
    dim = projector.shape[0]
    if rank == dim:
        return np.eye(dim, dtype=np.complex128)
    norms = np.linalg.norm(projector, axis=0)
    selected = projector[:, norms > 1e-6]
    basis = np.empty((dim, rank), dtype=np.complex128)
    have = 0
    for start in range(0, selected.shape[1], block):
        chunk = selected[:, start : start + block].copy()
        if have:
            for _ in range(2):
                chunk -= basis[:, :have] @ (basis[:, :have].conj().T @ chunk)
        q, r, _ = scipy.linalg.qr(chunk, mode="economic", pivoting=True)
        fresh = int((np.abs(np.diag(r)) > 1e-6).sum())
        fresh = min(fresh, rank - have)
        if fresh:
            basis[:, have : have + fresh] = q[:, :fresh]
            have += fresh
        if have == rank:
            break
    if have != rank:
        raise AssertionError(f"range extraction found {have} directions, expected {rank}")
    return basis


@lru_cache(maxsize=1)
def _projector_range(spec: StabilizerSpec, cap: int):
    """Rank and range basis of the dense projector, memoized for the last spec.

    verify_logical_action is typically called for several witnesses of the
    same instance back to back; the single-slot cache keeps memory bounded.
    """
    proj = dense_projector(spec, cap)
    rank = int(round(np.trace(proj).real))
    basis = _range_basis(proj, rank) if rank else None
    return rank, basis


def verify_logical_action(
    pauli: PauliProduct, spec: StabilizerSpec, cap: int = DENSE_DIMENSION_CAP
) -> bool:
    """True iff the operator restricted to the code space is not a scalar.

    Requires a normalizer element (is_logical holds for it), so the range
    basis B of the projector satisfies R B = B M with M the restriction;
    M = c I is therefore equivalent to R B = c B, which avoids forming M.
    The candidate scalar is tr(M)/rank = sum of <b_k|R|b_k>/rank.
    """
    rank, basis = _projector_range(spec, cap)
    if rank == 0:
        return False
    digits = _digit_table(pauli.modulus, pauli.num_qudits)
    rows, values = _pauli_action(pauli, digits)
    applied = np.empty_like(basis)
    applied[rows, :] = values[:, None] * basis  # dense(R) @ basis, row by row
    scale = np.einsum("ij,ij->", basis.conj(), applied) / rank
    return bool(np.abs(applied - scale * basis).max() > RESIDUAL_TOL)


def span_elements(span: SubmoduleSpan) -> set:
    """Every element of the span by closure under addition (the brute-force oracle)."""
    if span.modulus**span.ambient > EXHAUSTIVE_CAP:
        raise BudgetExceeded(
            f"span ambient space {span.modulus}^{span.ambient} exceeds cap {EXHAUSTIVE_CAP}"
        )
    D = span.modulus
    zero = (0,) * span.ambient
    seen = {zero}
    frontier = [zero]
    while frontier:
        cur = frontier.pop()
        for g in span.generators:
            nxt = tuple((a + b) % D for a, b in zip(cur, g))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def complement_duality_checks(span: SubmoduleSpan) -> dict:
    """Exhaustive complement count and the character-sum dichotomy.

    For every eta in Z_D^n the sum of w^(eta.x) over x in the span is |E|
    when eta is orthogonal to the whole span and zero otherwise.
    """
    D = span.modulus
    n = span.ambient
    dim = D**n
    if dim > EXHAUSTIVE_CAP:
        raise BudgetExceeded(f"exhaustive space {dim} exceeds cap {EXHAUSTIVE_CAP}")
    elements = np.array(sorted(span_elements(span)), dtype=np.int64).reshape(-1, n)
    etas = np.array(list(itertools.product(range(D), repeat=n)), dtype=np.int64).reshape(dim, n)
    dots = (etas @ elements.T) % D
    char_sums = np.exp(2j * np.pi * dots / D).sum(axis=1)
    perp_mask = (dots == 0).all(axis=1)
    size = elements.shape[0]
    exhaustive_perp = int(perp_mask.sum())
    char_residual = float(
        max(
            np.abs(char_sums[perp_mask] - size).max() if perp_mask.any() else 0.0,
            np.abs(char_sums[~perp_mask]).max() if (~perp_mask).any() else 0.0,
        )
    )
    comp = orthogonal_complement(span)
    return {
        "span_size": size,
        "exhaustive_perp_size": exhaustive_perp,
        "complement_cardinality": span_cardinality(comp),
        "product": size * exhaustive_perp,
        "full_space": dim,
        "char_residual": char_residual,
    }


def verify_complement_duality(span: SubmoduleSpan) -> bool:
    """|E| |E-perp| = D^n with the complement counted two independent ways."""
    checks = complement_duality_checks(span)
    return (
        checks["exhaustive_perp_size"] == checks["complement_cardinality"]
        and checks["product"] == checks["full_space"]
        and checks["char_residual"] < RESIDUAL_TOL
    )
