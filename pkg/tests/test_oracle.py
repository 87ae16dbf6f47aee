import random

import numpy as np
import pytest

from quhom.complex2 import chain_complex, rp2, torus
from quhom.distance import distance_css, witness_pauli
from quhom.errors import BudgetExceeded
from quhom.oracle import (
    complement_duality_checks,
    dense_pauli,
    dense_projector,
    projector_checks,
    span_elements,
    verify_complement_duality,
    verify_logical_action,
    verify_projector_dimension,
)
from quhom.pauli import PauliProduct, StabilizerSpec, code_dimension
from quhom.zmod import SubmoduleSpan, ZModMatrix

from _corpus import span_corpus, two_complex_corpus


def spec_for(complex2, D):
    return StabilizerSpec.from_chain(chain_complex(complex2, D))


def single_generator_spec(D, z_row=None, x_row=None, n=1):
    face = ZModMatrix.from_rows([z_row], n, D) if z_row else ZModMatrix.zero(0, n, D)
    vertex = ZModMatrix.from_rows([x_row], n, D) if x_row else ZModMatrix.zero(0, n, D)
    return StabilizerSpec(modulus=D, n=n, face_matrix=face, vertex_matrix=vertex)


def random_pauli(rng, D, n):
    return PauliProduct(
        D,
        rng.randrange(D),
        tuple(rng.randrange(D) for _ in range(n)),
        tuple(rng.randrange(D) for _ in range(n)),
    )


def test_dense_identity():
    ident = dense_pauli(PauliProduct.identity(3, 2))
    assert np.abs(ident - np.eye(9)).max() < 1e-12


def test_dense_z_qubit():
    z = dense_pauli(PauliProduct.z_type(2, (1,)))
    assert np.abs(z - np.diag([1.0, -1.0])).max() < 1e-12


def test_dense_x_shift():
    x = dense_pauli(PauliProduct.x_type(3, (1,)))
    expected = np.zeros((3, 3))
    for j in range(3):
        expected[(j + 1) % 3, j] = 1.0
    assert np.abs(x - expected).max() < 1e-12


def test_zx_equals_omega_xz():
    D = 3
    omega = np.exp(2j * np.pi / D)
    zx = dense_pauli(PauliProduct.z_type(D, (1,))) @ dense_pauli(PauliProduct.x_type(D, (1,)))
    xz = dense_pauli(PauliProduct.x_type(D, (1,))) @ dense_pauli(PauliProduct.z_type(D, (1,)))
    assert np.abs(zx - omega * xz).max() < 1e-9


def test_tensor_order_first_qudit_slowest():
    # Z on qudit 1 of two qutrits: phase depends on the slow index
    z1 = dense_pauli(PauliProduct(3, 0, (0, 0), (1, 0)))
    omega = np.exp(2j * np.pi / 3)
    expected = np.kron(np.diag([1, omega, omega**2]), np.eye(3))
    assert np.abs(z1 - expected).max() < 1e-9


def test_multiplication_homomorphism():
    rng = random.Random(17)
    for _ in range(60):
        D = rng.choice([2, 3, 4])
        n = rng.randint(1, 3)
        p = random_pauli(rng, D, n)
        q = random_pauli(rng, D, n)
        lhs = dense_pauli(p * q)
        rhs = dense_pauli(p) @ dense_pauli(q)
        assert np.abs(lhs - rhs).max() < 1e-9


def test_commutation_phase_matches_dense():
    rng = random.Random(19)
    for _ in range(60):
        D = rng.choice([2, 3, 4])
        n = rng.randint(1, 3)
        p = random_pauli(rng, D, n)
        q = random_pauli(rng, D, n)
        beta = p.commutation_phase(q)
        omega = np.exp(2j * np.pi / D)
        lhs = dense_pauli(p) @ dense_pauli(q)
        rhs = omega**beta * (dense_pauli(q) @ dense_pauli(p))
        assert np.abs(lhs - rhs).max() < 1e-9


def test_projector_single_z():
    proj = dense_projector(single_generator_spec(2, z_row=(1,)))
    assert np.abs(proj - np.diag([1.0, 0.0])).max() < 1e-12


def test_projector_single_x_qutrit():
    spec = single_generator_spec(3, x_row=(1,))
    proj = dense_projector(spec)
    assert abs(np.trace(proj) - 1) < 1e-9
    assert verify_projector_dimension(spec)


def test_projector_rp2_and_torus():
    checks = projector_checks(spec_for(rp2(), 2))
    assert checks["rounded_trace"] == 2
    checks = projector_checks(spec_for(torus(), 2))
    assert checks["rounded_trace"] == 4
    assert np.abs(dense_projector(spec_for(torus(), 2)) - np.eye(4)).max() < 1e-12


def test_projector_scalar_spec_traces_to_zero():
    # noncommuting pure-type generators force a nontrivial scalar
    spec = single_generator_spec(2, z_row=(1,), x_row=(1,))
    checks = projector_checks(spec)
    assert checks["expected_dimension"] == 0
    assert checks["rounded_trace"] == 0
    assert checks["idempotent_residual"] < 1e-9
    assert verify_projector_dimension(spec)


def test_projector_dimension_on_corpus_samples():
    for complex2, label in two_complex_corpus(15, seed=91):
        for D in (2, 3):
            if D ** len(complex2.edges) > 4096:
                continue
            assert verify_projector_dimension(spec_for(complex2, D)), (label, D)


def test_logical_action_torus():
    spec = spec_for(torus(), 2)
    assert verify_logical_action(PauliProduct.x_type(2, (1, 0)), spec)


def test_logical_action_rp2_witness():
    spec = spec_for(rp2(), 2)
    rep = distance_css(spec)
    witness = witness_pauli(rep, 2)
    assert witness is not None
    assert verify_logical_action(witness, spec)


def test_stabilizer_element_acts_as_identity():
    # restriction of a stabilizer element to its own code space is a scalar
    z_spec = single_generator_spec(2, z_row=(1,))
    stab = PauliProduct.z_type(2, (1,))
    assert not verify_logical_action(stab, z_spec)


def test_complement_duality_examples():
    checks = complement_duality_checks(SubmoduleSpan.from_rows([(2,)], 1, 6))
    assert checks["span_size"] == 3
    assert checks["exhaustive_perp_size"] == 2
    assert checks["product"] == 6

    checks = complement_duality_checks(SubmoduleSpan.from_rows([], 2, 3))
    assert checks["span_size"] == 1
    assert checks["exhaustive_perp_size"] == 9


def test_complement_duality_on_corpus():
    for span, label in span_corpus(60):
        assert verify_complement_duality(span), label


def test_span_elements_closure():
    span = SubmoduleSpan.from_rows([(2, 0), (0, 3)], 2, 6)
    elems = span_elements(span)
    assert len(elems) == 6
    assert (2, 3) in elems


def test_dense_cap():
    with pytest.raises(BudgetExceeded):
        dense_pauli(PauliProduct.identity(2, 13))
    chain = chain_complex(torus(), 2)
    spec = StabilizerSpec.from_chain(chain)
    with pytest.raises(BudgetExceeded):
        dense_projector(spec, cap=2)


def test_code_dimension_matches_trace_for_builders():
    for builder, D in ((rp2, 2), (rp2, 3), (torus, 2), (torus, 3)):
        spec = spec_for(builder(), D)
        checks = projector_checks(spec)
        assert checks["rounded_trace"] == code_dimension(spec)
