import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from dp1.chain import build_chain_lattice, canonical_classes, verify_canonical_identities


def test_n0_matrix():
    assert build_chain_lattice(0).matrix == ((-1, 1), (1, -1))


def test_n1_matrix():
    assert build_chain_lattice(1).matrix == ((-1, 1, 0), (1, -2, 1), (0, 1, -1))


def test_n3_determinant_matches_generic_det():
    lat = build_chain_lattice(3)
    assert lat.determinant == sympy.Matrix(lat.matrix).det() == 0


def test_n0_identities():
    rep = verify_canonical_identities(0)
    assert rep.ok
    assert rep.details["K2 - K1"] == "C~ + C~'"


def test_n5_identities():
    rep = verify_canonical_identities(5)
    assert rep.ok
    K1, K2, F = canonical_classes(5)
    assert K2 - K1 == 6 * F


def test_mutated_lattice_fails():
    lat = build_chain_lattice(3).with_entry(1, 1, -3)
    rep = verify_canonical_identities(lat)
    assert not rep.ok
    assert not rep.checks["F . D = 0 for all D"]
    assert lat.check_invariants() == ["E1.E1 = -3, expected -2"]


def test_negative_length_rejected():
    with pytest.raises(ValueError):
        build_chain_lattice(-1)


@given(st.integers(0, 40))
def test_k1_and_k2_pair_identically(n):
    # they differ by a multiple of the kernel vector F
    lat = build_chain_lattice(n)
    K1, K2, _ = canonical_classes(n)
    for i in range(lat.size):
        D = lat.basis(i)
        assert lat.pairing(K1, D) == lat.pairing(K2, D)


@given(st.integers(0, 40))
def test_lattice_symmetric_and_kernel_rank_one(n):
    lat = build_chain_lattice(n)
    assert lat.check_invariants() == []
    assert lat.rank == n + 1
    assert lat.kernel() == [(1,) * (n + 2)]


def test_divisor_printing():
    K1, K2, F = canonical_classes(2)
    assert str(K1) == "-3*C~ - 2*E1 - E2"
    assert str(K2) == "E1 + 2*E2 + 3*C~'"
