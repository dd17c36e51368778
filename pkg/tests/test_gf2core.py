from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from f2cover.gf2core import (
    DEGENERATE,
    EMPTY,
    AffineSubspace,
    GFVector,
    basis_vector,
    canonicalize,
    count_subspaces,
    dot,
    enumerate_points,
    enumerate_subspaces,
    gaussian_binomial,
    hyperplane,
    ones_vector,
    parity,
    point_mask,
    point_subspace,
    solution_bits,
    subspace,
    subspace_from_json,
)


def test_parity_and_dot():
    assert parity(0) == 0
    assert parity(0b1011) == 1
    assert parity(0b1111) == 0
    x = GFVector(0b101, 3)
    u = GFVector(0b110, 3)
    assert dot(x, u) == 1
    assert dot(x, GFVector(0b101, 3)) == 0


def test_named_vectors():
    assert basis_vector(1, 4).bits == 0b0001
    assert basis_vector(4, 4).bits == 0b1000
    assert ones_vector(3).bits == 0b111
    assert GFVector(0b1101, 4).weight() == 3


def test_vector_range_checks():
    with pytest.raises(ValueError):
        GFVector(0b100, 2)
    with pytest.raises(ValueError):
        GFVector(-1, 2)
    with pytest.raises(ValueError):
        basis_vector(0, 3)


def test_hyperplane_membership():
    H = hyperplane(GFVector(0b011, 3), 1)
    assert H.d == 1
    members = {b for b in range(8) if H.contains_bits(b)}
    assert members == {b for b in range(8) if parity(b & 0b011) == 1}
    assert 0 not in members


def test_point_subspace_is_single_point():
    S = point_subspace(GFVector(0b101, 3))
    assert S.d == 3
    assert list(solution_bits(S)) == [0b101]
    assert point_mask(S) == 1 << 0b101


def test_gaussian_binomial_known_values():
    assert gaussian_binomial(3, 1) == 7
    assert gaussian_binomial(3, 2) == 7
    assert gaussian_binomial(4, 2) == 35
    assert gaussian_binomial(5, 1) == 31
    assert gaussian_binomial(4, 0) == 1
    assert gaussian_binomial(4, 4) == 1


@pytest.mark.parametrize(
    "n,d", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3)]
)
def test_enumerate_subspaces_complete_and_distinct(n, d):
    pool = enumerate_subspaces(n, d)
    assert len(pool) == count_subspaces(n, d) == gaussian_binomial(n, n - d) << d
    seen = {S.canonical_bytes() for S in pool}
    assert len(seen) == len(pool)
    for S in pool:
        pts = point_mask(S)
        assert pts.bit_count() == 1 << (n - d)
        assert [b for b in range(1 << n) if S.contains_bits(b)] == sorted(
            solution_bits(S)
        )


def test_enumerate_points_matches_bits():
    S = hyperplane(GFVector(0b11, 2), 0)
    assert sorted(v.bits for v in enumerate_points(S)) == [0b00, 0b11]


def test_subspace_builder_rejects_improper_systems():
    u = GFVector(0b01, 2)
    v = GFVector(0b10, 2)
    w = GFVector(0b11, 2)
    with pytest.raises(ValueError):
        subspace([u, u], [0, 1])  # inconsistent
    with pytest.raises(ValueError):
        subspace([u, u], [0, 0])  # dependent
    with pytest.raises(ValueError):
        subspace([u, v, w], [1, 0, 1])  # dependent triple


def test_canonicalize_sentinels():
    u = GFVector(0b01, 2)
    assert canonicalize([u, u], [0, 1]) is EMPTY
    assert canonicalize([u, u], [1, 1]) is DEGENERATE


@given(st.integers(2, 4), st.data())
def test_canonical_form_is_stable_under_row_mixing(n, data):
    pool = enumerate_subspaces(n, 2)
    S = data.draw(st.sampled_from(pool))
    a, b = (GFVector(bits, n) for bits in S.normals)
    r1, r2 = S.rhs & 1, (S.rhs >> 1) & 1
    # replacing row two by the XOR of both rows presents the same subspace
    T = subspace([a, GFVector(a.bits ^ b.bits, n)], [r1, r1 ^ r2])
    assert T == S


@given(st.integers(2, 4), st.integers(1, 3), st.data())
def test_subspace_json_roundtrip(n, d, data):
    if d > n:
        d = n
    pool = enumerate_subspaces(n, d)
    S = data.draw(st.sampled_from(pool))
    doc = S.to_json()
    assert doc["n"] == n and len(doc["normals"]) == d
    assert subspace_from_json(doc) == S


def test_affine_subspace_validation():
    with pytest.raises(ValueError):
        AffineSubspace(n=3, d=1, normals=(0,), rhs=0)
    with pytest.raises(ValueError):
        AffineSubspace(n=3, d=2, normals=(1,), rhs=0)
