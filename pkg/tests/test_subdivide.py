import json
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partial_sd.complex import SimplicialComplex, f_vector, h_vector, minimal_nonfaces
from partial_sd.subdivide import (
    Barycenter,
    ChainFace,
    Original,
    as_face_sets,
    carrier_in_next_level,
    chain_f_vector,
    chain_faces,
    label_dict_to_json,
    partial_subdivision,
    standard_sd_oracle,
)
from partial_sd.transform import apply_f_transform, apply_h_transform

TRIANGLE = SimplicialComplex.simplex(3)
TETRA = SimplicialComplex.simplex(4)
SQUARE = SimplicialComplex.from_facets([[1, 2], [2, 3], [3, 4], [1, 4]])

complexes = st.integers(1, 6).flatmap(
    lambda n: st.lists(
        st.sets(st.integers(1, n), min_size=1, max_size=min(n, 4)), min_size=1, max_size=4
    ).map(lambda fs: SimplicialComplex.from_facets(fs, ground_size=n))
)


def test_chain_face_counts():
    assert chain_f_vector(TRIANGLE, 1) == (1, 7, 12, 6)
    assert chain_f_vector(TETRA, 2) == (1, 9, 26, 30, 12)


@given(complexes)
def test_level_above_dimension_is_trivial(K):
    assert chain_f_vector(K, K.d + 1) == f_vector(K)
    assert all(cf.r == 0 for g in chain_faces(K, K.d + 1) for cf in g)


@given(complexes, st.integers(1, 5))
def test_chain_conditions(K, l):
    for size, group in enumerate(chain_faces(K, l)):
        for cf in group:
            A = cf.chain
            assert len(A[0]) <= l
            assert len(A[0]) + cf.r == size
            if cf.r >= 1:
                assert len(A[1]) >= l + 1
            assert all(set(a) < set(b) for a, b in zip(A, A[1:]))
            assert K.is_face(A[-1])


def test_partial_subdivision_examples():
    sd, _ = partial_subdivision(TETRA, 2)
    assert len(sd.facets) == 12
    same, labels = partial_subdivision(TRIANGLE, 3)
    assert same == TRIANGLE
    assert all(isinstance(x, Original) for x in labels.values())
    octagon, _ = partial_subdivision(SQUARE, 1)
    assert f_vector(octagon) == (1, 8, 8)


@pytest.mark.parametrize("d", range(1, 7))
def test_facet_count_of_simplex(d):
    for l in range(1, d + 1):
        sd, _ = partial_subdivision(SimplicialComplex.simplex(d), l)
        assert len(sd.facets) == factorial(d) // factorial(l)


def test_vertex_labels_and_dictionary():
    sd, labels = partial_subdivision(TRIANGLE, 1)
    assert [labels[n] for n in range(1, 8)] == [
        Original(1), Original(2), Original(3),
        Barycenter((1, 2)), Barycenter((1, 3)), Barycenter((2, 3)), Barycenter((1, 2, 3)),
    ]
    d = label_dict_to_json(labels)
    assert d["1"] == {"orig": 1}
    assert d["7"] == {"bary": [1, 2, 3]}
    json.dumps(d)


def test_barycenters_only_above_level():
    _, labels = partial_subdivision(TETRA, 2)
    assert all(len(x.face) >= 3 for x in labels.values() if isinstance(x, Barycenter))


def test_oracle_examples():
    sd, _ = standard_sd_oracle(TRIANGLE)
    assert f_vector(sd) == (1, 7, 12, 6)
    edge, _ = standard_sd_oracle(SimplicialComplex.simplex(2))
    assert f_vector(edge) == (1, 3, 2)
    pt, _ = standard_sd_oracle(SimplicialComplex.simplex(1))
    assert f_vector(pt) == (1, 1)


@settings(max_examples=60)
@given(complexes)
def test_level_one_is_order_complex(K):
    sd, labels = partial_subdivision(K, 1)
    oracle, olabels = standard_sd_oracle(K)
    assert as_face_sets(sd, labels) == as_face_sets(oracle, olabels)


@settings(max_examples=60)
@given(complexes, st.integers(1, 5))
def test_faces_from_facets_match_chain_enumeration(K, l):
    sd, _ = partial_subdivision(K, l)
    assert f_vector(sd) == chain_f_vector(K, l)


@settings(max_examples=60)
@given(complexes, st.integers(1, 5))
def test_transforms_predict_subdivision(K, l):
    d = K.d
    if l > d:
        return
    sd, _ = partial_subdivision(K, l)
    assert f_vector(sd) == apply_f_transform(f_vector(K), d, l)
    assert h_vector(sd) == apply_h_transform(h_vector(K), d, l)


@settings(max_examples=40)
@given(complexes, st.integers(1, 4))
def test_minimal_nonfaces_bounded_by_level_plus_one(K, l):
    sd, _ = partial_subdivision(K, l)
    assert all(len(N) <= l + 1 for N in minimal_nonfaces(sd))


def test_degree_bound_is_attained():
    sd, _ = partial_subdivision(TETRA, 2)
    assert max(len(N) for N in minimal_nonfaces(sd)) == 3


@pytest.mark.parametrize("d", range(2, 6))
def test_refinement_between_levels(d):
    S = SimplicialComplex.simplex(d)
    for l in range(1, d):
        coarser = {cf.chain for g in chain_faces(S, l + 1) for cf in g}
        for g in chain_faces(S, l):
            for cf in g:
                up = carrier_in_next_level(cf, l)
                assert up.chain in coarser
                # every barycenter kept is still a barycenter one level up
                assert set(cf.chain[1:]) - {up.chain[0]} <= set(up.chain[1:])


def test_chain_face_vertices():
    cf = ChainFace(((1,), (1, 2, 3)))
    assert cf.vertices() == (Original(1), Barycenter((1, 2, 3)))
    assert cf.size == 2


def test_level_must_be_positive():
    with pytest.raises(ValueError):
        partial_subdivision(TRIANGLE, 0)


def test_every_label_is_used_on_a_simplex():
    sd, labels = partial_subdivision(TETRA, 1)
    assert {v for F in sd.facets for v in F} == set(labels)
    assert sd.is_pure()
