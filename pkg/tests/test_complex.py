import json
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partial_sd.complex import (
    SimplicialComplex,
    all_faces,
    f_to_h,
    f_vector,
    h_to_f,
    h_vector,
    minimal_nonfaces,
    restriction,
)

TRIANGLE = SimplicialComplex.from_facets([[1, 2, 3]])
SQUARE = SimplicialComplex.from_facets([[1, 2], [2, 3], [3, 4], [1, 4]])

complexes = st.integers(1, 7).flatmap(
    lambda n: st.lists(
        st.sets(st.integers(1, n), min_size=1, max_size=min(n, 4)), min_size=1, max_size=5
    ).map(lambda fs: SimplicialComplex.from_facets(fs, ground_size=n))
)


def test_from_facets_reduces_to_antichain():
    K = SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 2, 3]])
    assert K.facets == ((1, 2, 3),)
    assert K.dim == 2


def test_hollow_square():
    assert SQUARE.dim == 1
    assert SQUARE.ground_size == 4


@pytest.mark.parametrize("facets", [[], [[0, 1]], [[-2]]])
def test_from_facets_rejects(facets):
    with pytest.raises(ValueError):
        SimplicialComplex.from_facets(facets)


def test_ground_size_must_cover_vertices():
    with pytest.raises(ValueError):
        SimplicialComplex.from_facets([[1, 5]], ground_size=3)


@pytest.mark.parametrize(
    "K,counts",
    [
        (TRIANGLE, (1, 3, 3, 1)),
        (SQUARE, (1, 4, 4)),
        (SimplicialComplex.from_facets([[1]]), (1, 1)),
    ],
)
def test_face_counts(K, counts):
    assert tuple(len(g) for g in all_faces(K)) == counts
    assert f_vector(K) == counts


def test_all_faces_lex_order():
    assert all_faces(TRIANGLE)[2] == [(1, 2), (1, 3), (2, 3)]


def test_vectors_of_small_complexes():
    assert f_vector(SimplicialComplex.boundary_of_simplex(3)) == (1, 3, 3)
    assert h_vector(TRIANGLE) == (1, 0, 0, 0)
    assert f_to_h((1, 7, 12, 6)) == (1, 4, 1, 0)
    assert h_to_f((1, 4, 1, 0), 3) == (1, 7, 12, 6)


def test_empty_complex():
    E = SimplicialComplex.from_facets([[]])
    assert f_vector(E) == (1,)
    assert h_vector(E) == (1,)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7))
def test_f_h_roundtrip(v):
    assert h_to_f(f_to_h(v)) == tuple(v)
    assert f_to_h(h_to_f(v)) == tuple(v)


def _h_by_polynomial(f):
    # sum_i f_{i-1} (x-1)^{d-i} expanded directly, read off descending powers
    d = len(f) - 1
    coeffs = [0] * (d + 1)  # coeffs[k] is the coefficient of x^k
    for i, fi in enumerate(f):
        e = d - i
        for k in range(e + 1):
            coeffs[k] += fi * comb(e, k) * (-1) ** (e - k)
    return tuple(coeffs[d - i] for i in range(d + 1))


@given(complexes)
def test_h_vector_matches_defining_relation(K):
    f = f_vector(K)
    h = h_vector(K)
    assert h == _h_by_polynomial(f)
    assert h[0] == 1
    assert sum(h) == f[-1]


def test_restriction_examples():
    assert restriction(TRIANGLE, {1, 2}).facets == ((1, 2),)
    assert restriction(SQUARE, {1, 3}).facets == ((1,), (3,))
    assert restriction(TRIANGLE, set()).facets == ((),)


def test_minimal_nonfaces_examples():
    assert minimal_nonfaces(SimplicialComplex.boundary_of_simplex(3)) == [(1, 2, 3)]
    assert minimal_nonfaces(SQUARE) == [(1, 3), (2, 4)]
    assert minimal_nonfaces(TRIANGLE) == []


def test_missing_vertex_is_a_minimal_nonface():
    K = SimplicialComplex.from_facets([[1, 3]], ground_size=3)
    assert minimal_nonfaces(K) == [(2,)]


def _brute_nonfaces(K):
    faces = K.face_set
    out = []
    for k in range(1, K.ground_size + 1):
        for S in combinations(range(1, K.ground_size + 1), k):
            if S not in faces and all(T in faces for T in combinations(S, k - 1)):
                out.append(S)
    return out


@settings(max_examples=80)
@given(complexes)
def test_minimal_nonfaces_against_brute_force(K):
    assert minimal_nonfaces(K) == _brute_nonfaces(K)


@given(complexes, st.integers(1, 3))
def test_minimal_nonfaces_size_cap(K, cap):
    assert minimal_nonfaces(K, cap) == [N for N in _brute_nonfaces(K) if len(N) <= cap]


@given(complexes)
def test_json_roundtrip(K):
    assert SimplicialComplex.from_json(K.to_json()) == K
    data = json.loads(K.to_json())
    assert set(data) == {"ground", "facets"}


def test_from_dict_rejects_bad_shapes():
    with pytest.raises(ValueError):
        SimplicialComplex.from_dict({"faces": [[1]]})
    with pytest.raises(ValueError):
        SimplicialComplex.from_dict({"facets": [1, 2]})
