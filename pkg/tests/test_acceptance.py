"""Acceptance gate: one test per criterion, exact arithmetic throughout."""

from fractions import Fraction
from math import factorial

import pytest

from partial_sd import reference, verify
from partial_sd.complex import f_vector, h_vector, minimal_nonfaces
from partial_sd.corpus import corpus
from partial_sd.exact import RationalMatrix
from partial_sd.localh import derangement_excedance_polynomial, local_h
from partial_sd.partitions import R_count, R_formula
from partial_sd.permstat import distribution_table
from partial_sd.spectral import eigen_decompose, known_spectrum, perron_vector, structured_eigenbasis
from partial_sd.subdivide import as_face_sets, partial_subdivision, standard_sd_oracle
from partial_sd.transform import (
    apply_f_transform,
    apply_h_transform,
    check_monotonicity,
    check_sums,
    f_polynomial_real_roots,
    h_matrix,
    iterate_h,
    search_non_real_rooted,
    symmetry_violations,
    top_level_closed_form,
)

DIMS = (2, 3, 4, 5)
PER_DIM = 50


@pytest.fixture(scope="module")
def subdivided():
    """``{d: [(K, {l: sd^l K})]}`` for the shared random corpus."""
    out = {}
    for d in DIMS:
        rows = []
        for K in corpus(d, PER_DIM, seed=0):
            rows.append((K, {l: partial_subdivision(K, l) for l in range(1, d + 1)}))
        out[d] = rows
    return out


def test_criterion_01_published_matrix_d4_l3():
    assert h_matrix(4, 3).to_rows() == [list(r) for r in reference.H_MATRICES[(4, 3)]]


def test_criterion_02_single_erratum_d4_l2():
    printed = reference.H_MATRICES[(4, 2)]
    computed = h_matrix(4, 2).to_rows()
    diffs = [(i, j) for i in range(5) for j in range(5) if printed[i][j] != computed[i][j]]
    assert diffs == [(1, 2)]
    assert (printed[1][2], computed[1][2]) == (5, 3)

    M = h_matrix(4, 2).matrix
    assert all(sum(M.col(j)) == 12 == factorial(4) // factorial(2) for j in range(5))
    assert sum(M.entries) == 60 == factorial(5) // factorial(2)
    v = (0, 1, Fraction(5, 3), 1, 0)
    assert M @ v == tuple(12 * x for x in v)

    errata = verify.errata()
    assert len(errata) == 1
    e = errata[0]
    assert (e.table, e.position, e.printed, e.computed) == ("h_matrix(4,2)", (1, 2), 5, 3)
    assert e.confirmed and len(e.witnesses) >= 3


def test_criterion_03_column_and_total_sums():
    for d in range(2, 8):
        for l in range(1, d):
            rep = check_sums(h_matrix(d, l))
            assert rep.column_sums == [factorial(d) // factorial(l)] * (d + 1)
            assert rep.total == factorial(d + 1) // factorial(l)


def test_criterion_04_top_level_closed_form():
    for d in range(2, 8):
        assert h_matrix(d, d - 1).matrix == top_level_closed_form(d)


def test_criterion_05_central_symmetry():
    for d in range(1, 8):
        for l in range(1, d + 1):
            assert symmetry_violations(h_matrix(d, l)) == []


def test_criterion_06_monotonicity_and_strict_region():
    for d in range(2, 8):
        rep = check_monotonicity(d)
        assert rep.monotone, rep.violations
        if d >= 4:
            for l, rows in rep.strict_rows.items():
                assert set(range(2, d - 1)) <= set(rows), (d, l, rows)
        print(f"d={d} strict rows per level step: {rep.strict_rows}")


def test_criterion_07_h_transform_end_to_end(subdivided):
    for d, rows in subdivided.items():
        assert len(rows) >= 50
        for K, sds in rows:
            for l, (sd, _) in sds.items():
                assert h_vector(sd) == apply_h_transform(h_vector(K), d, l)


def test_criterion_08_f_transform_and_restricted_stirling(subdivided):
    for d, rows in subdivided.items():
        for K, sds in rows:
            for l, (sd, _) in sds.items():
                assert f_vector(sd) == apply_f_transform(f_vector(K), d, l)
    for j in range(8):
        for i in range(8):
            for l in range(1, 8):
                assert R_count(j, i, l) == R_formula(j, i, l)


def test_criterion_09_order_complex_oracle(subdivided):
    for d, rows in subdivided.items():
        for K, sds in rows:
            sd, labels = sds[1]
            oracle, olabels = standard_sd_oracle(K)
            assert as_face_sets(sd, labels) == as_face_sets(oracle, olabels)


def test_criterion_10_minimal_nonface_degree(subdivided):
    for d, rows in subdivided.items():
        for K, sds in rows:
            for l, (sd, _) in sds.items():
                assert all(len(N) <= l + 1 for N in minimal_nonfaces(sd))


def test_criterion_11_eigenstructure():
    for d in range(1, 8):
        for l in range(1, d + 1):
            for kind in ("h", "f"):
                dims = [(p.eigenvalue, p.dim) for p in eigen_decompose(d, l, kind)]
                assert dims == known_spectrum(d, l)
    for (d, l), vec in reference.PERRON_VECTORS.items():
        assert perron_vector(d, l) == tuple(Fraction(x) for x in vec)
    for d in range(2, 8):
        for l in range(1, d):
            B = structured_eigenbasis(d, l)
            top = Fraction(factorial(d), factorial(l))
            assert all(sum(v) == 0 for lam, v in B.pairs() if lam != top)
            assert all(B.certificates().values())


def test_criterion_12_iteration_ratio_after_eight_steps():
    h = iterate_h((1, 0, 0, 0, 0), 4, 2, 8)[-1]
    assert abs(Fraction(h[2], h[1]) - Fraction(5, 3)) < Fraction(1, 10**6)


def test_criterion_13_statistics_tables():
    for (d, stat), cols in reference.DISTRIBUTIONS.items():
        for l, counts in cols.items():
            assert distribution_table(d, l, stat) == counts
    for d in (5, 6):
        same = {l: distribution_table(d, l, "descent") == distribution_table(d, l, "excedance") for l in range(1, d)}
        assert same[d - 1] and same[d - 2]
        assert not all(same[l] for l in range(1, d - 2))


def test_criterion_14_local_h():
    for d in range(0, 8):
        assert local_h(d, 1).coefficients == derangement_excedance_polynomial(d).coefficients
    for d in range(1, 8):
        for l in range(1, d + 2):
            c = local_h(d, l).coefficients
            assert all(x >= 0 for x in c)
            assert c == c[::-1]
            if l >= d:
                assert not any(c)


def test_criterion_15_real_roots(subdivided):
    # the l=1 real-rootedness result assumes a nonnegative h-vector
    checked = 0
    for d, rows in subdivided.items():
        for K, sds in rows:
            sd, _ = sds[1]
            rep = f_polynomial_real_roots(sd)
            if min(h_vector(K)) >= 0:
                checked += 1
                assert rep.real_rooted, (K.facets, f_vector(sd))
            elif not rep.real_rooted:
                assert min(h_vector(K)) < 0
    assert checked >= 100
    witnesses = search_non_real_rooted(6)
    assert any(w.l >= 2 for w in witnesses)
    assert all(not w.report.real_rooted for w in witnesses)
