import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beerkoszul.exactla import (
    QQ,
    Echelon,
    Field,
    SparseMatrix,
    Subspace,
    annihilator,
    dense_rank_oracle,
    intersect,
    kernel,
    rank,
    row_space,
    sum_spaces,
)

small_ints = st.integers(min_value=-3, max_value=3)


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_matches_fraction_elimination(dense):
    assert rank(SparseMatrix.from_dense(dense)) == dense_rank_oracle(dense)


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_kernel_is_annihilated_and_has_complementary_dimension(dense):
    m = SparseMatrix.from_dense(dense)
    ker = kernel(m)
    assert ker.dim + rank(m) == m.ncols
    for v in ker.vectors():
        assert not m.apply(v)


@given(matrices(), matrices())
@settings(max_examples=80, deadline=None)
def test_intersection_dimension_formula(a, b):
    n = min(len(a[0]), len(b[0]))
    A = Subspace.span([{c: x for c, x in enumerate(row[:n]) if x} for row in a], n)
    B = Subspace.span([{c: x for c, x in enumerate(row[:n]) if x} for row in b], n)
    I = intersect(A, B)
    S = sum_spaces(A, B)
    assert I.dim == A.dim + B.dim - S.dim
    assert I <= A and I <= B


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_annihilator_dimension_and_double_dual(dense):
    n = len(dense[0])
    A = Subspace.span([{c: x for c, x in enumerate(row) if x} for row in dense], n)
    ann = annihilator(A)
    assert ann.dim + A.dim == n
    assert annihilator(ann) == A
    for f in ann.vectors():
        for v in A.vectors():
            assert sum(f.get(c, 0) * x for c, x in v.items()) == 0


def test_annihilator_with_pairing_permutation():
    # pairing f . v = sum f[c] v[perm[c]]
    A = Subspace.span([{0: 1}], 2)
    ann = annihilator(A, [1, 0])
    assert ann == Subspace.span([{0: 1}], 2)


def test_echelon_is_reduced_with_unit_pivots():
    ech = Echelon(4)
    assert ech.add({0: 2, 1: 4})
    assert ech.add({0: 1, 2: 1})
    assert not ech.add({1: 2, 2: -1})  # 0.5*(first) - second, scaled
    for piv, row in ech.rows.items():
        assert row[piv] == 1
        for other in ech.rows:
            if other != piv:
                assert piv not in ech.rows[other]


def test_subspace_canonical_form_is_basis_independent():
    a = Subspace.span([{0: 1, 1: 1}, {1: 1, 2: 1}], 3)
    b = Subspace.span([{0: 1, 2: -1}, {0: 2, 1: 1, 2: -1}], 3)
    assert a == b
    assert {0: 3, 1: 3} in a
    assert {0: 1} not in a


def test_prime_field_rank_never_exceeds_rational_rank():
    dense = [[2, 4], [1, 2 + 7]]
    assert rank(SparseMatrix.from_dense(dense)) == 2
    assert rank(SparseMatrix.from_dense(dense), Field(7)) == 1


def test_field_parsing():
    assert Field.parse("rational") == QQ
    assert Field.parse("prime:101").p == 101
    with pytest.raises(ValueError):
        Field.parse("prime:100")
    with pytest.raises(ValueError):
        Field.parse("reals")


def test_prime_field_converts_fractions():
    f = Field(7)
    assert f(Fraction(1, 2)) * 2 % 7 == 1
    assert f.inv(3) * 3 % 7 == 1


def test_matrix_product_and_sum():
    a = SparseMatrix.from_dense([[1, 2], [0, 1]])
    b = SparseMatrix.from_dense([[1, -2], [0, 1]])
    assert a @ b == SparseMatrix.identity(2)
    assert (a + b).rows() == [{0: 2}, {1: 2}]


def test_row_space_of_identity_is_full():
    assert row_space(SparseMatrix.identity(3)) == Subspace.full(3)
    assert Subspace.zero(3).dim == 0
