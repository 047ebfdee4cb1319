from hypothesis import given, settings, strategies as st

from ffmzv import FieldSpec, FqMatrix, nullspace, stack_rank

F2 = FieldSpec.parse("q=2")
F3 = FieldSpec.parse("q=3")


def test_nullspace_pinned_examples():
    assert nullspace(FqMatrix(F2, [[1, 1], [0, 0]])) == [[1, 1]]
    assert nullspace(FqMatrix(F3, [[1, 2], [2, 1]])) == [[1, 1]]


def test_nullspace_identity_and_zero():
    assert nullspace(FqMatrix(F2, [[1, 0], [0, 1]])) == []
    assert nullspace(FqMatrix(F2, [[0, 0], [0, 0]])) == [[1, 0], [0, 1]]
    assert nullspace(FqMatrix(F2, [], cols=3)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_rank():
    # row 2 = 2 * row 1 mod 3, so only two independent rows
    assert FqMatrix(F3, [[1, 2, 0], [2, 1, 0], [0, 0, 1]]).rank() == 2
    assert FqMatrix(F3, [[1, 2, 0], [2, 2, 0], [0, 0, 1]]).rank() == 3
    assert FqMatrix(F3, [[1, 2], [2, 4 % 3]]).rank() == 1
    assert stack_rank(F2, []) == 0
    assert stack_rank(F2, [[1, 1], [1, 1], [0, 1]]) == 2


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([F2, F3]), st.integers(1, 4), st.integers(1, 5), st.data())
def test_nullspace_vectors_are_in_kernel(spec, rows, cols, data):
    entries = [[data.draw(st.integers(0, spec.q - 1)) for _ in range(cols)]
               for _ in range(rows)]
    m = FqMatrix(spec, entries)
    basis = nullspace(m)
    assert len(basis) == cols - m.rank()
    for vec in basis:
        assert m.mat_vec(vec) == [0] * rows
    # basis vectors are independent
    assert stack_rank(spec, basis) == len(basis)


def test_mat_vec():
    m = FqMatrix(F3, [[1, 2], [0, 1]])
    assert m.mat_vec([1, 1]) == [0, 1]
