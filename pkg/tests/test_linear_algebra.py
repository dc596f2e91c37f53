from decabracket.polynomials.linear_algebra import is_consistent, matrix_rank


def test_rank_of_sparse_rows():
    rows = [{"a": 1, "b": 2}, {"a": 2, "b": 4}, {"c": 1}]
    assert matrix_rank(rows) == 2


def test_rank_of_empty_and_zero_rows():
    assert matrix_rank([]) == 0
    assert matrix_rank([{}, {}]) == 0
    assert matrix_rank([{"a": 0}]) == 0


def test_rank_is_exact_over_rationals():
    rows = [{0: "1/3", 1: "1/7"}, {0: 7, 1: 3}]
    assert matrix_rank(rows) == 1


def test_consistency():
    rows = [{"x": 1, "y": 1}, {"x": 1, "y": 1}]
    assert is_consistent(rows, [2, 2])
    assert not is_consistent(rows, [2, 3])
    assert is_consistent([{"x": 0}], [0])
