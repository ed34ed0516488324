from hypothesis import given
from hypothesis import strategies as st

from cablefloer import gf2

matrices = st.integers(0, 6).flatmap(
    lambda r: st.integers(0, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r)))


def span_size(rows):
    seen = {0}
    for r in rows:
        seen |= {x ^ r for x in seen}
    return len(seen)


@given(matrices)
def test_rank_counts_span(mat):
    rows = gf2.matrix_to_rows(mat)
    assert 2 ** gf2.rank(rows) == span_size(rows)


@given(matrices)
def test_rank_ignores_row_order(mat):
    rows = gf2.matrix_to_rows(mat)
    assert gf2.rank(rows) == gf2.rank(reversed(rows))


@given(st.integers(1, 5).flatmap(lambda k: st.tuples(
    st.lists(st.lists(st.integers(0, 1), min_size=k, max_size=k), min_size=1, max_size=4),
    st.lists(st.lists(st.integers(0, 1), min_size=3, max_size=3), min_size=k, max_size=k))))
def test_matmul_by_definition(ab):
    a, b = ab
    prod = gf2.matmul(a, b)
    for i, row in enumerate(a):
        for j in range(3):
            assert prod[i][j] == sum(row[t] * b[t][j] for t in range(len(b))) % 2


def test_empty_shapes():
    assert gf2.matmul([], [[1, 0]], inner=1, cols=2) == []
    assert gf2.matmul([[1], [0]], [[]], inner=1, cols=0) == [[], []]
    assert gf2.matrix_rank([]) == 0


def test_rank_small():
    assert gf2.matrix_rank([[1, 1, 0], [0, 1, 1], [1, 0, 1]]) == 2
    assert gf2.rank([0b11, 0b11, 0b100]) == 2
