import random
from fractions import Fraction

from curvefact.exactalg import Echelon, TSeries, echelon_pivot_orders, q_nullspace, rank


def test_echelon_pivots():
    ech = Echelon()
    assert ech.add({0: 1, 1: 1}) == 0
    assert ech.add({0: 2, 2: 1}) == 1
    assert ech.add({1: 4, 2: -2}) is None
    assert ech.pivots == [0, 1]
    assert ech.contains({0: Fraction(1, 2), 1: Fraction(1, 2)})
    assert not ech.contains({2: 1})


def test_echelon_tracks_payloads(poly):
    a, b = poly("a", ("a", "b")), poly("b", ("a", "b"))
    ech = Echelon(track=True)
    ech.add({4: 1}, a)
    assert ech.add({4: 1, 7: 3}, b) == 7
    assert ech.row(7) == {7: 1}
    assert ech.payload(7) == poly("1/3*b - 1/3*a", ("a", "b"))


def test_nullspace():
    assert q_nullspace([[1, 1, 0], [0, 1, -1]]) == [[1, -1, -1]]
    assert q_nullspace([{0: 1}], ncols=2) == [[0, 1]]
    assert q_nullspace([], ncols=2) == [[1, 0], [0, 1]]


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1], [1, 1]]) == 2


def test_pivot_orders():
    vs = [TSeries([0, 0, 1, 1]), TSeries([0, 0, 1, 0]), TSeries([0, 0, 0, 0])]
    orders, basis = echelon_pivot_orders(vs)
    assert orders == {2, 3}
    assert basis[0][2] == 1
    assert basis[1][3] == 1


def _apply(m, v):
    return [sum(Fraction(a) * b for a, b in zip(row, v)) for row in m]


def test_nullspace_of_a_rank_three_matrix():
    m = [[1, 2, 0, -1, 3], [0, 1, 1, 2, -2], [2, 0, -3, 1, 1]]
    kernel = q_nullspace(m)
    assert len(kernel) == 2
    for v in kernel:
        assert _apply(m, v) == [0, 0, 0]


def test_nullspace_dimension_on_random_matrices():
    rng = random.Random(9)
    for _ in range(40):
        rows, cols = rng.randint(1, 6), rng.randint(1, 7)
        m = [[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)]
        kernel = q_nullspace(m, ncols=cols)
        transpose = [list(col) for col in zip(*m)]
        assert len(kernel) == cols - rank(transpose)
        for v in kernel:
            assert _apply(m, v) == [0] * rows
