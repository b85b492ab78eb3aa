from wittcoh.cohomology import cohomology_dim
from wittcoh.conjecture import (
    BigradedMonomial,
    check_projection_kills_relations,
    counting_cell,
    hilbert_cell,
    ideal_rank,
    monomials_in_bidegree,
    multiply,
    scan,
)


def names(ms):
    return [str(m) for m in ms]


def test_monomials_small_bidegrees():
    assert names(monomials_in_bidegree(1, 1)) == ["E"]
    assert names(monomials_in_bidegree(1, 4)) == ["X2"]
    assert names(monomials_in_bidegree(2, 4)) == ["Y1"]
    assert names(monomials_in_bidegree(2, 3)) == ["E^X1"]
    assert names(monomials_in_bidegree(3, 12)) == ["X1^X2^X3", "X2^Y2", "X4^Y1"]
    assert monomials_in_bidegree(1, 3) == []


def test_multiply_square_free():
    x1y1 = BigradedMonomial(False, (1,), (1,))
    assert multiply(x1y1, BigradedMonomial(False, (1,), ())) is None
    prod = multiply(x1y1, BigradedMonomial(True, (2,), ()))
    assert str(prod) == "E^X1^X2^Y1"


def test_ideal_rank_examples():
    assert ideal_rank(2, 3) == 1  # the first relation itself
    assert ideal_rank(3, 6) == 1  # X1^Y1
    assert ideal_rank(4, 12) == 2  # Y1^Y2 and X1^X3^Y1 (reached twice)
    assert ideal_rank(1, 2) == 0


def test_hilbert_cells():
    assert hilbert_cell(1, 2).equal and hilbert_cell(1, 2).lhs == 1
    assert hilbert_cell(2, 3) == hilbert_cell(2, 3)
    assert hilbert_cell(2, 3).lhs == 0 and hilbert_cell(2, 3).rhs == 0
    assert hilbert_cell(2, 4).lhs == 1 and hilbert_cell(2, 4).rhs == 1
    assert hilbert_cell(3, 12).lhs == cohomology_dim(1, 12, 3) == 3


def test_counting_cells():
    cell = counting_cell(1, 2)
    assert cell.lhs == 1 and cell.rhs == 1
    assert counting_cell(2, 8).equal
    for n in range(1, 16, 2):  # odd degrees: both sides empty
        for q in range(1, 5):
            cell = counting_cell(q, n)
            assert cell.lhs == 0 and cell.rhs == 0


def test_scan_consistent():
    report = scan(16)
    assert report.hilbert_ok
    assert report.counting_ok
    assert report.internally_consistent
    assert report.findings() == []


def test_quotient_dominates_cohomology():
    # surjectivity: the quotient can never be smaller than the cohomology
    for n in range(1, 17):
        for q in range(1, n + 1):
            cell = hilbert_cell(q, n)
            assert cell.lhs >= cell.rhs, f"(q={q}, n={n})"


def test_ideal_rank_bounded_by_ambient():
    for n in range(1, 15):
        for q in range(1, n + 1):
            assert ideal_rank(q, n) <= len(monomials_in_bidegree(q, n))


def test_projection_kills_relations():
    res = check_projection_kills_relations(4)
    assert res.passed, res.failures
