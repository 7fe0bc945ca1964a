import random

import pytest

from qha.linalg import (
    FieldSpec,
    Mat,
    inverse,
    nullspace,
    parse_field,
    parse_matrix,
    prime_field,
    rationals,
    rank,
    rref,
    solve,
)


def random_mat(field, rng, rows, cols):
    if field.kind == "Q":
        return Mat(field, rows, cols, [rng.randint(-4, 4) for _ in range(rows * cols)])
    return Mat(field, rows, cols, [rng.randrange(field.p) for _ in range(rows * cols)])


def test_field_spec_rejects_composite_modulus():
    with pytest.raises(ValueError):
        FieldSpec("Fp", 6)
    assert prime_field(5).p == 5
    assert parse_field("F7") == prime_field(7)
    assert parse_field("Q") == rationals()


def test_rref_zero_matrix_over_f5():
    m = Mat.zeros(prime_field(5), 1, 1)
    _, rk, piv = rref(m)
    assert rk == 0 and piv == ()


def test_rref_identity_over_q():
    m = Mat.identity(rationals(), 2)
    red, rk, piv = rref(m)
    assert rk == 2 and piv == (0, 1) and red == m


def test_rref_rank_one():
    # determinant of [[1,2],[2,4]] vanishes, so the rows are dependent
    m = parse_matrix(rationals(), "1,2;2,4")
    _, rk, piv = rref(m)
    assert rk == 1 and piv == (0,)


def test_nullspace_injective_map():
    m = Mat.identity(rationals(), 3)
    assert nullspace(m).cols == 0


def test_nullspace_zero_row_matrix():
    m = Mat(rationals(), 0, 4, [])
    ns = nullspace(m)
    assert ns == Mat.identity(rationals(), 4)


def test_nullspace_rank_one():
    m = parse_matrix(rationals(), "1,2;2,4")
    ns = nullspace(m)
    assert ns.cols == 1
    assert m.mul(ns).is_zero()


def test_solve_identity_system():
    q = rationals()
    b = parse_matrix(q, "3;-2")
    assert solve(Mat.identity(q, 2), b) == b


def test_solve_unsolvable():
    q = rationals()
    assert solve(Mat.zeros(q, 2, 2), parse_matrix(q, "1;0")) is None


def test_solve_underdetermined():
    q = rationals()
    a = parse_matrix(q, "1,2;2,4")
    b = parse_matrix(q, "1;2")
    x = solve(a, b)
    assert x is not None and a.mul(x) == b


def test_solve_dimension_mismatch_rejected():
    q = rationals()
    with pytest.raises(ValueError):
        solve(Mat.zeros(q, 2, 2), Mat.zeros(q, 3, 1))


@pytest.mark.parametrize("fieldname", ["Q", "F5"])
def test_rref_idempotent_and_rank_nullity(fieldname):
    field = parse_field(fieldname)
    rng = random.Random(100)
    for _ in range(60):
        rows, cols = rng.randint(0, 5), rng.randint(0, 5)
        m = random_mat(field, rng, rows, cols)
        red, rk, _ = rref(m)
        assert rref(red)[0] == red
        assert rk + nullspace(m).cols == cols
        assert m.mul(nullspace(m)).is_zero() if cols else True


@pytest.mark.parametrize("fieldname", ["Q", "F5"])
def test_solve_absent_iff_rank_jump(fieldname):
    field = parse_field(fieldname)
    rng = random.Random(200)
    for _ in range(60):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        a = random_mat(field, rng, rows, cols)
        b = random_mat(field, rng, rows, 1)
        x = solve(a, b)
        if x is None:
            assert rank(a.hstack(b)) > rank(a)
        else:
            assert a.mul(x) == b
            assert rank(a.hstack(b)) == rank(a)


@pytest.mark.parametrize("fieldname", ["Q", "F7"])
def test_scalar_text_round_trip(fieldname):
    field = parse_field(fieldname)
    rng = random.Random(7)
    for _ in range(50):
        if field.kind == "Q":
            from fractions import Fraction
            s = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        else:
            s = rng.randrange(field.p)
        assert field.parse_scalar(field.format_scalar(s)) == field.from_int(0) + s


def test_matrix_text_round_trip():
    field = rationals()
    rng = random.Random(9)
    for _ in range(25):
        m = random_mat(field, rng, rng.randint(0, 3), rng.randint(0, 3))
        assert parse_matrix(field, m.format()) == m


def test_inverse():
    q = rationals()
    m = parse_matrix(q, "1,1;0,1")
    inv = inverse(m)
    assert inv is not None and m.mul(inv) == Mat.identity(q, 2)
    assert inverse(parse_matrix(q, "1,2;2,4")) is None


def test_canonical_rational_form():
    q = rationals()
    m = parse_matrix(q, "2/4")
    assert q.format_scalar(m.at(0, 0)) == "1/2"


def test_prime_field_residues_canonical():
    f = prime_field(5)
    m = Mat(f, 1, 2, [7, -1])
    assert m.entries == (2, 4)


def test_pure_operations_thread_safe():
    # values are immutable and operations pure: concurrent use needs no locks
    import concurrent.futures
    field = prime_field(7)
    rng = random.Random(55)
    mats = [random_mat(field, rng, 4, 4) for _ in range(16)]
    expected = [rref(m) for m in mats]
    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(rref, mats))
    assert results == expected
