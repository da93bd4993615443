import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skeinalg.partitions import (
    SymFunction,
    c_lambda,
    check_partition,
    conjugate,
    contains,
    count_partitions,
    d_lambda,
    lr_coeffs,
    parse_partition,
    partitions_of,
    q_lambda,
    render_partition,
    schur_expand,
    schur_h,
    standard_tableaux,
)
from skeinalg.scalars import ONE, ZERO, delta, from_int, monomial, s_power, v_power


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    for shape in partitions_of(6):
        assert conjugate(conjugate(shape)) == shape


def test_contains():
    assert contains((2, 1), (1, 1))
    assert contains((2, 1), (2, 1))
    assert not contains((2, 1), (1, 1, 1))
    assert contains((5,), ())


def test_partition_counts():
    assert count_partitions(5) == 7
    assert [count_partitions(n) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partitions_sorted_descending_lex():
    for n in range(1, 8):
        shapes = partitions_of(n)
        assert list(shapes) == sorted(shapes, reverse=True)
        assert all(sum(shape) == n for shape in shapes)


def test_parse_render_partition():
    assert parse_partition("3,2,1") == (3, 2, 1)
    assert parse_partition("") == ()
    assert render_partition((3, 2, 1)) == "3,2,1"
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("0")


def test_standard_tableaux_shape_21():
    tableaux = standard_tableaux((2, 1))
    assert set(tableaux) == {((1, 2), (3,)), ((1, 3), (2,))}
    assert d_lambda((2, 1)) == 2


def test_d_lambda_single_row_and_column():
    for n in range(1, 7):
        assert d_lambda((n,)) == 1
        assert d_lambda((1,) * n) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rsk_square_sum(n):
    assert sum(d_lambda(shape) ** 2 for shape in partitions_of(n)) == math.factorial(n)


def test_tableaux_are_standard():
    for shape in partitions_of(5):
        for tab in standard_tableaux(shape):
            flat = [v for row in tab for v in row]
            assert sorted(flat) == list(range(1, 6))
            for row in tab:
                assert list(row) == sorted(row)
            for r in range(1, len(tab)):
                for c in range(len(tab[r])):
                    assert tab[r][c] > tab[r - 1][c]


# -- Schur functions ---------------------------------------------------------


def test_schur_h_row_and_small_shapes():
    assert schur_h((3,)) == SymFunction.h(3)
    assert schur_h((1, 1)) == SymFunction.h(1) * SymFunction.h(1) - SymFunction.h(2)
    assert schur_h((2, 1)) == SymFunction.h(2) * SymFunction.h(1) - SymFunction.h(3)
    assert schur_h(()) == SymFunction.one()


def test_schur_expand_examples():
    for shape in partitions_of(4):
        assert schur_expand(schur_h(shape), 4) == {shape: ONE}
    h1 = SymFunction.h(1)
    assert schur_expand(h1 * h1, 2) == {(2,): ONE, (1, 1): ONE}
    assert schur_expand(h1 * h1 * h1, 3) == {
        (3,): ONE,
        (2, 1): from_int(2),
        (1, 1, 1): ONE,
    }


def test_schur_expand_rejects_inhomogeneous():
    f = SymFunction.h(1) + SymFunction.h(2)
    with pytest.raises(ValueError):
        schur_expand(f, 2)


# -- the elementary-symmetric cross-check ------------------------------------
# evaluate h-expressions numerically in ten rational variables; the h_k and
# e_k evaluators below are independent of all Schur/LR code


XS = [Fraction(k, k + 1) for k in range(1, 11)]


def eval_h(k):
    if k < 0:
        return Fraction(0)
    total = Fraction(0)
    for combo in itertools.combinations_with_replacement(XS, k):
        total += math.prod(combo, start=Fraction(1))
    return total


def eval_e(k):
    total = Fraction(0)
    for combo in itertools.combinations(XS, k):
        total += math.prod(combo, start=Fraction(1))
    return total


def eval_symfunction(f: SymFunction) -> Fraction:
    total = Fraction(0)
    for mono, coeff in f.coeffs.items():
        if coeff.den.terms != {(0, 0): 1} or set(coeff.num.terms) - {(0, 0)}:
            raise ValueError("non-constant coefficient")
        c = coeff.num.terms.get((0, 0), 0)
        total += Fraction(c) * math.prod((eval_h(k) for k in mono), start=Fraction(1))
    return total


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_column_schur_is_elementary(k):
    f = schur_h((1,) * k)
    for coeff in f.coeffs.values():
        assert coeff.den.terms == {(0, 0): 1}
        [(mono, c)] = coeff.num.terms.items()
        assert mono == (0, 0) and isinstance(c, int)
    assert eval_symfunction(f) == eval_e(k)


# -- Littlewood-Richardson oracle --------------------------------------------


def test_lr_box_times_box():
    assert lr_coeffs((1,), (1,)) == {(2,): 1, (1, 1): 1}


def test_lr_pieri_column():
    assert lr_coeffs((1, 1), (1,)) == {(2, 1): 1, (1, 1, 1): 1}


def test_lr_grading():
    coeffs = lr_coeffs((2, 1), (2,))
    assert all(sum(shape) == 5 for shape in coeffs)


def test_lr_symmetry():
    for lam, mu in [((2, 1), (2,)), ((2,), (1, 1)), ((3, 1), (2, 1))]:
        assert lr_coeffs(lam, mu) == lr_coeffs(mu, lam)


def test_lr_against_empty():
    assert lr_coeffs((2, 1), ()) == {(2, 1): 1}
    assert lr_coeffs((), ()) == {(): 1}


def test_lr_known_table():
    # classical example with a multiplicity-two coefficient
    got = lr_coeffs((2, 1), (2, 1))
    assert got == {
        (4, 2): 1,
        (4, 1, 1): 1,
        (3, 3): 1,
        (3, 2, 1): 2,
        (3, 1, 1, 1): 1,
        (2, 2, 2): 1,
        (2, 2, 1, 1): 1,
    }


@pytest.mark.parametrize("total", [2, 3, 4, 5, 6])
def test_schur_product_matches_lr(total):
    for a in range(1, total):
        for lam in partitions_of(a):
            for mu in partitions_of(total - a):
                product = schur_h(lam) * schur_h(mu)
                expansion = schur_expand(product, total)
                oracle = {
                    shape: from_int(c) for shape, c in lr_coeffs(lam, mu).items()
                }
                assert expansion == oracle, (lam, mu)


def test_pieri_property():
    for n in range(0, 6):
        for mu in partitions_of(n):
            expansion = schur_expand(schur_h(mu) * SymFunction.h(1), n + 1)
            want = {
                eta: ONE for eta in partitions_of(n + 1) if contains(eta, mu)
            }
            assert expansion == want


# -- eigenvalue scalars ------------------------------------------------------


def test_c_lambda_examples():
    assert c_lambda(()) == delta()
    assert c_lambda((1,)) == delta() + v_power(1) * (s_power(-1) - s_power(1))
    two_terms = delta() + monomial(1, 1, -1) * (ONE - s_power(4))
    assert c_lambda((1, 1)) == two_terms


def test_c_lambda_sum_shape():
    # direct two-term expansion for the row of size 2
    want = delta() + monomial(1, 1, -1) * (s_power(-2) - s_power(2))
    assert c_lambda((2,)) == want


def test_q_equals_c_everywhere_small():
    for n in range(0, 11):
        for shape in partitions_of(n):
            assert q_lambda(shape) == c_lambda(shape)


def test_eigenvalues_distinct_to_eight_cells():
    seen = {}
    for n in range(0, 9):
        for shape in partitions_of(n):
            c = c_lambda(shape)
            key = (
                frozenset(c.num.terms.items()),
                frozenset(c.den.terms.items()),
            )
            assert key not in seen, (shape, seen.get(key))
            seen[key] = shape
