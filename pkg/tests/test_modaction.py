"""Generator action on tableaux, commutator identities, dimension oracle."""

from fractions import Fraction

import pytest

from relpoly.errors import CriticalDenominator, NotDominant, OutOfBasisLeak
from relpoly.modaction import (
    CARTAN,
    LOWER,
    RAISE,
    LinComb,
    act_cartan,
    act_in_basis,
    act_lower,
    act_raise,
    check_commutators,
    weyl_dim,
)
from relpoly.patterns import Pattern, weight_vector
from relpoly.polyhedra import enumerate_integral
from relpoly.relations import standard_set


def rows(*data):
    return Pattern.from_rows([list(r) for r in data])


def test_lincomb_arithmetic():
    M = rows((1, 0), (0,))
    v = LinComb.single(M)
    assert (v + v.scale(Fraction(-1))).is_zero()
    w = v.scale(Fraction(2, 3)) - v
    assert dict(w.terms)[M] == Fraction(-1, 3)


def test_act_raise_examples():
    v = act_raise(1, rows((1, 0), (0,)))
    assert dict(v.terms) == {rows((1, 0), (1,)): Fraction(1)}
    assert act_raise(1, rows((1, 0), (1,))).is_zero()
    assert act_raise(1, rows((0, 0), (0,))).is_zero()


def test_act_lower_examples():
    v = act_lower(1, rows((1, 0), (0,)))
    assert dict(v.terms) == {rows((1, 0), (-1,)): Fraction(1)}
    v = act_lower(1, rows((1, 0), (1,)))
    assert dict(v.terms) == {rows((1, 0), (0,)): Fraction(1)}
    v = act_lower(2, rows((2, 1, 0), (1, 0), (0,)))
    assert dict(v.terms) == {
        rows((2, 1, 0), (0, 0), (0,)): Fraction(1, 2),
        rows((2, 1, 0), (1, -1), (0,)): Fraction(1, 2),
    }


def test_act_cartan_examples():
    M = rows((1, 0), (0,))
    assert act_cartan(1, M).is_zero()
    assert dict(act_cartan(2, M).terms) == {M: Fraction(1)}
    M3 = rows((2, 1, 0), (1, 0), (0,))
    assert dict(act_cartan(2, M3).terms) == {M3: Fraction(1)}


def test_critical_denominator():
    M = rows((2, 1, 0), (1, 2), (1,))  # m_21 - m_22 + 1 = 0 in row 2
    with pytest.raises(CriticalDenominator):
        act_raise(2, M)


def test_weight_shift():
    M = rows((2, 1, 0), (1, 0), (0,))
    mu = weight_vector(M)
    for P, _ in act_raise(1, M).terms:
        got = weight_vector(P)
        assert got[0] == mu[0] + 1 and got[1] == mu[1] - 1
    for P, _ in act_lower(2, M).terms:
        got = weight_vector(P)
        assert got[1] == mu[1] - 1 and got[2] == mu[2] + 1


def test_act_in_basis_stays_inside():
    C = standard_set(2, 1, "both")
    L = rows((1, 0), (0,))
    v = act_in_basis(C, L, (RAISE, 1), LinComb.single(L))
    assert dict(v.terms) == {rows((1, 0), (1,)): Fraction(1)}
    top = rows((1, 0), (1,))
    assert act_in_basis(C, L, (RAISE, 1), LinComb.single(top)).is_zero()


def test_act_in_basis_wall_drop():
    # Lowering at the bottom wall of the 2-point module produces the pattern
    # x_11 = -1 with raw coefficient 1 (the k=1 numerator is empty); the GT
    # inequality x_11 >= x_22 = 0 excludes it, so the basis filter does the
    # work here, not a vanishing coefficient.
    C = standard_set(2, 1, "both")
    L = rows((1, 0), (0,))
    raw = act_lower(1, L)
    assert dict(raw.terms) == {rows((1, 0), (-1,)): Fraction(1)}
    filtered = act_in_basis(C, L, (LOWER, 1), LinComb.single(L))
    assert filtered.is_zero()
    with pytest.raises(OutOfBasisLeak):
        act_in_basis(C, L, (LOWER, 1), LinComb.single(L), strict=True)


def test_check_commutators_small_modules():
    for lam in ((1, 0), (2, 0), (2, 1, 0), (1, 1, 0)):
        n = len(lam)
        C = standard_set(n, 1, "both")
        L = Pattern.from_rows([list(lam[:k]) for k in range(n, 0, -1)])
        basis = enumerate_integral(C, L).points
        report = check_commutators(C, L, basis)
        assert report.ok, (lam, report.failures)
        assert report.checked == len(basis)


def test_check_commutators_generic_base():
    C = standard_set(3, 3, "both")
    L = rows((Fraction(1, 2), Fraction(5, 7), Fraction(9, 11)),
             (Fraction(1, 5), Fraction(1, 3)),
             (Fraction(1, 7),))
    sample = [L, L.shifted(2, 1, 1), L.shifted(1, 1, -2)]
    assert check_commutators(C, L, sample).ok


def test_cartan_eigenbasis():
    C = standard_set(3, 1, "both")
    L = rows((2, 1, 0), (2, 1), (1,))
    for P in enumerate_integral(C, L).points:
        mu = weight_vector(P)
        for k in range(1, 4):
            v = act_cartan(k, P)
            if mu[k - 1] == 0:
                assert v.is_zero()
            else:
                assert dict(v.terms) == {P: mu[k - 1]}


def test_weyl_dim():
    assert weyl_dim((2, 1, 0)) == 8
    assert weyl_dim((1, 0)) == 2
    assert weyl_dim((0, 0, 0, 0)) == 1
    assert weyl_dim((2, 1, 1, 0)) == 15
    with pytest.raises(NotDominant):
        weyl_dim((0, 1))
    with pytest.raises(NotDominant):
        weyl_dim((1, Fraction(1, 2)))
