import numpy as np
import pytest

from mlat import catalog
from mlat.errors import NotAnIdeal, NotARng, OrderBound, ValidationError
from mlat.lattice import law_report
from mlat.rng import (
    FinRng,
    circle_and_radical,
    circle_table,
    classify_rng,
    ideal_lattice,
    ideal_product,
    ideals,
    ring_commutator,
)
from mlat.utils import mask_of, members


def _ideal(R, labels):
    return mask_of(R.labels.index(lb) for lb in labels)


def _members(R, mask):
    return [R.labels[x] for x in members(mask)]


def test_fin_rng_validation():
    """
    Test mlat.rng.FinRng axiom checks
    """
    add = [[0, 1], [1, 0]]
    with pytest.raises(NotARng):
        FinRng([[0, 1], [1, 1]], [[0, 0], [0, 1]])
    FinRng(add, [[0, 0], [0, 0]])
    # 1·(1 + 1) = 1 but 1·1 + 1·1 = 0
    with pytest.raises(NotARng):
        FinRng(add, [[0, 1], [1, 1]])
    with pytest.raises(NotARng):
        FinRng.from_elements(range(3), lambda a, b: (a + b) % 3,
                             lambda a, b: a * b)


@pytest.mark.parametrize(
    'name,count',
    [('Z2', 2), ('Z4', 3), ('Z6', 4), ('Z8', 4), ('2Z8', 3), ('zero(Z4)', 3)]
)
def test_ideals(name, count):
    """
    Test mlat.rng.ideals
    """
    R = catalog.rng(name)
    found = ideals(R)
    assert len(found) == count
    assert all(R.is_ideal(m) for m in found)


def test_even_residue_ideals():
    """
    Test mlat.rng.ideals on 2Z/8
    """
    R = catalog.rng('2Z8')
    assert [_members(R, m) for m in ideals(R)] == [
        ['0'], ['0', '4'], ['0', '2', '4', '6']
    ]
    with pytest.raises(OrderBound):
        ideals(R, bound=2)


def test_ideal_product():
    """
    Test mlat.rng.ideal_product
    """
    R = catalog.rng('Z6')
    two = _ideal(R, ['0', '2', '4'])
    three = _ideal(R, ['0', '3'])
    assert ideal_product(R, two, three) == R.zero_mask
    assert ideal_product(R, two, two) == two
    with pytest.raises(NotAnIdeal):
        ideal_product(R, _ideal(R, ['0', '1']), two)


def test_ring_commutator():
    """
    Test mlat.rng.ring_commutator
    """
    R = catalog.rng('Z6')
    assert ring_commutator(R, R.full_mask, R.full_mask) == R.zero_mask

    T = catalog.rng('T2(F2)')
    assert not T.is_commutative()
    assert ring_commutator(T, T.full_mask, T.full_mask) != T.zero_mask


def test_ideal_lattice():
    """
    Test mlat.rng.ideal_lattice
    """
    R = catalog.rng('Z6')
    M = ideal_lattice(R)
    assert M.name == 'I(Z6)'
    assert sorted(M.labels) == ['(1)', '(2)', '(3)', '0']
    assert M.times(M.index('(2)'), M.index('(3)')) == M.bottom
    laws = law_report(M)
    assert laws.associative and laws.m_distributive and laws.commutative

    assert ideal_lattice(R, 'ring_commutator').times(M.top, M.top) == M.bottom
    assert ideal_lattice(R, 'intersection').times(M.top, M.top) == M.top
    with pytest.raises(ValidationError):
        ideal_lattice(R, 'commutator')


def test_circle_and_radical():
    """
    Test mlat.rng.circle_and_radical
    """
    R = catalog.rng('Z6')
    report = circle_and_radical(R)
    assert report.jacobson == R.zero_mask
    assert not report.is_radical_ring

    R = catalog.rng('2Z8')
    report = circle_and_radical(R)
    assert report.jacobson == R.full_mask
    assert report.is_radical_ring
    circ = circle_table(R)
    two, four = R.labels.index('2'), R.labels.index('4')
    assert R.labels[circ[two, four]] == '6'

    R = catalog.rng('Z8')
    assert _members(R, circle_and_radical(R).jacobson) == ['0', '2', '4', '6']


@pytest.mark.parametrize('name', list(catalog.RNGS))
def test_circle_identity_is_zero(name):
    """
    Test mlat.rng.circle_table on every built-in rng
    """
    R = catalog.rng(name)
    circ = circle_table(R)
    assert (circ[R.zero] == np.arange(R.n)).all()
    assert (circ[:, R.zero] == np.arange(R.n)).all()


@pytest.mark.parametrize(
    'name,nilpotent,zero,radical',
    [
        ('Z6', False, False, False),
        ('2Z8', True, False, True),
        ('zero(Z4)', True, True, True),
        ('N3(F2)', True, False, True),
        ('T2(F2)', False, False, False),
    ]
)
def test_classify_rng(name, nilpotent, zero, radical):
    """
    Test mlat.rng.classify_rng
    """
    c = classify_rng(catalog.rng(name))
    assert c.nilpotent == nilpotent
    assert c.zero_multiplication == zero
    assert c.radical == radical
    assert c.lattice_agrees
