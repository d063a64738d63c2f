import numpy as np
import pytest

from mlat import catalog
from mlat.errors import (
    AxiomViolation,
    NoBounds,
    NotALattice,
    NotAPartialOrder,
    NotJoinPreserving,
    NotSubmultiplicative,
    SizeMismatch,
    TopNotPreserved,
)
from mlat.lattice import (
    BinOpTable,
    FinLattice,
    attach_multiplication,
    build_lattice,
    chain_mult_lattice,
    compose_operations,
    identity_morphism,
    interval_sublattice,
    law_report,
    morphism_build,
    order_from_covers,
    square_lattice,
)
from mlat.rng import ideal_lattice


def test_build_lattice_chain():
    """
    Test mlat.lattice.build_lattice
    """
    leq = [[1, 0, 0], [1, 1, 0], [1, 1, 1]]
    lat = build_lattice(leq, ['1', 'p', '0'])
    assert lat.bottom == 2
    assert lat.top == 0
    assert lat.join(1, 2) == 1
    assert lat.meet(0, 1) == 1
    assert lat.is_chain()
    assert lat.is_distributive()
    assert lat.index('p') == 1


def test_build_lattice_rejects_bad_orders():
    """
    Test mlat.lattice.build_lattice on tables that are not lattices
    """
    with pytest.raises(NotAPartialOrder):
        build_lattice([[1, 1], [1, 1]])
    with pytest.raises(NotAPartialOrder):
        build_lattice([[0, 1], [0, 1]])
    # two incomparable elements
    with pytest.raises(NoBounds):
        build_lattice([[1, 0], [0, 1]])
    # 0 < a, b < c, d < 1 with a, b having two minimal upper bounds
    leq = order_from_covers(
        6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    )
    with pytest.raises(NotALattice):
        build_lattice(leq)


def test_empty_join_and_meet():
    """
    Test mlat.lattice.FinLattice.join_all and meet_all
    """
    lat = catalog.lattice('boolean-2-meet').lat
    assert lat.join_all([]) == lat.bottom
    assert lat.meet_all([]) == lat.top
    a, b = lat.index('a'), lat.index('b')
    assert lat.join_all([a, b]) == lat.top


def test_covers():
    """
    Test mlat.lattice.FinLattice.covers
    """
    lat = catalog.lattice('N5-meet').lat
    covers = lat.covers()
    pairs = {
        (lat.labels[x], lat.labels[y]) for x, y in np.argwhere(covers)
    }
    assert pairs == {
        ('0', 'a'), ('a', 'c'), ('c', '1'), ('0', 'b'), ('b', '1')
    }
    assert not lat.is_modular()
    assert not catalog.lattice('M3-meet').lat.is_distributive()
    assert catalog.lattice('M3-meet').lat.is_modular()


def test_multiplication_axiom():
    """
    Test mlat.lattice.attach_multiplication
    """
    lat = build_lattice([[1, 0, 0], [1, 1, 0], [1, 1, 1]])
    # 1·1 = 1 is fine, p·1 = 1 is not below p
    with pytest.raises(AxiomViolation):
        attach_multiplication(lat, [[0, 0, 2], [0, 1, 2], [2, 2, 2]])
    with pytest.raises(SizeMismatch):
        attach_multiplication(lat, [[2, 2], [2, 2]])
    M = attach_multiplication(lat, [[0, 1, 2], [1, 2, 2], [2, 2, 2]])
    assert M.times(1, 1) == 2


def test_law_report_dvr():
    """
    Test mlat.lattice.law_report
    """
    laws = law_report(chain_mult_lattice(4, 'dvr'))
    assert laws.monotone
    assert laws.m_distributive
    assert laws.commutative
    assert laws.associative
    assert laws.jordan_identity
    assert laws.infinite_m_distributive


def test_law_report_m3_not_m_distributive():
    """
    Test mlat.lattice.law_report on M3 with the meet as multiplication
    """
    laws = law_report(catalog.lattice('M3-meet'))
    assert not laws.m_distributive
    assert laws.infinite_m_distributive is False
    assert laws.monotone


def test_law_report_skips_subset_form_on_large_lattices():
    """
    Test mlat.lattice.law_report above the subset-pair check limit
    """
    laws = law_report(catalog.lattice('boolean-3-meet'))
    assert laws.m_distributive
    assert laws.infinite_m_distributive is None


def test_square_lattice():
    """
    Test mlat.lattice.square_lattice
    """
    M = catalog.lattice('chain-dvr-3')
    assert square_lattice(M).same_tables(M)

    # 1 > m > 0 with 1·m = 0 and m·1 = m
    lat = build_lattice([[1, 0, 0], [1, 1, 0], [1, 1, 1]], ['1', 'm', '0'])
    N = attach_multiplication(lat, [[0, 2, 2], [1, 2, 2], [2, 2, 2]])
    sq = square_lattice(N)
    assert sq.label(sq.times(0, 1)) == 'm'
    assert law_report(sq).commutative
    assert square_lattice(sq).same_tables(sq)


def test_compose_operations():
    """
    Test mlat.lattice.compose_operations
    """
    AND = BinOpTable([[0, 0], [0, 1]])
    OR = BinOpTable([[0, 1], [1, 1]])
    XOR = BinOpTable([[0, 1], [1, 0]])
    assert compose_operations(AND, OR) == AND
    assert compose_operations(XOR, XOR) == BinOpTable([[0, 0], [0, 0]])

    left = BinOpTable.left_projection(2)
    for op in (AND, OR, XOR):
        assert compose_operations(left, op) == op
        assert compose_operations(op, left) == op

    with pytest.raises(SizeMismatch):
        compose_operations(AND, BinOpTable.left_projection(3))


def test_morphism_adjoint():
    """
    Test mlat.lattice.morphism_build on the projection Z/4 -> Z/2
    """
    src = catalog.lattice('I(Z4)')
    dst = ideal_lattice(catalog.rng('Z2'))
    f_map = [None] * src.n
    f_map[src.index('0')] = dst.index('0')
    f_map[src.index('(2)')] = dst.index('0')
    f_map[src.index('(1)')] = dst.index('(1)')
    f = morphism_build(src, dst, f_map)
    adj = [src.label(f.adj[y]) for y in range(dst.n)]
    assert adj[dst.index('0')] == '(2)'
    assert adj[dst.index('(1)')] == '(1)'


def test_morphism_errors():
    """
    Test mlat.lattice.morphism_build on maps that are not morphisms
    """
    M = chain_mult_lattice(3, 'meet')
    top, mid, bottom = 0, 1, 2
    with pytest.raises(NotJoinPreserving):
        morphism_build(M, M, [top, mid, mid])
    with pytest.raises(TopNotPreserved):
        morphism_build(M, M, [mid, mid, bottom])
    # the meet chain maps onto the zero chain, but not the other way round
    Z = chain_mult_lattice(3, 'zero')
    morphism_build(M, Z, [top, mid, bottom])
    with pytest.raises(NotSubmultiplicative):
        morphism_build(Z, M, [top, mid, bottom])


def test_identity_morphism():
    """
    Test mlat.lattice.identity_morphism
    """
    M = catalog.lattice('N(S3)')
    f = identity_morphism(M)
    assert f.adj == list(range(M.n))


def test_interval_sublattice():
    """
    Test mlat.lattice.interval_sublattice
    """
    M = chain_mult_lattice(4, 'dvr')
    sub = interval_sublattice(M, 1)
    assert sub.n == 3
    assert sub.top == sub.index('c_1')
    assert sub.embedding == [1, 2, 3]
    # c_1·c_1 = c_2 inside the interval as well
    assert sub.label(sub.times(sub.top, sub.top)) == 'c_2'


def test_chain_mult_lattice():
    """
    Test mlat.lattice.chain_mult_lattice
    """
    M = chain_mult_lattice(3, 'dvr')
    assert M.labels == ['c_0', 'c_1', 'c_2']
    assert M.top == 0 and M.bottom == 2
    assert M.label(M.times(1, 1)) == 'c_2'
    assert M.label(chain_mult_lattice(3, 'meet').times(0, 1)) == 'c_1'
    assert chain_mult_lattice(3, 'zero').times(0, 0) == 2


def test_fin_lattice_rejects_duplicate_labels():
    """
    Test mlat.lattice.FinLattice label validation
    """
    with pytest.raises(ValueError):
        FinLattice([[1, 0], [1, 1]], ['x', 'x'])
