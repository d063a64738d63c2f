import logging

import pytest

from mlat import catalog
from mlat.errors import NotMDistributive, PreconditionFailed
from mlat.lattice import chain_mult_lattice, law_report
from mlat.series import (
    annihilator_prime_lemma_check,
    annihilators,
    classify,
    hyperabelian_report,
    series,
    series_all,
    upper_central_series,
)


def _terms(M, trace):
    return [M.label(t) for t in trace.terms]


def test_series_commutator_s3():
    """
    Test mlat.series.series on the normal subgroup lattice of S3
    """
    M = catalog.lattice('N(S3)')
    bundle = series(M, M.top)
    assert _terms(M, bundle.derived) == ['S3', 'N3', '1', '1']
    assert bundle.derived.stabilized
    assert _terms(M, bundle.lcs_left) == ['S3', 'N3', 'N3']
    assert not bundle.lcs_left.stabilized
    assert M.label(bundle.lcs_left.reached) == 'N3'
    assert bundle.lcs_right.terms == bundle.lcs_left.terms


def test_classify_s3():
    """
    Test mlat.series.classify
    """
    M = catalog.lattice('N(S3)')
    flags = classify(M, M.top)
    assert flags.solvable
    assert not flags.left_nilpotent
    assert not flags.right_nilpotent
    assert not flags.abelian
    assert not flags.idempotent
    assert M.label(flags.derived_element) == 'N3'

    a3 = classify(M, M.index('N3'))
    assert a3.abelian and a3.left_nilpotent and a3.solvable


def test_classify_dvr(dvr3):
    """
    Test mlat.series.classify on an associative chain
    """
    c_1 = classify(dvr3, dvr3.index('c_1'))
    assert c_1.left_nilpotent and c_1.right_nilpotent and c_1.solvable
    assert c_1.abelian

    top = classify(dvr3, dvr3.top)
    assert top.idempotent
    assert not (top.left_nilpotent or top.right_nilpotent or top.solvable)


def test_series_all(dvr3):
    """
    Test mlat.series.series_all
    """
    flags = series_all(dvr3)
    assert sorted(flags) == [0, 1, 2]
    assert flags[dvr3.bottom].abelian


def test_perfect_group():
    """
    Test mlat.series.classify on the commutator lattice of A5
    """
    M = catalog.lattice('N(A5)')
    flags = classify(M, M.top)
    assert flags.idempotent
    assert not flags.solvable


def test_annihilators():
    """
    Test mlat.series.annihilators
    """
    dvr3 = chain_mult_lattice(3, 'dvr')
    ann = annihilators(dvr3, dvr3.index('c_1'), law_report(dvr3))
    assert dvr3.label(ann.r_ann) == 'c_1'
    assert dvr3.label(ann.l_ann) == 'c_1'
    assert dvr3.label(ann.r_center) == 'c_1'

    M = catalog.lattice('N(S3)')
    ann = annihilators(M, M.index('N3'), law_report(M))
    assert M.label(ann.r_ann) == 'N3'
    assert M.label(ann.r_center) == 'N3'


def test_annihilators_undefined():
    """
    Test mlat.series.annihilators when the annihilating elements have no
    annihilating join
    """
    M = catalog.lattice('M3-meet')
    ann = annihilators(M, M.index('a'))
    # a∧b = a∧c = 0 but a∧(b∨c) = a
    assert ann.r_ann is None
    assert ann.l_ann is None
    assert ann.r_center is None
    assert ann.l_center is None


def test_upper_central_series():
    """
    Test mlat.series.upper_central_series
    """
    M = catalog.lattice('N(S3)')
    ucs = upper_central_series(M)
    assert _terms(M, ucs.trace) == ['1', '1']
    assert M.label(ucs.hypercenter) == '1'
    assert not ucs.hypercentral

    M = catalog.lattice('N(Q8)')
    for side in ('left', 'right'):
        ucs = upper_central_series(M, side)
        assert _terms(M, ucs.trace) == ['1', 'N2', 'Q8', 'Q8']
        assert ucs.hypercentral
        assert ucs.undefined_at is None

    M = chain_mult_lattice(3, 'zero')
    assert _terms(M, upper_central_series(M).trace) == ['c_2', 'c_0', 'c_0']

    with pytest.raises(ValueError):
        upper_central_series(M, 'up')


def test_upper_central_series_undefined():
    """
    Test mlat.series.upper_central_series on a lattice without infinite
    m-distributivity
    """
    M3 = catalog.lattice('M3-zero')
    mul = [[M3.bottom] * M3.n for _ in range(M3.n)]
    mul[M3.top][M3.top] = M3.top
    M = M3.with_multiplication(mul, name='M3-top')
    ucs = upper_central_series(M)
    # a·1 = b·1 = c·1 = 0 while (a∨b)·1 = 1
    assert ucs.undefined_at == 1
    assert ucs.hypercenter is None
    assert not ucs.hypercentral


def test_hyperabelian_dvr(dvr3):
    """
    Test mlat.series.hyperabelian_report where every condition fails
    """
    report = hyperabelian_report(dvr3)
    assert report.agree
    assert not any(report.conditions().values())
    assert report.chain_witness is None
    assert report.spec_size == 1


def test_hyperabelian_zero_chain():
    """
    Test mlat.series.hyperabelian_report where every condition holds
    """
    M = chain_mult_lattice(3, 'zero')
    report = hyperabelian_report(M)
    assert all(report.conditions().values())
    assert [M.label(x) for x in report.chain_witness] == ['c_2', 'c_0']
    assert report.spec_size == 0
    assert not report.cond_f_inferred


def test_hyperabelian_solvable_group():
    """
    Test mlat.series.hyperabelian_report on the commutator lattice of S3
    """
    M = catalog.lattice('N(S3)')
    report = hyperabelian_report(M)
    assert all(report.conditions().values())
    assert [M.label(x) for x in report.chain_witness] == ['1', 'N3', 'S3']


def test_hyperabelian_inferred(caplog):
    """
    Test mlat.series.hyperabelian_report above the m-system enumeration
    limit
    """
    M = chain_mult_lattice(3, 'zero')
    with caplog.at_level(logging.WARNING):
        report = hyperabelian_report(M, limit=2)
    assert report.cond_f_inferred
    assert report.cond_f == report.cond_d
    assert 'inferred' in caplog.text


def test_hyperabelian_requires_m_distributive():
    """
    Test mlat.series.hyperabelian_report on M3
    """
    with pytest.raises(NotMDistributive):
        hyperabelian_report(catalog.lattice('M3-meet'))


def test_annihilator_prime_lemma():
    """
    Test mlat.series.annihilator_prime_lemma_check
    """
    M = catalog.lattice('N(A5)')
    report = annihilator_prime_lemma_check(M, M.top, M.top)
    assert report.holds
    assert report.p == M.bottom

    M = chain_mult_lattice(3, 'meet')
    c_0, c_1, c_2 = 0, 1, 2
    assert annihilator_prime_lemma_check(M, c_0, c_0).p == c_2
    assert annihilator_prime_lemma_check(M, c_0, c_1).p == c_2


def test_annihilator_prime_lemma_preconditions(dvr3):
    """
    Test mlat.series.annihilator_prime_lemma_check precondition failures
    """
    # 0 is not prime in the whole chain
    with pytest.raises(PreconditionFailed):
        annihilator_prime_lemma_check(dvr3, dvr3.top, dvr3.top)
    M = chain_mult_lattice(3, 'meet')
    with pytest.raises(PreconditionFailed):
        annihilator_prime_lemma_check(M, 1, 0)
    with pytest.raises(NotMDistributive):
        N = catalog.lattice('M3-meet')
        annihilator_prime_lemma_check(N, N.top, N.top)
