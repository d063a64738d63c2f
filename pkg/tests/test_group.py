import pytest
from sympy.combinatorics.named_groups import DihedralGroup, SymmetricGroup

from mlat import catalog
from mlat.catalog import permutation_group
from mlat.errors import (
    NotAGroup,
    NotAnAutomorphism,
    NotNormal,
    OrderBound,
    ValidationError,
)
from mlat.group import (
    FinGroup,
    GroupAction,
    automorphisms,
    classify_group,
    commutator_subgroup,
    inner_action,
    normal_mult_lattice,
    normal_subgroups,
    normal_subgroups_oracle,
    subgroups_oracle,
)
from mlat.lattice import law_report
from mlat.utils import popcount

SMALL_GROUPS = ['C2', 'C3', 'C4', 'C2xC2', 'S3', 'D4', 'Q8', 'A4']


def test_fin_group_validation():
    """
    Test mlat.group.FinGroup axiom checks
    """
    with pytest.raises(NotAGroup):
        FinGroup([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        FinGroup([[0, 1, 2], [1, 2, 0]])
    with pytest.raises(NotAGroup):
        FinGroup([[0, 5], [5, 0]])
    G = FinGroup([[0, 1], [1, 0]], ['e', 'g'], name='C2')
    assert G.e == 0
    assert G.inverse(1) == 1
    assert G.is_abelian()


def test_from_elements(s3):
    """
    Test mlat.group.FinGroup.from_elements
    """
    G = FinGroup.from_elements(range(5), lambda a, b: (a + b) % 5, name='C5')
    assert G.n == 5
    assert G.order_of(1) == 5
    assert s3.n == 6
    assert s3.labels[s3.e] == '()'
    with pytest.raises(NotAGroup):
        FinGroup.from_elements(range(3), lambda a, b: a + b)


def test_conjugacy_classes(s3):
    """
    Test mlat.group.FinGroup.conjugacy_classes
    """
    sizes = sorted(popcount(c) for c in s3.conjugacy_classes())
    assert sizes == [1, 2, 3]
    assert s3.center() == s3.trivial_mask


@pytest.mark.parametrize(
    'name,count',
    [
        ('C2', 2), ('C4', 3), ('C2xC2', 5), ('S3', 3), ('D4', 6),
        ('Q8', 6), ('A4', 3), ('S4', 4), ('A5', 2),
    ]
)
def test_normal_subgroups(name, count):
    """
    Test mlat.group.normal_subgroups
    """
    G = catalog.group(name)
    found = normal_subgroups(G)
    assert len(found) == count
    assert all(G.is_normal(m) for m in found)


@pytest.mark.parametrize('name', SMALL_GROUPS)
def test_normal_subgroups_match_oracle(name):
    """
    Test mlat.group.normal_subgroups against the exhaustive subset scan
    """
    G = catalog.group(name)
    assert normal_subgroups(G) == normal_subgroups_oracle(G)


def test_subgroups_oracle(s3):
    """
    Test mlat.group.subgroups_oracle
    """
    assert len(subgroups_oracle(s3)) == 6
    assert len(subgroups_oracle(catalog.group('D4'))) == 10
    with pytest.raises(OrderBound):
        subgroups_oracle(catalog.group('S4'))


def test_order_bound():
    """
    Test mlat.group.normal_subgroups order bound
    """
    with pytest.raises(OrderBound):
        normal_subgroups(catalog.group('A5'), bound=10)


def test_commutator_subgroup(s3):
    """
    Test mlat.group.commutator_subgroup
    """
    full = s3.full_mask
    a3 = commutator_subgroup(s3, full, full)
    assert popcount(a3) == 3
    assert commutator_subgroup(s3, a3, a3) == s3.trivial_mask
    assert commutator_subgroup(s3, a3, full) == a3

    transposition = s3.labels.index('(12)')
    not_normal = s3.generate([transposition])
    with pytest.raises(NotNormal):
        commutator_subgroup(s3, not_normal, full)


def test_group_action_validation():
    """
    Test mlat.group.GroupAction
    """
    C3 = catalog.group('C3')
    inversion = [C3.inverse(x) for x in range(C3.n)]
    action = GroupAction(C3, [inversion])
    assert action.is_invariant(C3.full_mask)
    with pytest.raises(NotAnAutomorphism):
        GroupAction(C3, [[0, 0, 1]])
    with pytest.raises(NotAnAutomorphism):
        GroupAction(C3, [[1, 0, 2]])


@pytest.mark.parametrize(
    'name,count', [('C4', 2), ('C2xC2', 6), ('S3', 6), ('Q8', 24)]
)
def test_automorphisms(name, count):
    """
    Test mlat.group.automorphisms
    """
    G = catalog.group(name)
    assert len(automorphisms(G).gens) == count


def test_normal_mult_lattice_commutator(s3):
    """
    Test mlat.group.normal_mult_lattice with the commutator product
    """
    M = normal_mult_lattice(s3)
    assert M.labels == ['1', 'N3', 'S3']
    assert M.name == 'N(S3)'
    assert M.label(M.times(M.top, M.top)) == 'N3'
    laws = law_report(M)
    assert laws.commutative and laws.m_distributive
    assert not laws.associative


def test_normal_mult_lattice_other_products(s3):
    """
    Test mlat.group.normal_mult_lattice with intersection and zero products
    """
    M = normal_mult_lattice(s3, 'intersection')
    assert M.times(M.top, M.top) == M.top
    M = normal_mult_lattice(s3, 'zero')
    assert M.times(M.top, M.top) == M.bottom
    with pytest.raises(ValidationError):
        normal_mult_lattice(s3, 'product')


def test_invariant_lattices(q8):
    """
    Test mlat.group.normal_mult_lattice restricted by an action
    """
    inner = normal_mult_lattice(q8, action=inner_action(q8))
    assert inner.same_tables(normal_mult_lattice(q8))

    characteristic = normal_mult_lattice(q8, action=automorphisms(q8))
    assert characteristic.labels == ['1', 'N2', 'Q8']

    klein = catalog.group('C2xC2')
    M = normal_mult_lattice(klein, action=automorphisms(klein))
    assert M.n == 2

    with pytest.raises(ValidationError):
        normal_mult_lattice(q8, action=inner_action(klein))


@pytest.mark.parametrize(
    'name,nilpotent,solvable,perfect',
    [
        ('C4', True, True, False),
        ('S3', False, True, False),
        ('D4', True, True, False),
        ('Q8', True, True, False),
        ('A4', False, True, False),
        ('S4', False, True, False),
        ('A5', False, False, True),
    ]
)
def test_classify_group(name, nilpotent, solvable, perfect):
    """
    Test mlat.group.classify_group
    """
    c = classify_group(catalog.group(name))
    assert c.nilpotent == nilpotent
    assert c.solvable == solvable
    assert c.perfect == perfect
    assert c.lattice_agrees


def test_direct_product():
    """
    Test mlat.group.FinGroup.direct_product
    """
    C2 = catalog.group('C2')
    K = C2.direct_product(C2)
    assert K.n == 4
    assert K.is_abelian()
    assert all(K.order_of(x) <= 2 for x in range(K.n))
    assert len(normal_subgroups(K)) == 5


def test_permutation_group_labels():
    """
    Test mlat.catalog.permutation_group
    """
    G = permutation_group(SymmetricGroup(3), 'S3')
    assert sorted(G.labels) == sorted(
        ['()', '(12)', '(13)', '(23)', '(123)', '(132)']
    )
    assert permutation_group(DihedralGroup(4), 'D4').n == 8
