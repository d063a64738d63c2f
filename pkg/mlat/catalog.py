"""
Built-in structures

Groups are generated from sympy permutation groups (Q8 from the quaternion
units), rngs from residue and matrix arithmetic, braces from both. Every
structure is built once per process.
"""
import itertools
import logging
from functools import lru_cache

import numpy as np
from sympy.combinatorics.named_groups import (
    AbelianGroup,
    AlternatingGroup,
    CyclicGroup,
    DihedralGroup,
    SymmetricGroup,
)

from mlat.brace import brace_from_radical_rng, brace_lattice, trivial_brace
from mlat.errors import ValidationError
from mlat.group import FinGroup, normal_mult_lattice
from mlat.lattice import (
    CHAIN_KINDS,
    FinLattice,
    MultLattice,
    chain_mult_lattice,
    order_from_covers,
)
from mlat.rng import FinRng, ideal_lattice

SIMPLE_KINDS = ('meet', 'zero')

logger = logging.getLogger(__name__)


def _simple_multiplication(lat, kind):
    if kind not in SIMPLE_KINDS:
        raise ValidationError(
            f'Unknown multiplication {kind}, expected one of {SIMPLE_KINDS}'
        )
    if kind == 'meet':
        return lat.meet_tab
    return np.full((lat.n, lat.n), lat.bottom)


def boolean_lattice(atoms, kind='meet'):
    """
    Subsets of a set of atoms ordered by inclusion, labelled by their atoms
    ("0" for the empty set and "1" for the full set)
    """
    n = 1 << atoms
    idx = np.arange(n)
    leq = (idx[:, None] & ~idx[None, :]) == 0
    letters = 'abcdefghijklmnopqrstuvwxyz'
    labels = []
    for m in range(n):
        if m == 0:
            labels.append('0')
        elif m == n - 1:
            labels.append('1')
        else:
            labels.append(''.join(letters[i] for i in range(atoms) if m >> i & 1))
    lat = FinLattice(leq, labels)
    return MultLattice(
        lat, _simple_multiplication(lat, kind), name=f'boolean-{atoms}-{kind}'
    )


def pentagon(kind='meet'):
    """
    N5: 0 < a < c < 1 and 0 < b < 1
    """
    leq = order_from_covers(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])
    lat = FinLattice(leq, ['0', 'a', 'b', 'c', '1'])
    return MultLattice(
        lat, _simple_multiplication(lat, kind), name=f'N5-{kind}'
    )


def diamond(kind='meet'):
    """
    M3: three pairwise incomparable atoms between 0 and 1
    """
    leq = order_from_covers(
        5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
    )
    lat = FinLattice(leq, ['0', 'a', 'b', 'c', '1'])
    return MultLattice(
        lat, _simple_multiplication(lat, kind), name=f'M3-{kind}'
    )


def _cycle_label(p):
    cycles = p.cyclic_form
    if not cycles:
        return '()'
    return ''.join(
        '(' + ''.join(str(i + 1) for i in c) + ')' for c in cycles
    )


def permutation_group(P, name):
    """
    FinGroup of a sympy PermutationGroup, elements sorted by array form and
    labelled in 1-based cycle notation
    """
    elements = sorted(P.elements, key=lambda p: p.array_form)
    return FinGroup.from_elements(
        elements,
        lambda a, b: a * b,
        labels=[_cycle_label(p) for p in elements],
        name=name,
    )


_UNIT_PRODUCTS = {
    ('1', '1'): (1, '1'), ('1', 'i'): (1, 'i'),
    ('1', 'j'): (1, 'j'), ('1', 'k'): (1, 'k'),
    ('i', '1'): (1, 'i'), ('i', 'i'): (-1, '1'),
    ('i', 'j'): (1, 'k'), ('i', 'k'): (-1, 'j'),
    ('j', '1'): (1, 'j'), ('j', 'i'): (-1, 'k'),
    ('j', 'j'): (-1, '1'), ('j', 'k'): (1, 'i'),
    ('k', '1'): (1, 'k'), ('k', 'i'): (1, 'j'),
    ('k', 'j'): (-1, 'i'), ('k', 'k'): (-1, '1'),
}


def quaternion_group():
    """
    Q8 = {±1, ±i, ±j, ±k}
    """
    elements = [
        (s, u) for u in ('1', 'i', 'j', 'k') for s in (1, -1)
    ]

    def mult(a, b):
        sign, unit = _UNIT_PRODUCTS[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    labels = [('' if s == 1 else '-') + u for s, u in elements]
    return FinGroup.from_elements(elements, mult, labels=labels, name='Q8')


GROUPS = {
    'C2': lambda: permutation_group(CyclicGroup(2), 'C2'),
    'C3': lambda: permutation_group(CyclicGroup(3), 'C3'),
    'C4': lambda: permutation_group(CyclicGroup(4), 'C4'),
    'C2xC2': lambda: permutation_group(AbelianGroup(2, 2), 'C2xC2'),
    'S3': lambda: permutation_group(SymmetricGroup(3), 'S3'),
    'D4': lambda: permutation_group(DihedralGroup(4), 'D4'),
    'Q8': quaternion_group,
    'A4': lambda: permutation_group(AlternatingGroup(4), 'A4'),
    'S4': lambda: permutation_group(SymmetricGroup(4), 'S4'),
    'A5': lambda: permutation_group(AlternatingGroup(5), 'A5'),
}


def zmod(n, zero_multiplication=False):
    """
    Z/n, or the zero rng on the group Z/n
    """
    if zero_multiplication:
        return FinRng.from_elements(
            range(n), lambda a, b: (a + b) % n, lambda a, b: 0,
            name=f'zero(Z{n})'
        )
    return FinRng.from_elements(
        range(n), lambda a, b: (a + b) % n, lambda a, b: a * b % n,
        name=f'Z{n}'
    )


def even_residues(modulus):
    """
    2Z/modulus: the even residues with arithmetic mod modulus
    """
    return FinRng.from_elements(
        range(0, modulus, 2),
        lambda a, b: (a + b) % modulus,
        lambda a, b: a * b % modulus,
        name=f'2Z{modulus}',
    )


def _bits_label(t):
    return ''.join(str(b) for b in t)


def upper_triangular_f2():
    """
    T2(F2): matrices [[a, b], [0, d]] over F2 as (a, b, d)
    """
    elements = list(itertools.product((0, 1), repeat=3))

    def add(x, y):
        return tuple((p + q) % 2 for p, q in zip(x, y))

    def mul(x, y):
        a, b, d = x
        a2, b2, d2 = y
        return (a * a2 % 2, (a * b2 + b * d2) % 2, d * d2 % 2)

    return FinRng.from_elements(
        elements, add, mul, labels=[_bits_label(t) for t in elements],
        name='T2(F2)'
    )


def strictly_upper_f2():
    """
    N3(F2): matrices [[0, x, y], [0, 0, z], [0, 0, 0]] over F2 as (x, y, z)
    """
    elements = list(itertools.product((0, 1), repeat=3))

    def add(p, q):
        return tuple((s + t) % 2 for s, t in zip(p, q))

    def mul(p, q):
        return (0, p[0] * q[2] % 2, 0)

    return FinRng.from_elements(
        elements, add, mul, labels=[_bits_label(t) for t in elements],
        name='N3(F2)'
    )


RNGS = {
    'Z2': lambda: zmod(2),
    'Z4': lambda: zmod(4),
    'Z6': lambda: zmod(6),
    'Z8': lambda: zmod(8),
    '2Z8': lambda: even_residues(8),
    'zero(Z2)': lambda: zmod(2, zero_multiplication=True),
    'zero(Z4)': lambda: zmod(4, zero_multiplication=True),
    'T2(F2)': upper_triangular_f2,
    'N3(F2)': strictly_upper_f2,
}

BRACES = {
    'trivial(C2)': lambda: trivial_brace(group('C2')),
    'trivial(C4)': lambda: trivial_brace(group('C4')),
    'trivial(S3)': lambda: trivial_brace(group('S3')),
    'trivial(Q8)': lambda: trivial_brace(group('Q8')),
    'radical(2Z8)': lambda: brace_from_radical_rng(rng('2Z8')),
    'radical(N3(F2))': lambda: brace_from_radical_rng(rng('N3(F2)')),
}


def _lattice_factories():
    out = {}
    for kind in CHAIN_KINDS:
        for k in range(2, 6):
            out[f'chain-{kind}-{k}'] = (
                lambda k=k, kind=kind: chain_mult_lattice(k, kind)
            )
    for kind in SIMPLE_KINDS:
        for atoms in (2, 3):
            out[f'boolean-{atoms}-{kind}'] = (
                lambda atoms=atoms, kind=kind: boolean_lattice(atoms, kind)
            )
        out[f'N5-{kind}'] = lambda kind=kind: pentagon(kind)
        out[f'M3-{kind}'] = lambda kind=kind: diamond(kind)
    for name in ('C2', 'C4', 'C2xC2', 'S3', 'D4', 'Q8', 'A4', 'S4', 'A5'):
        out[f'N({name})'] = (
            lambda name=name: normal_mult_lattice(group(name), 'commutator')
        )
    for name in ('Z4', 'Z6', 'Z8', '2Z8'):
        out[f'I({name})'] = lambda name=name: ideal_lattice(rng(name))
    for name in ('trivial(S3)', 'trivial(Q8)', 'radical(2Z8)'):
        out[f'I({name})'] = lambda name=name: brace_lattice(brace(name))
    return out


LATTICES = _lattice_factories()

KINDS = {
    'group': GROUPS,
    'rng': RNGS,
    'brace': BRACES,
    'lattice': LATTICES,
}


def _build(kind, name):
    registry = KINDS[kind]
    if name not in registry:
        raise ValidationError(
            f'No built-in {kind} named {name}; known: {sorted(registry)}'
        )
    logger.debug(f'Building catalog {kind} {name}')
    return registry[name]()


@lru_cache(maxsize=None)
def group(name):
    return _build('group', name)


@lru_cache(maxsize=None)
def rng(name):
    return _build('rng', name)


@lru_cache(maxsize=None)
def brace(name):
    return _build('brace', name)


@lru_cache(maxsize=None)
def lattice(name):
    return _build('lattice', name)


def lookup(name):
    """
    Find a built-in structure of any kind by name

    :returns: (kind, structure)
    """
    builders = {'group': group, 'rng': rng, 'brace': brace, 'lattice': lattice}
    for kind, registry in KINDS.items():
        if name in registry:
            return kind, builders[kind](name)
    known = sorted(itertools.chain.from_iterable(KINDS.values()))
    raise ValidationError(f'No built-in structure named {name}; known: {known}')


def names(kind=None):
    """
    Catalog names, of one kind or of all kinds in registry order
    """
    if kind is not None:
        return list(KINDS[kind])
    return [n for registry in KINDS.values() for n in registry]
