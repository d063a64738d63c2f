"""
Finite rngs: associative rings that need not have an identity

Ideals are membership bitsets over the carrier. The circle operation
x∘y = x + y + xy makes R a monoid with identity 0, and the Jacobson radical is
read off that monoid directly:

    J(R) = {x : yx is left invertible in (R,∘) for every y}
"""
import logging
import string
from dataclasses import dataclass

import numpy as np

from mlat.config import RNG_MULTS, RNG_ORDER_BOUND
from mlat.errors import (
    NotAGroup,
    NotAnIdeal,
    NotARng,
    OrderBound,
    SizeMismatch,
    ValidationError,
    verify,
)
from mlat.group import FinGroup
from mlat.lattice import FinLattice, MultLattice, law_report
from mlat.series import classify
from mlat.utils import is_submask, mask_of, members, popcount

logger = logging.getLogger(__name__)


class FinRng(object):
    """
    A finite rng given by addition and multiplication tables
    """

    def __init__(self, add, mul, labels=None, name=None):
        """
        Validate the rng axioms exhaustively

        :param add: n×n addition table, an abelian group
        :param mul: n×n multiplication table, associative and distributive
        :param labels: display names of the elements
        :param name: display name
        """
        self.logger = logging.getLogger(type(self).__name__)
        self.name = name or 'R'
        try:
            self.additive = FinGroup(add, labels=labels, name=self.name)
        except NotAGroup as e:
            raise NotARng(f'Addition of {self.name} is not a group: {e}')
        self.n = self.additive.n
        self.labels = self.additive.labels
        self.add = self.additive.tab
        self.zero = self.additive.e
        self.neg = self.additive.inv
        if not self.additive.is_abelian():
            raise NotARng(f'Addition of {self.name} is not commutative')

        mul = np.asarray(mul)
        if mul.shape != (self.n, self.n):
            raise SizeMismatch(
                f'Multiplication table has shape {mul.shape}, expected '
                f'{(self.n, self.n)}'
            )
        if mul.min() < 0 or mul.max() >= self.n:
            raise NotARng(
                f'Multiplication entries must lie in [0, {self.n})'
            )
        self.mul = mul.astype(np.int64)
        self.mul.flags.writeable = False
        self._check_multiplication()

    def _check_multiplication(self):
        add, mul = self.add, self.mul
        for a in range(self.n):
            if (mul[mul[a]] != mul[a][mul]).any():
                b, c = np.argwhere(mul[mul[a]] != mul[a][mul])[0]
                raise NotARng(
                    f'Multiplication of {self.name} is not associative at '
                    f'({self.labels[a]}, {self.labels[b]}, {self.labels[c]})'
                )
            # a(b+c) = ab+ac and (b+c)a = ba+ca
            left = mul[a][add] != add[mul[a][:, None], mul[a][None, :]]
            right = mul[:, a][add] != add[mul[:, a][:, None], mul[:, a][None, :]]
            if left.any() or right.any():
                raise NotARng(
                    f'Multiplication of {self.name} does not distribute over '
                    f'addition at {self.labels[a]}'
                )

    @classmethod
    def from_elements(cls, elements, add, mul, labels=None, name=None):
        """
        Build the tables of a closed list of hashable elements

        :param add: callable returning the sum of two elements
        :param mul: callable returning the product of two elements
        """
        elements = list(elements)
        index = {x: i for i, x in enumerate(elements)}
        try:
            add_tab = [[index[add(a, b)] for b in elements] for a in elements]
            mul_tab = [[index[mul(a, b)] for b in elements] for a in elements]
        except KeyError as e:
            raise NotARng(f'Result {e} falls outside the element list')
        if labels is None:
            labels = [str(x) for x in elements]
        return cls(add_tab, mul_tab, labels=labels, name=name)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @property
    def zero_mask(self):
        return 1 << self.zero

    def is_commutative(self):
        return bool((self.mul == self.mul.T).all())

    def additive_closure(self, elements):
        mask = mask_of(set(int(x) for x in elements) | {self.zero})
        while True:
            el = members(mask)
            grown = mask | mask_of(np.unique(self.add[np.ix_(el, el)]))
            if grown == mask:
                return mask
            mask = grown

    def ideal_closure(self, elements):
        """
        Two-sided ideal generated by elements, as a mask
        """
        mask = self.additive_closure(elements)
        while True:
            el = members(mask)
            grown = self.additive_closure(
                members(mask)
                + np.unique(self.mul[:, el]).tolist()
                + np.unique(self.mul[el, :]).tolist()
            )
            if grown == mask:
                return mask
            mask = grown

    def is_ideal(self, mask):
        if not mask >> self.zero & 1:
            return False
        el = members(mask)
        closed = mask_of(np.unique(self.add[np.ix_(el, el)]))
        closed |= mask_of(np.unique(self.mul[:, el]))
        closed |= mask_of(np.unique(self.mul[el, :]))
        return closed | mask == mask

    def __repr__(self):
        return f'FinRng({self.name}, order={self.n})'


def ideals(R, bound=RNG_ORDER_BOUND):
    """
    All two-sided ideals: sums of principal ideals, sorted by mask
    """
    if R.n > bound:
        raise OrderBound(R.n, bound, 'rng')
    found = {R.zero_mask}
    found.update(R.ideal_closure([x]) for x in range(R.n))
    while True:
        sums = {R.ideal_closure(members(a | b)) for a in found for b in found}
        if sums <= found:
            break
        found |= sums
    return sorted(found)


def _check_ideal(R, mask):
    if not R.is_ideal(mask):
        raise NotAnIdeal(
            f'{[R.labels[x] for x in members(mask)]} is not an ideal of '
            f'{R.name}'
        )


def ideal_product(R, I, J):
    """
    IJ, the additive closure of {ij : i in I, j in J}

    :returns: mask of the product ideal
    """
    _check_ideal(R, I)
    _check_ideal(R, J)
    products = R.mul[np.ix_(members(I), members(J))]
    P = R.additive_closure(np.unique(products))
    verify(R.is_ideal(P), 'the product of ideals is an ideal', R.name)
    verify(is_submask(P, I & J), 'IJ is contained in I∩J', R.name)
    return P


def ring_commutator(R, I, J):
    """
    The ideal generated by ij - ji for i in I, j in J
    """
    _check_ideal(R, I)
    _check_ideal(R, J)
    idx = np.ix_(members(I), members(J))
    ij = R.mul[idx]
    ji = R.mul.T[idx]
    diffs = R.add[ij, np.asarray(R.neg)[ji]]
    return R.ideal_closure(np.unique(diffs))


def _ideal_labels(R, masks):
    """
    "0" for the zero ideal, "(g)" for a principal ideal with lowest-index
    generator g and I<order> otherwise
    """
    principal = {}
    for x in range(R.n):
        principal.setdefault(R.ideal_closure([x]), x)
    named = []
    for m in masks:
        if m == R.zero_mask:
            named.append('0')
        elif m in principal:
            named.append(f'({R.labels[principal[m]]})')
        else:
            named.append(f'I{popcount(m)}')
    counts = {}
    for lb in named:
        counts[lb] = counts.get(lb, 0) + 1
    seen = {}
    labels = []
    for lb in named:
        if counts[lb] > 1:
            seen[lb] = seen.get(lb, 0) + 1
            lb = f"{lb}{string.ascii_lowercase[seen[lb] - 1]}"
        labels.append(lb)
    return labels


def ideal_lattice(R, mult='product', bound=RNG_ORDER_BOUND):
    """
    The lattice of ideals with join I+J and meet I∩J

    :param mult: 'product', 'intersection', 'zero' or 'ring-commutator'
    :returns: MultLattice whose masks are the ideals
    """
    mult = mult.replace('_', '-')
    if mult not in RNG_MULTS:
        raise ValidationError(
            f'Unknown rng multiplication {mult}, expected one of {RNG_MULTS}'
        )
    masks = ideals(R, bound)
    k = len(masks)
    pos = {m: i for i, m in enumerate(masks)}
    leq = [[is_submask(a, b) for b in masks] for a in masks]
    lat = FinLattice(leq, _ideal_labels(R, masks))

    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            verify(
                masks[lat.join(i, j)] == R.ideal_closure(members(a | b)),
                'I+J is the join of ideals', R.name
            )

    if mult == 'product':
        mul = [[pos[ideal_product(R, a, b)] for b in masks] for a in masks]
    elif mult == 'intersection':
        mul = [[pos[a & b] for b in masks] for a in masks]
    elif mult == 'ring-commutator':
        mul = [[pos[ring_commutator(R, a, b)] for b in masks] for a in masks]
    else:
        mul = [[lat.bottom] * k for _ in masks]

    M = MultLattice(lat, mul, name=f'I({R.name})', masks=masks)
    if mult == 'product':
        laws = law_report(M)
        verify(
            laws.associative and laws.m_distributive,
            'the ideal product is associative and m-distributive', R.name
        )
    logger.debug(f'{M.name}: {k} ideals, {mult} multiplication')
    return M


@dataclass(frozen=True)
class RadicalReport:
    circle: np.ndarray
    jacobson: int
    is_radical_ring: bool


def circle_table(R):
    """
    x∘y = x + y + xy
    """
    return R.add[R.add, R.mul]


def circle_and_radical(R):
    """
    The circle monoid, the Jacobson radical and whether R is a radical ring

    :returns: RadicalReport
    """
    circ = circle_table(R)
    ar = np.arange(R.n)
    verify(
        bool((circ[R.zero] == ar).all() and (circ[:, R.zero] == ar).all()),
        '0 is the identity of (R,∘)', R.name
    )
    for a in range(R.n):
        verify(
            bool((circ[circ[a]] == circ[a][circ]).all()),
            '∘ is associative', f'{R.name}: {R.labels[a]}'
        )

    left_invertible = (circ == R.zero).any(axis=0)
    right_invertible = (circ == R.zero).any(axis=1)
    units = left_invertible & right_invertible
    J = mask_of(x for x in range(R.n) if left_invertible[R.mul[:, x]].all())

    verify(R.is_ideal(J), 'J(R) is an ideal', R.name)
    inside_units = [
        m for m in ideals(R, bound=R.n)
        if all(units[x] for x in members(m))
    ]
    verify(
        J in inside_units and all(is_submask(m, J) for m in inside_units),
        'J(R) is the largest ideal of ∘-units', R.name
    )

    radical = J == R.full_mask
    verify(
        radical == bool(units.all()),
        'R = J(R) iff (R,∘) is a group', R.name
    )
    return RadicalReport(circle=circ, jacobson=J, is_radical_ring=radical)


@dataclass(frozen=True)
class RngClassification:
    nilpotent: bool
    zero_multiplication: bool
    commutative: bool
    radical: bool
    lattice_agrees: bool


def classify_rng(R, bound=RNG_ORDER_BOUND):
    """
    Nilpotency (R^k = 0 for some k) and zero multiplication, decided
    directly and through the top of the product ideal lattice

    :returns: RngClassification
    """
    if R.n > bound:
        raise OrderBound(R.n, bound, 'rng')
    powers = [R.full_mask]
    while True:
        nxt = ideal_product(R, powers[-1], R.full_mask)
        if nxt == powers[-1]:
            break
        powers.append(nxt)
    nilpotent = powers[-1] == R.zero_mask
    zero_mul = bool((R.mul == R.zero).all())

    M = ideal_lattice(R, 'product', bound=bound)
    flags = classify(M, M.top)
    agrees = (
        flags.left_nilpotent == flags.right_nilpotent == flags.solvable
        == nilpotent
        and flags.abelian == zero_mul
    )
    verify(
        agrees, 'lattice classification matches the rng',
        f'{R.name}: nilpotent={nilpotent}, zero={zero_mul}, lattice={flags}'
    )
    return RngClassification(
        nilpotent=nilpotent,
        zero_multiplication=zero_mul,
        commutative=R.is_commutative(),
        radical=circle_and_radical(R).is_radical_ring,
        lattice_agrees=agrees,
    )
