"""
Finite groups given by Cayley tables and their normal-subgroup lattices

Subgroups are membership bitsets (Python ints) over the carrier, so the
lattice of normal subgroups is ordered by submask inclusion and every list of
subgroups is sorted by mask value.
"""
import itertools
import logging
import string
from dataclasses import dataclass

import numpy as np

from mlat.config import (
    GROUP_MULTS,
    GROUP_ORDER_BOUND,
    SUBGROUP_ORACLE_BOUND,
)
from mlat.errors import (
    NotAGroup,
    NotAnAutomorphism,
    NotNormal,
    OrderBound,
    SizeMismatch,
    ValidationError,
    verify,
)
from mlat.lattice import FinLattice, MultLattice, law_report
from mlat.series import classify
from mlat.utils import is_submask, mask_of, members, popcount

logger = logging.getLogger(__name__)


class FinGroup(object):
    """
    A finite group on {0, ..., n-1} given by its Cayley table
    """

    def __init__(self, table, labels=None, name=None):
        """
        Validate the group axioms exhaustively

        :param table: n×n table, table[a][b] = ab
        :type table: array-like
        :param labels: display names of the elements
        :type labels: list of str
        :param name: display name of the group
        :type name: str
        """
        self.logger = logging.getLogger(type(self).__name__)
        tab = np.asarray(table)
        if tab.ndim != 2 or tab.shape[0] != tab.shape[1] or not tab.size:
            raise NotAGroup('Cayley table must be square and nonempty')
        self.n = tab.shape[0]
        if tab.min() < 0 or tab.max() >= self.n:
            raise NotAGroup(f'Cayley table entries must lie in [0, {self.n})')
        self.tab = tab.astype(np.int64)
        self.tab.flags.writeable = False
        self.name = name or 'G'
        if labels is None:
            labels = [str(i) for i in range(self.n)]
        if len(labels) != self.n:
            raise SizeMismatch(
                f'{len(labels)} labels given for a group of order {self.n}'
            )
        self.labels = [str(lb) for lb in labels]
        self.e, self.inv = self._check_axioms()

    def _check_axioms(self):
        tab = self.tab
        ar = np.arange(self.n)
        ids = [
            x for x in range(self.n)
            if (tab[x] == ar).all() and (tab[:, x] == ar).all()
        ]
        if not ids:
            raise NotAGroup(f'{self.name} has no identity element')
        e = ids[0]

        rows, cols = np.nonzero(tab == e)
        inv = np.full(self.n, -1, dtype=np.int64)
        inv[rows] = cols
        if (inv < 0).any():
            x = int(np.flatnonzero(inv < 0)[0])
            raise NotAGroup(f'{self.labels[x]} has no inverse in {self.name}')
        if (tab[inv, ar] != e).any():
            x = int(np.flatnonzero(tab[inv, ar] != e)[0])
            raise NotAGroup(
                f'{self.labels[x]} has no two-sided inverse in {self.name}'
            )

        for a in range(self.n):
            # (ab)c against a(bc) for all b, c
            if (tab[tab[a]] != tab[a][tab]).any():
                b, c = np.argwhere(tab[tab[a]] != tab[a][tab])[0]
                raise NotAGroup(
                    f'{self.name} is not associative at '
                    f'({self.labels[a]}, {self.labels[b]}, {self.labels[c]})'
                )
        return e, [int(i) for i in inv]

    @classmethod
    def from_elements(cls, elements, mult, labels=None, name=None):
        """
        Build the Cayley table of a closed list of hashable elements

        :param elements: the group elements
        :param mult: callable returning the product of two elements
        """
        elements = list(elements)
        index = {x: i for i, x in enumerate(elements)}
        try:
            table = [
                [index[mult(a, b)] for b in elements] for a in elements
            ]
        except KeyError as e:
            raise NotAGroup(f'Product {e} falls outside the element list')
        if labels is None:
            labels = [str(x) for x in elements]
        return cls(table, labels=labels, name=name)

    def op(self, a, b):
        return int(self.tab[a, b])

    def inverse(self, a):
        return self.inv[a]

    def conjugate(self, x, g):
        """
        g⁻¹xg
        """
        return int(self.tab[self.tab[self.inv[g], x], g])

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @property
    def trivial_mask(self):
        return 1 << self.e

    def is_abelian(self):
        return bool((self.tab == self.tab.T).all())

    def generate(self, elements):
        """
        Subgroup generated by elements, as a mask
        """
        gens = sorted(set(int(x) for x in elements))
        found = {self.e}
        frontier = [self.e]
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    c = int(self.tab[a, g])
                    if c not in found:
                        found.add(c)
                        new.append(c)
            frontier = new
        return mask_of(found)

    def conjugacy_classes(self):
        """
        Conjugacy classes as masks, sorted by mask
        """
        seen = 0
        classes = []
        for x in range(self.n):
            if seen >> x & 1:
                continue
            cls_mask = mask_of(np.unique(self._conjugates(1 << x)))
            classes.append(cls_mask)
            seen |= cls_mask
        return sorted(classes)

    def _conjugates(self, mask):
        """
        n×k table of g⁻¹hg for every g and every h in mask
        """
        elems = np.asarray(members(mask))
        inv = np.asarray(self.inv)
        left = self.tab[inv[:, None], elems[None, :]]
        return self.tab[left, np.arange(self.n)[:, None]]

    def normal_closure(self, elements):
        """
        Smallest normal subgroup containing elements
        """
        mask = self.generate(elements)
        while True:
            grown = self.generate(np.unique(self._conjugates(mask)))
            if grown == mask:
                return mask
            mask = grown

    def is_subgroup(self, mask):
        if not mask >> self.e & 1:
            return False
        elems = members(mask)
        products = self.tab[np.ix_(elems, elems)]
        return mask_of(np.unique(products)) | mask == mask

    def is_normal(self, mask):
        if not self.is_subgroup(mask):
            return False
        return mask_of(np.unique(self._conjugates(mask))) | mask == mask

    def center(self):
        return mask_of(
            x for x in range(self.n)
            if (self.tab[x] == self.tab[:, x]).all()
        )

    def order_of(self, x):
        k, y = 1, x
        while y != self.e:
            y = int(self.tab[y, x])
            k += 1
        return k

    def direct_product(self, other, name=None):
        """
        H × K with componentwise multiplication; the pair (h, k) has index
        h·|K| + k
        """
        n, m = self.n, other.n
        h = np.arange(n * m) // m
        k = np.arange(n * m) % m
        table = (
            self.tab[h[:, None], h[None, :]] * m
            + other.tab[k[:, None], k[None, :]]
        )
        labels = [
            f'({self.labels[a]},{other.labels[b]})'
            for a, b in zip(h, k)
        ]
        return FinGroup(
            table, labels=labels, name=name or f'{self.name}x{other.name}'
        )

    def __repr__(self):
        return f'FinGroup({self.name}, order={self.n})'


class GroupAction(object):
    """
    A group acting on H by automorphisms, given by the automorphisms that
    generate its image in Aut(H)
    """

    def __init__(self, group, gens):
        """
        :param group: the acted-on group H
        :type group: FinGroup
        :param gens: permutations of the carrier of H
        :type gens: list of list of int
        """
        self.logger = logging.getLogger(type(self).__name__)
        self.group = group
        self.gens = []
        for g in gens:
            g = np.asarray(g, dtype=np.int64)
            if sorted(g.tolist()) != list(range(group.n)):
                raise NotAnAutomorphism(
                    f'{g.tolist()} is not a permutation of {group.name}'
                )
            tab = group.tab
            if (g[tab] != tab[g[:, None], g[None, :]]).any():
                a, b = np.argwhere(g[tab] != tab[g[:, None], g[None, :]])[0]
                raise NotAnAutomorphism(
                    f'g(hh\') != g(h)g(h\') at ({group.labels[a]}, '
                    f'{group.labels[b]})'
                )
            self.gens.append(g)

    def is_invariant(self, mask):
        elems = members(mask)
        return all(
            mask_of(g[elems]) | mask == mask for g in self.gens
        )


def inner_action(G):
    """
    G acting on itself by conjugation; its invariant subgroups are the
    normal subgroups
    """
    perms = [
        [G.conjugate(x, g) for x in range(G.n)] for g in range(G.n)
    ]
    return GroupAction(G, perms)


def _generating_set(G):
    gens = []
    mask = G.trivial_mask
    for x in range(G.n):
        if not mask >> x & 1:
            gens.append(x)
            mask = G.generate(gens)
    return gens


def _extend_homomorphism(G, gens, images):
    phi = {G.e: G.e}
    frontier = [G.e]
    while frontier:
        new = []
        for x in frontier:
            for g, img in zip(gens, images):
                y = G.op(x, g)
                val = G.op(phi[x], img)
                if y in phi:
                    if phi[y] != val:
                        return None
                else:
                    phi[y] = val
                    new.append(y)
        frontier = new
    if len(set(phi.values())) != G.n:
        return None
    return [phi[x] for x in range(G.n)]


def automorphisms(G, bound=GROUP_ORDER_BOUND):
    """
    Aut(G) by trying every image tuple of a generating set, pruned by element
    order

    :returns: GroupAction of the full automorphism group
    """
    if G.n > bound:
        raise OrderBound(G.n, bound, 'group')
    gens = _generating_set(G)
    orders = [G.order_of(x) for x in range(G.n)]
    candidates = [
        [y for y in range(G.n) if orders[y] == orders[g]] for g in gens
    ]
    auts = []
    for images in itertools.product(*candidates):
        phi = _extend_homomorphism(G, gens, images)
        if phi is not None:
            auts.append(phi)
    logger.debug(f'{G.name}: {len(auts)} automorphisms')
    return GroupAction(G, auts)


def normal_subgroups(G, bound=GROUP_ORDER_BOUND):
    """
    All normal subgroups, as joins of normal closures of conjugacy classes

    :returns: masks sorted by value
    """
    if G.n > bound:
        raise OrderBound(G.n, bound, 'group')
    found = {G.trivial_mask}
    found.update(
        G.normal_closure(members(c)) for c in G.conjugacy_classes()
    )
    while True:
        joins = {
            G.generate(members(a | b)) for a in found for b in found
        }
        if joins <= found:
            break
        found |= joins
    return sorted(found)


def subgroups_oracle(G, bound=SUBGROUP_ORACLE_BOUND):
    """
    Every subgroup by scanning the subsets that contain the identity and
    whose size divides |G|
    """
    if G.n > bound:
        raise OrderBound(G.n, bound, 'group')
    others = [x for x in range(G.n) if x != G.e]
    found = []
    for size in range(1, G.n + 1):
        if G.n % size:
            continue
        for rest in itertools.combinations(others, size - 1):
            mask = mask_of(rest) | G.trivial_mask
            if G.is_subgroup(mask):
                found.append(mask)
    return sorted(found)


def normal_subgroups_oracle(G, bound=SUBGROUP_ORACLE_BOUND):
    return [m for m in subgroups_oracle(G, bound) if G.is_normal(m)]


def commutator_subgroup(G, A, B):
    """
    [A, B], generated by a⁻¹b⁻¹ab for a in A, b in B

    :param A: normal subgroup mask
    :param B: normal subgroup mask
    :returns: mask of [A, B]
    """
    for mask in (A, B):
        if not G.is_normal(mask):
            raise NotNormal(
                f'{[G.labels[x] for x in members(mask)]} is not a normal '
                f'subgroup of {G.name}'
            )
    a = np.asarray(members(A))
    b = np.asarray(members(B))
    inv = np.asarray(G.inv)
    comms = G.tab[
        G.tab[inv[a][:, None], inv[b][None, :]],
        G.tab[a[:, None], b[None, :]]
    ]
    C = G.generate(np.unique(comms))
    verify(G.is_normal(C), '[A,B] is normal', G.name)
    verify(
        is_submask(C, A) and is_submask(C, B),
        '[A,B] is contained in A and in B', G.name
    )
    return C


def _subgroup_labels(G, masks):
    """
    "1" for the trivial subgroup, the group name for G and N<order> otherwise,
    with a letter suffix when orders repeat
    """
    by_order = {}
    for m in masks:
        by_order.setdefault(popcount(m), []).append(m)
    labels = []
    for m in masks:
        if m == G.trivial_mask:
            labels.append('1')
        elif m == G.full_mask:
            labels.append(G.name)
        else:
            same = by_order[popcount(m)]
            suffix = ''
            if len(same) > 1:
                suffix = string.ascii_lowercase[same.index(m)]
            labels.append(f'N{popcount(m)}{suffix}')
    return labels


def normal_mult_lattice(G, mult='commutator', action=None,
                        bound=GROUP_ORDER_BOUND):
    """
    The lattice N(G) of normal subgroups, or of the action-invariant normal
    subgroups when action is given, with join AB and meet A∩B

    :param mult: 'commutator', 'intersection' or 'zero'
    :param action: optional GroupAction on G
    :returns: MultLattice whose masks are the subgroups
    """
    if mult not in GROUP_MULTS:
        raise ValidationError(
            f'Unknown group multiplication {mult}, expected one of '
            f'{GROUP_MULTS}'
        )
    if action is not None and action.group is not G:
        raise ValidationError('The action must act on the given group')
    masks = normal_subgroups(G, bound)
    if action is not None:
        masks = [m for m in masks if action.is_invariant(m)]

    k = len(masks)
    pos = {m: i for i, m in enumerate(masks)}
    leq = [[is_submask(a, b) for b in masks] for a in masks]
    lat = FinLattice(leq, _subgroup_labels(G, masks))

    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            verify(
                masks[lat.join(i, j)] == G.generate(members(a | b)),
                'AB is the join of normal subgroups', G.name
            )
            verify(
                masks[lat.meet(i, j)] == a & b,
                'A∩B is the meet of normal subgroups', G.name
            )
    verify(lat.is_modular(), 'N(G) is modular', G.name)

    if mult == 'commutator':
        mul = [
            [pos[commutator_subgroup(G, a, b)] for b in masks]
            for a in masks
        ]
    elif mult == 'intersection':
        mul = [[pos[a & b] for b in masks] for a in masks]
    else:
        mul = [[lat.bottom] * k for _ in masks]

    M = MultLattice(lat, mul, name=f'N({G.name})', masks=masks)
    if mult == 'commutator':
        laws = law_report(M)
        verify(
            laws.commutative and laws.m_distributive,
            'the commutator product is commutative and m-distributive',
            G.name
        )
    logger.debug(f'{M.name}: {k} normal subgroups, {mult} multiplication')
    return M


@dataclass(frozen=True)
class GroupClassification:
    nilpotent: bool
    solvable: bool
    abelian: bool
    perfect: bool
    lattice_agrees: bool


def _iterate_commutators(G, step):
    terms = [G.full_mask]
    while True:
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            return terms
        terms.append(nxt)


def classify_group(G, bound=GROUP_ORDER_BOUND):
    """
    Nilpotency, solvability, abelianness and perfectness of G, decided both
    by the lower central and derived series of subgroups and by classifying
    the top of the commutator lattice N(G)

    :returns: GroupClassification
    """
    if G.n > bound:
        raise OrderBound(G.n, bound, 'group')
    full = G.full_mask
    lower = _iterate_commutators(
        G, lambda H: commutator_subgroup(G, H, full)
    )
    derived = _iterate_commutators(
        G, lambda H: commutator_subgroup(G, H, H)
    )
    commutator = commutator_subgroup(G, full, full)
    direct = dict(
        nilpotent=lower[-1] == G.trivial_mask,
        solvable=derived[-1] == G.trivial_mask,
        abelian=G.is_abelian(),
        perfect=commutator == full,
    )

    M = normal_mult_lattice(G, 'commutator', bound=bound)
    flags = classify(M, M.top)
    via_lattice = dict(
        nilpotent=flags.left_nilpotent,
        solvable=flags.solvable,
        abelian=flags.abelian,
        perfect=flags.idempotent,
    )
    agrees = direct == via_lattice
    verify(
        agrees, 'lattice classification matches the group',
        f'{G.name}: direct={direct}, lattice={via_lattice}'
    )
    return GroupClassification(lattice_agrees=agrees, **direct)
