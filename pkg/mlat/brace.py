"""
Finite skew braces

A skew brace is a set A with two group operations * and ∘ sharing the
identity e and linked by

    a∘(b*c) = (a∘b) * a⁻¹ * (a∘c)

where a⁻¹ is the inverse for *. The maps λ_a(b) = a⁻¹*(a∘b) are
automorphisms of (A,*) and a -> λ_a is a homomorphism from (A,∘), which gives
the semidirect product P = (A,*) ⋊ (A,∘) on A×A:

    (a1, a2)(b1, b2) = (a1 * λ_a2(b1), a2∘b2)

Pairs (a1, a2) of A×A are indexed a1·n + a2.
"""
import logging
from dataclasses import dataclass
from functools import reduce

import numpy as np

from mlat.config import BRACE_ORDER_BOUND
from mlat.errors import (
    NotAGroup,
    NotAnIdeal,
    NotARadicalRing,
    NotASkewBrace,
    OrderBound,
    UndefinedAnnihilator,
    verify,
)
from mlat.group import (
    FinGroup,
    GroupAction,
    _subgroup_labels,
    normal_mult_lattice,
    normal_subgroups,
)
from mlat.lattice import FinLattice, MultLattice
from mlat.rng import circle_and_radical
from mlat.series import annihilators
from mlat.utils import is_submask, mask_of, members

logger = logging.getLogger(__name__)


class SkewBrace(object):
    """
    A skew brace given by the tables of (A,∘) and (A,*)
    """

    def __init__(self, circ, star, labels=None, name=None, rng=None):
        """
        Validate both groups and the skew brace law on all triples

        :param circ: n×n table of (A,∘)
        :param star: n×n table of (A,*)
        :param labels: display names of the elements
        :param name: display name
        :param rng: the radical rng the brace was built from, if any
        :type rng: FinRng
        """
        self.logger = logging.getLogger(type(self).__name__)
        self.name = name or 'A'
        self.rng = rng
        try:
            self.circ_group = FinGroup(circ, labels, name=f'({self.name},∘)')
        except NotAGroup as e:
            raise NotASkewBrace(f'circ is not a group: {e}')
        try:
            self.star_group = FinGroup(star, labels, name=f'({self.name},*)')
        except NotAGroup as e:
            raise NotASkewBrace(f'star is not a group: {e}')
        if self.circ_group.n != self.star_group.n:
            raise NotASkewBrace('circ and star have different orders')
        if self.circ_group.e != self.star_group.e:
            raise NotASkewBrace('circ and star have different identities')

        self.n = self.star_group.n
        self.labels = self.star_group.labels
        self.e = self.star_group.e
        self.circ = self.circ_group.tab
        self.star = self.star_group.tab
        self.inv_circ = np.asarray(self.circ_group.inv)
        self.inv_star = np.asarray(self.star_group.inv)
        self._check_law()

        # lam[a, b] = λ_a(b)
        self.lam = self.star[self.inv_star[:, None], self.circ]
        self._semidirect = None
        self._ideals = None

    def _check_law(self):
        star, circ, inv = self.star, self.circ, self.inv_star
        for a in range(self.n):
            lhs = circ[a][star]
            rhs = star[star[circ[a][:, None], inv[a]], circ[a][None, :]]
            if (lhs != rhs).any():
                b, c = np.argwhere(lhs != rhs)[0]
                raise NotASkewBrace(
                    f'{self.name} violates a∘(b*c) = (a∘b)*a⁻¹*(a∘c) at '
                    f'({self.labels[a]}, {self.labels[b]}, {self.labels[c]})'
                )

    def __repr__(self):
        return f'SkewBrace({self.name}, order={self.n})'


def trivial_brace(G):
    """
    The brace with both operations equal to the multiplication of G
    """
    return SkewBrace(G.tab, G.tab, G.labels, name=f'trivial({G.name})')


def brace_from_radical_rng(R):
    """
    (R, +) with the circle operation x∘y = x + y + xy

    :type R: FinRng
    """
    report = circle_and_radical(R)
    if not report.is_radical_ring:
        raise NotARadicalRing(f'{R.name} is not a radical ring')
    return SkewBrace(
        report.circle, R.add, R.labels, name=f'radical({R.name})', rng=R
    )


def is_abelian_brace(A):
    """
    The two operations coincide and are commutative
    """
    return bool((A.circ == A.star).all() and (A.star == A.star.T).all())


def lambda_action(A):
    """
    λ as an action of (A,∘) on (A,*) by automorphisms

    :returns: GroupAction on the star group, one permutation per element
    """
    lam = A.lam
    tab = A.star
    ar = np.arange(A.n)
    for a in range(A.n):
        verify(
            bool((lam[a][tab] == tab[lam[a][:, None], lam[a][None, :]]).all()),
            'λ_a is an automorphism of (A,*)', f'{A.name}: {A.labels[a]}'
        )
    verify(
        bool((lam[A.circ] == lam[ar[:, None, None], lam[None, :, :]]).all()),
        'λ_{a∘b} = λ_a λ_b', A.name
    )
    verify(bool((lam[A.e] == ar).all()), 'λ_e is the identity', A.name)
    return GroupAction(A.star_group, [lam[a].tolist() for a in range(A.n)])


def _semidirect_table(n, star, circ, lam):
    i = np.arange(n * n)
    a1, a2 = i // n, i % n
    first = star[a1[:, None], lam[a2[:, None], a1[None, :]]]
    second = circ[a2[:, None], a2[None, :]]
    return first * n + second


def semidirect_product(A):
    """
    P = (A,*) ⋊ (A,∘), a group of order n²
    """
    if A._semidirect is None:
        labels = [
            f'({A.labels[a]},{A.labels[b]})'
            for a in range(A.n) for b in range(A.n)
        ]
        A._semidirect = FinGroup(
            _semidirect_table(A.n, A.star, A.circ, A.lam), labels,
            name=f'P({A.name})'
        )
    return A._semidirect


def is_skew_brace_via_semidirect(circ, star):
    """
    Two group tables with a common identity form a skew brace iff the
    semidirect operation built from them is a group

    :returns: bool, checked against the brace law directly
    """
    circ_g = FinGroup(circ)
    star_g = FinGroup(star)
    if circ_g.n != star_g.n or circ_g.e != star_g.e:
        return False
    n = star_g.n
    lam = star_g.tab[np.asarray(star_g.inv)[:, None], circ_g.tab]
    try:
        FinGroup(_semidirect_table(n, star_g.tab, circ_g.tab, lam))
        via_product = True
    except NotAGroup:
        via_product = False
    try:
        SkewBrace(circ, star)
        direct = True
    except NotASkewBrace:
        direct = False
    verify(
        via_product == direct,
        'skew brace iff the semidirect operation is a group'
    )
    return direct


@dataclass(frozen=True)
class YbeReport:
    r: np.ndarray
    bijective: bool
    braid_holds: bool
    involutive: bool

    def pair(self, x, y):
        n = self.r.shape[0]
        return tuple(int(v) for v in divmod(int(self.r[x, y]), n))


def ybe_solution(A):
    """
    r(x, y) = (λ_x(y), λ_x(y)'∘x∘y) with ' the ∘-inverse

    Bijectivity is read off the table; the braid relation
    (r×id)(id×r)(r×id) = (id×r)(r×id)(id×r) is checked on all triples.

    :returns: YbeReport whose table holds r(x, y) as the pair index u·n + v
    """
    n = A.n
    u = A.lam
    v = A.circ[A.circ[A.inv_circ[u], np.arange(n)[:, None]],
               np.arange(n)[None, :]]
    r = u * n + v

    if A.rng is not None:
        R = A.rng
        ring_u = R.add[R.mul, np.arange(n)[None, :]]
        verify(
            bool((u == ring_u).all()),
            'r(x,y) has first component xy + y on radical rings', A.name
        )

    flat = r.ravel()
    bijective = len(np.unique(flat)) == n * n

    t = np.arange(n ** 3)
    x, y, z = t // (n * n), (t // n) % n, t % n
    r12 = flat[x * n + y] * n + z
    r23 = x * n * n + flat[y * n + z]
    lhs = r12[r23[r12[t]]]
    rhs = r23[r12[r23[t]]]
    braid = bool((lhs == rhs).all())
    involutive = bool((flat[flat] == np.arange(n * n)).all())

    verify(bijective, 'r is bijective', A.name)
    verify(braid, 'r satisfies the braid relation', A.name)
    if A.rng is not None:
        verify(involutive, 'r is involutive on radical rings', A.name)
    return YbeReport(
        r=r, bijective=bijective, braid_holds=braid, involutive=involutive
    )


def _coset_ids(A, mask):
    """
    cid[x] = least index of the coset I*x
    """
    return A.star[np.asarray(members(mask))].min(axis=0)


def _is_congruence(A, cid):
    for tab in (A.star, A.circ):
        seen = {}
        for a in range(A.n):
            for b in range(A.n):
                key = (cid[a], cid[b])
                val = cid[tab[a, b]]
                if seen.setdefault(key, val) != val:
                    return False
    return True


def is_brace_ideal(A, mask):
    """
    Normal in (A,*) and in (A,∘) with I∘a = I*a for every a
    """
    if not (A.star_group.is_normal(mask) and A.circ_group.is_normal(mask)):
        return False
    el = members(mask)
    return all(
        mask_of(A.circ[el, a]) == mask_of(A.star[el, a]) for a in range(A.n)
    )


def _check_ideal(A, mask):
    if not is_brace_ideal(A, mask):
        raise NotAnIdeal(
            f'{[A.labels[x] for x in members(mask)]} is not an ideal of '
            f'{A.name}'
        )


def brace_ideals(A, bound=BRACE_ORDER_BOUND):
    """
    All ideals, sorted by mask

    Also checks that ideals correspond to congruences: the cosets of each
    ideal form a congruence for both operations, and every partition into
    cosets of a normal subgroup of (A,*) that is a congruence for ∘ has an
    ideal as the class of e.
    """
    if A.n > bound:
        raise OrderBound(A.n, bound, 'brace')
    if A._ideals is not None:
        return A._ideals
    star_normals = normal_subgroups(A.star_group)
    found = [m for m in star_normals if is_brace_ideal(A, m)]

    kernels = [
        m for m in star_normals if _is_congruence(A, _coset_ids(A, m))
    ]
    for m in found:
        verify(
            _is_congruence(A, _coset_ids(A, m)),
            'the cosets of an ideal form a congruence', A.name
        )
    verify(
        kernels == found,
        'ideals correspond one-to-one to congruences', A.name
    )
    A._ideals = found
    return found


def generated_ideal(A, X, bound=BRACE_ORDER_BOUND):
    """
    Least ideal containing X, by cycling through three closures until a full
    cycle changes nothing:

    - step ≡ 0 (mod 3): normal closure in (A,*)
    - step ≡ 1 (mod 3): normal closure in (A,∘)
    - step ≡ 2 (mod 3): union of the images λ_a(X) over all a

    When A is small enough to enumerate its ideals, the result is checked
    against the intersection of all ideals containing X.

    :returns: mask
    """
    mask = mask_of(X)
    step = 0
    unchanged = 0
    while unchanged < 3:
        phase = step % 3
        if phase == 0:
            grown = A.star_group.normal_closure(members(mask))
        elif phase == 1:
            grown = A.circ_group.normal_closure(members(mask))
        else:
            grown = mask_of(np.unique(A.lam[:, members(mask)]))
        unchanged = unchanged + 1 if grown == mask else 0
        mask = grown
        step += 1

    verify(is_brace_ideal(A, mask), 'the generated set is an ideal', A.name)
    if A.n <= bound:
        containing = [
            m for m in brace_ideals(A, bound) if is_submask(mask_of(X), m)
        ]
        verify(
            mask == reduce(lambda a, b: a & b, containing),
            'the generated ideal is the least ideal containing X', A.name
        )
    return mask


def _pair_mask(A, mask):
    el = members(mask)
    return mask_of(a * A.n + b for a in el for b in el)


def brace_ideal_product(A, I, J):
    """
    The ideal generated by both projections of [I×I, J×J] taken in the
    semidirect product P

    :returns: mask
    """
    _check_ideal(A, I)
    _check_ideal(A, J)
    P = semidirect_product(A)
    h = np.asarray(members(_pair_mask(A, I)))
    k = np.asarray(members(_pair_mask(A, J)))
    inv = np.asarray(P.inv)
    comms = P.tab[
        P.tab[inv[h][:, None], inv[k][None, :]],
        P.tab[h[:, None], k[None, :]]
    ]
    C = P.generate(np.unique(comms))
    projected = {c // A.n for c in members(C)} | {c % A.n for c in members(C)}
    product = generated_ideal(A, projected)
    verify(is_submask(product, I & J), 'IJ is contained in I∩J', A.name)
    return product


def brace_lattice(A, bound=BRACE_ORDER_BOUND):
    """
    The lattice of ideals with join the ideal generated by the union, meet
    the intersection and multiplication brace_ideal_product

    :returns: MultLattice whose masks are the ideals
    """
    masks = brace_ideals(A, bound)
    pos = {m: i for i, m in enumerate(masks)}
    leq = [[is_submask(a, b) for b in masks] for a in masks]
    labels = _subgroup_labels(A.star_group, masks)
    labels = [A.name if m == A.star_group.full_mask else lb
              for m, lb in zip(masks, labels)]
    lat = FinLattice(leq, labels)

    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            verify(
                masks[lat.join(i, j)] == generated_ideal(A, members(a | b)),
                'the join of ideals is the ideal generated by the union',
                A.name
            )
            verify(
                masks[lat.meet(i, j)] == a & b,
                'the meet of ideals is the intersection', A.name
            )
    mul = [
        [pos[brace_ideal_product(A, a, b)] for b in masks] for a in masks
    ]
    M = MultLattice(lat, mul, name=f'I({A.name})', masks=masks)
    logger.debug(f'{M.name}: {len(masks)} ideals')
    return M


def socle(A, M=None):
    """
    The right center of the top of the ideal lattice: the largest ideal I
    with A·I = 0

    :param M: the ideal lattice of A, computed when omitted
    :returns: mask
    """
    M = M or brace_lattice(A)
    report = annihilators(M, M.top)
    if report.r_center is None:
        raise UndefinedAnnihilator(
            f'The right annihilator of {A.name} is undefined'
        )
    soc = M.masks[report.r_center]
    elementwise = elementwise_socle(A)
    if elementwise is not None and elementwise != soc:
        logger.info(
            f'{A.name}: right center {members(soc)} differs from the '
            f'elementwise socle {members(elementwise)}'
        )
    return soc


def elementwise_socle(A):
    """
    {a : b·a = 0 for every b}, with b·a = λ_b(a) - a

    Only defined when (A,*) is abelian.

    :returns: mask, or None for a skew brace with non-abelian (A,*)
    """
    if not A.star_group.is_abelian():
        return None
    fixed = (A.lam == np.arange(A.n)[None, :]).all(axis=0)
    return mask_of(np.flatnonzero(fixed))


def quotient_brace(A, I):
    """
    A/I on the cosets of I, with representatives the least index of each
    coset

    Checks that the projection A -> A/I respects both operations and has
    kernel I.
    """
    _check_ideal(A, I)
    cid = _coset_ids(A, I)
    reps = sorted(set(int(c) for c in cid))
    q = {r: i for i, r in enumerate(reps)}
    proj = np.asarray([q[int(c)] for c in cid])
    r = np.asarray(reps)
    star_q = proj[A.star[r[:, None], r[None, :]]]
    circ_q = proj[A.circ[r[:, None], r[None, :]]]

    for tab, tab_q in ((A.star, star_q), (A.circ, circ_q)):
        verify(
            bool((proj[tab] == tab_q[proj[:, None], proj[None, :]]).all()),
            'the projection onto A/I is a brace morphism', A.name
        )
    verify(
        mask_of(np.flatnonzero(proj == proj[A.e])) == I,
        'the kernel of the projection is I', A.name
    )
    label = ','.join(A.labels[x] for x in members(I))
    return SkewBrace(
        circ_q, star_q, [f'[{A.labels[x]}]' for x in reps],
        name=f'{A.name}/{{{label}}}'
    )


def lambda_invariant_lattice(A):
    """
    Normal subgroups of (A,*) invariant under every λ_a, with the commutator
    product; every ideal of A is one of them
    """
    action = lambda_action(A)
    M = normal_mult_lattice(A.star_group, "commutator", action=action)
    for m in brace_ideals(A):
        verify(m in M.masks, 'ideals are λ-invariant normal subgroups', A.name)
    return M
