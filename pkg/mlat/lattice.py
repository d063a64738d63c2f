"""
Finite multiplicative lattices

A multiplicative lattice is a complete lattice (L, ∨, ∧) with a further binary
operation · satisfying x·y <= x∧y for all x, y. Nothing else is assumed of the
multiplication: it need not be associative, commutative, monotone or unital.

Elements are dense integer indices 0..n-1 with display labels. The order, the
join, the meet and the multiplication are all stored as full n×n numpy tables
so every law can be checked exhaustively.

Conventions
-----------
- leq[x, y] is True iff x <= y
- The empty join is bottom and the empty meet is top
- In a finite lattice every element is compact, so C(L) is the whole lattice
  and results stated for compact elements apply to all elements
"""
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Optional

import numpy as np

from mlat.config import M_DISTRIBUTIVE_SUBSET_CHECK_LIMIT
from mlat.errors import (
    AxiomViolation,
    NoBounds,
    NotALattice,
    NotAPartialOrder,
    NotJoinPreserving,
    NotSubmultiplicative,
    SizeMismatch,
    TopNotPreserved,
    ValidationError,
    verify,
)

CHAIN_KINDS = ('dvr', 'meet', 'zero')

logger = logging.getLogger(__name__)


def _frozen(table, dtype):
    arr = np.array(table, dtype=dtype)
    arr.flags.writeable = False
    return arr


def order_from_covers(n, covers):
    """
    Reflexive transitive closure of a list of (lower, upper) pairs

    :param n: number of elements
    :param covers: iterable of (x, y) pairs with x below y
    :returns: n×n boolean order table
    """
    leq = np.eye(n, dtype=bool)
    for x, y in covers:
        leq[x, y] = True
    # Warshall
    for k in range(n):
        leq |= leq[:, k][:, None] & leq[k, :][None, :]
    return leq


class FinLattice(object):
    """
    A finite lattice given by its order table. Join and meet tables are
    computed by scanning the bounds of every pair.
    """

    def __init__(self, leq, labels=None):
        """
        Validate the order and build the join and meet tables

        :param leq: n×n boolean table, leq[x][y] iff x <= y
        :type leq: array-like
        :param labels: display names, defaults to the indices
        :type labels: list of str
        """
        self.logger = logging.getLogger(type(self).__name__)
        leq = np.asarray(leq)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise NotAPartialOrder(
                f'Order table must be square, got shape {leq.shape}'
            )
        self.n = leq.shape[0]
        if self.n == 0:
            raise NoBounds('A lattice needs at least one element')
        self.leq = _frozen(leq, bool)

        if labels is None:
            labels = [str(i) for i in range(self.n)]
        self.labels = [str(lb) for lb in labels]
        if len(self.labels) != self.n:
            raise SizeMismatch(
                f'{len(self.labels)} labels given for {self.n} elements'
            )
        if len(set(self.labels)) != self.n:
            raise ValidationError('Element labels must be unique')
        self._index = {lb: i for i, lb in enumerate(self.labels)}

        self._check_partial_order()
        self.bottom, self.top = self._find_bounds()
        self.join_tab, self.meet_tab = self._build_tables()

    def _check_partial_order(self):
        leq = self.leq
        if not np.diag(leq).all():
            x = int(np.flatnonzero(~np.diag(leq))[0])
            raise NotAPartialOrder(f'Order is not reflexive at {self.labels[x]}')

        both = leq & leq.T
        np.fill_diagonal(both, False)
        if both.any():
            x, y = np.argwhere(both)[0]
            raise NotAPartialOrder(
                'Order is not antisymmetric: '
                f'{self.labels[x]} <= {self.labels[y]} <= {self.labels[x]}'
            )

        as_int = leq.astype(np.int64)
        composed = (as_int @ as_int) > 0
        broken = composed & ~leq
        if broken.any():
            x, z = np.argwhere(broken)[0]
            raise NotAPartialOrder(
                'Order is not transitive: '
                f'{self.labels[x]} <= y <= {self.labels[z]} for some y '
                f'but {self.labels[x]} is not below {self.labels[z]}'
            )

    def _find_bounds(self):
        bottoms = np.flatnonzero(self.leq.all(axis=1))
        tops = np.flatnonzero(self.leq.all(axis=0))
        if not len(bottoms) or not len(tops):
            raise NoBounds(
                'Order has no global '
                f'{"minimum" if not len(bottoms) else "maximum"}'
            )
        return int(bottoms[0]), int(tops[0])

    def _build_tables(self):
        n = self.n
        leq = self.leq
        join_tab = np.zeros((n, n), dtype=np.int64)
        meet_tab = np.zeros((n, n), dtype=np.int64)
        for x in range(n):
            for y in range(x, n):
                upper = leq[x] & leq[y]
                least = np.flatnonzero(upper & leq[:, upper].all(axis=1))
                if len(least) != 1:
                    raise NotALattice(
                        f'{self.labels[x]} and {self.labels[y]} have no '
                        'unique least upper bound'
                    )
                lower = leq[:, x] & leq[:, y]
                greatest = np.flatnonzero(lower & leq[lower, :].all(axis=0))
                if len(greatest) != 1:
                    raise NotALattice(
                        f'{self.labels[x]} and {self.labels[y]} have no '
                        'unique greatest lower bound'
                    )
                join_tab[x, y] = join_tab[y, x] = least[0]
                meet_tab[x, y] = meet_tab[y, x] = greatest[0]
        return _frozen(join_tab, np.int64), _frozen(meet_tab, np.int64)

    def le(self, x, y):
        return bool(self.leq[x, y])

    def lt(self, x, y):
        return x != y and bool(self.leq[x, y])

    def join(self, x, y):
        return int(self.join_tab[x, y])

    def meet(self, x, y):
        return int(self.meet_tab[x, y])

    def join_all(self, elements):
        return reduce(self.join, elements, self.bottom)

    def meet_all(self, elements):
        return reduce(self.meet, elements, self.top)

    def index(self, label):
        """
        Element index of a display label
        """
        try:
            return self._index[str(label)]
        except KeyError:
            raise ValidationError(f'Unknown element label: {label}')

    def down_set(self, h):
        return [int(x) for x in np.flatnonzero(self.leq[:, h])]

    def up_set(self, h):
        return [int(x) for x in np.flatnonzero(self.leq[h, :])]

    def maximal(self, elements):
        """
        Maximal elements of a subset, in index order
        """
        elements = list(elements)
        return [
            x for x in elements
            if not any(self.lt(x, y) for y in elements)
        ]

    def covers(self):
        """
        n×n boolean matrix. out[x, y] iff y covers x
        """
        lt = self.leq.copy()
        np.fill_diagonal(lt, False)
        as_int = lt.astype(np.int64)
        return lt & ~((as_int @ as_int) > 0)

    def is_chain(self):
        return bool((self.leq | self.leq.T).all())

    def is_distributive(self):
        J, M = self.join_tab, self.meet_tab
        ar = np.arange(self.n)
        lhs = M[ar[:, None, None], J[None, :, :]]
        rhs = J[M[:, :, None], M[:, None, :]]
        return bool((lhs == rhs).all())

    def is_modular(self):
        J, M = self.join_tab, self.meet_tab
        ar = np.arange(self.n)
        lhs = J[ar[:, None, None], M[None, :, :]]
        rhs = M[J[:, :, None], ar[None, None, :]]
        applies = np.broadcast_to(self.leq[:, None, :], lhs.shape)
        return bool(((lhs == rhs) | ~applies).all())

    def same_order(self, other):
        return self.n == other.n and bool((self.leq == other.leq).all())


class MultLattice(object):
    """
    A finite lattice together with a multiplication table satisfying
    mul[x][y] <= x∧y
    """

    def __init__(self, lat, mul, name=None, masks=None, embedding=None):
        """
        Attach and validate a multiplication

        :param lat: the underlying lattice
        :type lat: FinLattice
        :param mul: n×n table of element indices
        :type mul: array-like
        :param name: display name
        :type name: str
        :param masks: for lattices of substructures, the membership bitset
        of the substructure each element stands for
        :type masks: list of int
        :param embedding: for sublattices, the index of each element in the
        lattice it was cut from
        :type embedding: list of int
        """
        self.logger = logging.getLogger(type(self).__name__)
        self.lat = lat
        self.name = name or 'L'
        mul = np.asarray(mul)
        if mul.shape != (lat.n, lat.n):
            raise SizeMismatch(
                f'Multiplication table has shape {mul.shape}, '
                f'expected {(lat.n, lat.n)}'
            )
        if mul.size and (mul.min() < 0 or mul.max() >= lat.n):
            raise ValidationError(
                f'Multiplication entries must lie in [0, {lat.n})'
            )
        self.mul_tab = _frozen(mul, np.int64)

        ok = lat.leq[self.mul_tab, lat.meet_tab]
        if not ok.all():
            x, y = np.argwhere(~ok)[0]
            raise AxiomViolation(lat.labels[x], lat.labels[y])

        self.masks = list(masks) if masks is not None else None
        self.embedding = list(embedding) if embedding is not None else None

    @property
    def n(self):
        return self.lat.n

    @property
    def labels(self):
        return self.lat.labels

    @property
    def bottom(self):
        return self.lat.bottom

    @property
    def top(self):
        return self.lat.top

    @property
    def leq(self):
        return self.lat.leq

    def times(self, x, y):
        return int(self.mul_tab[x, y])

    def square(self, x):
        return int(self.mul_tab[x, x])

    def label(self, x):
        return self.lat.labels[x]

    def index(self, label):
        return self.lat.index(label)

    def same_tables(self, other):
        """
        True iff both lattices have identical order and multiplication tables
        """
        return (
            self.lat.same_order(other.lat)
            and bool((self.mul_tab == other.mul_tab).all())
        )

    def with_multiplication(self, mul, name=None):
        return MultLattice(
            self.lat, mul, name=name or self.name, masks=self.masks,
            embedding=self.embedding
        )

    def __repr__(self):
        return f'MultLattice({self.name}, n={self.n})'


class BinOpTable(object):
    """
    An arbitrary binary operation on the carrier {0, ..., n-1}
    """

    def __init__(self, op):
        op = np.asarray(op)
        if op.ndim != 2 or op.shape[0] != op.shape[1]:
            raise SizeMismatch(f'Operation table must be square: {op.shape}')
        self.n = op.shape[0]
        if op.size and (op.min() < 0 or op.max() >= self.n):
            raise ValidationError(
                f'Operation entries must lie in [0, {self.n})'
            )
        self.op = _frozen(op, np.int64)

    @classmethod
    def left_projection(cls, n):
        """
        x*y := x, the identity of the ◁ monoid
        """
        return cls(np.repeat(np.arange(n)[:, None], n, axis=1))

    def __eq__(self, other):
        return (
            isinstance(other, BinOpTable)
            and self.n == other.n
            and bool((self.op == other.op).all())
        )

    def __hash__(self):
        return hash(self.op.tobytes())


@dataclass(frozen=True)
class LawReport:
    monotone: bool
    m_distributive: bool
    commutative: bool
    associative: bool
    jordan_identity: bool
    infinite_m_distributive: Optional[bool] = None


class LatticeMorphism(object):
    """
    A map of multiplicative lattices preserving all joins and the top, with
    f(x)f(x') <= f(xx'), together with its right adjoint u:
    f(x) <= y iff x <= u(y)
    """

    def __init__(self, src, dst, f_map):
        self.logger = logging.getLogger(type(self).__name__)
        self.src = src
        self.dst = dst
        if len(f_map) != src.n:
            raise SizeMismatch(
                f'Map has length {len(f_map)}, source has {src.n} elements'
            )
        fa = np.asarray(f_map, dtype=np.int64)
        if fa.size and (fa.min() < 0 or fa.max() >= dst.n):
            raise ValidationError(
                f'Map values must lie in [0, {dst.n})'
            )
        self.map = [int(v) for v in fa]
        self._validate(fa)
        self.adj = self._right_adjoint(fa)

    def _validate(self, fa):
        src, dst = self.src, self.dst

        # Joins of arbitrary subsets reduce to the empty join plus binary joins
        if fa[src.bottom] != dst.bottom:
            raise NotJoinPreserving(
                (src.label(src.bottom),),
                'The empty join is not preserved: '
                f'f({src.label(src.bottom)}) = {dst.label(fa[src.bottom])}'
            )
        lhs = fa[src.lat.join_tab]
        rhs = dst.lat.join_tab[fa[:, None], fa[None, :]]
        if (lhs != rhs).any():
            x, y = np.argwhere(lhs != rhs)[0]
            raise NotJoinPreserving(
                (src.label(x), src.label(y)),
                f'f({src.label(x)} ∨ {src.label(y)}) != '
                f'f({src.label(x)}) ∨ f({src.label(y)})'
            )

        if fa[src.top] != dst.top:
            raise TopNotPreserved(
                (src.label(src.top),),
                f'f(1) = {dst.label(fa[src.top])} is not the top of the target'
            )

        products = dst.mul_tab[fa[:, None], fa[None, :]]
        ok = dst.leq[products, fa[src.mul_tab]]
        if not ok.all():
            x, y = np.argwhere(~ok)[0]
            raise NotSubmultiplicative(
                (src.label(x), src.label(y)),
                f'f({src.label(x)})f({src.label(y)}) is not below '
                f'f({src.label(x)}·{src.label(y)})'
            )

    def _right_adjoint(self, fa):
        src, dst = self.src, self.dst
        adj = [
            src.lat.join_all(
                x for x in range(src.n) if dst.leq[fa[x], y]
            )
            for y in range(dst.n)
        ]
        adj_arr = np.asarray(adj, dtype=np.int64)
        left = dst.leq[fa[:, None], np.arange(dst.n)[None, :]]
        right = src.leq[np.arange(src.n)[:, None], adj_arr[None, :]]
        verify(
            bool((left == right).all()),
            'adjunction f(x) <= y iff x <= u(y)',
            f'{src.name} -> {dst.name}'
        )
        return adj


def build_lattice(leq, labels=None):
    """
    Validate an order table and compute join and meet tables

    :param leq: n×n boolean order table
    :param labels: display names
    :returns: FinLattice
    """
    lat = FinLattice(leq, labels)
    logger.debug(f'Built lattice with {lat.n} elements')
    return lat


def attach_multiplication(lat, mul, name=None):
    """
    Attach a multiplication to a lattice, checking x·y <= x∧y everywhere
    """
    return MultLattice(lat, mul, name=name)


def _subset_joins(M, limit):
    """
    Compare (∨X)(∨Y) with ∨{xy : x in X, y in Y} over all subset pairs
    """
    n = M.n
    if n > limit:
        return None
    lat = M.lat
    subset_join = []
    for mask in range(1 << n):
        subset_join.append(
            lat.join_all(x for x in range(n) if mask >> x & 1)
        )
    for xm in range(1 << n):
        xs = [x for x in range(n) if xm >> x & 1]
        for ym in range(1 << n):
            ys = [y for y in range(n) if ym >> y & 1]
            lhs = M.times(subset_join[xm], subset_join[ym])
            rhs = lat.join_all(M.times(x, y) for x in xs for y in ys)
            if lhs != rhs:
                return False
    return True


def law_report(M):
    """
    Exhaustive law checks over all pairs and triples

    Binary m-distributivity implies the subset form
    (∨X)(∨Y) = ∨{xy} on a finite lattice: finite joins reduce by induction and
    the empty join is covered by 0·x = 0, which the axiom forces. The
    m_distributive flag therefore certifies the infinite form as well; for
    small lattices the subset form is also checked directly.

    :param M: the multiplicative lattice
    :type M: MultLattice
    :returns: LawReport
    """
    n = M.n
    mul = M.mul_tab
    leq = M.leq
    J = M.lat.join_tab
    ar = np.arange(n)

    pairs = np.argwhere(leq)
    left_mono = leq[mul[pairs[:, 0]], mul[pairs[:, 1]]].all()
    right_mono = leq[mul[:, pairs[:, 0]].T, mul[:, pairs[:, 1]].T].all()
    monotone = bool(left_mono and right_mono)

    left_dist = (
        mul[J[:, :, None], ar[None, None, :]]
        == J[mul[:, None, :], mul[None, :, :]]
    ).all()
    right_dist = (
        mul[ar[:, None, None], J[None, :, :]]
        == J[mul[:, :, None], mul[:, None, :]]
    ).all()
    m_distributive = bool(left_dist and right_dist)

    commutative = bool((mul == mul.T).all())
    associative = bool(
        (mul[mul] == mul[ar[:, None, None], mul[None, :, :]]).all()
    )

    sq = J[mul, mul.T]
    xx = sq[ar, ar]
    jordan_lhs = sq[sq, xx[:, None]]
    jordan_rhs = sq[ar[:, None], sq[ar[None, :], xx[:, None]]]
    jordan_identity = bool((jordan_lhs == jordan_rhs).all())

    infinite = _subset_joins(M, M_DISTRIBUTIVE_SUBSET_CHECK_LIMIT)

    if m_distributive:
        verify(monotone, 'm-distributivity implies monotonicity', M.name)
    if associative and m_distributive:
        verify(
            jordan_identity,
            'Jordan identity for the symmetrized product', M.name
        )
    if infinite is not None:
        verify(
            infinite == m_distributive,
            'finite reduction of infinite m-distributivity', M.name
        )

    return LawReport(
        monotone=monotone,
        m_distributive=m_distributive,
        commutative=commutative,
        associative=associative,
        jordan_identity=jordan_identity,
        infinite_m_distributive=infinite,
    )


def square_lattice(M):
    """
    Same lattice with the symmetrized multiplication x□y = (x·y)∨(y·x)
    """
    mul = M.mul_tab
    sq = M.lat.join_tab[mul, mul.T]
    verify(bool((sq == sq.T).all()), '□ is commutative', M.name)
    return M.with_multiplication(sq, name=f'□{M.name}')


def compose_operations(star, circ):
    """
    The ◁ composition: x(∗◁∘)y = (x∗y)∘(y∗x)

    :type star: BinOpTable
    :type circ: BinOpTable
    :returns: BinOpTable
    """
    if star.n != circ.n:
        raise SizeMismatch(
            f'Operations on carriers of size {star.n} and {circ.n}'
        )
    return BinOpTable(circ.op[star.op, star.op.T])


def morphism_build(src, dst, f_map):
    """
    Validate a map of multiplicative lattices and compute its right adjoint
    adj[y] = ∨{x : f(x) <= y}

    :returns: LatticeMorphism
    """
    return LatticeMorphism(src, dst, f_map)


def identity_morphism(M):
    return LatticeMorphism(M, M, list(range(M.n)))


def interval_sublattice(M, h):
    """
    The interval [0, h] with the restricted order and multiplication. Its top
    is h, which need not be the top of M.
    """
    elems = M.lat.down_set(h)
    pos = np.full(M.n, -1, dtype=np.int64)
    pos[elems] = np.arange(len(elems))
    idx = np.ix_(elems, elems)
    sub_mul = pos[M.mul_tab[idx]]
    lat = FinLattice(M.leq[idx], [M.labels[x] for x in elems])
    masks = [M.masks[x] for x in elems] if M.masks is not None else None
    return MultLattice(
        lat, sub_mul, name=f'[0,{M.label(h)}]', masks=masks,
        embedding=elems
    )


def chain_mult_lattice(k, kind):
    """
    The chain 1 = c_0 > c_1 > ... > c_{k-1} = 0, where c_i models the ideal
    p^i of Z/p^(k-1)

    :param k: number of elements, at least 1
    :param kind: 'dvr' (c_a·c_b = c_min(a+b, k-1)), 'meet' or 'zero'
    :returns: MultLattice
    """
    if k < 1:
        raise ValidationError(f'Chain length must be at least 1, got {k}')
    if kind not in CHAIN_KINDS:
        raise ValidationError(
            f'Unknown chain multiplication {kind}, expected one of '
            f'{CHAIN_KINDS}'
        )
    idx = np.arange(k)
    leq = idx[:, None] >= idx[None, :]
    if kind == 'dvr':
        mul = np.minimum(idx[:, None] + idx[None, :], k - 1)
    elif kind == 'meet':
        mul = np.maximum(idx[:, None], idx[None, :])
    else:
        mul = np.full((k, k), k - 1)
    lat = FinLattice(leq, [f'c_{i}' for i in range(k)])
    return MultLattice(lat, mul, name=f'chain-{kind}-{k}')
