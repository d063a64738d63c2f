"""
Series, nilpotency and the hyperabelian conditions

For an element x of a multiplicative lattice:

- lower central series (left)   x_1 = x,     x_{n+1} = x_n·x
- lower central series (right)  _1x = x,     _{n+1}x = x·_nx
- derived series                x^(1) = x,   x^(n+1) = x^(n)·x^(n)

All three descend because x·y <= x∧y, so in a finite lattice they stop at the
first repeated term. Traces keep that repeated term.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from mlat.config import M_SYSTEM_EXHAUSTIVE_LIMIT
from mlat.errors import NotMDistributive, PreconditionFailed, verify
from mlat.lattice import interval_sublattice, law_report
from mlat.spectrum import classify_elements, enumerate_m_systems

LOWER_CENTRAL_LEFT = 'lower_central_left'
LOWER_CENTRAL_RIGHT = 'lower_central_right'
DERIVED = 'derived'
UPPER_CENTRAL = 'upper_central'
SIDES = ('left', 'right')

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesTrace:
    kind: str
    terms: Tuple[int, ...]
    stabilized: bool
    reached: Optional[int]


@dataclass(frozen=True)
class SeriesBundle:
    lcs_left: SeriesTrace
    lcs_right: SeriesTrace
    derived: SeriesTrace


@dataclass(frozen=True)
class ClassificationFlags:
    left_nilpotent: bool
    right_nilpotent: bool
    solvable: bool
    abelian: bool
    idempotent: bool
    derived_element: int


@dataclass(frozen=True)
class AnnihilatorReport:
    """
    None stands for an undefined annihilator or center
    """
    r_ann: Optional[int]
    l_ann: Optional[int]
    r_center: Optional[int]
    l_center: Optional[int]


@dataclass(frozen=True)
class UpperCentralReport:
    trace: SeriesTrace
    side: str
    hypercenter: Optional[int]
    hypercentral: bool
    undefined_at: Optional[int] = None


@dataclass(frozen=True)
class HyperabelianReport:
    cond_a: bool
    cond_b: bool
    cond_c: bool
    cond_d: bool
    cond_e: bool
    cond_f: bool
    agree: bool
    chain_witness: Optional[Tuple[int, ...]]
    spec_size: int
    cond_f_inferred: bool = False

    def conditions(self):
        return {
            'a': self.cond_a, 'b': self.cond_b, 'c': self.cond_c,
            'd': self.cond_d, 'e': self.cond_e, 'f': self.cond_f,
        }


@dataclass(frozen=True)
class AnnihilatorPrimeReport:
    holds: bool
    p: int


def _descend(M, kind, x, step):
    terms = [x]
    while True:
        nxt = step(terms[-1])
        terms.append(nxt)
        if nxt == terms[-2]:
            break
    return SeriesTrace(
        kind=kind,
        terms=tuple(terms),
        stabilized=terms[-1] == M.bottom,
        reached=terms[-1],
    )


def series(M, x):
    """
    Left and right lower central series and the derived series of x

    :param M: the multiplicative lattice
    :param x: element index
    :returns: SeriesBundle
    """
    bundle = SeriesBundle(
        lcs_left=_descend(M, LOWER_CENTRAL_LEFT, x, lambda t: M.times(t, x)),
        lcs_right=_descend(M, LOWER_CENTRAL_RIGHT, x, lambda t: M.times(x, t)),
        derived=_descend(M, DERIVED, x, lambda t: M.times(t, t)),
    )
    for trace in (bundle.lcs_left, bundle.lcs_right, bundle.derived):
        for a, b in zip(trace.terms, trace.terms[1:]):
            verify(
                M.lat.le(b, a), f'{trace.kind} series descends',
                f'{M.name}: {M.label(x)}'
            )
    return bundle


def classify(M, x, laws=None):
    """
    Nilpotency, solvability, abelianness and idempotency of x

    :returns: ClassificationFlags
    """
    laws = laws or law_report(M)
    bundle = series(M, x)
    sq = M.square(x)
    flags = ClassificationFlags(
        left_nilpotent=bundle.lcs_left.stabilized,
        right_nilpotent=bundle.lcs_right.stabilized,
        solvable=bundle.derived.stabilized,
        abelian=sq == M.bottom,
        idempotent=sq == x,
        derived_element=sq,
    )
    where = f'{M.name}: {M.label(x)}'

    if flags.abelian:
        verify(
            flags.solvable and flags.left_nilpotent and flags.right_nilpotent,
            'abelian elements are nilpotent and solvable', where
        )
    if flags.idempotent and flags.solvable:
        verify(x == M.bottom, 'idempotent solvable elements are 0', where)
    if laws.monotone:
        for k, (d, c) in enumerate(
            zip(bundle.derived.terms, bundle.lcs_left.terms)
        ):
            verify(
                M.lat.le(d, c), 'x^(k) <= x_k for monotone multiplication',
                f'{where} at step {k + 1}'
            )
        if flags.left_nilpotent:
            verify(flags.solvable, 'left nilpotent implies solvable', where)
    if laws.commutative:
        verify(
            bundle.lcs_left.terms == bundle.lcs_right.terms,
            'left and right series agree for commutative multiplication',
            where
        )
    if laws.associative:
        verify(
            flags.left_nilpotent == flags.right_nilpotent == flags.solvable,
            'left nilpotent iff right nilpotent iff solvable '
            '(associative multiplication)', where
        )
    return flags


def series_all(M, laws=None):
    """
    ClassificationFlags for every element, keyed by element index
    """
    laws = laws or law_report(M)
    return {x: classify(M, x, laws) for x in range(M.n)}


def annihilators(M, x, laws=None):
    """
    Right and left annihilators of x and the right and left centers

    The candidate r.ann(x) = ∨{y : xy = 0} is kept only when x·candidate = 0;
    without infinite m-distributivity the set need not be join-closed and the
    annihilator is undefined (None).

    :returns: AnnihilatorReport
    """
    lat = M.lat
    r_cand = lat.join_all(y for y in range(M.n) if M.times(x, y) == M.bottom)
    l_cand = lat.join_all(y for y in range(M.n) if M.times(y, x) == M.bottom)
    r_ann = r_cand if M.times(x, r_cand) == M.bottom else None
    l_ann = l_cand if M.times(l_cand, x) == M.bottom else None

    if laws is not None and laws.m_distributive:
        verify(
            r_ann is not None and l_ann is not None,
            'annihilators exist in m-distributive lattices',
            f'{M.name}: {M.label(x)}'
        )
    return AnnihilatorReport(
        r_ann=r_ann,
        l_ann=l_ann,
        r_center=lat.meet(x, r_ann) if r_ann is not None else None,
        l_center=lat.meet(x, l_ann) if l_ann is not None else None,
    )


def upper_central_series(M, side='left'):
    """
    z_0 = 0 and z_{k+1} the greatest z with z·1 <= z_k (or 1·z <= z_k for the
    right series)

    A step whose candidate join breaks the bound leaves the series undefined
    from that step on; this cannot happen when M is m-distributive.

    :param side: 'left' or 'right'
    :returns: UpperCentralReport
    """
    if side not in SIDES:
        raise ValueError(f'Unknown side {side}, expected one of {SIDES}')
    top = M.top

    def act(z):
        return M.times(z, top) if side == 'left' else M.times(top, z)

    terms = [M.bottom]
    undefined_at = None
    while True:
        z_k = terms[-1]
        cand = M.lat.join_all(z for z in range(M.n) if M.leq[act(z), z_k])
        if not M.leq[act(cand), z_k]:
            undefined_at = len(terms)
            break
        terms.append(cand)
        if cand in terms[:-1]:
            break

    defined = undefined_at is None
    hypercenter = terms[-1] if defined else None
    trace = SeriesTrace(
        kind=UPPER_CENTRAL,
        terms=tuple(terms),
        stabilized=defined and hypercenter == top,
        reached=hypercenter,
    )
    if not defined:
        logger.debug(
            f'{M.name}: {side} upper central series undefined at step '
            f'{undefined_at}'
        )
    return UpperCentralReport(
        trace=trace,
        side=side,
        hypercenter=hypercenter,
        hypercentral=trace.stabilized,
        undefined_at=undefined_at,
    )


def _greedy_chain(M):
    """
    0 = x_0 < x_1 < ... with x_{k+1} the lowest-index maximal y > x_k such
    that y² <= x_k
    """
    lat = M.lat
    chain = [M.bottom]
    while chain[-1] != M.top:
        x = chain[-1]
        cands = [
            y for y in range(M.n)
            if lat.lt(x, y) and M.leq[M.square(y), x]
        ]
        if not cands:
            break
        chain.append(lat.maximal(cands)[0])
    return chain


def hyperabelian_report(M, laws=None, cls=None, limit=M_SYSTEM_EXHAUSTIVE_LIMIT):
    """
    The six equivalent conditions for an m-distributive lattice to be
    hyperabelian:

    a. 1 is the only semiprime element
    b. every x != 1 has some y > x with y² <= x
    c. an ascending chain from 0 with squares falling into the previous term
       reaches 1
    d. there are no prime elements
    e. the meet of all primes is 1
    f. every m-system contains 0

    Condition f is checked by enumerating m-systems up to limit elements and
    inferred from d above it.

    :returns: HyperabelianReport
    """
    laws = laws or law_report(M)
    if not laws.m_distributive:
        raise NotMDistributive(
            f'{M.name} is not m-distributive; the hyperabelian conditions '
            'are only equivalent for m-distributive lattices'
        )
    cls = cls or classify_elements(M, laws)
    lat = M.lat
    primes = cls.primes()

    cond_a = cls.semiprimes() == [M.top]
    cond_b = all(
        any(
            lat.lt(x, y) and M.leq[M.square(y), x] for y in range(M.n)
        )
        for x in range(M.n) if x != M.top
    )
    chain = _greedy_chain(M)
    cond_c = chain[-1] == M.top
    if cond_b:
        verify(
            cond_c, 'the greedy square chain reaches 1',
            f'{M.name}: stuck at {M.label(chain[-1])}'
        )
    cond_d = not primes
    cond_e = lat.meet_all(primes) == M.top

    inferred = M.n > limit
    if inferred:
        logger.warning(
            f'{M.name} has {M.n} elements, more than {limit}: the m-system '
            'condition is inferred from the empty spectrum'
        )
        cond_f = cond_d
    else:
        cond_f = next(
            enumerate_m_systems(M, avoiding=[M.bottom]), None
        ) is None

    conds = (cond_a, cond_b, cond_c, cond_d, cond_e, cond_f)
    agree = all(conds) or not any(conds)
    verify(
        agree, 'the six hyperabelian conditions agree',
        f'{M.name}: {dict(zip("abcdef", conds))}'
    )
    return HyperabelianReport(
        cond_a=cond_a,
        cond_b=cond_b,
        cond_c=cond_c,
        cond_d=cond_d,
        cond_e=cond_e,
        cond_f=cond_f,
        agree=agree,
        chain_witness=tuple(chain) if cond_c else None,
        spec_size=len(primes),
        cond_f_inferred=inferred,
    )


def annihilator_prime_lemma_check(M, h, n, laws=None):
    """
    For n <= h with 0 prime in [0, n], the right and left annihilators of n
    inside [0, h] coincide and form the unique prime p of [0, h] with
    p ∧ n = 0

    :param h: top of the ambient interval
    :param n: element below h
    :returns: AnnihilatorPrimeReport, p given as an element of M
    """
    laws = laws or law_report(M)
    if not laws.m_distributive:
        raise NotMDistributive(f'{M.name} is not m-distributive')
    if not M.leq[n, h]:
        raise PreconditionFailed(
            f'{M.label(n)} does not lie below {M.label(h)}'
        )

    lower = interval_sublattice(M, n)
    if not classify_elements(lower).prime[lower.bottom]:
        raise PreconditionFailed(
            f'0 is not a prime element of [0,{M.label(n)}]'
        )

    sub = interval_sublattice(M, h)
    sub_laws = law_report(sub)
    n_sub = sub.embedding.index(n)
    ann = annihilators(sub, n_sub, sub_laws)
    where = f'{M.name}: h={M.label(h)}, n={M.label(n)}'
    verify(
        ann.r_ann is not None and ann.r_ann == ann.l_ann,
        'right and left annihilators coincide', where
    )
    p = ann.r_ann
    sub_cls = classify_elements(sub, sub_laws)
    verify(sub_cls.prime[p], 'the annihilator is prime', where)
    disjoint = [
        q for q in sub_cls.primes()
        if sub.lat.meet(q, n_sub) == sub.bottom
    ]
    verify(
        disjoint == [p], 'the annihilator is the unique prime meeting n in 0',
        where
    )
    return AnnihilatorPrimeReport(holds=True, p=sub.embedding[p])
