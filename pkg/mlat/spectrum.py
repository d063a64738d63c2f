"""
Prime elements, the Zariski spectrum and its topology

An element p != 1 is prime if xy <= p implies x <= p or y <= p. The closed
sets of the Zariski topology on Spec(L) are V(x) = {p in Spec(L) : x <= p}.

All tests are exhaustive scans over pairs of elements. Results that the
general theory states for compact elements (the compact prime test, the
compact semiprime test, m-systems of compact elements) apply verbatim here
because every element of a finite lattice is compact.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

import numpy as np

from mlat.errors import EmptySet, NotMDistributive, verify
from mlat.lattice import FinLattice, law_report
from mlat.utils import mask_of, members

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ElementClassification:
    prime: Tuple[bool, ...]
    semiprime: Tuple[bool, ...]
    meet_irreducible: Tuple[bool, ...]
    idempotent: Tuple[bool, ...]
    abelian: Tuple[bool, ...]

    def primes(self):
        return [x for x, flag in enumerate(self.prime) if flag]

    def semiprimes(self):
        return [x for x, flag in enumerate(self.semiprime) if flag]


@dataclass(frozen=True)
class ZariskiTopology:
    spec: Tuple[int, ...]
    v_of: Tuple[FrozenSet[int], ...]
    closed_sets: FrozenSet[FrozenSet[int]]

    def closure(self, p):
        """
        Smallest closed set containing the point p
        """
        containing = [F for F in self.closed_sets if p in F]
        return frozenset.intersection(*containing)


@dataclass(frozen=True)
class SoberReport:
    sober: bool
    witness: Optional[FrozenSet[int]] = None


@dataclass(frozen=True)
class GaloisReport:
    iv_fixed: Tuple[int, ...]
    rad_distributive: bool
    radical: int
    semisimple: bool

    @property
    def rad_elements(self):
        return self.iv_fixed


@dataclass(frozen=True)
class MSystemReport:
    is_m_system: bool
    max_avoiding_prime: Optional[int] = None


@dataclass(frozen=True)
class SpecMapReport:
    point_map: Dict[int, int]
    continuous: bool


@dataclass(frozen=True)
class EnoughPrimesReport:
    top_idempotent: bool
    maximal_are_prime: bool
    enough_primes: bool


def _prime_flags(M):
    leq, mul = M.leq, M.mul_tab
    flags = []
    for p in range(M.n):
        if p == M.top:
            flags.append(False)
            continue
        below = leq[:, p]
        bad = leq[mul, p] & ~below[:, None] & ~below[None, :]
        flags.append(not bad.any())
    return flags


def is_prime(M, p):
    return _prime_flags(M)[p]


def classify_elements(M, laws=None):
    """
    Flag every element as prime, semiprime, meet-irreducible, idempotent and
    abelian.

    The prime test scans all pairs x, y of L; restricting it to compact x, y
    changes nothing in a finite lattice.

    :param M: the multiplicative lattice
    :param laws: precomputed law report of M
    :returns: ElementClassification
    """
    n = M.n
    leq, meet, mul = M.leq, M.lat.meet_tab, M.mul_tab
    ar = np.arange(n)
    sq = mul[ar, ar]

    prime = _prime_flags(M)
    semiprime = [
        not (leq[sq, s] & ~leq[:, s]).any() for s in range(n)
    ]
    others = (ar[:, None] != ar[None, :])
    meet_irreducible = []
    for x in range(n):
        splits = (meet == x) & (ar[:, None] != x) & (ar[None, :] != x)
        meet_irreducible.append(not (splits & others).any())
    idempotent = [bool(sq[x] == x) for x in range(n)]
    abelian = [bool(sq[x] == M.bottom) for x in range(n)]

    for p in range(n):
        if prime[p]:
            verify(
                semiprime[p] and meet_irreducible[p],
                'primes are meet-irreducible and semiprime',
                f'{M.name}: {M.label(p)}'
            )

    laws = laws or law_report(M)
    if laws.m_distributive:
        for x in range(n):
            verify(
                prime[x] == (
                    x != M.top and meet_irreducible[x] and semiprime[x]
                ),
                'prime iff meet-irreducible semiprime (m-distributive)',
                f'{M.name}: {M.label(x)}'
            )

    return ElementClassification(
        prime=tuple(prime),
        semiprime=tuple(semiprime),
        meet_irreducible=tuple(meet_irreducible),
        idempotent=tuple(idempotent),
        abelian=tuple(abelian),
    )


def zariski(M, cls=None):
    """
    Spectrum, the map V and the family of closed sets

    Checks V(xy) = V(x) ∪ V(y) and V(x∨y) = V(x) ∩ V(y) for all pairs and
    that the family V(L) is closed under finite unions and intersections.

    :returns: ZariskiTopology
    """
    cls = cls or classify_elements(M)
    spec = tuple(cls.primes())
    leq = M.leq
    v_of = tuple(
        frozenset(p for p in spec if leq[x, p]) for x in range(M.n)
    )

    verify(
        v_of[M.top] == frozenset() and v_of[M.bottom] == frozenset(spec),
        'V(1) is empty and V(0) is the spectrum', M.name
    )
    for x in range(M.n):
        for y in range(M.n):
            verify(
                v_of[M.times(x, y)] == v_of[x] | v_of[y],
                'V(xy) = V(x) ∪ V(y)',
                f'{M.name}: ({M.label(x)}, {M.label(y)})'
            )
            verify(
                v_of[M.lat.join(x, y)] == v_of[x] & v_of[y],
                'V(x∨y) = V(x) ∩ V(y)',
                f'{M.name}: ({M.label(x)}, {M.label(y)})'
            )
            if leq[x, y]:
                verify(
                    v_of[y] <= v_of[x], 'V is antitone',
                    f'{M.name}: ({M.label(x)}, {M.label(y)})'
                )

    closed = frozenset(v_of)
    for a in closed:
        for b in closed:
            verify(
                a | b in closed and a & b in closed,
                'closed sets are closed under union and intersection',
                M.name
            )

    logger.debug(f'{M.name}: spectrum has {len(spec)} points')
    return ZariskiTopology(spec=spec, v_of=v_of, closed_sets=closed)


def check_sober(T):
    """
    Every irreducible closed set must be the closure of exactly one point.
    A closed set is irreducible if it is nonempty and not the union of two
    proper closed subsets.

    :type T: ZariskiTopology
    :returns: SoberReport with a violating closed set as witness
    """
    closed = sorted(T.closed_sets, key=lambda F: (len(F), sorted(F)))
    closures = {p: T.closure(p) for p in T.spec}
    for F in closed:
        if not F:
            continue
        proper = [A for A in closed if A < F]
        reducible = any(a | b == F for a in proper for b in proper)
        if reducible:
            continue
        generic = [p for p in T.spec if closures[p] == F]
        if len(generic) != 1:
            return SoberReport(sober=False, witness=F)
    return SoberReport(sober=True)


def galois(M, cls=None, T=None, laws=None):
    """
    The Galois connection between V and I(X) = ∧X

    Computes the elements fixed by IV and checks:
    - x <= IV(x) for every x
    - every IV-fixed element is semiprime, and for m-distributive lattices the
      IV-fixed elements are exactly the semiprime ones
    - Rad(L), the IV-fixed elements with the induced order, is a distributive
      lattice, and V maps it order-reversingly onto the closed sets

    :returns: GaloisReport
    """
    cls = cls or classify_elements(M, laws)
    T = T or zariski(M, cls)
    laws = laws or law_report(M)
    lat = M.lat

    iv = [lat.meet_all(T.v_of[x]) for x in range(M.n)]
    for x in range(M.n):
        verify(lat.le(x, iv[x]), 'x <= IV(x)', f'{M.name}: {M.label(x)}')
    fixed = [x for x in range(M.n) if iv[x] == x]
    semiprime = set(cls.semiprimes())

    verify(
        set(fixed) <= semiprime, 'meets of primes are semiprime', M.name
    )
    if laws.m_distributive:
        verify(
            set(fixed) == semiprime,
            'semiprime elements are exactly the meets of primes', M.name
        )

    rad = FinLattice(
        M.leq[np.ix_(fixed, fixed)], [M.label(x) for x in fixed]
    )
    rad_distributive = rad.is_distributive()
    verify(rad_distributive, 'Rad(L) is distributive', M.name)
    verify(
        {T.v_of[x] for x in fixed} == set(T.closed_sets)
        and len({T.v_of[x] for x in fixed}) == len(fixed),
        'V maps Rad(L) bijectively onto the closed sets', M.name
    )
    for x in fixed:
        for y in fixed:
            verify(
                lat.le(x, y) == (T.v_of[y] <= T.v_of[x]),
                'V is an order anti-isomorphism on Rad(L)',
                f'{M.name}: ({M.label(x)}, {M.label(y)})'
            )

    radical = lat.meet_all(T.spec)
    return GaloisReport(
        iv_fixed=tuple(fixed),
        rad_distributive=rad_distributive,
        radical=radical,
        semisimple=radical == M.bottom,
    )


def _down_masks(M):
    return [mask_of(M.lat.down_set(v)) for v in range(M.n)]


def _is_m_system_mask(M, mask, down):
    elems = members(mask)
    for x in elems:
        for y in elems:
            if not mask & down[M.times(x, y)]:
                return False
    return True


def is_m_system(M, S):
    """
    S is an m-system if it is nonempty and any x, y in S dominate some z in S
    with z <= xy
    """
    S = sorted(set(S))
    if not S:
        raise EmptySet('An m-system must be nonempty')
    return _is_m_system_mask(M, mask_of(S), _down_masks(M))


def enumerate_m_systems(M, avoiding=None):
    """
    Yield every m-system of M as a sorted element list, optionally skipping
    subsets that contain any element of avoiding

    The scan covers 2^n subsets, so keep n small.
    """
    skip = set(avoiding or ())
    allowed = [x for x in range(M.n) if x not in skip]
    down = _down_masks(M)
    for bits in range(1, 1 << len(allowed)):
        mask = mask_of(
            allowed[i] for i in range(len(allowed)) if bits >> i & 1
        )
        if _is_m_system_mask(M, mask, down):
            yield members(mask)


def m_system_tools(M, S, laws=None, cls=None):
    """
    Decide whether S is an m-system and, for m-distributive M, find a maximal
    element among those lying above no member of S and check it is prime.
    Ties between maximal elements go to the lowest index.

    :returns: MSystemReport
    """
    S = sorted(set(S))
    if not S:
        raise EmptySet('An m-system must be nonempty')
    laws = laws or law_report(M)
    is_m = is_m_system(M, S)

    max_avoiding = None
    if is_m and laws.m_distributive:
        avoiding = [
            y for y in range(M.n) if not any(M.leq[c, y] for c in S)
        ]
        maxima = M.lat.maximal(avoiding)
        if maxima:
            max_avoiding = maxima[0]
            cls = cls or classify_elements(M, laws)
            verify(
                cls.prime[max_avoiding],
                'maximal elements avoiding an m-system are prime',
                f'{M.name}: {M.label(max_avoiding)}'
            )
    return MSystemReport(is_m_system=is_m, max_avoiding_prime=max_avoiding)


def m_system_lemma_check(M, cls=None):
    """
    p is prime iff S_p = {c : c not below p} is an m-system, for every p
    """
    cls = cls or classify_elements(M)
    down = _down_masks(M)
    for p in range(M.n):
        s_p = mask_of(c for c in range(M.n) if not M.leq[c, p])
        is_m = bool(s_p) and _is_m_system_mask(M, s_p, down)
        verify(
            is_m == cls.prime[p],
            'p is prime iff its complement of compacts is an m-system',
            f'{M.name}: {M.label(p)}'
        )
    return True


def spec_map(f):
    """
    The continuous map Spec(dst) -> Spec(src), p -> u(p), of a morphism with
    right adjoint u

    Checks that u(p) is prime for every prime p of the target and that the
    preimage of V(x) is V(f(x)) for every x of the source.

    :type f: LatticeMorphism
    :returns: SpecMapReport
    """
    src_cls = classify_elements(f.src)
    dst_T = zariski(f.dst)
    point_map = {}
    for p in dst_T.spec:
        q = f.adj[p]
        verify(
            src_cls.prime[q],
            'the right adjoint sends primes to primes',
            f'{f.dst.label(p)} -> {f.src.label(q)}'
        )
        point_map[p] = q

    for x in range(f.src.n):
        preimage = frozenset(
            p for p in dst_T.spec if f.src.leq[x, point_map[p]]
        )
        verify(
            preimage == dst_T.v_of[f.map[x]],
            'preimage of V(x) is V(f(x))',
            f'{f.src.name}: {f.src.label(x)}'
        )
    return SpecMapReport(point_map=point_map, continuous=True)


def enough_primes(M, laws=None, cls=None):
    """
    For m-distributive M (whose top is compact, being finite) the conditions
    1·1 = 1, "every maximal element of L minus {1} is prime" and "every x != 1
    lies below a prime" are equivalent

    :returns: EnoughPrimesReport
    """
    laws = laws or law_report(M)
    if not laws.m_distributive:
        raise NotMDistributive(f'{M.name} is not m-distributive')
    cls = cls or classify_elements(M, laws)
    primes = cls.primes()
    proper = [x for x in range(M.n) if x != M.top]

    top_idempotent = M.times(M.top, M.top) == M.top
    maximal_are_prime = all(cls.prime[x] for x in M.lat.maximal(proper))
    enough = all(any(M.leq[x, p] for p in primes) for x in proper)
    verify(
        top_idempotent == maximal_are_prime == enough,
        'enough primes iff 1·1 = 1 iff maximal proper elements are prime',
        M.name
    )
    return EnoughPrimesReport(
        top_idempotent=top_idempotent,
        maximal_are_prime=maximal_are_prime,
        enough_primes=enough,
    )


def linear_idempotent_check(M, laws=None, cls=None):
    """
    For monotone M: every proper element is prime iff L is a chain and every
    element is idempotent. Returns None when M is not monotone.
    """
    laws = laws or law_report(M)
    if not laws.monotone:
        return None
    cls = cls or classify_elements(M, laws)
    all_proper_prime = set(cls.primes()) == {
        x for x in range(M.n) if x != M.top
    }
    chain_of_idempotents = M.lat.is_chain() and all(cls.idempotent)
    verify(
        all_proper_prime == chain_of_idempotents,
        'Spec = L minus {1} iff chain of idempotents', M.name
    )
    return all_proper_prime
