"""
DOT source for Hasse diagrams and for the specialization order of Spec
"""
import numpy as np
from graphviz import Digraph


def _node_id(x):
    return f'n{x}'


def hasse_dot(M, primes=()):
    """
    One node per element, an edge from each element to every element it
    covers. Primes get a doubled border.

    :param M: the multiplicative lattice
    :param primes: element indices to mark
    :returns: DOT source text
    """
    primes = set(primes)
    dot = Digraph(name=M.name, comment='Hasse diagram', strict=True)
    for x in range(M.n):
        attrs = {'peripheries': '2'} if x in primes else {}
        dot.node(_node_id(x), M.label(x), **attrs)
    covers = M.lat.covers()
    for lower, upper in np.argwhere(covers):
        dot.edge(_node_id(upper), _node_id(lower))
    return dot.source


def spec_dot(M, T):
    """
    Specialization order of Spec: an edge from p to q when q lies in the
    closure of p, drawn between neighbours only

    :type T: ZariskiTopology
    :returns: DOT source text
    """
    dot = Digraph(
        name=f'Spec({M.name})', comment='Specialization order', strict=True
    )
    spec = list(T.spec)
    for p in spec:
        dot.node(_node_id(p), M.label(p), peripheries='2')
    for p in spec:
        above = [q for q in spec if q != p and q in T.closure(p)]
        for q in above:
            between = any(
                r not in (p, q) and r in T.closure(p) and q in T.closure(r)
                for r in spec
            )
            if not between:
                dot.edge(_node_id(p), _node_id(q))
    return dot.source
