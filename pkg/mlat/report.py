"""
Assemble a report for a structure document

A report is a plain dict shaped like template/report.json:

- name, kind, multiplication and the element labels of the lattice studied
- lattice: bounds, covering pairs and the multiplication table
- laws: the law report of the multiplication
- spectrum: primes, closed sets, sobriety and the Galois correspondence
- classification, series, annihilators: per-element results
- upper_central: the left and right upper central series
- hyperabelian: the six conditions (null unless m-distributive)
- structure: group, rng or brace specific results
- falsification_events: every theorem check that failed

Groups, rngs and braces are studied through their lattice of normal
subgroups or ideals; lattice documents are used as they are. Element lists
follow element index order and are rendered by label. An undefined
annihilator, center or hypercenter is rendered as null.
"""
import json
import logging
from copy import deepcopy
from dataclasses import asdict
from functools import cached_property

import yaml

from mlat.brace import brace_lattice, is_abelian_brace, socle, ybe_solution
from mlat.config import (
    BRACE_ORDER_BOUND,
    DEFAULT_MULTS,
    GROUP_ORDER_BOUND,
    REPORT_TEMPLATE,
    RNG_ORDER_BOUND,
)
from mlat.errors import FalsificationError, UndefinedAnnihilator, verify
from mlat.group import classify_group, normal_mult_lattice
from mlat.lattice import law_report, square_lattice
from mlat.rng import circle_and_radical, classify_rng, ideal_lattice
from mlat.series import (
    SIDES,
    annihilators,
    classify,
    hyperabelian_report,
    series,
    upper_central_series,
)
from mlat.spectrum import (
    check_sober,
    classify_elements,
    enough_primes,
    galois,
    linear_idempotent_check,
    m_system_lemma_check,
    zariski,
)
from mlat.utils import members

SECTIONS = (
    'lattice',
    'laws',
    'spectrum',
    'classification',
    'series',
    'annihilators',
    'upper_central',
    'hyperabelian',
    'structure',
)
HEADER_KEYS = (
    'name', 'kind', 'multiplication', 'elements', 'falsification_events'
)
DEFAULT_BOUNDS = {
    'group': GROUP_ORDER_BOUND,
    'rng': RNG_ORDER_BOUND,
    'brace': BRACE_ORDER_BOUND,
    'lattice': None,
}


def load_template():
    with open(REPORT_TEMPLATE, 'r') as json_file:
        return json.load(json_file)


def to_json(report):
    return json.dumps(report, indent=4, sort_keys=True)


def to_text(report):
    return yaml.safe_dump(
        report, default_flow_style=False, sort_keys=True, allow_unicode=True
    )


class ReportBuilder(object):
    def __init__(self, doc, mult=None, element=None, bound=None):
        """
        Compute report sections for a structure document

        :param doc: the parsed structure document
        :type doc: StructureDoc
        :param mult: multiplication of the substructure lattice, the kind's
        default when omitted. Must be None for lattice documents.
        :type mult: str
        :param element: label of a single element to restrict the
        per-element sections to
        :type element: str
        :param bound: order bound for the substructure enumeration
        :type bound: int
        """
        self.logger = logging.getLogger(type(self).__name__)
        self.doc = doc
        self.mult = mult or DEFAULT_MULTS[doc.kind]
        self.element = element
        self.bound = bound or DEFAULT_BOUNDS[doc.kind]
        self.template = load_template()
        self.events = []

    @cached_property
    def structure(self):
        return self.doc.build()

    @cached_property
    def lattice(self):
        """
        The multiplicative lattice the report is about
        """
        s = self.structure
        kind = self.doc.kind
        if kind == 'group':
            M = normal_mult_lattice(s, self.mult, bound=self.bound)
        elif kind == 'rng':
            M = ideal_lattice(s, self.mult, bound=self.bound)
        elif kind == 'brace':
            M = brace_lattice(s, bound=self.bound)
        else:
            M = s
        self.logger.info(f'Built {M.name} with {M.n} elements')
        return M

    @cached_property
    def laws(self):
        return law_report(self.lattice)

    @cached_property
    def cls(self):
        return classify_elements(self.lattice, self.laws)

    @cached_property
    def topology(self):
        return zariski(self.lattice, self.cls)

    def elements(self):
        """
        Indices of the elements the per-element sections cover
        """
        if self.element is None:
            return list(range(self.lattice.n))
        return [self.lattice.index(self.element)]

    def build(self, sections=SECTIONS):
        """
        Build the report, keeping only the header keys and the requested
        sections

        :param sections: report keys to compute, in any order
        :returns: report dict
        """
        name = self.doc.name
        self.logger.info(f'Building report for {self.doc.kind} {name}')
        report = deepcopy(self.template['report'])
        report.update(
            name=name,
            kind=self.doc.kind,
            multiplication=self.mult,
        )
        try:
            report['elements'] = list(self.lattice.labels)
        except FalsificationError as e:
            self.record_event('lattice', e)
        else:
            # Validate the element label before any section runs
            self.elements()
            for key in sections:
                report[key] = self._section(key)

        report['falsification_events'] = list(self.events)
        keep = set(HEADER_KEYS) | set(sections)
        report = {k: v for k, v in report.items() if k in keep}

        if self.events:
            self.logger.error(
                f'❌ Report for {name} recorded {len(self.events)} '
                'falsification event(s)!'
            )
        else:
            self.logger.info(f'✅ Report for {name} succeeded!')
        return report

    def record_event(self, section, e):
        event = deepcopy(self.template['event'])
        event.update(section=section, claim=e.claim, detail=e.detail)
        # Cached properties re-raise on every access
        if not any(
            ev['claim'] == e.claim and ev['detail'] == e.detail
            for ev in self.events
        ):
            self.logger.error(f'{section}: {e}')
            self.events.append(event)

    def _section(self, key):
        try:
            return getattr(self, f'_{key}')()
        except FalsificationError as e:
            self.record_event(key, e)
            return None

    def _label(self, x):
        return None if x is None else self.lattice.label(x)

    def _labels(self, xs):
        return [self.lattice.label(x) for x in sorted(xs)]

    def _element_labels(self, mask):
        """
        Labels of the members of a substructure of the underlying structure
        """
        return [self.structure.labels[x] for x in members(mask)]

    def _lattice(self):
        M = self.lattice
        cover_tab = M.lat.covers()
        covers = [
            [M.label(upper), M.label(lower)]
            for lower in range(M.n)
            for upper in range(M.n)
            if cover_tab[lower, upper]
        ]
        return {
            'bottom': M.label(M.bottom),
            'top': M.label(M.top),
            'covers': covers,
            'multiplication': [
                [M.label(M.times(x, y)) for y in range(M.n)]
                for x in range(M.n)
            ],
            'chain': M.lat.is_chain(),
            'distributive': M.lat.is_distributive(),
            'modular': M.lat.is_modular(),
        }

    def _laws(self):
        return asdict(self.laws)

    def _spectrum(self):
        M, cls, T, laws = self.lattice, self.cls, self.topology, self.laws
        sober = check_sober(T)
        verify(
            sober.sober, 'the spectrum is sober',
            f'{M.name}: {self._labels(sober.witness or ())}'
        )
        g = galois(M, cls, T, laws)
        m_system_lemma_check(M, cls)
        if laws.monotone:
            verify(
                classify_elements(square_lattice(M)).prime == cls.prime,
                'the symmetrized product has the same primes', M.name
            )
        closed = sorted(T.closed_sets, key=lambda F: (len(F), sorted(F)))
        primes_report = None
        if laws.m_distributive:
            primes_report = asdict(enough_primes(M, laws, cls))
        return {
            'primes': self._labels(cls.primes()),
            'semiprimes': self._labels(cls.semiprimes()),
            'closed_sets': [self._labels(F) for F in closed],
            'sober': sober.sober,
            'radical': self._label(g.radical),
            'rad_elements': self._labels(g.rad_elements),
            'rad_distributive': g.rad_distributive,
            'semisimple': g.semisimple,
            'enough_primes': primes_report,
            'linear_idempotent': linear_idempotent_check(M, laws, cls),
        }

    def _classification(self):
        M, cls = self.lattice, self.cls
        out = {}
        for x in self.elements():
            flags = classify(M, x, self.laws)
            out[M.label(x)] = {
                'prime': cls.prime[x],
                'semiprime': cls.semiprime[x],
                'meet_irreducible': cls.meet_irreducible[x],
                'idempotent': flags.idempotent,
                'abelian': flags.abelian,
                'left_nilpotent': flags.left_nilpotent,
                'right_nilpotent': flags.right_nilpotent,
                'solvable': flags.solvable,
                'derived_element': M.label(flags.derived_element),
            }
        return out

    def _trace(self, trace):
        return {
            'terms': [self._label(t) for t in trace.terms],
            'stabilized': trace.stabilized,
            'reached': self._label(trace.reached),
        }

    def _series(self):
        M = self.lattice
        out = {}
        for x in self.elements():
            bundle = series(M, x)
            out[M.label(x)] = {
                'lower_central_left': self._trace(bundle.lcs_left),
                'lower_central_right': self._trace(bundle.lcs_right),
                'derived': self._trace(bundle.derived),
            }
        return out

    def _annihilators(self):
        M = self.lattice
        out = {}
        for x in self.elements():
            ann = annihilators(M, x, self.laws)
            out[M.label(x)] = {
                'r_ann': self._label(ann.r_ann),
                'l_ann': self._label(ann.l_ann),
                'r_center': self._label(ann.r_center),
                'l_center': self._label(ann.l_center),
            }
        return out

    def _upper_central(self):
        out = {}
        for side in SIDES:
            ucs = upper_central_series(self.lattice, side)
            out[side] = {
                'terms': [self._label(t) for t in ucs.trace.terms],
                'hypercenter': self._label(ucs.hypercenter),
                'hypercentral': ucs.hypercentral,
                'undefined_at': ucs.undefined_at,
            }
        return out

    def _hyperabelian(self):
        if not self.laws.m_distributive:
            self.logger.info(
                f'{self.lattice.name} is not m-distributive, skipping the '
                'hyperabelian conditions'
            )
            return None
        h = hyperabelian_report(self.lattice, self.laws, self.cls)
        return {
            'conditions': h.conditions(),
            'agree': h.agree,
            'hyperabelian': all(h.conditions().values()),
            'chain_witness': (
                [self._label(t) for t in h.chain_witness]
                if h.chain_witness is not None else None
            ),
            'spec_size': h.spec_size,
            'm_systems_inferred': h.cond_f_inferred,
        }

    def _structure(self):
        s, kind = self.structure, self.doc.kind
        if kind == 'group':
            out = asdict(classify_group(s, bound=self.bound))
            out['order'] = s.n
            out['center'] = self._element_labels(s.center())
            return out
        if kind == 'rng':
            out = asdict(classify_rng(s, bound=self.bound))
            radical = circle_and_radical(s)
            out['order'] = s.n
            out['jacobson_radical'] = self._element_labels(radical.jacobson)
            return out
        if kind == 'brace':
            ybe = ybe_solution(s)
            try:
                soc = self._element_labels(socle(s, self.lattice))
            except UndefinedAnnihilator:
                soc = None
            return {
                'order': s.n,
                'abelian': is_abelian_brace(s),
                'socle': soc,
                'ybe': {
                    'bijective': ybe.bijective,
                    'braid_holds': ybe.braid_holds,
                    'involutive': ybe.involutive,
                },
            }
        return {}
