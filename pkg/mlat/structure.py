"""
Structure documents

A structure document is a JSON (or YAML) object:

    {
        "kind": "group" | "rng" | "brace" | "lattice",
        "n": <order>,
        "name": <optional display name>,
        "labels": <optional list of n element names>,
        <tables>
    }

with the tables named by kind:

    group   - cayley
    rng     - add, mul
    brace   - circ, star
    lattice - leq, mul

Every table is an n×n array of integer arrays with entries in [0, n) (leq
takes 0/1 or booleans). Sources are file paths, literal document text or
catalog:<NAME> for a built-in structure.
"""
import logging
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import yaml

from mlat import catalog
from mlat.brace import SkewBrace
from mlat.config import CATALOG_PREFIX
from mlat.errors import ParseError
from mlat.group import FinGroup
from mlat.lattice import attach_multiplication, build_lattice
from mlat.rng import FinRng

KIND_TABLES = {
    'group': ('cayley',),
    'rng': ('add', 'mul'),
    'brace': ('circ', 'star'),
    'lattice': ('leq', 'mul'),
}
OPTIONAL_KEYS = ('name', 'labels')

logger = logging.getLogger(__name__)


@dataclass
class StructureDoc:
    kind: str
    n: int
    name: str
    labels: Optional[List[str]] = None
    tables: Dict[str, list] = field(default_factory=dict)
    catalog_name: Optional[str] = None
    _built: object = field(default=None, init=False, repr=False, compare=False)

    def build(self):
        """
        Construct and validate the structure the document describes

        :returns: FinGroup, FinRng, SkewBrace or MultLattice
        """
        if self._built is None:
            self._built = self._construct()
        return self._built

    def _construct(self):
        if self.catalog_name is not None:
            return catalog.lookup(self.catalog_name)[1]
        t = self.tables
        if self.kind == 'group':
            return FinGroup(t['cayley'], self.labels, name=self.name)
        if self.kind == 'rng':
            return FinRng(t['add'], t['mul'], self.labels, name=self.name)
        if self.kind == 'brace':
            return SkewBrace(t['circ'], t['star'], self.labels, name=self.name)
        lat = build_lattice(t['leq'], self.labels)
        return attach_multiplication(lat, t['mul'], name=self.name)


def _line(node):
    return node.start_mark.line + 1


def _scalar(node, value, allow_bool=False):
    if isinstance(value, bool):
        if allow_bool:
            return int(value)
        raise ParseError(_line(node), f'expected an integer, got {value}')
    if not isinstance(value, int):
        raise ParseError(_line(node), f'expected an integer, got {value!r}')
    return value


def _matrix(key, node, value, n):
    allow_bool = key == 'leq'
    if not isinstance(node, yaml.SequenceNode) or len(value) != n:
        raise ParseError(_line(node), f'{key} must be a list of {n} rows')
    rows = []
    for row_node, row in zip(node.value, value):
        if not isinstance(row_node, yaml.SequenceNode) or len(row) != n:
            raise ParseError(
                _line(row_node), f'every row of {key} must have {n} entries'
            )
        out = []
        for cell_node, cell in zip(row_node.value, row):
            v = _scalar(cell_node, cell, allow_bool)
            upper = 2 if allow_bool else n
            if not 0 <= v < upper:
                raise ParseError(
                    _line(cell_node),
                    f'{key} entry {v} out of range [0, {upper})'
                )
            out.append(v)
        rows.append(out)
    return rows


def parse_structure(text):
    """
    Parse document text into a StructureDoc

    :raises ParseError: with the offending line
    """
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, 'problem_mark', None)
        line = mark.line + 1 if mark is not None else None
        raise ParseError(line, f'malformed document: {e}')

    if not isinstance(node, yaml.MappingNode) or not isinstance(data, dict):
        raise ParseError(
            _line(node) if node is not None else 1,
            'the document must be an object'
        )
    nodes = {k.value: v for k, v in node.value}

    kind = data.get('kind')
    if kind not in KIND_TABLES:
        line = _line(nodes['kind']) if 'kind' in nodes else _line(node)
        raise ParseError(
            line, f'kind must be one of {sorted(KIND_TABLES)}, got {kind!r}'
        )
    allowed = {'kind', 'n'} | set(OPTIONAL_KEYS) | set(KIND_TABLES[kind])
    for key in data:
        if key not in allowed:
            raise ParseError(_line(nodes[key]), f'unexpected key {key!r}')
    for key in ('n',) + KIND_TABLES[kind]:
        if key not in data:
            raise ParseError(_line(node), f'missing key {key!r}')

    n = _scalar(nodes['n'], data['n'])
    if n < 1:
        raise ParseError(_line(nodes['n']), 'n must be positive')

    labels = data.get('labels')
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n:
            raise ParseError(
                _line(nodes['labels']), f'labels must be a list of {n} names'
            )
        labels = [str(lb) for lb in labels]

    tables = {
        key: _matrix(key, nodes[key], data[key], n)
        for key in KIND_TABLES[kind]
    }
    name = str(data.get('name') or kind)
    logger.debug(f'Parsed {kind} document {name} of order {n}')
    return StructureDoc(
        kind=kind, n=n, name=name, labels=labels, tables=tables
    )


def load_structure(source):
    """
    Load a structure document from a file path, literal text or
    catalog:<NAME>

    :param source: path, document text or catalog reference
    :type source: str
    :returns: StructureDoc, already validated against the axioms of its kind
    :raises ValidationError: when the tables fail those axioms
    """
    if source.startswith(CATALOG_PREFIX):
        name = source[len(CATALOG_PREFIX):]
        kind, structure = catalog.lookup(name)
        logger.info(f'Loaded built-in {kind} {name}')
        doc = StructureDoc(
            kind=kind, n=structure.n, name=name,
            labels=list(structure.labels), catalog_name=name
        )
        doc._built = structure
        return doc
    path = os.path.expanduser(source)
    if os.path.isfile(path):
        with open(path, 'r') as f:
            text = f.read()
        logger.info(f'Loading structure document {os.path.abspath(path)}')
    elif '{' not in source and ':' not in source:
        raise ParseError(None, f'no such file: {source}')
    else:
        text = source
    doc = parse_structure(text)
    doc.build()
    logger.info(f'✅ Validated {doc.kind} {doc.name}')
    return doc
