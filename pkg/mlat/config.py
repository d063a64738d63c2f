import logging
import os

ROOT_DIR = os.path.dirname(os.path.dirname(__file__))
DEFAULT_LOG_LEVEL = logging.DEBUG
DEFAULT_LOG_OVERWRITE_OPT = True
DEFAULT_LOG_FILENAME = "mlat.log"

DEFAULT_OUTPUT_DIR = os.path.join(os.getcwd(), 'mlat_output')
DEFAULT_CATALOG_REPORTS_FILE = 'catalog_reports.jsonl'

# Order bounds for the exhaustive enumerations
GROUP_ORDER_BOUND = 128
RNG_ORDER_BOUND = 64
BRACE_ORDER_BOUND = 16
SUBGROUP_ORACLE_BOUND = 16

# Above this many elements the m-system condition of the hyperabelian
# report is inferred from the empty spectrum instead of enumerated
M_SYSTEM_EXHAUSTIVE_LIMIT = 12
# The subset-pair form of m-distributivity is only evaluated up to this size
M_DISTRIBUTIVE_SUBSET_CHECK_LIMIT = 6

GROUP_MULTS = ('commutator', 'intersection', 'zero')
RNG_MULTS = ('product', 'intersection', 'zero', 'ring-commutator')
BRACE_MULTS = ('commutator',)
DEFAULT_MULTS = {
    'group': 'commutator',
    'rng': 'product',
    'brace': 'commutator',
    'lattice': None,
}
OUTPUT_FORMATS = ('json', 'text', 'dot')
CATALOG_PREFIX = 'catalog:'

REPORT_TEMPLATE = os.path.join(
    ROOT_DIR, 'template', 'report.json'
)
