"""
Entry point for mlat
"""
import logging
import os
import time

import click
import jsonlines

from mlat import catalog
from mlat.config import (
    BRACE_MULTS,
    CATALOG_PREFIX,
    DEFAULT_CATALOG_REPORTS_FILE,
    DEFAULT_OUTPUT_DIR,
    GROUP_MULTS,
    OUTPUT_FORMATS,
    RNG_MULTS,
)
from mlat.diagram import hasse_dot, spec_dot
from mlat.errors import FalsificationError, ParseError, ValidationError
from mlat.report import SECTIONS, ReportBuilder, to_json, to_text
from mlat.structure import KIND_TABLES, load_structure
from mlat.utils import seconds_to_hms, setup_logger

CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])

KIND_MULTS = {
    'group': GROUP_MULTS,
    'rng': RNG_MULTS,
    'brace': BRACE_MULTS,
    'lattice': (),
}
ALL_MULTS = tuple(sorted(set(GROUP_MULTS + RNG_MULTS + BRACE_MULTS)))

COMMAND_SECTIONS = {
    'validate': (),
    'lattice': ('lattice', 'laws'),
    'spec': ('spectrum',),
    'classify': ('classification', 'structure'),
    'series': ('series', 'annihilators', 'upper_central'),
    'hyperabelian': ('hyperabelian',),
    'brace-ybe': ('structure',),
    'report': SECTIONS,
    'dot': (),
}
DOT_COMMANDS = ('lattice', 'dot')
ELEMENT_COMMANDS = ('classify', 'series', 'report')

logger = logging.getLogger(__name__)


class UserError(click.ClickException):
    exit_code = 1


class UnknownCommand(UserError):
    pass


class FlagConflict(UserError):
    pass


class MlatGroup(click.Group):
    """
    Reports every usage problem as a user error with exit code 1
    """

    def resolve_command(self, ctx, args):
        name = args[0] if args else None
        if (
            name is not None
            and not name.startswith('-')
            and self.get_command(ctx, name) is None
        ):
            raise UnknownCommand(
                f'Unknown command {name}; expected one of '
                f'{sorted(self.list_commands(ctx))}'
            )
        return super().resolve_command(ctx, args)

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            raise UserError(e.format_message())

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            raise UserError(e.format_message())


def _check_flags(doc, cmd, mult, element, out, spec):
    if mult is not None and mult not in KIND_MULTS[doc.kind]:
        raise FlagConflict(
            f'--mult={mult} does not apply to a {doc.kind} document; '
            f'expected one of {list(KIND_MULTS[doc.kind])}'
        )
    if out == 'dot' and cmd not in DOT_COMMANDS:
        raise FlagConflict(f'--out=dot does not apply to {cmd}')
    if cmd == 'dot' and out not in (None, 'dot'):
        raise FlagConflict(f'dot always emits DOT, got --out={out}')
    if spec and cmd != 'dot':
        raise FlagConflict(f'--spec does not apply to {cmd}')
    if element is not None and cmd not in ELEMENT_COMMANDS:
        raise FlagConflict(f'--element does not apply to {cmd}')
    if cmd == 'brace-ybe' and doc.kind != 'brace':
        raise FlagConflict(f'brace-ybe needs a brace, got a {doc.kind}')


def _render_dot(builder, spec):
    try:
        M = builder.lattice
        if spec:
            return spec_dot(M, builder.topology)
        return hasse_dot(M, builder.cls.primes())
    except FalsificationError as e:
        builder.record_event('dot', e)
        return ''


def run_command(
    doc, cmd, mult=None, element=None, out=None, bound=None, spec=False
):
    """
    Run one command on a structure document

    :param doc: the parsed structure document
    :type doc: StructureDoc
    :param cmd: command name, a key of COMMAND_SECTIONS
    :param mult: multiplication of the substructure lattice
    :param element: label of the single element to report on
    :param out: json, text or dot
    :param bound: order bound for the substructure enumeration
    :param spec: for dot, draw the specialization order of Spec instead of
    the Hasse diagram
    :returns: (output text, falsification events)
    """
    if cmd not in COMMAND_SECTIONS:
        raise UnknownCommand(f'Unknown command {cmd}')
    if mult is not None:
        mult = mult.replace('_', '-')
    _check_flags(doc, cmd, mult, element, out, spec)

    builder = ReportBuilder(doc, mult=mult, element=element, bound=bound)
    if cmd == 'dot' or out == 'dot':
        return _render_dot(builder, spec), list(builder.events)

    report = builder.build(COMMAND_SECTIONS[cmd])
    text = to_text(report) if out == 'text' else to_json(report)
    return text, report['falsification_events']


@click.group(cls=MlatGroup, context_settings=CONTEXT_SETTINGS)
def cli():
    """
    A CLI for finite multiplicative lattices built from groups, rngs and
    skew braces

    \b
    Structure sources are one of:
        - a path to a JSON or YAML structure document
        - the document text itself
        - catalog:<NAME> for a built-in structure (see mlat catalog -h)
    """
    pass


def output_dir_option(func):
    # Output directory where logs and catalog reports get written
    return click.option(
        '--output_dir', '-o',
        help='Path to the output directory',
        show_default=True,
        default=DEFAULT_OUTPUT_DIR,
        type=click.Path(exists=False, file_okay=False, dir_okay=True))(func)


def common_args_options(func):
    """
    Common click args and options
    """
    func = output_dir_option(func)

    func = click.option(
        '--bound',
        type=click.IntRange(min=1),
        default=None,
        help=(
            'Largest structure order to enumerate substructures of. '
            'Defaults depend on the structure kind'
        ))(func)

    func = click.option(
        '--out',
        type=click.Choice(OUTPUT_FORMATS),
        default=None,
        help='Output format, json unless given')(func)

    func = click.option(
        '--element',
        default=None,
        help='Label of the single lattice element to report on')(func)

    func = click.option(
        '--mult',
        type=click.Choice(ALL_MULTS),
        default=None,
        help=(
            'Multiplication on the lattice of normal subgroups or ideals. '
            'Groups: commutator, intersection, zero. Rngs: product, '
            'intersection, zero, ring-commutator'
        ))(func)

    func = click.argument('source')(func)
    return func


def _run(ctx, cmd, source, output_dir, **flags):
    setup_logger(os.path.join(output_dir, 'logs'))
    try:
        doc = load_structure(source)
        text, events = run_command(doc, cmd, **flags)
    except (ValidationError, ParseError) as e:
        logger.error(f'❌ {cmd} failed: {e}')
        raise UserError(str(e))
    click.echo(text)
    if events:
        ctx.exit(2)


@click.command('validate')
@common_args_options
@click.pass_context
def validate(ctx, source, mult, element, out, bound, output_dir):
    """
    Parse and validate a structure and its lattice of substructures
    """
    _run(ctx, 'validate', source, output_dir, mult=mult, element=element,
         out=out, bound=bound)


@click.command('lattice')
@common_args_options
@click.pass_context
def lattice_command(ctx, source, mult, element, out, bound, output_dir):
    """
    Order, multiplication table and laws of the multiplicative lattice
    """
    _run(ctx, 'lattice', source, output_dir, mult=mult, element=element,
         out=out, bound=bound)


@click.command('spec')
@common_args_options
@click.pass_context
def spec_command(ctx, source, mult, element, out, bound, output_dir):
    """
    Prime elements, Zariski closed sets, sobriety and the radical
    """
    _run(ctx, 'spec', source, output_dir, mult=mult, element=element,
         out=out, bound=bound)


@click.command('classify')
@common_args_options
@click.pass_context
def classify_command(ctx, source, mult, element, out, bound, output_dir):
    """
    Per-element flags (prime, nilpotent, solvable, ...) and the group or
    rng classification
    """
    _run(ctx, 'classify', source, output_dir, mult=mult, element=element,
         out=out, bound=bound)


@click.command('series')
@common_args_options
@click.pass_context
def series_command(ctx, source, mult, element, out, bound, output_dir):
    """
    Lower central, derived and upper central series and annihilators
    """
    _run(ctx, 'series', source, output_dir, mult=mult, element=element,
         out=out, bound=bound)


@click.command('hyperabelian')
@common_args_options
@click.pass_context
def hyperabelian_command(ctx, source, mult, element, out, bound, output_dir):
    """
    The six hyperabelian conditions of an m-distributive lattice
    """
    _run(ctx, 'hyperabelian', source, output_dir, mult=mult,
         element=element, out=out, bound=bound)


@click.command('brace-ybe')
@common_args_options
@click.pass_context
def brace_ybe(ctx, source, mult, element, out, bound, output_dir):
    """
    Set-theoretic Yang-Baxter solution and socle of a skew brace
    """
    _run(ctx, 'brace-ybe', source, output_dir, mult=mult, element=element,
         out=out, bound=bound)


@click.command('report')
@common_args_options
@click.pass_context
def report_command(ctx, source, mult, element, out, bound, output_dir):
    """
    Everything mlat computes about a structure
    """
    _run(ctx, 'report', source, output_dir, mult=mult, element=element,
         out=out, bound=bound)


@click.command('dot')
@common_args_options
@click.option(
    '--spec', 'spec', is_flag=True, default=False,
    help='Draw the specialization order of Spec instead of the Hasse diagram')
@click.pass_context
def dot_command(ctx, spec, source, mult, element, out, bound, output_dir):
    """
    DOT source of the Hasse diagram, primes drawn with a double border
    """
    _run(ctx, 'dot', source, output_dir, mult=mult, element=element,
         out=out, bound=bound, spec=spec)


@click.command('catalog')
@click.option(
    '--kind',
    type=click.Choice(sorted(KIND_TABLES)),
    default=None,
    help='Only report on built-in structures of this kind')
@click.option(
    '--list', 'list_only', is_flag=True, default=False,
    help='Print the built-in structure names and exit')
@output_dir_option
@click.pass_context
def catalog_command(ctx, kind, list_only, output_dir):
    """
    Report on every built-in structure, one JSON report per line in
    <output directory>/catalog_reports.jsonl
    """
    if list_only:
        for name in catalog.names(kind):
            click.echo(name)
        return

    setup_logger(os.path.join(output_dir, 'logs'))
    start = time.time()
    reports_file = os.path.join(
        os.path.abspath(os.path.expanduser(output_dir)),
        DEFAULT_CATALOG_REPORTS_FILE
    )
    count = 0
    events = 0
    with jsonlines.open(reports_file, mode='w', sort_keys=True) as writer:
        for name in catalog.names(kind):
            doc = load_structure(CATALOG_PREFIX + name)
            report = ReportBuilder(doc).build()
            writer.write(report)
            count += 1
            events += len(report['falsification_events'])

    logger.info(
        f'✏️ Wrote {count} reports to {reports_file} in '
        f'{seconds_to_hms(time.time() - start)}'
    )
    click.echo(
        f'{count} structures, {events} falsification events, reports in '
        f'{reports_file}'
    )
    if events:
        logger.error(f'❌ Catalog run recorded {events} falsification events!')
        ctx.exit(2)
    logger.info('✅ Catalog run succeeded!')


cli.add_command(validate)
cli.add_command(lattice_command)
cli.add_command(spec_command)
cli.add_command(classify_command)
cli.add_command(series_command)
cli.add_command(hyperabelian_command)
cli.add_command(brace_ybe)
cli.add_command(report_command)
cli.add_command(dot_command)
cli.add_command(catalog_command)
