import io
import sys
import json
import click
import logging
import logging.config
from pathlib import Path
from time import perf_counter
from contextlib import ExitStack
from functools import partial, update_wrapper

from trilist.config import Config, TRILIST_CONFIG_NAME
from trilist.version import __version__
from trilist.models.exceptions import TrilistException, ConfigLoadError, GuardExceeded
from trilist.models import (load_edgelist, read_ordering, write_ordering, cost_report,
                            CountingSink, TriangleWriter, CostReport)
from trilist.orderings import ORDERING_METHODS, compute_ordering, core_decomposition
from trilist.listing import LANES
from trilist.bench import (MODES, run_pipeline, run_bench, write_records,
                           cost_time_correlation)
from trilist.oracle import read_nae_formula, read_set_cover
from trilist.gadgets import (nae_graph, ld_gadget, setcover_graph,
                             weighted_to_weightless_gadget, read_weighted, write_gadget,
                             verify_nae, verify_ld, verify_setcover, verify_weight2plain,
                             verify_linear_cost)


GADGET_KINDS = ('nae', 'ld', 'setcover', 'weight2plain')


def handle_errors(f):
    """ Decorator that reports trilist errors in red and exits with code 1. """
    def new_func(obj, *args, **kwargs):
        try:
            return f(obj, *args, **kwargs)
        except TrilistException as err:
            click.echo(_style(obj['show_color'], str(err), fg='red', bold=True), err=True)
            sys.exit(1)
    return update_wrapper(new_func, f)


def ingest_config_obj(ctx, *, verbose=False):
    """ Ingest the configuration object into the click context and set up logging.

    Without an explicit path the configuration file is optional, since every setting
    has a default.
    """
    try:
        if ctx.obj['config_path']:
            config = Config.from_file(ctx.obj['config_path'])
        else:
            config = Config()
            config.load_from_file(strict=False)
    except ConfigLoadError as err:
        click.echo(_style(ctx.obj['show_color'], str(err), fg='red', bold=True), err=True)
        raise click.Abort()

    logging_config = config.logging
    if not ctx.obj['show_color']:
        logging_config['handlers']['console']['formatter'] = 'plain'
    logging.config.dictConfig(logging_config)
    if verbose:
        logging.getLogger('trilist').setLevel(logging.DEBUG)
    ctx.obj['config'] = config


@click.group(context_settings=dict(help_option_names=['-h', '--help']))
@click.version_option(version=__version__, prog_name='Trilist')
@click.option('--config', '-c', help='Path to configuration file.')
@click.option('--no-color', '-n', is_flag=True, help='Turn colored output off.')
@click.option('--verbose', '-v', is_flag=True, help='Log debug messages.')
@click.pass_context
def cli(ctx, config, no_color, verbose):
    """ Command line client for trilist. Lists triangles along vertex orderings that
    bound the listing work, and checks the hardness constructions behind them on small
    instances.
    """
    ctx.obj = {
        'show_color': not no_color if no_color is not None else True,
        'config_path': config
    }
    if ctx.invoked_subcommand != 'config':
        ingest_config_obj(ctx, verbose=verbose)


@cli.group()
def config():
    """ Manage the configuration. """
    pass


@config.command('default')
@click.argument('dest', type=click.Path(exists=True))
def config_default(dest):
    """ Create a default configuration file.

    \b
    DEST: Path or file name for the configuration file.
    """
    conf_path = Path(dest).resolve()
    if conf_path.is_dir():
        conf_path = conf_path / TRILIST_CONFIG_NAME

    conf_path.write_text(Config.default())
    click.echo('Configuration written to {}'.format(conf_path))


@config.command('list')
@click.pass_context
def config_list(ctx):
    """ List the current configuration. """
    ingest_config_obj(ctx)
    click.echo(json.dumps(ctx.obj['config'].to_dict(), indent=4))


def ordering_params(config, seed, eps, max_sweeps, initial, objective):
    """ Merge the ordering options with the neigh section of the configuration. """
    neigh = config.neigh
    return {
        'seed': seed,
        'eps': neigh['eps'] if eps is None else eps,
        'max_sweeps': neigh['max_sweeps'] if max_sweeps is None else max_sweeps,
        'initial': neigh['initial'] if initial is None else initial,
        'objective': objective,
    }


def ordering_options(f):
    """ Decorator adding the options shared by the commands that compute orderings. """
    f = click.option('--objective', type=click.Choice(['pm', 'pp']), default='pm',
                     help='Cost minimized by neigh.')(f)
    f = click.option('--initial', type=click.Choice(ORDERING_METHODS[:-1]),
                     help='Starting ordering of neigh.')(f)
    f = click.option('--max-sweeps', type=int, help='Sweep cap of neigh.')(f)
    f = click.option('--eps', type=float, help='Relative improvement threshold of neigh.')(f)
    f = click.option('--seed', type=int, default=0, help='Seed of the random ordering.')(f)
    return f


def _echo_costs(obj, name, report):
    click.echo(','.join(('ordering',) + CostReport.FIELDS))
    click.echo(','.join([name] + [str(v) for v in report.to_dict().values()]))
    if not report.check_identity():
        click.echo(_style(obj['show_color'], 'Cost identity violated', fg='red', bold=True),
                   err=True)
        sys.exit(1)


def _echo_records(obj, records, *, header=True):
    buffer = io.StringIO()
    write_records(records, buffer, header=header,
                  float_format=obj['config'].cli['float_format'])
    click.echo(buffer.getvalue(), nl=False)


@cli.command('order')
@click.argument('graph_path', type=click.Path(exists=True, dir_okay=False))
@click.argument('method', type=click.Choice(ORDERING_METHODS))
@click.option('--output', '-o', type=click.Path(dir_okay=False),
              help='Ordering file, <graph>.<method>.order by default.')
@ordering_options
@click.pass_obj
@handle_errors
def order(obj, graph_path, method, output, seed, eps, max_sweeps, initial, objective):
    """ Compute an ordering, write it and print its costs.

    \b
    GRAPH_PATH: Edge list of the graph.
    METHOD: The ordering method.
    """
    graph = load_edgelist(graph_path)
    params = ordering_params(obj['config'], seed, eps, max_sweeps, initial, objective)
    ordering = compute_ordering(graph, method, **params)

    graph_file = Path(graph_path)
    output = Path(output) if output else graph_file.with_name(
        '{}.{}.order'.format(graph_file.stem, method))
    with output.open('w') as stream:
        write_ordering(ordering, graph, stream)

    _echo_costs(obj, method, cost_report(graph, ordering))
    if method == 'core':
        click.echo('degeneracy,{}'.format(core_decomposition(graph).degeneracy))
    click.echo('Ordering written to {}'.format(output), err=True)


@cli.command('cost')
@click.argument('graph_path', type=click.Path(exists=True, dir_okay=False))
@click.argument('ordering_path', type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
@handle_errors
def cost(obj, graph_path, ordering_path):
    """ Print the costs an ordering file induces on a graph.

    \b
    GRAPH_PATH: Edge list of the graph.
    ORDERING_PATH: File of 'label rank' lines.
    """
    graph = load_edgelist(graph_path)
    ordering = read_ordering(ordering_path, graph, name=Path(ordering_path).stem)
    _echo_costs(obj, ordering.name, cost_report(graph, ordering))


@cli.command('list')
@click.argument('graph_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--order', 'method', type=click.Choice(ORDERING_METHODS), default='degree',
              help='Ordering method, ignored with --order-file.')
@click.option('--order-file', type=click.Path(exists=True, dir_okay=False),
              help='Read the ordering from a file instead of computing it.')
@click.option('--algo', type=click.Choice(sorted(LANES)),
              help='Listing algorithm, from the configuration by default.')
@click.option('--mode', type=click.Choice(MODES), default='mere',
              help='Time the listing only (mere) or loading, ordering and listing (full).')
@click.option('--threads', '-t', type=int, help='Number of listing lanes.')
@click.option('--output', '-o', type=click.Path(dir_okay=False),
              help='Write the triangles to this file instead of only counting them.')
@click.option('--no-header', is_flag=True, help='Do not print the CSV header.')
@ordering_options
@click.pass_obj
@handle_errors
def list_command(obj, graph_path, method, order_file, algo, mode, threads, output, no_header,
                 seed, eps, max_sweeps, initial, objective):
    """ List the triangles of a graph and print one benchmark row.

    \b
    GRAPH_PATH: Edge list of the graph.
    """
    config = obj['config']
    algo = algo or config.listing['algorithm']
    threads = threads if threads is not None else config.listing['threads']
    params = ordering_params(config, seed, eps, max_sweeps, initial, objective)

    source, load_time = graph_path, None
    if order_file or output:
        start = perf_counter()
        source = load_edgelist(graph_path)
        load_time = perf_counter() - start

    ordering = method
    if order_file:
        ordering = read_ordering(order_file, source, name=Path(order_file).stem)

    with ExitStack() as stack:
        if output:
            sink = TriangleWriter(stack.enter_context(open(output, 'w')), source.labels)
        else:
            sink = CountingSink()
        record, _ = run_pipeline(source, ordering, algo, mode=mode, threads=threads, sink=sink,
                                 dataset=Path(graph_path).stem, params=params,
                                 load_time=load_time)

    _echo_records(obj, [record], header=not no_header)
    if not record.is_consistent():
        click.echo(_style(obj['show_color'], 'Inner operations differ from the cost',
                          fg='red', bold=True), err=True)
        sys.exit(1)


@cli.command('bench')
@click.argument('graph_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--orderings', help='Comma separated ordering methods.')
@click.option('--algos', help='Comma separated listing algorithms.')
@click.option('--repeats', '-r', type=int, help='Runs per ordering and algorithm.')
@click.option('--mode', type=click.Choice(MODES), default='mere',
              help='Time the listing only (mere) or the whole pipeline (full).')
@click.option('--threads', '-t', type=int, help='Number of listing lanes.')
@click.option('--output', '-o', type=click.Path(dir_okay=False),
              help='Write the CSV to this file instead of the standard output.')
@ordering_options
@click.pass_obj
@handle_errors
def bench(obj, graph_path, orderings, algos, repeats, mode, threads, output,
          seed, eps, max_sweeps, initial, objective):
    """ Run every ordering with every algorithm and print all samples as CSV.

    \b
    GRAPH_PATH: Edge list of the graph.
    """
    config = obj['config']
    orderings = orderings.split(',') if orderings else config.bench['orderings']
    algos = algos.split(',') if algos else config.bench['algorithms']
    repeats = repeats if repeats is not None else config.bench['repeats']
    threads = threads if threads is not None else config.listing['threads']
    params = ordering_params(config, seed, eps, max_sweeps, initial, objective)

    records = run_bench(graph_path, orderings, algos, repeats, mode=mode, threads=threads,
                        dataset=Path(graph_path).stem, params=params)
    if output:
        with open(output, 'w') as stream:
            write_records(records, stream, float_format=config.cli['float_format'])
        click.echo('{} rows written to {}'.format(len(records), output), err=True)
    else:
        _echo_records(obj, records)
    cost_time_correlation(records)

    if not all(record.is_consistent() for record in records):
        click.echo(_style(obj['show_color'], 'Inner operations differ from the cost',
                          fg='red', bold=True), err=True)
        sys.exit(1)


@cli.command('gadget')
@click.argument('kind', type=click.Choice(GADGET_KINDS))
@click.argument('instance')
@click.option('--weights', '-w', type=click.Path(exists=True, dir_okay=False),
              help='File of "label weight" lines, for weight2plain.')
@click.option('--d', 'd', type=int, help='Construction parameter of setcover.')
@click.option('--output', '-o', help='Output prefix, the kind by default.')
@click.option('--verify', is_flag=True, help='Check the construction with the exhaustive oracles.')
@click.pass_obj
@handle_errors
def gadget(obj, kind, instance, weights, d, output, verify):
    """ Build a hardness construction, write it and optionally verify it.

    The graph goes to <prefix>.edges and the vertex roles and weights to <prefix>.roles.

    \b
    KIND: nae, ld, setcover or weight2plain.
    INSTANCE: Formula file for nae, the integer d for ld, instance file for setcover,
              edge list for weight2plain.
    """
    guards = obj['config'].guards
    limits = {'exhaustive_limit': guards['exhaustive_n']}

    if kind == 'nae':
        formula = read_nae_formula(instance)
        built = nae_graph(formula)
        check = partial(verify_nae, formula, nae_limit=guards['nae_vars'], **limits)
    elif kind == 'ld':
        try:
            size = int(instance)
        except ValueError:
            raise click.BadParameter('ld expects an integer, got {!r}'.format(instance))
        built = ld_gadget(size)
        check = partial(verify_ld, size, **limits)
    elif kind == 'setcover':
        problem = read_set_cover(instance)
        built = setcover_graph(problem, d)
        check = partial(verify_setcover, problem, d, sets_limit=guards['setcover_sets'],
                        **limits)
    else:
        if weights is None:
            raise click.BadParameter('weight2plain needs --weights')
        weighted = read_weighted(instance, weights)
        built = weighted_to_weightless_gadget(weighted, limit=guards['gadget_vertices'])
        check = partial(verify_weight2plain, weighted,
                        gadget_limit=guards['gadget_vertices'], **limits)

    prefix = output or kind
    with open('{}.edges'.format(prefix), 'w') as graph_stream, \
            open('{}.roles'.format(prefix), 'w') as sidecar_stream:
        write_gadget(built, graph_stream, sidecar_stream)
    click.echo('{} written to {}.edges and {}.roles ({} vertices, {} edges)'.format(
        kind, prefix, prefix, built.graph.n, built.graph.m))
    for name, value in built.constants.items():
        click.echo('{:12} {}'.format(_style(obj['show_color'], name + ':', bold=True), value))

    if not verify:
        return

    try:
        verdicts = [check(), verify_linear_cost(built.weighted)]
    except GuardExceeded as err:
        click.echo(_style(obj['show_color'], 'Verification refused: {}'.format(err),
                          fg='red', bold=True))
        sys.exit(1)

    for verdict in verdicts:
        click.echo(_style(obj['show_color'], str(verdict),
                          fg='green' if verdict.passed else 'red', bold=True))
    if not all(verdicts):
        sys.exit(1)


def _style(enabled, text, **kwargs):
    """ Helper function to enable/disable styled output text.

    Args:
        enable (bool): Turn on or off styling.
        text (string): The string that should be styled.
        kwargs (dict): Parameters that are passed through to click.style

    Returns:
        string: The input with either the styling applied (enabled=True)
                or just the text (enabled=False)
    """
    if enabled:
        return click.style(text, **kwargs)
    else:
        return text


if __name__ == '__main__':
    cli(obj={})
