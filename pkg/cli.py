#!/usr/bin/env python3
"""
Command-line front end for the surface word bialgebra.

Every command needs ``--surface``; the symbol is validated before any word is
parsed. Exit status is 0 on success, 1 when a law check fails and 2 on usage
or parse errors.

Examples:
    python cli.py bracket a1 a2 --surface a1a2A1A2
    python cli.py lp2 a1a1a2 a1a1a2a1a1a2a1 --surface a1a2A1A2 --nonzero-only
    python cli.py check --surface a1a2A1A2 --max-len 6 --samples 200 --seed 7
"""

import functools
import logging

import click

from axioms import LAW_GROUPS
from config import VERSION, Settings, configure_logging
from errors import SurfaceWordError
from surface_algebra import SurfaceLieBialgebra, format_info

logger = logging.getLogger(__name__)


def _load_surface(ctx, param, value):
    try:
        return SurfaceLieBialgebra(value)
    except SurfaceWordError as e:
        raise click.BadParameter(f"{type(e).__name__}: {e}", ctx=ctx, param=param)


def surface_option(f):
    return click.option(
        '--surface',
        'service',
        required=True,
        callback=_load_surface,
        help='Surface symbol, e.g. a1a2A1A2.',
    )(f)


def output_options(f):
    f = click.option(
        '--output',
        type=click.Path(dir_okay=False, writable=True),
        default=None,
        help='Write the result to this file instead of stdout.',
    )(f)
    f = click.option(
        '--format',
        'output_format',
        type=click.Choice(['text', 'records']),
        default='text',
        show_default=True,
        help='Plain text or one key=value record per line.',
    )(f)
    return f


def extended_windows_option(f):
    return click.option(
        '--extended-windows/--no-extended-windows',
        default=None,
        help='Let LP1 windows run up to twice the word length (default from LP1_EXTENDED_WINDOWS).',
    )(f)


def handle_errors(f):
    """Report library errors as usage errors (exit status 2)."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except SurfaceWordError as e:
            raise click.UsageError(f"{type(e).__name__}: {e}")

    return wrapper


def emit(text: str, output: str = None):
    if output:
        with click.open_file(output, 'w') as fh:
            if text:
                click.echo(text, file=fh)
    elif text:
        click.echo(text)


def _extended(ctx, flag) -> bool:
    return ctx.obj['settings'].lp1_extended_windows if flag is None else flag


def _format_pairs(pairs, output_format: str) -> str:
    if output_format == 'records':
        return '\n'.join(pair.format_record() for pair in pairs) if pairs else 'count=0'
    return '\n'.join(pair.format_line() for pair in pairs)


@click.group()
@click.version_option(version=VERSION, prog_name='surface-words')
@click.option('--verbose', is_flag=True, help='Enable debug logging.')
@click.pass_context
def cli(ctx, verbose):
    """Goldman bracket and Turaev cobracket on reduced cyclic words."""
    settings = Settings.from_env()
    configure_logging('DEBUG' if verbose else settings.log_level)
    ctx.ensure_object(dict)
    ctx.obj['settings'] = settings


@cli.command('bracket')
@click.argument('left')
@click.argument('right')
@surface_option
@output_options
@handle_errors
def bracket_command(left, right, service, output_format, output):
    """Print the bracket [LEFT, RIGHT]."""
    result = service.bracket(left, right)
    emit(result.format_records() if output_format == 'records' else result.format_text(), output)


@cli.command('cobracket')
@click.argument('word')
@surface_option
@extended_windows_option
@output_options
@click.pass_context
@handle_errors
def cobracket_command(ctx, word, service, extended_windows, output_format, output):
    """Print the cobracket of WORD."""
    service.extended_windows = _extended(ctx, extended_windows)
    result = service.cobracket(word)
    emit(result.format_records() if output_format == 'records' else result.format_text(), output)


@cli.command('lp1')
@click.argument('word')
@surface_option
@click.option('--nonzero-only', is_flag=True, help='Keep only pairs with a nonzero sign.')
@extended_windows_option
@output_options
@click.pass_context
@handle_errors
def lp1_command(ctx, word, service, nonzero_only, extended_windows, output_format, output):
    """List the linked pairs of subwords of WORD."""
    service.extended_windows = _extended(ctx, extended_windows)
    emit(_format_pairs(service.lp1(word, nonzero_only=nonzero_only), output_format), output)


@cli.command('lp2')
@click.argument('left')
@click.argument('right')
@surface_option
@click.option('--nonzero-only', is_flag=True, help='Keep only pairs with a nonzero sign.')
@output_options
@handle_errors
def lp2_command(left, right, service, nonzero_only, output_format, output):
    """List the linked pairs between powers of LEFT and RIGHT."""
    emit(_format_pairs(service.lp2(left, right, nonzero_only=nonzero_only), output_format), output)


@cli.command('check')
@surface_option
@click.option('--max-len', type=click.IntRange(min=1), default=4, show_default=True)
@click.option('--samples', type=click.IntRange(min=0), default=50, show_default=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--laws', type=click.Choice(list(LAW_GROUPS)), default='all', show_default=True)
@click.option('--output', type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_context
@handle_errors
def check_command(ctx, service, max_len, samples, seed, laws, output):
    """Verify the bialgebra laws on a seeded corpus of words."""
    service.extended_windows = ctx.obj['settings'].lp1_extended_windows
    summaries = service.check(max_len=max_len, samples=samples, seed=seed, laws=laws)
    lines = [summary.format_line() for summary in summaries]
    failed = [summary for summary in summaries if not summary.holds]
    if failed:
        report = failed[0].first_failure
        lines.append(f"first_failure {report.describe()}")
        lines.append(report.residual.format_text())
    emit('\n'.join(lines), output)
    if failed:
        ctx.exit(1)


@cli.command('surface-info')
@surface_option
@output_options
@handle_errors
def surface_info_command(service, output_format, output):
    """Describe the surface symbol."""
    info = service.info()
    text = format_info(info)
    if output_format == 'records':
        text = ' '.join(f"{key}={value}" for key, value in info.items())
    emit(text, output)


if __name__ == '__main__':
    cli()
