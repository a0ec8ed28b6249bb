import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional

import click

from .config import ConfigError, get_settings, load_settings, set_settings
from .crosscheck.engine import FAMILIES, Bounds, crosscheck as run_crosscheck
from .model.election import validate_oms
from .model.errors import ParseError, ReductionError, RuleError, SearchBudgetExceeded, ValidationError, WrongVariant
from .oracle.game import decide_schedule_robust, full_profile
from .parser.instance import InstanceFile, load_instance, serialize_instance
from .parser.sources import GENERATOR_KINDS, build_from_source
from .reductions.partition import FLAVORS
from .solvers.routing import SOLVER_CHOICES, explain, route, solve

INPUT_ERRORS = (ParseError, ValidationError, RuleError, WrongVariant, ReductionError, ConfigError)


# Setup simplified logging for CLI
def setup_logging(verbose: bool):
    level = logging.DEBUG if verbose else logging.WARNING
    format_str = '%(levelname)s: %(message)s' if not verbose else '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    logging.basicConfig(level=level, format=format_str, stream=sys.stderr)


def _fail(message: str, code: int):
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


@click.group()
@click.option('--config', 'config_path', type=click.Path(exists=True), help='YAML settings file')
@click.option('--verbose', is_flag=True, help='Print detailed logs')
def cli(config_path: Optional[str], verbose: bool):
    """Online coalitional manipulation toolkit."""
    setup_logging(verbose)
    try:
        set_settings(load_settings(config_path))
    except ConfigError as e:
        _fail(str(e), 2)


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--solver', type=click.Choice(SOLVER_CHOICES), default='auto', show_default=True)
@click.option('--explain', 'show_routes', is_flag=True, help='Print the routing table to stderr')
@click.option('--method', type=click.Choice(['exhaustive', 'manipulators_first']), default='exhaustive',
              show_default=True, help='Schedule-free evaluation method')
def decide(file: str, solver: str, show_routes: bool, method: str):
    """Decide an instance file: prints YES or NO and the solver used."""
    logger = logging.getLogger("onlinemanip")
    try:
        instance = load_instance(file)
        if instance.schedule_free:
            if solver not in ('auto', 'oracle'):
                raise WrongVariant(f"Schedule-free instances are decided by the oracle, not {solver!r}")
            verdict = decide_schedule_robust(instance.to_schedule_free(), instance.rule, instance.variant, method)
            name = f"oracle-{method}"
        else:
            oms = validate_oms(instance.to_oms(), instance.variant)
            if show_routes:
                chosen = route(oms, instance.rule, instance.variant, solver)
                for line in explain(chosen):
                    click.echo(line, err=True)
            verdict, name = solve(oms, instance.rule, instance.variant, solver)
    except INPUT_ERRORS as e:
        logger.error(f"Cannot decide {file}")
        _fail(str(e), 2)
    except SearchBudgetExceeded as e:
        _fail(str(e), 3)

    click.echo("YES" if verdict else "NO")
    click.echo(f"solver: {name}")


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--solver', type=click.Choice(SOLVER_CHOICES), default='auto', show_default=True)
@click.option('--method', type=click.Choice(['each', 'bisect']), default='each', show_default=True)
def profile(file: str, solver: str, method: str):
    """Print the answer bit for every choice of distinguished candidate."""
    logger = logging.getLogger("onlinemanip")
    try:
        instance = load_instance(file)
        if instance.d is not None:
            logger.warning(f"Ignoring 'd: {instance.d}' for a profile query")
            instance = replace(instance, d=None)
        oms = instance.to_oms()
        rule, variant = instance.rule, instance.variant

        def decider(o):
            return solve(o, rule, variant, solver)[0]

        bits = full_profile(oms, rule, variant, method=method, decider=decider)
    except INPUT_ERRORS as e:
        _fail(str(e), 2)
    except SearchBudgetExceeded as e:
        _fail(str(e), 3)

    click.echo("".join(str(b) for b in bits))


@cli.command()
@click.argument('kind', type=click.Choice(GENERATOR_KINDS))
@click.argument('source', type=click.Path(exists=True, dir_okay=False))
@click.option('--out', default='-', show_default=True, help="Output path, '-' for stdout")
@click.option('--m', 'm', type=int, default=2, show_default=True, help='Candidates for partition-plurality')
@click.option('--flavor', type=click.Choice(FLAVORS), default=FLAVORS[0], show_default=True)
def gen(kind: str, source: str, out: str, m: int, flavor: str):
    """Generate a labelled instance file from a source problem."""
    logger = logging.getLogger("onlinemanip")
    try:
        text = Path(source).read_text(encoding="utf-8")
        generated, label = build_from_source(kind, text, m=m, flavor=flavor, source=source)
        document = serialize_instance(InstanceFile.from_generated(generated, label))
    except INPUT_ERRORS as e:
        _fail(str(e), 2)

    if out == '-':
        click.echo(document, nl=False)
    else:
        Path(out).write_text(document, encoding="utf-8")
        logger.info(f"Wrote {kind} instance to {out} (label {'YES' if label else 'NO'})")


@cli.command()
@click.option('--max-candidates', type=int, default=3, show_default=True)
@click.option('--max-voters', type=int, default=4, show_default=True)
@click.option('--max-weight', type=int, default=3, show_default=True)
@click.option('--rules', default='plurality,veto', show_default=True,
              help=f"Comma-separated families from: {', '.join(FAMILIES)}")
@click.option('--seed', type=int, default=None, help='Sweep seed (default from settings)')
@click.option('--samples', type=int, default=None, help='Samples per family (default from settings)')
@click.option('--workers', type=int, default=None, help='Worker processes (default from settings)')
@click.option('--mutant', is_flag=True, help='Negate the plurality solvers to self-test the harness')
def crosscheck(max_candidates: int, max_voters: int, max_weight: int, rules: str, seed: Optional[int],
               samples: Optional[int], workers: Optional[int], mutant: bool):
    """Compare every applicable solver with the game-tree oracle on sampled instances."""
    settings = get_settings()
    families = [r.strip() for r in rules.split(',') if r.strip()]
    try:
        report = run_crosscheck(
            families,
            Bounds(max_candidates, max_voters, max_weight),
            samples=samples if samples is not None else settings.crosscheck_samples,
            seed=seed if seed is not None else settings.crosscheck_seed,
            workers=workers if workers is not None else settings.workers,
            mutant=mutant,
        )
    except ValueError as e:
        _fail(str(e), 2)
    except SearchBudgetExceeded as e:
        _fail(str(e), 3)

    if report.ok:
        click.echo(f"OK {report.checked}")
    else:
        click.echo(f"# counterexample: {report.detail}")
        click.echo(serialize_instance(report.counterexample), nl=False)


def main():
    cli()


if __name__ == "__main__":
    main()
