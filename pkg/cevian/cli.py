"""Command line: ``cevian verify | construct | family | figure``.

Exit codes: 0 success, 1 FAIL cells in a verification report, 2 usage or
parse errors, 3 geometric degeneracy.
"""
import json
import logging
import os
from fractions import Fraction

import click

from . import pandas_extension  # noqa
from .core import derived_points
from .errors import CevianError
from .generators import FLAVORS, GeneratorSpec
from .morley import ANCHORS, CURVES, NumTri, sample_curve, to_csv, with_anchors
from .references import InlineConfiguration, parse_rational
from .suite import run_suites

EXIT_FAILURES = 1
EXIT_DEGENERATE = 3
DEFAULT_TRIANGLE = [["0", "0"], ["4", "0"], ["0", "3"]]
CONFIG_MODES = ("isogonal", "isotomic", "free")


def _setting(ctx, name, value, default=None):
    """Flag value if given, else the config-file value, else the default."""
    if value is not None and value != ():
        return value
    return ctx.obj["config"].get(name, default)


def parse_pairs(text, field):
    """'a,b;c,d;e,f' (or a list of pairs from a config file) into three pairs of p/q strings."""
    if isinstance(text, str):
        pairs = [p.split(",") for p in text.split(";")]
    else:
        pairs = text
    if len(pairs) != 3 or any(len(p) != 2 for p in pairs):
        raise click.BadParameter(f"expected three pairs, got {text!r}", param_hint=field)
    result = []
    for pair in pairs:
        try:
            result.append([str(parse_rational(v.strip() if isinstance(v, str) else v)) for v in pair])
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint=field) from None
    return result


def _inline_reference(ctx, triangle, traces, mode, second_traces):
    triangle = parse_pairs(_setting(ctx, "triangle", triangle, DEFAULT_TRIANGLE), "triangle")
    traces = _setting(ctx, "traces", traces)
    if traces is None:
        raise click.UsageError("traces are required (--traces or the config file)")
    traces = parse_pairs(traces, "traces")
    mode = _setting(ctx, "mode", mode, "isogonal")
    if mode not in CONFIG_MODES:
        raise click.BadParameter(f"unknown mode {mode!r}", param_hint="mode")
    second = _setting(ctx, "second_traces", second_traces)
    if (mode == "free") != (second is not None):
        raise click.BadParameter("second traces are needed for, and only for, free mode", param_hint="second_traces")
    if second is not None:
        second = parse_pairs(second, "second_traces")
    return InlineConfiguration(triangle, traces, mode, second)


def _replay(ctx, reference):
    try:
        return reference.replay()
    except CevianError as e:
        click.echo(f"degenerate configuration: {e}", err=True)
        ctx.exit(EXIT_DEGENERATE)


def _write(output, text):
    if output is None or output == "-":
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
        logging.info(f"wrote {output}")


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="JSON config file.")
@click.option("-v", "--verbose", count=True, help="More logging (-v info, -vv debug).")
@click.pass_context
def cli(ctx, config_path, verbose):
    level = os.environ.get("CEVIAN_LOG_LEVEL", "WARNING").upper()
    if verbose:
        level = "DEBUG" if verbose > 1 else "INFO"
    logging.basicConfig(level=level, format="%(levelname)s %(message)s")
    config = {}
    if config_path:
        try:
            with open(config_path, encoding="utf-8") as f:
                config = json.load(f)
        except json.JSONDecodeError as e:
            raise click.BadParameter(f"not valid JSON: {e}", param_hint="--config") from None
        if not isinstance(config, dict):
            raise click.BadParameter("expected a JSON object", param_hint="--config")
    ctx.obj = {"config": config}


@cli.command()
@click.option("--seed", type=int, envvar="CEVIAN_SEED", help="Seed (falls back to CEVIAN_SEED).")
@click.option("--count", type=int, help="Instances per mode and flavor.")
@click.option("--mode", "modes", multiple=True, type=click.Choice(CONFIG_MODES), help="Trace-flavor modes.")
@click.option("--flavor", "flavors", multiple=True, type=click.Choice(FLAVORS))
@click.option("--bound", type=int, help="Numerator/denominator bound.")
@click.option("--workers", type=int, help="Process pool size (CEVIAN_WORKERS).")
@click.option("--controls/--no-controls", default=None, help="Negative-control cells (CEVIAN_NEGATIVE_CONTROLS).")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Report file, stdout by default.")
@click.pass_context
def verify(ctx, seed, count, modes, flavors, bound, workers, controls, output):
    """Run the theorem suite and write the line-oriented report."""
    seed = _setting(ctx, "seed", seed, 0)
    count = _setting(ctx, "count", count, 100)
    bound = _setting(ctx, "bound", bound, 20)
    modes = _setting(ctx, "modes", modes) or [ctx.obj["config"].get("mode", "isogonal")]
    flavors = _setting(ctx, "flavors", flavors, ["trace"])
    try:
        specs = []
        for flavor in flavors:
            for mode in modes if flavor == "trace" else [flavor]:
                specs.append(GeneratorSpec(int(seed), int(count), int(bound), mode, flavor))
    except (TypeError, ValueError) as e:
        raise click.BadParameter(str(e)) from None

    report = run_suites(specs, workers=workers, controls=controls)
    _write(output, report.verdicts.to_lines())
    metrics = report.verdicts.metrics()
    logging.info(f"{metrics}")
    summary = report.verdicts.summary()
    if not summary.empty:
        click.echo(summary.to_string(), err=True)
    if report.verdicts.has_failures:
        for ref in report.verdicts.references():
            click.echo(f"FAIL replay: {ref.to_json()}", err=True)
        ctx.exit(EXIT_FAILURES)


def _configuration_options(fn):
    fn = click.option("--second-traces", help="Free mode partner traces, same format as --traces.")(fn)
    fn = click.option("--mode", type=click.Choice(CONFIG_MODES))(fn)
    fn = click.option("--traces", help="Trace pairs 'u,v;u,v;u,v' on BC, CA, AB.")(fn)
    fn = click.option("--triangle", help="Vertices 'x,y;x,y;x,y' as integers or p/q.")(fn)
    return fn


@cli.command()
@_configuration_options
@click.option("-o", "--output", type=click.Path(dir_okay=False))
@click.pass_context
def construct(ctx, triangle, traces, mode, second_traces, output):
    """Print every named object of a configuration as canonical integer triples."""
    reference = _inline_reference(ctx, triangle, traces, mode, second_traces)
    cfg = _replay(ctx, reference)
    document = cfg.to_dict()
    derived = derived_points(cfg, strict=False)
    document["objects"].update({k: (None if v is None else v.to_list()) for k, v in derived.named().items()})
    document["fingerprint"] = cfg.fingerprint
    document["reference"] = reference.to_dict()
    _write(output, json.dumps(document, indent=2, sort_keys=True) + "\n")


def _parse_k(values):
    grid = []
    for value in values:
        try:
            k = float(Fraction(str(value)))
        except (ValueError, ZeroDivisionError):
            raise click.BadParameter(f"malformed k {value!r}", param_hint="--k") from None
        if not -1 <= k <= 1:
            raise click.BadParameter(f"k = {value} outside [-1, 1]", param_hint="--k")
        grid.append(k)
    return grid


@cli.command()
@click.option("--triangle", help="Vertices 'x,y;x,y;x,y'.")
@click.option("--k", "ks", multiple=True, help="Grid values in [-1, 1], decimal or p/q.")
@click.option("--steps", type=int, help="Size of the default evenly spaced grid.")
@click.option("--anchors-only", is_flag=True, help="Sample only the anchor values of k.")
@click.option("--curve", type=click.Choice(sorted(CURVES)), help="R(k), D(k) or the constructive Q(k).")
@click.option("-o", "--output", type=click.Path(dir_okay=False))
@click.pass_context
def family(ctx, triangle, ks, steps, anchors_only, curve, output):
    """Sample the angle family as CSV; anchor values of k are always included."""
    vertices = parse_pairs(_setting(ctx, "triangle", triangle, DEFAULT_TRIANGLE), "triangle")
    try:
        tri = NumTri(*([float(Fraction(c)) for c in v] for v in vertices))
    except CevianError as e:
        click.echo(f"degenerate triangle: {e}", err=True)
        ctx.exit(EXIT_DEGENERATE)
    ks = _setting(ctx, "k", ks, [])
    steps = _setting(ctx, "steps", steps, 21)
    if anchors_only:
        grid = []
    elif ks:
        grid = _parse_k(ks)
    else:
        grid = [-1 + 2 * i / (steps - 1) for i in range(steps)] if steps > 1 else []
    curve = _setting(ctx, "curve", curve, "r")
    if curve not in CURVES:
        raise click.BadParameter(f"unknown curve {curve!r}", param_hint="--curve")
    samples = sample_curve(tri, with_anchors(grid), curve)
    logging.info(f"{len(samples)} samples of {curve}(k), anchors {ANCHORS}")
    _write(output, to_csv(tri, samples))


@cli.command()
@_configuration_options
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="SVG file, stdout by default.")
@click.option("--size", type=int, default=800, show_default=True)
@click.pass_context
def figure(ctx, triangle, traces, mode, second_traces, output, size):
    """Draw the configuration with its two conics as SVG."""
    from .figure import to_svg, write_svg

    reference = _inline_reference(ctx, triangle, traces, mode, second_traces)
    cfg = _replay(ctx, reference)
    if output is None or output == "-":
        click.echo(to_svg(cfg, size), nl=False)
    else:
        write_svg(cfg, output, size)


if __name__ == "__main__":
    cli()
