"""Command-line driver: `bench run`, `bench order` and `bench transport`.

Exit codes: 0 on success, 2 on validation failure, 3 on numerical failure.
"""

import sys

import click
import numpy as np

from . import bench, preshape, quotient, transport
from .errors import ShapeSpaceError


def _parse_int_list(_ctx, _param, value):
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"not a comma-separated integer list: {value!r}")


def _parse_methods(_ctx, _param, value):
    methods = tuple(part.strip() for part in value.split(","))
    unknown = set(methods) - set(transport.METHODS)
    if unknown:
        raise click.BadParameter(f"unknown methods: {sorted(unknown)}")
    return methods


@click.group()
def main():
    """Parallel-transport benchmark on Kendall shape spaces."""


@main.command()
@click.option("--m", "m", type=int, default=3, show_default=True)
@click.option("--k", "k", type=int, default=4, show_default=True)
@click.option("--steps", callback=_parse_int_list,
              default="10,20,50,100,200,500,1000", show_default=True)
@click.option("--ref-steps", "n_ref", type=int, default=1100, show_default=True)
@click.option("--methods", callback=_parse_methods,
              default="euler,rk2,rk4,pole", show_default=True)
@click.option("--alpha", type=float, default=2.0, show_default=True)
@click.option("--trials", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False), default=None)
def run(m, k, steps, n_ref, methods, alpha, trials, seed, csv_path, svg_path):
    """Run the convergence sweep and write CSV/SVG outputs."""
    try:
        cfg = bench.ExperimentConfig(
            m=m, k=k, step_counts=steps, methods=methods, n_ref=n_ref,
            alpha=alpha, seed=seed, trials=trials)
    except ValueError as err:
        raise click.UsageError(str(err))
    try:
        records = bench.run_convergence(cfg)
        if csv_path:
            bench.write_csv(records, csv_path)
        if svg_path:
            bench.write_svg_loglog(records, svg_path)
        for method in methods:
            slope, residual = bench.estimate_order(records, method)
            click.echo(f"{method}: slope {slope:+.3f} (fit rms {residual:.3f})")
    except ShapeSpaceError as err:
        click.echo(f"numerical failure: {err}", err=True)
        sys.exit(3)


@main.command()
@click.option("--csv", "csv_path", type=click.Path(exists=True, dir_okay=False),
              required=True)
def order(csv_path):
    """Print per-method convergence slopes from a benchmark CSV."""
    try:
        records = bench.read_csv(csv_path)
        methods = sorted({r.method for r in records},
                         key=transport.METHODS.index)
        for method in methods:
            slope, residual = bench.estimate_order(records, method)
            click.echo(f"{method}: slope {slope:+.3f} (fit rms {residual:.3f})")
    except (ShapeSpaceError, ValueError) as err:
        click.echo(f"numerical failure: {err}", err=True)
        sys.exit(3)


@main.command(name="transport")
@click.option("--input", "input_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Start landmarks (CSV, one row per landmark).")
@click.option("--target", "target_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Landmarks defining the geodesic endpoint.")
@click.option("--vector", "vector_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Raw vector to transport (same CSV layout).")
@click.option("--method", type=click.Choice(transport.METHODS),
              default="rk4", show_default=True)
@click.option("--steps", "n", type=int, default=100, show_default=True)
@click.option("--alpha", type=float, default=2.0, show_default=True)
@click.option("--output", "output_path", type=click.Path(dir_okay=False),
              default=None, help="Write the transported vector as CSV.")
def transport_cmd(input_path, target_path, vector_path, method, n, alpha,
                  output_path):
    """Transport a vector along the geodesic between two configurations."""
    if n < 1:
        raise click.UsageError("--steps must be >= 1")
    try:
        x_raw = preshape.read_landmarks(input_path)
        y_raw = preshape.read_landmarks(target_path)
        vec_raw = preshape.read_landmarks(vector_path)
    except ShapeSpaceError as err:
        raise click.UsageError(str(err))
    if x_raw.shape != y_raw.shape or x_raw.shape != vec_raw.shape:
        raise click.UsageError(
            f"shape mismatch: {x_raw.shape} vs {y_raw.shape} vs {vec_raw.shape}")
    try:
        x = quotient.check_representative(
            preshape.project_to_preshape(x_raw))
        y = preshape.project_to_preshape(y_raw)
        w = quotient.quotient_log(x, y)
        v = preshape.horizontal_projection(x, preshape.to_tangent(x, vec_raw))
        problem = transport.TransportProblem(x=x, w=w, v=v, n=n)
        result = transport.transport(problem, method, alpha=alpha)
    except ShapeSpaceError as err:
        click.echo(f"numerical failure: {err}", err=True)
        sys.exit(3)
    rows = [",".join(f"{value:.16e}" for value in row)
            for row in result.transported.T]
    text = "\n".join(rows) + "\n"
    if output_path:
        with open(output_path, "w", newline="\n") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)
    norm = float(np.linalg.norm(result.transported))
    click.echo(f"# method={method} steps={n} |v|={norm:.12e}", err=True)


if __name__ == "__main__":
    main()
