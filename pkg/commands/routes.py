from __future__ import annotations

from pathlib import Path
from typing import Optional, Tuple

import click
from flask import current_app

from hecke import DominantCoweight, WeightError
from lattices.oracles import PATTERNS

from . import commands_bp
from .runner import RunConfig, run


class CoweightParam(click.ParamType):
    name = "coweight"

    def convert(self, value, param, ctx):
        if isinstance(value, DominantCoweight):
            return value
        try:
            return DominantCoweight.parse(value)
        except WeightError as exc:
            self.fail(str(exc), param, ctx)


class PrimeListParam(click.ParamType):
    name = "primes"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(int(part) for part in str(value).split(",") if part.strip())
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)


COWEIGHT = CoweightParam()
PRIMES = PrimeListParam()


def shared_options(func):
    func = click.option("--format", "output_format", type=click.Choice(["table", "json"]), default=None)(func)
    func = click.option("--window", type=click.IntRange(min=1), default=None)(func)
    func = click.option("--cache-dir", type=click.Path(file_okay=False, path_type=Path), default=None)(func)
    func = click.option("--allow-any-prime", is_flag=True, default=False)(func)
    return func


def _config(subcommand: str, *, output_format, window, cache_dir, allow_any_prime, **fields) -> RunConfig:
    settings = current_app.config
    if cache_dir is None and settings["HECKE_CACHE_ENABLED"]:
        cache_dir = Path(settings["HECKE_CACHE_DIR"])
    return RunConfig(
        subcommand=subcommand,
        output_format=output_format or settings["HECKE_OUTPUT"],
        window=window or settings["HECKE_WINDOW"],
        cache_dir=cache_dir,
        allowed_primes=tuple(settings["HECKE_ORACLE_PRIMES"]),
        allow_any_prime=allow_any_prime,
        **fields,
    )


def _emit(config: RunConfig) -> None:
    current_app.logger.info("running %s", config.subcommand)
    try:
        report = run(config)
    except click.ClickException:
        raise
    except Exception:
        current_app.logger.exception("%s failed unexpectedly", config.subcommand)
        raise
    click.echo(report.render(config.output_format))
    if not report.ok:
        current_app.logger.warning("%s reported a mathematical failure", config.subcommand)
        click.get_current_context().exit(1)


@commands_bp.cli.command("identity")
@click.option("--primes", type=PRIMES, default="2,3", show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--sweep-size", type=click.IntRange(min=0), default=None)
@shared_options
def identity(primes: Tuple[int, ...], seed: Optional[int], sweep_size: Optional[int], **shared):
    """Verify the Hecke identity symbolically and against lattice counts."""

    seed = current_app.config["HECKE_SEED"] if seed is None else seed
    sweep_size = current_app.config["HECKE_SWEEP_SIZE"] if sweep_size is None else sweep_size
    _emit(_config("identity", primes=primes, seed=seed, sweep_size=sweep_size, **shared))


@commands_bp.cli.command("satake")
@click.option("--coweight", type=COWEIGHT, required=True)
@click.option("--prime", "primes", type=PRIMES, default="")
@click.option("--source", type=click.Choice(["table", "oracle", "both"]), default="table", show_default=True)
@shared_options
def satake(coweight: DominantCoweight, primes: Tuple[int, ...], source: str, **shared):
    """Satake transform of c_mu from the table, the lattice oracle, or both."""

    _emit(_config("satake", coweight=coweight, primes=primes, source=source, **shared))


@commands_bp.cli.command("convolve")
@click.option("--mu", type=COWEIGHT, required=True)
@click.option("--nu", type=COWEIGHT, required=True)
@click.option("--prime", "primes", type=PRIMES, required=True)
@shared_options
def convolve(mu: DominantCoweight, nu: DominantCoweight, primes: Tuple[int, ...], **shared):
    """Structure constants of c_mu * c_nu by lattice counting."""

    _emit(_config("convolve", mu=mu, nu=nu, primes=primes, **shared))


@commands_bp.cli.command("count")
@click.option("--pattern", required=True, help=f"One of: {', '.join(PATTERNS)}")
@click.option("--prime", "primes", type=PRIMES, required=True)
@click.option("--case", type=click.Choice(["0", "2", "4"]), default=None)
@shared_options
def count(pattern: str, primes: Tuple[int, ...], case: Optional[str], **shared):
    """Count vertex-lattice chains of a named pattern."""

    _emit(_config("count", pattern=pattern, primes=primes, case=None if case is None else int(case), **shared))


@commands_bp.cli.command("dl-points")
@click.option("--prime", "primes", type=PRIMES, required=True)
@click.option("--degree", type=click.IntRange(min=1), default=1, show_default=True)
@shared_options
def dl_points(primes: Tuple[int, ...], degree: int, **shared):
    """Points of the Deligne-Lusztig surface over the field with p^k elements."""

    _emit(_config("dl-points", primes=primes, degree=degree, **shared))


@commands_bp.cli.command("matrix")
@click.option("--kind", type=click.Choice(["lr", "ss"]), default="lr", show_default=True)
@click.option("--prime", "primes", type=PRIMES, default="")
@click.option("--input", "input_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--ell", type=int, default=None)
@shared_options
def matrix(kind: str, primes: Tuple[int, ...], input_path: Optional[Path], ell: Optional[int], **shared):
    """Level raising or supersingular matrix, with determinants on an eigenvalue file."""

    _emit(_config("matrix", kind=kind, primes=primes, input_path=input_path, ell=ell, **shared))


@commands_bp.cli.command("check")
@click.option("--input", "input_path", type=click.Path(dir_okay=False, path_type=Path), required=True)
@click.option("--ell", type=int, required=True)
@click.option("--u", type=click.Choice(["1", "-1", "+1"]), default=None)
@shared_options
def check(input_path: Path, ell: int, u: Optional[str], **shared):
    """Level-raising reports for every record in an eigenvalue file."""

    _emit(_config("check", input_path=input_path, ell=ell, u=None if u is None else int(u), **shared))
