from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import click
from sympy import isprime, sstr

from hecke import (
    NU0,
    NU1,
    NU2,
    TWO_NU2,
    DominantCoweight,
    SatakeSpanError,
    WeightError,
    hecke_identity_rhs,
    satake_table,
    verify_hecke_identity,
)
from lattices import (
    DEFAULT_WINDOW,
    ConvolutionCache,
    OracleConsistencyError,
    SatakeNormalizationError,
    SizeBoundError,
    UnknownPatternError,
    WindowOverflowError,
    convolve_oracle,
    count_chain_pattern,
    dl_point_count,
    hecke_degree,
    satake_oracle,
    t20_t02_oracle,
)
from levelraising import (
    EigenData,
    InvalidPrimeError,
    NonTemperedError,
    check_generic,
    check_level_raising,
    det_lr_eval,
    det_ss_eval,
    lr_matrix,
    property_sweep,
    ss_matrix,
)

from .loaders import EigenFileError, load_eigendata

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class UsageFailure(click.ClickException):
    """Raised for bad input; exits with status 2 and names its cause."""

    exit_code = 2

    def __init__(self, kind: str, message: str) -> None:
        super().__init__(f"[{kind}] {message}")
        self.kind = kind


@dataclass
class RunConfig:
    subcommand: str
    primes: Tuple[int, ...] = ()
    ell: Optional[int] = None
    input_path: Optional[Path] = None
    cache_dir: Optional[Path] = None
    output_format: str = "table"
    window: int = DEFAULT_WINDOW
    allowed_primes: Tuple[int, ...] = (2, 3, 5)
    allow_any_prime: bool = False
    coweight: Optional[DominantCoweight] = None
    mu: Optional[DominantCoweight] = None
    nu: Optional[DominantCoweight] = None
    source: str = "both"
    pattern: Optional[str] = None
    case: Optional[int] = None
    degree: int = 1
    kind: str = "lr"
    u: Optional[int] = None
    seed: int = 20240601
    sweep_size: int = 20

    def cache(self) -> Optional[ConvolutionCache]:
        return ConvolutionCache(self.cache_dir) if self.cache_dir is not None else None

    def echo_inputs(self) -> Dict[str, Any]:
        inputs: Dict[str, Any] = {"window": self.window}
        if self.primes:
            inputs["primes"] = list(self.primes)
        if self.ell is not None:
            inputs["ell"] = self.ell
        if self.input_path is not None:
            inputs["input"] = str(self.input_path)
        for name in ("coweight", "mu", "nu"):
            value = getattr(self, name)
            if value is not None:
                inputs[name] = value.render()
        per_command = {
            "identity": ("seed", "sweep_size"),
            "satake": ("source",),
            "count": ("pattern", "case"),
            "dl-points": ("degree",),
            "matrix": ("kind",),
            "check": ("u",),
        }
        for name in per_command.get(self.subcommand, ()):
            inputs[name] = getattr(self, name)
        return inputs


@dataclass
class Report:
    subcommand: str
    inputs: Dict[str, Any]
    result: Dict[str, Any] = field(default_factory=dict)
    ok: bool = True
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "result": self.result,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_table(self) -> str:
        lines = [f"{self.subcommand}: {'ok' if self.ok else 'FAILED'}"]
        lines.extend(_flatten("inputs", self.inputs))
        lines.extend(_flatten("result", self.result))
        return "\n".join(lines)

    def render(self, output_format: str) -> str:
        return self.to_json() if output_format == "json" else self.to_table()


def _flatten(prefix: str, value: Any) -> List[str]:
    if isinstance(value, dict):
        if not value:
            return [f"{prefix}: {{}}"]
        lines: List[str] = []
        for key in sorted(value):
            lines.extend(_flatten(f"{prefix}.{key}", value[key]))
        return lines
    if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        lines = []
        for index, item in enumerate(value):
            lines.extend(_flatten(f"{prefix}[{index}]", item))
        return lines
    return [f"{prefix}: {value}"]


def _coefficients(element) -> Dict[str, str]:
    return {nu.render(): str(c) for nu, c in element.integer_coefficients().items()}


def _require_primes(config: RunConfig, primes: Tuple[int, ...]) -> None:
    if not primes:
        raise UsageFailure("missing-prime", f"{config.subcommand} needs --prime")
    for p in primes:
        if not isprime(p):
            raise UsageFailure("prime-not-allowed", f"{p} is not prime")
        if not config.allow_any_prime and p not in config.allowed_primes:
            allowed = ",".join(str(q) for q in config.allowed_primes)
            raise UsageFailure(
                "prime-not-allowed", f"p={p} is outside {{{allowed}}}; pass --allow-any-prime to override"
            )


def _run_identity(config: RunConfig) -> Report:
    _require_primes(config, config.primes)
    report = Report("identity", config.echo_inputs())
    certificate = verify_hecke_identity()
    report.result["certificate"] = certificate.to_dict()
    report.ok = certificate.passed

    primes: Dict[str, Any] = {}
    expected_rhs = hecke_identity_rhs()
    for p in config.primes:
        oracle = convolve_oracle(NU2, NU2, p, window=config.window, cache=config.cache())
        expected = expected_rhs.specialize(p)
        composite = t20_t02_oracle(p)
        composite_expected = {
            DominantCoweight((1, 1, -1, -1)): 1,
            DominantCoweight((1, 0, 0, -1)): p + 1,
            DominantCoweight((0, 0, 0, 0)): (p + 1) * (p ** 2 + 1),
        }
        passed = oracle == expected and composite.integer_coefficients() == composite_expected
        primes[str(p)] = {
            "coefficients": _coefficients(oracle),
            "expected": _coefficients(expected),
            "triple": [str(oracle.coefficient(nu).constant_value()) for nu in (TWO_NU2, NU1, NU0)],
            "t20_t02": _coefficients(composite),
            "passed": passed,
        }
        if not passed:
            logger.warning("oracle cross-check failed at p=%s: %s", p, oracle.render())
        report.ok = report.ok and passed
    report.result["primes"] = primes

    sweep = property_sweep(config.seed, config.sweep_size)
    report.result["sweep"] = sweep.to_dict()
    report.ok = report.ok and sweep.ok
    return report


def _run_satake(config: RunConfig) -> Report:
    if config.coweight is None:
        raise UsageFailure("bad-coweight", "satake needs --coweight")
    report = Report("satake", config.echo_inputs())
    mu = config.coweight
    table = None
    if config.source in ("table", "both"):
        try:
            table = satake_table(mu)
        except SatakeSpanError as exc:
            raise UsageFailure("bad-coweight", str(exc)) from exc
        report.result["table"] = {"render": table.render(), "terms": table.to_json()}
    if config.source in ("oracle", "both"):
        _require_primes(config, config.primes)
        oracles = {}
        for p in config.primes:
            oracle = satake_oracle(mu, p, window=config.window)
            entry: Dict[str, Any] = {"render": oracle.render(), "terms": oracle.to_json()}
            if table is not None:
                entry["matches_table"] = table.reduce_at_prime(p) == oracle
                report.ok = report.ok and entry["matches_table"]
            oracles[str(p)] = entry
        report.result["oracle"] = oracles
    return report


def _run_convolve(config: RunConfig) -> Report:
    if config.mu is None or config.nu is None:
        raise UsageFailure("bad-coweight", "convolve needs --mu and --nu")
    _require_primes(config, config.primes)
    report = Report("convolve", config.echo_inputs())
    products = {}
    for p in config.primes:
        element = convolve_oracle(config.mu, config.nu, p, window=config.window, cache=config.cache())
        products[str(p)] = {
            "coefficients": _coefficients(element),
            "render": element.render(),
            "degrees": {
                "mu": str(hecke_degree(config.mu, p, config.window)),
                "nu": str(hecke_degree(config.nu, p, config.window)),
            },
        }
    report.result["products"] = products
    return report


def _run_count(config: RunConfig) -> Report:
    if config.pattern is None:
        raise UsageFailure("unknown-pattern", "count needs --pattern")
    _require_primes(config, config.primes)
    report = Report("count", config.echo_inputs())
    counts = {}
    for p in config.primes:
        try:
            counts[str(p)] = str(count_chain_pattern(config.pattern, p, config.case))
        except UnknownPatternError as exc:
            raise UsageFailure("unknown-pattern", str(exc)) from exc
    report.result["counts"] = counts
    return report


def _run_dl_points(config: RunConfig) -> Report:
    _require_primes(config, config.primes)
    report = Report("dl-points", config.echo_inputs())
    points = {}
    for p in config.primes:
        try:
            points[str(p)] = str(dl_point_count(p, config.degree))
        except SizeBoundError as exc:
            raise UsageFailure("size-bound", str(exc)) from exc
    report.result["points"] = points
    return report


def _render_matrix(matrix) -> List[List[str]]:
    return [[sstr(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def _load(config: RunConfig) -> List[EigenData]:
    try:
        return load_eigendata(config.input_path)
    except EigenFileError as exc:
        raise UsageFailure(exc.kind, str(exc)) from exc


def _run_matrix(config: RunConfig) -> Report:
    if config.kind not in ("lr", "ss"):
        raise UsageFailure("bad-kind", f"matrix kind must be lr or ss, got {config.kind!r}")
    if config.ell is not None and (config.ell == 2 or not isprime(config.ell)):
        raise UsageFailure("invalid-ell", f"ell={config.ell} must be an odd prime")
    build, evaluate = (lr_matrix, det_lr_eval) if config.kind == "lr" else (ss_matrix, det_ss_eval)
    report = Report("matrix", config.echo_inputs())
    report.result["symbolic"] = _render_matrix(build())
    if config.primes:
        report.result["specialized"] = {str(p): _render_matrix(build(p)) for p in config.primes}
    if config.input_path is not None:
        determinants = []
        for e in _load(config):
            value = evaluate(e, config.ell)
            determinants.append({"record": e.to_dict(), "determinant": value.to_dict()})
        report.result["determinants"] = determinants
    return report


def _check_record(e: EigenData, config: RunConfig) -> Dict[str, Any]:
    entry: Dict[str, Any] = {"record": e.to_dict()}
    try:
        lr = check_level_raising(e, config.ell, config.u)
    except NonTemperedError as exc:
        logger.warning("rejected %s: %s", e.label or e.to_dict(), exc)
        entry.update({"status": "rejected", "reason": str(exc)})
        return entry
    det_lr = det_lr_eval(e, config.ell)
    det_ss = det_ss_eval(e, config.ell)
    entry.update(lr.to_dict())
    entry.update({
        "status": "checked",
        "det_lr": str(det_lr.value),
        "det_lr_mod": det_lr.residue,
        "det_ss": str(det_ss.value),
        "det_ss_mod": det_ss.residue,
        "generic": check_generic(e, config.ell).to_dict(),
    })
    return entry


def _run_check(config: RunConfig) -> Report:
    if config.input_path is None:
        raise UsageFailure("missing-file", "check needs --input")
    if config.ell is None:
        raise UsageFailure("invalid-ell", "check needs --ell")
    records = _load(config)
    report = Report("check", config.echo_inputs())
    try:
        report.result["records"] = [_check_record(e, config) for e in records]
    except InvalidPrimeError as exc:
        raise UsageFailure("invalid-ell", str(exc)) from exc
    return report


DISPATCH: Dict[str, Callable[[RunConfig], Report]] = {
    "identity": _run_identity,
    "satake": _run_satake,
    "convolve": _run_convolve,
    "count": _run_count,
    "dl-points": _run_dl_points,
    "matrix": _run_matrix,
    "check": _run_check,
}


def run(config: RunConfig) -> Report:
    """Dispatch one subcommand; usage problems surface as UsageFailure (exit 2)."""

    handler = DISPATCH.get(config.subcommand)
    if handler is None:
        raise UsageFailure("unknown-subcommand", f"unknown subcommand {config.subcommand!r}")
    try:
        return handler(config)
    except WindowOverflowError as exc:
        raise UsageFailure("window-overflow", str(exc)) from exc
    except WeightError as exc:
        raise UsageFailure("bad-coweight", str(exc)) from exc
    except (OracleConsistencyError, SatakeNormalizationError) as exc:
        logger.error("%s failed: %s", config.subcommand, exc)
        return Report(config.subcommand, config.echo_inputs(), {"error": str(exc)}, ok=False)
