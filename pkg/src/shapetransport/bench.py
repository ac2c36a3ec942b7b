"""Convergence benchmark: problem sampling, method sweep, slope
estimation, CSV persistence and a log-log SVG plot."""

import math
from dataclasses import dataclass

import numpy as np

from . import preshape, transport
from .errors import (
    InsufficientData,
    IoFailure,
    ReferenceInconsistent,
    SamplingFailed,
    ShapeSpaceError,
)

RNG_NAME = "numpy-pcg64"
# Errors at or below this are considered at the floating-point floor and
# excluded from slope fits.
ERROR_FLOOR = 1e-13

DEFAULT_STEPS = (10, 20, 50, 100, 200, 500, 1000)


@dataclass(frozen=True)
class ExperimentConfig:
    m: int = 3
    k: int = 4
    step_counts: tuple = DEFAULT_STEPS
    methods: tuple = transport.METHODS
    n_ref: int = 1100
    alpha: float = 2.0
    seed: int = 0
    trials: int = 10

    def __post_init__(self):
        if self.m < 2 or self.k < 3:
            raise ValueError("need m >= 2 and k >= 3")
        steps = tuple(self.step_counts)
        if list(steps) != sorted(set(steps)) or steps[0] < 1:
            raise ValueError("step counts must be strictly increasing positives")
        if self.n_ref < steps[-1]:
            raise ValueError("n_ref must be at least the largest step count")
        unknown = set(self.methods) - set(transport.METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")
        if self.trials < 1:
            raise ValueError("need at least one trial")


@dataclass(frozen=True)
class ConvergenceRecord:
    method: str
    n: int
    trial: int
    error: float
    m: int
    k: int
    seed: int
    failed: bool = False


def sample_problem(m: int, k: int, rng: np.random.Generator,
                   n: int = 1) -> transport.TransportProblem:
    """Draw a random full-rank pre-shape with two orthonormal horizontal
    tangent vectors. Deterministic for a fixed generator state."""
    for _ in range(100):
        try:
            x = preshape.project_to_preshape(rng.standard_normal((m, k)))
        except ShapeSpaceError:
            continue
        if preshape.configuration_rank(x) < m - 1:
            continue
        w = preshape.horizontal_projection(
            x, preshape.to_tangent(x, rng.standard_normal((m, k))))
        v = preshape.horizontal_projection(
            x, preshape.to_tangent(x, rng.standard_normal((m, k))))
        w_norm = np.linalg.norm(w)
        if w_norm < 1e-6:
            continue
        w = w / w_norm
        v = v - preshape.frobenius_inner(v, w) * w
        v_norm = np.linalg.norm(v)
        if v_norm < 1e-6:
            continue
        v = v / v_norm
        return transport.TransportProblem(x=x, w=w, v=v, n=n)
    raise SamplingFailed(f"no valid problem after 100 attempts (m={m}, k={k})")


def _reference(problem: transport.TransportProblem, n_ref: int) -> np.ndarray:
    """RK4 reference transport, cross-checked at twice the resolution."""
    ref = transport.transport_integrated(
        transport.TransportProblem(problem.x, problem.w, problem.v, n_ref),
        scheme="rk4").transported
    check = transport.transport_integrated(
        transport.TransportProblem(problem.x, problem.w, problem.v, 2 * n_ref),
        scheme="rk4").transported
    drift = float(np.linalg.norm(ref - check))
    if drift >= 1e-10:
        raise ReferenceInconsistent(
            f"RK4 references at n={n_ref} and n={2 * n_ref} differ by {drift:.3e}")
    return ref


def run_convergence(cfg: ExperimentConfig) -> list:
    """Run the full sweep: per trial, sample a problem, build the RK4
    reference and record every (method, n) error against it."""
    records = []
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.trials)
    for trial, seq in enumerate(seeds):
        rng = np.random.default_rng(seq)
        problem = sample_problem(cfg.m, cfg.k, rng)
        ref = _reference(problem, cfg.n_ref)
        for method in cfg.methods:
            for n in cfg.step_counts:
                sub = transport.TransportProblem(
                    problem.x, problem.w, problem.v, n)
                try:
                    result = transport.transport(sub, method, alpha=cfg.alpha)
                    error = float(np.linalg.norm(result.transported - ref))
                    failed = not math.isfinite(error)
                except ShapeSpaceError:
                    error, failed = math.nan, True
                records.append(ConvergenceRecord(
                    method=method, n=n, trial=trial, error=error,
                    m=cfg.m, k=cfg.k, seed=cfg.seed, failed=failed))
    records.sort(key=lambda r: (r.method, r.n, r.trial))
    return records


def _usable(records, method):
    return [r for r in records
            if r.method == method and not r.failed and r.error > ERROR_FLOOR]


def estimate_order(records, method: str):
    """Least-squares slope of log(error) vs log(n) for one method.

    Records at or below the floating-point floor are excluded. Returns
    (slope, residual) where residual is the RMS of the fit residuals.
    """
    usable = _usable(records, method)
    if len(usable) < 3:
        raise InsufficientData(
            f"need >= 3 records above the error floor for {method!r}")
    log_n = np.log([r.n for r in usable])
    log_e = np.log([r.error for r in usable])
    coef = np.polyfit(log_n, log_e, 1)
    fit = np.polyval(coef, log_n)
    residual = float(np.sqrt(np.mean((log_e - fit) ** 2)))
    return float(coef[0]), residual


def median_trial_slope(records, method: str) -> float:
    """Median over trials of the per-trial log-log slopes."""
    trials = sorted({r.trial for r in records if r.method == method})
    slopes = []
    for t in trials:
        per_trial = [r for r in records if r.trial == t]
        try:
            slope, _ = estimate_order(per_trial, method)
        except InsufficientData:
            continue
        slopes.append(slope)
    if not slopes:
        raise InsufficientData(f"no per-trial slope available for {method!r}")
    return float(np.median(slopes))


def write_csv(records, path) -> None:
    """Persist records; header method,n,trial,error,m,k,seed, errors in
    scientific notation with 17 significant digits, byte-stable."""
    if not records:
        raise ValueError("no records to write")
    lines = [f"# rng={RNG_NAME}", "method,n,trial,error,m,k,seed"]
    for r in records:
        err = "nan" if r.failed else f"{r.error:.16e}"
        lines.append(f"{r.method},{r.n},{r.trial},{err},{r.m},{r.k},{r.seed}")
    try:
        with open(path, "w", newline="\n") as handle:
            handle.write("\n".join(lines) + "\n")
    except OSError as err:
        raise IoFailure(f"{path}: {err}") from err


def read_csv(path) -> list:
    """Parse a benchmark CSV written by write_csv."""
    try:
        with open(path) as handle:
            lines = [ln.strip() for ln in handle if ln.strip()]
    except OSError as err:
        raise IoFailure(f"{path}: {err}") from err
    records = []
    for line in lines:
        if line.startswith("#") or line.startswith("method,"):
            continue
        method, n, trial, error, m, k, seed = line.split(",")
        error = float(error)
        records.append(ConvergenceRecord(
            method=method, n=int(n), trial=int(trial), error=error,
            m=int(m), k=int(k), seed=int(seed),
            failed=not math.isfinite(error)))
    return records


_SVG_COLORS = {
    "euler": "#1f77b4",
    "rk2": "#ff7f0e",
    "rk4": "#2ca02c",
    "pole": "#d62728",
}


def _median_curve(records, method):
    by_n = {}
    for r in _usable(records, method):
        by_n.setdefault(r.n, []).append(r.error)
    return sorted((n, float(np.median(errs))) for n, errs in by_n.items())


def write_svg_loglog(records, path) -> None:
    """Log-log plot of the per-method median error curves.

    One polyline per method, decade grid lines, legend and axis labels.
    Hand-written SVG so the bytes are stable for fixed input.
    """
    if not records:
        raise ValueError("no records to plot")
    curves = {}
    for method in transport.METHODS:
        curve = _median_curve(records, method)
        if curve:
            curves[method] = curve
    if not curves:
        raise ValueError("no finite errors to plot")

    width, height = 720, 480
    left, right, top, bottom = 80, 150, 30, 60
    xs = [math.log10(n) for c in curves.values() for n, _ in c]
    ys = [math.log10(e) for c in curves.values() for _, e in c]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = math.floor(min(ys)), math.ceil(max(ys))
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1

    def px(lx):
        return left + (lx - x_lo) / (x_hi - x_lo) * (width - left - right)

    def py(ly):
        return height - bottom - (ly - y_lo) / (y_hi - y_lo) * (height - top - bottom)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    # decade grid and tick labels
    for exp10 in range(math.ceil(x_lo), math.floor(x_hi) + 1):
        x = px(exp10)
        parts.append(f'<line x1="{x:.2f}" y1="{top}" x2="{x:.2f}" '
                     f'y2="{height - bottom}" stroke="#dddddd"/>')
        parts.append(f'<text x="{x:.2f}" y="{height - bottom + 18}" '
                     f'font-size="12" text-anchor="middle">1e{exp10}</text>')
    for exp10 in range(y_lo, y_hi + 1):
        y = py(exp10)
        parts.append(f'<line x1="{left}" y1="{y:.2f}" x2="{width - right}" '
                     f'y2="{y:.2f}" stroke="#dddddd"/>')
        parts.append(f'<text x="{left - 6}" y="{y + 4:.2f}" font-size="12" '
                     f'text-anchor="end">1e{exp10}</text>')
    parts.append(f'<rect x="{left}" y="{top}" width="{width - left - right}" '
                 f'height="{height - top - bottom}" fill="none" stroke="black"/>')
    for method, curve in curves.items():
        pts = " ".join(f"{px(math.log10(n)):.2f},{py(math.log10(e)):.2f}"
                       for n, e in curve)
        parts.append(f'<polyline points="{pts}" fill="none" '
                     f'stroke="{_SVG_COLORS[method]}" stroke-width="2"/>')
    # legend
    ly = top + 10
    for method in curves:
        parts.append(f'<line x1="{width - right + 12}" y1="{ly}" '
                     f'x2="{width - right + 40}" y2="{ly}" '
                     f'stroke="{_SVG_COLORS[method]}" stroke-width="2"/>')
        parts.append(f'<text x="{width - right + 46}" y="{ly + 4}" '
                     f'font-size="12">{method}</text>')
        ly += 20
    parts.append(f'<text x="{(left + width - right) / 2:.2f}" '
                 f'y="{height - 14}" font-size="14" '
                 f'text-anchor="middle">steps n</text>')
    parts.append(f'<text x="18" y="{(top + height - bottom) / 2:.2f}" '
                 f'font-size="14" text-anchor="middle" '
                 f'transform="rotate(-90 18 {(top + height - bottom) / 2:.2f})">'
                 f'error</text>')
    parts.append("</svg>")
    try:
        with open(path, "w", newline="\n") as handle:
            handle.write("\n".join(parts) + "\n")
    except OSError as err:
        raise IoFailure(f"{path}: {err}") from err
