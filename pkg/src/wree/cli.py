"""Command-line surface: point computations, oracle verification, and the
monogamy sweep with CSV/SVG emission.

Exit codes are a stable contract:

    0  success
    2  invalid input (bad simplex point, bad flag value, ...)
    3  output I/O failure
    4  monogamy violation found by the sweep (some delta < -1e-9)
    5  verification suites failed
"""

from __future__ import annotations

import math
import os
import sys
import tempfile
import warnings
from dataclasses import dataclass
from pathlib import Path

import click
import numpy as np

from . import monogamy, sampling
from .css_opt import (
    ConvergenceFailure,
    css_from_angles,
    minimize_g,
    ree_numeric_general,
    ree_numeric_restricted,
    verify_css,
)
from .monogamy import MonogamyRecord, WParams
from .xfamily import XState, closed_form_parts, ree_closed_form, ree_vedral_plenio

INPUT_TOL = 1e-9          # renormalize inputs within this, reject beyond
DELTA_FLOOR = -1e-9       # monogamy violation threshold for exit code 4
CSV_HEADER = "alpha_sq,beta_sq,gamma_sq,e_ab,e_ac,e_abc,delta"

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class SweepConfig:
    """Resolved options of the sweep command."""

    resolution: int
    engine: str            # closed | numeric | both
    log_base: str          # e | 2
    out_csv: Path
    out_svg: Path | None
    seed: int = sampling.DEFAULT_SEED

    def __post_init__(self):
        if self.resolution < 2:
            raise ValueError("resolution must be >= 2")
        if self.engine not in ("closed", "numeric", "both"):
            raise ValueError(f"unknown engine {self.engine!r}")
        if self.log_base not in ("e", "2"):
            raise ValueError(f"unknown log base {self.log_base!r}")


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _scale(log_base: str) -> float:
    return 1.0 if log_base == "e" else _LN2


def _unit(log_base: str) -> str:
    return "nats" if log_base == "e" else "bits"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_simplex(a: float, b: float, c: float) -> XState:
    for name, p in (("a", a), ("b", b), ("c", c)):
        if p < -INPUT_TOL or not math.isfinite(p):
            _fail(2, f"{name}={p} is not a probability")
    total = a + b + c
    if abs(total - 1.0) > INPUT_TOL:
        _fail(2, f"(a, b, c) sums to {total}, not 1 within {INPUT_TOL}")
    a, b, c = max(a, 0.0) / total, max(b, 0.0) / total, max(c, 0.0) / total
    return XState(a, b, 1.0 - a - b)


def _parse_amplitudes(alpha: float, beta: float, gamma: float) -> WParams:
    norm_sq = alpha * alpha + beta * beta + gamma * gamma
    if abs(norm_sq - 1.0) > INPUT_TOL:
        _fail(2, f"amplitudes have squared norm {norm_sq}, not 1 within {INPUT_TOL}")
    norm = math.sqrt(norm_sq)
    return WParams(alpha / norm, beta / norm, gamma / norm)


@click.group()
@click.version_option(version="0.1.0", prog_name="wree")
def main():
    """Relative entropy of entanglement of rank-2 X states and W-state
    monogamy audits."""


# ---------------------------------------------------------------------------
# point commands
# ---------------------------------------------------------------------------


@main.command("ree")
@click.argument("a", type=float)
@click.argument("b", type=float)
@click.argument("c", type=float)
@click.option("--engine", type=click.Choice(["closed", "numeric", "both"]), default="closed",
              show_default=True, help="closed form, two-angle oracle, or both")
@click.option("--log-base", type=click.Choice(["e", "2"]), default="e", show_default=True)
def cmd_ree(a: float, b: float, c: float, engine: str, log_base: str):
    """Relative entropy of entanglement of the X state (A, B, C)."""
    state = _parse_simplex(a, b, c)
    scale = _scale(log_base)
    unit = _unit(log_base)
    if engine in ("closed", "both"):
        click.echo(f"ree_closed ({unit}): {_fmt(ree_closed_form(state) / scale)}")
    if engine in ("numeric", "both"):
        click.echo(f"ree_numeric ({unit}): {_fmt(ree_numeric_restricted(state) / scale)}")
    if state.is_interior():
        parts = closed_form_parts(state)
        click.echo(f"M: {_fmt(parts.m_param)}")
        click.echo(f"N: {_fmt(parts.n_param)}")
        click.echo(f"discriminant: {_fmt(parts.delta_disc)}")


@main.command("vp")
@click.argument("lam", type=float, metavar="LAMBDA")
@click.option("--log-base", type=click.Choice(["e", "2"]), default="e", show_default=True)
def cmd_vp(lam: float, log_base: str):
    """Value of the (1-L)|00><00| + L|Psi+><Psi+| family at mixing L."""
    if not 0.0 <= lam <= 1.0:
        _fail(2, f"lambda={lam} outside [0, 1]")
    scale = _scale(log_base)
    unit = _unit(log_base)
    direct = ree_vedral_plenio(lam)
    closed = ree_closed_form(XState(1.0 - lam, lam / 2.0, lam / 2.0))
    click.echo(f"vp_formula ({unit}): {_fmt(direct / scale)}")
    click.echo(f"ree_closed ({unit}): {_fmt(closed / scale)}")


@main.command("delta")
@click.argument("alpha", type=float)
@click.argument("beta", type=float)
@click.argument("gamma", type=float)
@click.option("--log-base", type=click.Choice(["e", "2"]), default="e", show_default=True)
def cmd_delta(alpha: float, beta: float, gamma: float, log_base: str):
    """Monogamy record of the W state ALPHA|001> + BETA|010> + GAMMA|100>."""
    w = _parse_amplitudes(alpha, beta, gamma)
    rec = _rescale_record(monogamy.delta(w), _scale(log_base))
    unit = _unit(log_base)
    click.echo(f"alpha_sq: {_fmt(rec.alpha_sq)}")
    click.echo(f"beta_sq: {_fmt(rec.beta_sq)}")
    click.echo(f"gamma_sq: {_fmt(rec.gamma_sq)}")
    click.echo(f"e_ab ({unit}): {_fmt(rec.e_ab)}")
    click.echo(f"e_ac ({unit}): {_fmt(rec.e_ac)}")
    click.echo(f"e_abc ({unit}): {_fmt(rec.e_abc)}")
    click.echo(f"delta ({unit}): {_fmt(rec.delta)}")


# ---------------------------------------------------------------------------
# sweep: CSV + SVG emission
# ---------------------------------------------------------------------------


def _rescale_record(rec: MonogamyRecord, scale: float) -> MonogamyRecord:
    if scale == 1.0:
        return rec
    e_ab = rec.e_ab / scale
    e_ac = rec.e_ac / scale
    e_abc = rec.e_abc / scale
    return MonogamyRecord(
        alpha_sq=rec.alpha_sq,
        beta_sq=rec.beta_sq,
        gamma_sq=rec.gamma_sq,
        e_ab=e_ab,
        e_ac=e_ac,
        e_abc=e_abc,
        delta=e_abc - e_ab - e_ac,
    )


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def render_csv(records, cfg: SweepConfig, numeric_records=None) -> str:
    lines = []
    if numeric_records is None:
        lines.append(CSV_HEADER)
        for rec in records:
            lines.append(
                ",".join(
                    _fmt(v)
                    for v in (
                        rec.alpha_sq, rec.beta_sq, rec.gamma_sq,
                        rec.e_ab, rec.e_ac, rec.e_abc, rec.delta,
                    )
                )
            )
    else:
        lines.append(CSV_HEADER + ",delta_numeric")
        for rec, num in zip(records, numeric_records):
            lines.append(
                ",".join(
                    _fmt(v)
                    for v in (
                        rec.alpha_sq, rec.beta_sq, rec.gamma_sq,
                        rec.e_ab, rec.e_ac, rec.e_abc, rec.delta, num.delta,
                    )
                )
            )
    lines.append(f"# engine={cfg.engine}")
    lines.append(f"# resolution={cfg.resolution}")
    lines.append(f"# seed={cfg.seed}")
    lines.append(f"# log_base={cfg.log_base}")
    if numeric_records is not None:
        diff = max(abs(r.delta - n.delta) for r, n in zip(records, numeric_records))
        lines.append(f"# max_abs_delta_diff={_fmt(diff)}")
    return "\n".join(lines) + "\n"


_COLOR_STOPS = (
    (13, 8, 135),
    (126, 3, 168),
    (204, 71, 120),
    (248, 149, 64),
    (240, 249, 33),
)


def _color(frac: float) -> str:
    f = min(max(frac, 0.0), 1.0) * (len(_COLOR_STOPS) - 1)
    i = min(int(f), len(_COLOR_STOPS) - 2)
    t = f - i
    rgb = tuple(
        round((1.0 - t) * lo + t * hi)
        for lo, hi in zip(_COLOR_STOPS[i], _COLOR_STOPS[i + 1])
    )
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def render_svg(records, cfg: SweepConfig) -> str:
    """Self-contained triangular heatmap of delta over (beta^2, gamma^2)."""
    n = cfg.resolution
    by_ij = {}
    for rec in records:
        i = round(rec.beta_sq * n)
        j = round(rec.gamma_sq * n)
        by_ij[(i, j)] = rec.delta
    vmax = max(max(by_ij.values()), 1e-300)

    width, height = 800, 700
    x0, y0 = 80.0, 630.0     # plot origin (bottom-left), y grows upward
    span = 540.0

    def px(beta_sq: float, gamma_sq: float) -> str:
        return f"{x0 + span * beta_sq:.2f},{y0 - span * gamma_sq:.2f}"

    cells = []
    for i in range(n):
        for j in range(n - i):
            up = (by_ij[(i, j)] + by_ij[(i + 1, j)] + by_ij[(i, j + 1)]) / 3.0
            pts = " ".join((px(i / n, j / n), px((i + 1) / n, j / n), px(i / n, (j + 1) / n)))
            cells.append(f'<polygon points="{pts}" fill="{_color(up / vmax)}"/>')
            if i + j <= n - 2:
                down = (by_ij[(i + 1, j)] + by_ij[(i, j + 1)] + by_ij[(i + 1, j + 1)]) / 3.0
                pts = " ".join(
                    (px((i + 1) / n, j / n), px(i / n, (j + 1) / n), px((i + 1) / n, (j + 1) / n))
                )
                cells.append(f'<polygon points="{pts}" fill="{_color(down / vmax)}"/>')

    stops = "".join(
        f'<stop offset="{100 * k / (len(_COLOR_STOPS) - 1):.0f}%" '
        f'stop-color="{_color(k / (len(_COLOR_STOPS) - 1))}"/>'
        for k in range(len(_COLOR_STOPS))
    )
    bar_x, bar_top, bar_h = 690.0, 100.0, 480.0
    ticks = []
    for k in range(5):
        frac = k / 4.0
        y = bar_top + bar_h * (1.0 - frac)
        ticks.append(
            f'<line x1="{bar_x + 24:.0f}" y1="{y:.2f}" x2="{bar_x + 30:.0f}" y2="{y:.2f}" '
            'stroke="#333"/>'
            f'<text x="{bar_x + 34:.0f}" y="{y + 4:.2f}" font-size="13">{frac * vmax:.4g}</text>'
        )

    unit = _unit(cfg.log_base)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{x0}" y="40" font-size="18" font-family="sans-serif">'
        f"monogamy slack delta ({unit}), resolution {n}, engine {cfg.engine}</text>",
        "<g stroke=\"none\">",
        *cells,
        "</g>",
        f'<line x1="{x0}" y1="{y0}" x2="{x0 + span}" y2="{y0}" stroke="#333"/>',
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y0 - span}" stroke="#333"/>',
        f'<text x="{x0 + span / 2:.0f}" y="{y0 + 40:.0f}" font-size="14" '
        'font-family="sans-serif" text-anchor="middle">beta_sq</text>',
        f'<text x="{x0 - 50:.0f}" y="{y0 - span / 2:.0f}" font-size="14" '
        f'font-family="sans-serif" transform="rotate(-90 {x0 - 50:.0f} {y0 - span / 2:.0f})" '
        'text-anchor="middle">gamma_sq</text>',
        f'<text x="{x0 - 8:.0f}" y="{y0 + 18:.0f}" font-size="12" text-anchor="end">0</text>',
        f'<text x="{x0 + span:.0f}" y="{y0 + 18:.0f}" font-size="12" text-anchor="middle">1</text>',
        f'<text x="{x0 - 12:.0f}" y="{y0 - span + 4:.0f}" font-size="12" text-anchor="end">1</text>',
        f'<defs><linearGradient id="cb" x1="0" y1="1" x2="0" y2="0">{stops}</linearGradient></defs>',
        f'<rect x="{bar_x}" y="{bar_top}" width="24" height="{bar_h}" fill="url(#cb)" '
        'stroke="#333"/>',
        *ticks,
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


@main.command("sweep")
@click.option("--resolution", type=int, default=200, show_default=True)
@click.option("--engine", type=click.Choice(["closed", "numeric", "both"]), default="closed",
              show_default=True)
@click.option("--log-base", type=click.Choice(["e", "2"]), default="e", show_default=True)
@click.option("--out", "out_csv", type=click.Path(dir_okay=False, path_type=Path),
              default=Path("sweep.csv"), show_default=True, help="CSV output path")
@click.option("--svg", "out_svg", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="optional SVG heatmap path")
@click.option("--seed", type=int, default=sampling.DEFAULT_SEED, show_default=True,
              help="recorded in the CSV metadata for reproducibility")
def cmd_sweep(resolution, engine, log_base, out_csv, out_svg, seed):
    """Audit delta over the full amplitude simplex and emit the grid."""
    if resolution < 2:
        _fail(2, f"resolution must be >= 2, got {resolution}")
    cfg = SweepConfig(
        resolution=resolution, engine=engine, log_base=log_base,
        out_csv=out_csv, out_svg=out_svg, seed=seed,
    )
    scale = _scale(log_base)
    primary_engine = "numeric" if engine == "numeric" else "closed"
    records = [_rescale_record(r, scale) for r in monogamy.sweep(resolution, primary_engine)]
    numeric_records = None
    if engine == "both":
        numeric_records = [
            _rescale_record(r, scale) for r in monogamy.sweep(resolution, "numeric")
        ]
    try:
        _atomic_write(cfg.out_csv, render_csv(records, cfg, numeric_records))
        if cfg.out_svg is not None:
            _atomic_write(cfg.out_svg, render_svg(records, cfg))
    except OSError as exc:
        _fail(3, f"cannot write output: {exc}")
    min_delta = min(r.delta for r in records)
    if numeric_records is not None:
        min_delta = min(min_delta, min(r.delta for r in numeric_records))
    click.echo(f"records: {len(records)}")
    click.echo(f"min_delta: {_fmt(min_delta)}")
    if min_delta * scale < DELTA_FLOOR:
        _fail(4, f"monogamy violation: min delta {min_delta} below {DELTA_FLOOR} nats")


# ---------------------------------------------------------------------------
# verify: seeded cross-validation suites
# ---------------------------------------------------------------------------


def _suite_oracle_agreement(samples: int, seed: int):
    rng = np.random.default_rng([seed, 1])
    worst_restricted = 0.0
    for _ in range(samples):
        s = sampling.random_interior_xstate(rng)
        worst_restricted = max(
            worst_restricted, abs(ree_numeric_restricted(s) - ree_closed_form(s))
        )
    general_lo, general_hi = 0.0, 0.0
    general_samples = max(1, samples // 10)
    rng_g = np.random.default_rng([seed, 2])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConvergenceFailure)
        for _ in range(general_samples):
            s = sampling.random_interior_xstate(rng_g)
            gap = ree_numeric_general(s.to_density()) - ree_closed_form(s)
            general_lo = min(general_lo, gap)
            general_hi = max(general_hi, gap)
    ok = worst_restricted <= 1e-8 and general_lo >= -1e-6 and general_hi <= 1e-4
    detail = (
        f"max|restricted-closed|={worst_restricted:.3e} "
        f"(general-closed) in [{general_lo:.3e}, {general_hi:.3e}] "
        f"on {samples}/{general_samples} states"
    )
    return ok, detail


def _suite_css_boundary(samples: int, seed: int):
    rng = np.random.default_rng([seed, 3])
    worst_gap = -math.inf
    worst_match = 0.0
    for _ in range(samples):
        s = sampling.random_interior_xstate(rng)
        angles, value = minimize_g(s)
        report = verify_css(s.to_density(), css_from_angles(angles))
        worst_gap = max(worst_gap, abs(report.boundary_gap))
        worst_match = max(worst_match, abs(report.relative_entropy_value - value))
    ok = worst_gap <= 1e-9 and worst_match <= 1e-8
    return ok, f"max|boundary_gap|={worst_gap:.3e} max|S-closed|={worst_match:.3e}"


def _suite_symmetry(samples: int, seed: int):
    rng = np.random.default_rng([seed, 4])
    worst = 0.0
    for _ in range(samples):
        s = sampling.random_interior_xstate(rng)
        worst = max(worst, abs(ree_closed_form(s) - ree_closed_form(s.swapped())))
    rng_w = np.random.default_rng([seed, 5])
    for _ in range(samples):
        w = sampling.random_wparams(rng_w)
        swapped = WParams(w.beta, w.alpha, w.gamma)
        worst = max(worst, abs(monogamy.delta(w).delta - monogamy.delta(swapped).delta))
    return worst <= 1e-12, f"max asymmetry={worst:.3e}"


def _suite_ckw(samples: int, seed: int):
    rng = np.random.default_rng([seed, 6])
    worst = 0.0
    for _ in range(samples):
        w = sampling.random_wparams(rng)
        worst = max(worst, abs(monogamy.concurrence_ckw_check(w).slack))
    return worst <= 1e-12, f"max|slack|={worst:.3e}"


@main.command("verify")
@click.option("--samples", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=sampling.DEFAULT_SEED, show_default=True)
def cmd_verify(samples: int, seed: int):
    """Run the oracle-agreement, CSS-boundary, symmetry and CKW suites."""
    if samples < 1:
        _fail(2, f"samples must be >= 1, got {samples}")
    suites = (
        ("oracle-agreement", _suite_oracle_agreement),
        ("css-boundary", _suite_css_boundary),
        ("symmetry", _suite_symmetry),
        ("ckw", _suite_ckw),
    )
    failed = []
    for name, fn in suites:
        ok, detail = fn(samples, seed)
        click.echo(f"{name}: {'pass' if ok else 'FAIL'} ({detail})")
        if not ok:
            failed.append(name)
    if failed:
        _fail(5, f"failed suites: {', '.join(failed)}")
    click.echo("all suites passed")


if __name__ == "__main__":
    main()
