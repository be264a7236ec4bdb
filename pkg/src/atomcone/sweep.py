"""Parameter sweeps over (x, z) grids and the four figure presets.

The vacuum-channel concurrence is a ratio 2|b|/(1 + |b|^2) whose peak at
the light cone sits where |b| crosses 1, a window of width ~alpha D^2 in
the cone coordinate.  Uniform grids cannot see it, so the presets that
sweep across the cone mix a uniform base grid with geometric ladders of
points accumulating at the cone (denser on the inside, where the peak
lives).  Grids are fixed by the spec alone, so repeated runs and any
worker count produce byte-identical tables.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .concurrence import two_component_concurrence
from .errors import QuadratureError, SingularConfigError, UndefinedStateError
from .model import Kinematics, ModelParams
from .twophoton import two_photon_point
from .vacuum import radiative_correction, vacuum_point

CSV_COLUMNS = (
    "channel",
    "x",
    "z",
    "omega_t",
    "concurrence",
    "amp1_re",
    "amp1_im",
    "amp2_re",
    "amp2_im",
    "on_cone_flag",
    "cutoff_sensitivity",
    "error",
)

CHANNELS = ("vacuum", "two_photon")
SWEEP_VARS = ("x", "z")

# Ladder extents around the cone: the inner ladder must reach below
# alpha D^2 / (pi z^2) ~ 3e-10 to resolve the |b| = 1 crossing.
_INNER_LADDER_FLOOR = 1e-13
_OUTER_LADDER_FLOOR = 1e-6
_LADDER_MIN_POINTS = 50


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a channel, a swept variable, and one curve per fixed value.

    For sweep_var "x" the fixed values are z per curve; for "z" they are
    Omega*t per curve.
    """

    channel: str
    sweep_var: str
    fixed_values: tuple[float, ...]
    lo: float
    hi: float
    n_points: int
    params: ModelParams = field(default_factory=ModelParams)
    refine_cone: bool = False

    def __post_init__(self):
        if self.channel not in CHANNELS:
            raise ValueError(f"channel must be one of {CHANNELS}, got {self.channel!r}")
        if self.sweep_var not in SWEEP_VARS:
            raise ValueError(f"sweep_var must be one of {SWEEP_VARS}, got {self.sweep_var!r}")
        if not self.fixed_values:
            raise ValueError("fixed_values must be nonempty")
        if any(v <= 0 for v in self.fixed_values):
            raise ValueError("fixed values must be positive")
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.lo <= 0:
            raise ValueError("sweep range must be positive")
        if self.n_points < 2:
            raise ValueError("n_points must be >= 2")


@dataclass(frozen=True)
class Row:
    channel: str
    x: float
    z: float
    omega_t: float
    concurrence: float
    amp1: complex
    amp2: complex
    on_cone: bool
    cutoff_sensitivity: float
    error: str = ""


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    curves: tuple[tuple[float, tuple[Row, ...]], ...]

    def rows(self) -> list[Row]:
        return [r for _, rows in self.curves for r in rows]


def cone_refined_grid(lo: float, hi: float, n: int, cone: float) -> np.ndarray:
    """A deterministic grid on [lo, hi] with geometric ladders at the cone.

    Inner ladder (below the cone) reaches 1e-13 so the concurrence peak is
    sampled; the outer ladder stops at 1e-6 where the outside amplitude is
    already negligible, keeping the grid maximum on the inside.
    """
    if n < _LADDER_MIN_POINTS or not (lo < cone < hi):
        return np.linspace(lo, hi, n)
    n_in = n // 5
    n_out = n // 12
    n_base = n - n_in - n_out
    base = np.linspace(lo, hi, n_base)
    d_in = min(0.2, 0.5 * (cone - lo))
    d_out = min(0.2, 0.5 * (hi - cone))
    inner = cone - np.logspace(math.log10(_INNER_LADDER_FLOOR), math.log10(d_in), n_in)
    outer = cone + np.logspace(math.log10(_OUTER_LADDER_FLOOR), math.log10(d_out), n_out)
    grid = np.unique(np.concatenate([base, inner, outer]))
    return grid[(grid >= lo) & (grid <= hi)]


def _curve_grid(spec: SweepSpec, fixed: float) -> np.ndarray:
    if not spec.refine_cone:
        return np.linspace(spec.lo, spec.hi, spec.n_points)
    cone = 1.0 if spec.sweep_var == "x" else fixed
    return cone_refined_grid(spec.lo, spec.hi, spec.n_points, cone)


def _point_for(spec: SweepSpec, fixed: float, value: float) -> Kinematics:
    if spec.sweep_var == "x":
        return Kinematics(x=value, z=fixed)
    # z sweep at fixed Omega*t: x = z / (Omega*t)
    return Kinematics(x=value / fixed, z=value)


def _eval_vacuum(p: ModelParams, k: Kinematics) -> Row:
    amp = vacuum_point(p, k)
    a1 = 1.0 + amp.a
    conc = two_component_concurrence(a1, amp.b)
    doubled = ModelParams(p.dipole_strength, p.alpha, p.nu_max, 2.0 * p.z_max_factor)
    conc2 = two_component_concurrence(1.0 + radiative_correction(doubled, k), amp.b)
    return Row(
        channel="vacuum",
        x=k.x,
        z=k.z,
        omega_t=k.omega_t(),
        concurrence=conc,
        amp1=a1,
        amp2=amp.b,
        on_cone=amp.on_cone,
        cutoff_sensitivity=abs(conc2 - conc),
    )


def _eval_two_photon(p: ModelParams, k: Kinematics) -> Row:
    bl = two_photon_point(p, k, sensitivity=True)
    conc = min(2.0 * abs(bl.fg) / (bl.f2 + bl.g2), 1.0)
    # amp1 carries FG; amp2 packs (F2, G2) as (re, im).  Documented in README.
    return Row(
        channel="two_photon",
        x=k.x,
        z=k.z,
        omega_t=k.omega_t(),
        concurrence=conc,
        amp1=bl.fg,
        amp2=complex(bl.f2, bl.g2),
        on_cone=bool(bl.cutoff_meta["on_cone"]),
        cutoff_sensitivity=float(bl.cutoff_meta["concurrence_shift"]),
    )


def _eval_row(spec: SweepSpec, fixed: float, value: float) -> Row:
    nan = float("nan")
    try:
        k = _point_for(spec, fixed, value)
        if spec.channel == "vacuum":
            return _eval_vacuum(spec.params, k)
        return _eval_two_photon(spec.params, k)
    except (SingularConfigError, UndefinedStateError, QuadratureError, ValueError) as exc:
        x = value if spec.sweep_var == "x" else value / fixed
        z = fixed if spec.sweep_var == "x" else value
        msg = str(exc).replace(",", ";").replace("\n", " ")
        return Row(
            channel=spec.channel,
            x=x,
            z=z,
            omega_t=z / x,
            concurrence=nan,
            amp1=complex(nan, nan),
            amp2=complex(nan, nan),
            on_cone=False,
            cutoff_sensitivity=nan,
            error=msg,
        )


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Evaluate the sweep.  Row order and values do not depend on workers."""
    tasks = []
    shape = []
    for fixed in spec.fixed_values:
        grid = _curve_grid(spec, fixed)
        shape.append((fixed, len(grid)))
        tasks.extend((fixed, float(v)) for v in grid)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda fv: _eval_row(spec, fv[0], fv[1]), tasks))
    else:
        rows = [_eval_row(spec, fv[0], fv[1]) for fv in tasks]
    curves = []
    pos = 0
    for fixed, count in shape:
        curves.append((fixed, tuple(rows[pos : pos + count])))
        pos += count
    return SweepResult(spec=spec, curves=tuple(curves))


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def to_csv(result: SweepResult) -> str:
    """Serialize with full round-trip precision; byte-stable across runs."""
    lines = [",".join(CSV_COLUMNS)]
    for row in result.rows():
        lines.append(
            ",".join(
                (
                    row.channel,
                    _fmt(row.x),
                    _fmt(row.z),
                    _fmt(row.omega_t),
                    _fmt(row.concurrence),
                    _fmt(row.amp1.real),
                    _fmt(row.amp1.imag),
                    _fmt(row.amp2.real),
                    _fmt(row.amp2.imag),
                    "1" if row.on_cone else "0",
                    _fmt(row.cutoff_sensitivity),
                    row.error,
                )
            )
        )
    return "\n".join(lines) + "\n"


_LINE_TYPES = ("dt 1", "dt 2", "dt 3", "dt 4", "dt 5")


def emit_plot_script(result: SweepResult, title: Optional[str] = None) -> str:
    """A standalone gnuplot script with the table data inlined.

    One solid/dashed/dotted line per curve; rows with an error annotation
    are dropped and counted in a comment.
    """
    rows = result.rows()
    if not rows:
        raise ValueError("empty table")
    var = result.spec.sweep_var
    curve_label = "z" if var == "x" else "omega_t"
    n_err = sum(1 for r in rows if r.error)
    out = ["# atomcone sweep plot (gnuplot)"]
    if n_err:
        out.append(f"# omitted {n_err} error rows")
    if title:
        out.append(f'set title "{title}"')
    out.append(f'set xlabel "{var}"')
    out.append('set ylabel "concurrence"')
    out.append("set yrange [0:1.05]")
    plots = []
    for i, (fixed, _) in enumerate(result.curves):
        lt = _LINE_TYPES[i % len(_LINE_TYPES)]
        plots.append(f"'-' using 1:2 with lines lw 2 {lt} title \"{curve_label}={fixed:g}\"")
    out.append("plot " + ", \\\n     ".join(plots))
    for _, curve_rows in result.curves:
        for r in curve_rows:
            if r.error:
                continue
            v = r.x if var == "x" else r.z
            out.append(f"{_fmt(v)} {_fmt(r.concurrence)}")
        out.append("e")
    out.append("pause -1")
    return "\n".join(out) + "\n"


def preset(name: str, params: Optional[ModelParams] = None, n_points: Optional[int] = None) -> SweepSpec:
    """The four figure presets.

    fig1/fig3: concurrence vs x in [0.2, 2] for z in {5, 10, 15}.
    fig2/fig4: concurrence vs z in [1, 20] for Omega*t in {6, 9, 12}.
    Vacuum-channel presets refine the grid at the cone (see module doc).
    """
    p = params if params is not None else ModelParams()
    n = n_points if n_points is not None else 400
    table = {
        "fig1": dict(channel="vacuum", sweep_var="x", fixed_values=(5.0, 10.0, 15.0), lo=0.2, hi=2.0, refine_cone=True),
        "fig2": dict(channel="vacuum", sweep_var="z", fixed_values=(6.0, 9.0, 12.0), lo=1.0, hi=20.0, refine_cone=True),
        "fig3": dict(channel="two_photon", sweep_var="x", fixed_values=(5.0, 10.0, 15.0), lo=0.2, hi=2.0, refine_cone=False),
        "fig4": dict(channel="two_photon", sweep_var="z", fixed_values=(6.0, 9.0, 12.0), lo=1.0, hi=20.0, refine_cone=False),
    }
    if name not in table:
        raise ValueError(f"unknown preset {name!r}; expected one of {sorted(table)}")
    return SweepSpec(params=p, n_points=n, **table[name])
