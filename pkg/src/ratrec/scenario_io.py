"""Scenario files, the four worked examples, CSV export and SVG plots."""
import html
import json
import math
from dataclasses import dataclass

from . import numerics
from .errors import (
    MalformedScenario, TooFewPoints, UnknownExample, UsageError,
    ZeroInitialCondition,
)
from .numerics import Mode, render
from .recurrence import InitialConditions, Parameters, Status, Trajectory

__all__ = [
    "Scenario", "parse_scenario", "render_scenario", "load_scenario",
    "paper_example", "PAPER_EXAMPLES", "export_csv", "parse_csv", "emit_plot",
    "DEFAULT_HORIZON",
]

DEFAULT_HORIZON = 400

_NUMBER_FIELDS = ("alpha", "A", "B", "a", "b", "c", "d")
_FIELDS = set(_NUMBER_FIELDS) | {"horizon", "mode", "label"}


@dataclass(frozen=True)
class Scenario:
    params: Parameters
    init: InitialConditions
    horizon: int = DEFAULT_HORIZON
    mode: Mode = Mode.EXACT
    label: str = ""

    def __post_init__(self):
        if isinstance(self.horizon, bool) or not isinstance(self.horizon, int) or self.horizon < 1:
            raise MalformedScenario(f"horizon must be a positive integer, got {self.horizon!r}")


def parse_scenario(text):
    """Build a Scenario from its JSON text.  Numbers must be JSON strings."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedScenario(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedScenario("scenario must be a JSON object")
    missing = [k for k in (*_NUMBER_FIELDS, "horizon") if k not in doc]
    if missing:
        raise MalformedScenario(f"missing field(s): {', '.join(missing)}")
    extra = sorted(set(doc) - _FIELDS)
    if extra:
        raise MalformedScenario(f"unknown field(s): {', '.join(extra)}")

    values = {}
    for key in _NUMBER_FIELDS:
        raw = doc[key]
        if not isinstance(raw, str):
            raise MalformedScenario(f"{key} must be a string such as \"21/20\", got {raw!r}")
        try:
            values[key] = numerics.rat_from_string(raw)
        except UsageError as exc:
            raise MalformedScenario(f"{key}: {exc}") from None

    try:
        mode = Mode(doc.get("mode", "exact"))
    except ValueError:
        raise MalformedScenario(f"mode must be 'exact' or 'float', got {doc['mode']!r}") from None
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise MalformedScenario("label must be a string")

    params = Parameters(values["alpha"], values["A"], values["B"])
    try:
        init = InitialConditions(values["a"], values["b"], values["c"], values["d"])
    except ZeroInitialCondition as exc:
        raise MalformedScenario(str(exc)) from None
    return Scenario(params, init, doc["horizon"], mode, label)


def render_scenario(sc):
    doc = {
        "alpha": render(sc.params.alpha), "A": render(sc.params.A), "B": render(sc.params.B),
        "a": render(sc.init.a), "b": render(sc.init.b),
        "c": render(sc.init.c), "d": render(sc.init.d),
        "horizon": sc.horizon, "mode": sc.mode.value,
    }
    if sc.label:
        doc["label"] = sc.label
    return json.dumps(doc, indent=2) + "\n"


def load_scenario(path):
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())


# (alpha, A, B, a, b, c, d) exactly as printed in the worked examples
PAPER_EXAMPLES = {
    1: ("1", "1.05", "1", "3", "-4", "2", "-1"),
    2: ("1", "9", "-2", "2", "-2", "2", "-2"),
    3: ("-0.5", "0.5", "1", "0.1", "0.2", "0.3", "-0.4"),
    4: ("1", "0.64", "1", "-1.2", "0.4", "-0.3", "0.9"),
}

_EXAMPLE_LABELS = {
    1: "Example 1: |A/alpha| > 1, converging to zero",
    2: "Example 2: |A/alpha| > 1, 2 prime periodic solution",
    3: "Example 3: A = -alpha, unbounded solution",
    4: "Example 4: |A/alpha| < 1, 4 prime periodic solution",
}


def paper_example(k):
    if k not in PAPER_EXAMPLES:
        raise UnknownExample(f"no example {k}; choose from 1-4")
    alpha, A, B, a, b, c, d = (numerics.rat_from_string(s) for s in PAPER_EXAMPLES[k])
    return Scenario(Parameters(alpha, A, B), InitialConditions(a, b, c, d),
                    DEFAULT_HORIZON, Mode.EXACT, _EXAMPLE_LABELS[k])


def _as_float(x):
    try:
        return float(x)
    except OverflowError:
        return math.copysign(math.inf, x)


def export_csv(traj):
    """``n,exact,float`` rows from index -3 plus a ``# status=...`` trailer."""
    exact = traj.mode is Mode.EXACT
    lines = ["n,exact,float"]
    for n, x in traj.items():
        lines.append(f"{n},{render(x) if exact else ''},{_as_float(x):.17g}")
    lines.append(f"# status={traj.status}")
    return "\n".join(lines) + "\n"


def parse_csv(text):
    """Inverse of :func:`export_csv`."""
    lines = text.splitlines()
    if not lines or lines[0] != "n,exact,float":
        raise UsageError("missing 'n,exact,float' header")
    values, status = [], None
    for i, line in enumerate(lines[1:], start=2):
        if line.startswith("# status="):
            status = Status.parse(line[len("# status="):])
            continue
        n, ex, fl = line.split(",")
        if int(n) != len(values) - 3:
            raise UsageError(f"line {i}: expected index {len(values) - 3}, got {n}")
        values.append(numerics.rat_from_string(ex) if ex else float(fl))
    if status is None:
        raise UsageError("missing status trailer")
    return Trajectory(tuple(values), status)


# plotting

_W, _H = 800, 450
_LEFT, _RIGHT, _TOP, _BOTTOM = 80, 20, 40, 60
_CLIP = 1e300


def _fmt(v):
    return f"{v:.2f}"


def _tick_label(v):
    if v == 0:
        return "0"
    if abs(v) >= 1e4 or abs(v) < 1e-3:
        return f"{v:.2e}"
    return f"{v:.4g}"


def emit_plot(traj, title):
    """Standalone SVG line-and-marker chart of x[n] against n.

    Values that overflowed (or exceed 1e300 in magnitude) are clipped to the
    plot edge and drawn as open markers.  Output depends only on the input.
    """
    if len(traj.values) < 2:
        raise TooFewPoints("need at least 2 points to plot")
    pts = [(n, _as_float(x)) for n, x in traj.items()]
    finite = [y for _, y in pts if math.isfinite(y) and abs(y) <= _CLIP]
    ymin = min(finite, default=-1.0)
    ymax = max(finite, default=1.0)
    if ymin == ymax:
        ymin, ymax = ymin - 1.0, ymax + 1.0
    pad = (ymax - ymin) * 0.05
    ymin, ymax = ymin - pad, ymax + pad
    xmin, xmax = pts[0][0], pts[-1][0]
    pw, ph = _W - _LEFT - _RIGHT, _H - _TOP - _BOTTOM

    def sx(n):
        return _LEFT + (n - xmin) / (xmax - xmin) * pw

    def sy(y):
        return _TOP + (ymax - y) / (ymax - ymin) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.2f}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{html.escape(title)}</text>',
        f'<rect x="{_LEFT}" y="{_TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for i in range(6):
        y = ymin + (ymax - ymin) * i / 5
        py = _fmt(sy(y))
        out.append(f'<line x1="{_LEFT - 5}" y1="{py}" x2="{_LEFT}" y2="{py}" stroke="black"/>')
        out.append(f'<text x="{_LEFT - 8}" y="{py}" text-anchor="end" dominant-baseline="middle" '
                   f'font-family="sans-serif" font-size="11">{_tick_label(y)}</text>')
    for i in range(6):
        n = xmin + (xmax - xmin) * i / 5
        px = _fmt(sx(n))
        out.append(f'<line x1="{px}" y1="{_TOP + ph}" x2="{px}" y2="{_TOP + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{px}" y="{_TOP + ph + 18}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="11">{round(n)}</text>')
    if ymin < 0 < ymax:
        out.append(f'<line x1="{_LEFT}" y1="{_fmt(sy(0))}" x2="{_LEFT + pw}" y2="{_fmt(sy(0))}" '
                   f'stroke="#999999" stroke-dasharray="4 3"/>')
    out.append(f'<text x="{_LEFT + pw / 2:.2f}" y="{_H - 15}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="13">n</text>')
    out.append(f'<text x="18" y="{_TOP + ph / 2:.2f}" text-anchor="middle" font-family="sans-serif" '
               f'font-size="13" transform="rotate(-90 18 {_TOP + ph / 2:.2f})">x(n)</text>')

    coords, clipped = [], []
    for n, y in pts:
        if math.isnan(y):
            continue
        if not math.isfinite(y) or abs(y) > _CLIP or y > ymax or y < ymin:
            y = ymax if y > 0 else ymin
            clipped.append((sx(n), sy(y)))
        coords.append((sx(n), sy(y)))
    path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in coords)
    out.append(f'<polyline points="{path}" fill="none" stroke="#1f5fa8" stroke-width="1"/>')
    radius = 2.5 if len(coords) <= 200 else 1.5
    for x, y in coords:
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{radius}" fill="#1f5fa8"/>')
    for x, y in clipped:
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="white" stroke="#c0392b"/>')
    if traj.status.kind.value != "Complete":
        out.append(f'<text x="{_LEFT + pw - 4}" y="{_TOP + 14}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="11" fill="#c0392b">'
                   f'{html.escape(str(traj.status))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
