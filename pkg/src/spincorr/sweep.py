"""Parameter sweeps over the state families, written as CSV.

Each row holds the swept parameter, the nine raw spin-correlation entries,
the non-zero count ``N``, the indicator ``I``, the concurrence ``C`` and,
for the Werner and rank-2 families, the separability degree ``mu``.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .families import FAMILY_PARAMS, family_mu, family_state
from .measures import analyze
from .states import sample_random

SWEEP_FAMILIES = tuple(FAMILY_PARAMS) + ("random",)
ENTRY_COLUMNS = ["I" + i + j for i in "xyz" for j in "xyz"]
MU_FAMILIES = ("werner", "rank2")

DEFAULT_PARAM = {"werner": "x", "quasi_bell": "theta", "rank2": "theta", "jc": "T", "cavity": "T", "random": "index"}
DEFAULT_RANGE = {
    ("werner", "x"): (-1.0 / 3.0, 1.0),
    ("quasi_bell", "theta"): (0.0, math.pi / 2),
    ("rank2", "theta"): (0.0, math.pi),
    ("rank2", "x"): (-0.99, 0.99),
    ("jc", "T"): (0.0, 2 * math.pi),
    ("cavity", "T"): (0.0, 5.0),
}


@dataclass(frozen=True)
class SweepSpec:
    """Declarative sweep: one family, one swept parameter on a uniform grid.

    For ``family='random'`` the swept parameter is the sample index; the
    ensemble is fixed by ``fixed['seed']`` and cycles through ranks 1 to 4.
    """

    family: str
    sweep_param: str
    min: float
    max: float
    steps: int
    fixed: dict = field(default_factory=dict)
    output_path: str = None

    def __post_init__(self):
        if self.family not in SWEEP_FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; choose from {', '.join(SWEEP_FAMILIES)}")
        allowed = ("index",) if self.family == "random" else FAMILY_PARAMS[self.family]
        if self.sweep_param not in allowed:
            raise DomainError(f"family {self.family!r} cannot sweep {self.sweep_param!r}; choose from {allowed}")
        if self.steps < 2:
            raise DomainError(f"steps must be at least 2, got {self.steps}")
        if not self.min < self.max:
            raise DomainError(f"need min < max, got [{self.min}, {self.max}]")
        if self.family == "random":
            if self.fixed.get("seed") is None:
                raise DomainError("random sweep needs a seed")
        else:
            missing = [p for p in allowed if p != self.sweep_param and self.fixed.get(p) is None]
            if missing:
                raise DomainError(f"sweep over {self.family!r} needs fixed {', '.join(missing)}")

    @property
    def has_mu(self):
        return self.family in MU_FAMILIES

    def header(self):
        # the first column is always named "param", whatever is swept
        cols = ["param"] + ENTRY_COLUMNS + ["N", "I", "C"]
        return cols + ["mu"] if self.has_mu else cols

    def grid(self):
        if self.family == "random":
            return np.round(np.linspace(self.min, self.max, self.steps)).astype(int)
        return np.linspace(self.min, self.max, self.steps)


def _state_at(spec, value):
    if spec.family == "random":
        index = int(value)
        return sample_random(2, index % 4 + 1, [int(spec.fixed["seed"]), index]), None
    params = {k: v for k, v in spec.fixed.items() if k in FAMILY_PARAMS[spec.family]}
    params[spec.sweep_param] = float(value)
    mu = family_mu(spec.family, **params) if spec.has_mu else None
    return family_state(spec.family, **params), mu


def evaluate_point(spec, value):
    """One CSV row (as numbers) for the grid point ``value``."""
    rho, mu = _state_at(spec, value)
    report = analyze(rho, mu=mu)
    row = [value] + list(report.scm.raw.ravel()) + [report.scm.n_nonzero, report.indicator, report.concurrence]
    if spec.has_mu:
        row.append(mu)
    return row


def run_sweep(spec, jobs=1):
    """Evaluate every grid point; rows come back in ascending parameter order."""
    grid = spec.grid()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda v: evaluate_point(spec, v), grid))
    return [evaluate_point(spec, v) for v in grid]


def _fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    v = float(v)
    return "0" if v == 0.0 else f"{v:.12g}"


def format_csv(spec, rows):
    lines = [",".join(spec.header())]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def write_csv(spec, rows, path=None):
    path = path or spec.output_path
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_csv(spec, rows))
