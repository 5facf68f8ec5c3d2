"""Side-by-side reports for published values that the definitions do not
reproduce.

Each report lists the published value, the value from the definitional
path (:mod:`spincorr.measures`) and the value from the brute-force moment
oracle (:mod:`spincorr.oracle`). Where a simple substitution reproduces the
published number it is shown as an extra diagnostic row. No report decides
which value is right.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import families, measures, oracle
from .errors import DomainError

CASES = ("w_state", "rank2_boundary", "jc_general_theta", "ex5_indicator")

DEFAULTS = {
    "w_state": {},
    "rank2_boundary": {"x": 0.0, "theta": 0.0},
    "jc_general_theta": {"theta": math.pi / 6, "T": 1.2},
    "ex5_indicator": {"a": 1.0, "T": 0.0},
}


@dataclass
class Row:
    label: str
    value: float
    source: str


@dataclass
class Report:
    case: str
    params: dict
    rows: list = field(default_factory=list)
    note: str = ""

    def add(self, label, value, source):
        self.rows.append(Row(label, float(value), source))

    def value(self, source):
        """First value whose source is ``source``."""
        for row in self.rows:
            if row.source == source:
                return row.value
        raise KeyError(source)

    def render(self):
        head = self.case
        if self.params:
            head += " (" + ", ".join(f"{k}={v:.10g}" for k, v in self.params.items()) + ")"
        width = max(len(r.label) for r in self.rows)
        lines = [head]
        lines += [f"  {r.label:<{width}}  {r.value:.12g}  [{r.source}]" for r in self.rows]
        if self.note:
            lines.append("  note: " + self.note)
        return "\n".join(lines)

    def as_dict(self):
        return {
            "case": self.case,
            "params": self.params,
            "rows": [{"label": r.label, "value": r.value, "source": r.source} for r in self.rows],
            "note": self.note,
        }


def _w_state(report):
    psi = families.w3()
    report.add("published pairwise average", 5.0 / 9.0, "published")
    report.add("definitional pairwise average", measures.multipartite_indicator(psi).average, "definitional")
    report.add("brute-force pairwise average", oracle.pairwise_average_pure(psi.amplitudes), "oracle")
    raw = oracle.pair_matrix(oracle.moment_pure, psi.amplitudes, 1, 2)
    zz = abs(oracle.moment_pure(psi.amplitudes, {1: "z", 2: "z"}))
    report.add("I_zz without its marginal product", (raw[0, 0] + raw[1, 1] + zz) / 3.0, "diagnostic")
    report.note = "each pair has <xx> = <yy> = 2/3, <zz> = -1/3 and <z> = -1/3 per qubit"


def _rank2_boundary(report, x, theta):
    c = abs(math.cos(theta))
    rho = families.rank2(x, theta)
    scm = measures.spin_correlation_matrix(rho)
    report.add("published family formula", ((1 + abs(x)) * c + abs(x) * c * c) / 3.0, "published")
    report.add("definitional indicator", scm.indicator, "definitional")
    report.add("brute-force indicator", oracle.indicator(rho.mat), "oracle")
    report.add("non-zero entries N", scm.n_nonzero, "definitional")
    report.note = "the family formula always divides by 3; the definition divides by the non-zero count"


def _jc_general_theta(report, theta, T):
    rho = families.jc_pair(theta, T)
    report.add("published closed form", families.jc_indicator_oracle(theta, T), "published")
    report.add("definitional indicator", measures.indicator(rho), "definitional")
    report.add("brute-force indicator", oracle.indicator(rho.mat), "oracle")
    m = np.array(rho.mat)
    m[1, 2] = m[2, 1] = m[1, 1]
    report.add("brute force with b23 set to b22", oracle.indicator(m), "diagnostic")
    report.note = "the listed matrix elements have b23 = 0"


def _ex5_indicator(report, a, T):
    rho = families.cavity_decay(a, T)
    report.add("published I(T) closed form", families.ex5_oracles(a, T).indicator, "published")
    report.add("published initial value I(0)", families.ex5_initial_oracles(a).indicator, "published")
    report.add("definitional indicator", measures.indicator(rho), "definitional")
    report.add("brute-force indicator", oracle.indicator(rho.mat), "oracle")
    report.add("definitional I(0), (14 + 4a - 4a^2)/27", (14 + 4 * a - 4 * a * a) / 27.0, "closed form")
    report.note = "the published I(T) form has no modulus on 1 - 4 b22, which is negative at T = 0"


def reconcile(case, **params):
    """Build the :class:`Report` for ``case``; ``params`` override defaults."""
    if case not in CASES:
        raise DomainError(f"unknown case {case!r}; choose from {', '.join(CASES)}")
    merged = dict(DEFAULTS[case])
    merged.update({k: float(v) for k, v in params.items() if v is not None and k in merged})
    report = Report(case, merged)
    if case == "w_state":
        _w_state(report)
    elif case == "rank2_boundary":
        _rank2_boundary(report, merged["x"], merged["theta"])
    elif case == "jc_general_theta":
        _jc_general_theta(report, merged["theta"], merged["T"])
    else:
        _ex5_indicator(report, merged["a"], merged["T"])
    return report
