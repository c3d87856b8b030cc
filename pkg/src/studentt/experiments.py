"""Frozen grids for the error-table experiments and the oracle table.

Each experiment mirrors one of the published accuracy studies this package
reproduces; the grids below are the single source of truth shared by the
CLI `table` command, the frozen oracle table, and the acceptance tests.
"""
from dataclasses import dataclass, field

EXPERIMENTS = ("fig1_asym_cdf", "fig2_central_inv", "fig3_fixed_point",
               "fig4_uniform_inv", "table1_tail")

# central-inversion offsets Delta: p = 1/2 - Delta
FIG2_DELTAS = (1e-14, 2e-12, 3e-10, 4e-8, 5e-6, 6e-4)

TABLE1_PS = (1e-50, 2e-40, 3e-30, 4e-20, 5e-10)

_FIG1_X = (-30.0, -25.0, -20.0, -15.0, -10.0, -7.0, -5.0, -3.0, -2.0,
           -1.0, -0.5, -0.1, 0.0)
_FIG3_P = (0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9)
_FIG4_P = tuple(round(0.05 * k, 2) for k in range(1, 20) if k != 10)

# tail sub-grid used for the large-n error-scaling study
SCALING_NS = (50.0, 100.0, 200.0, 400.0)
SCALING_X = (-30.0, -25.0, -20.0, -15.0)


@dataclass(frozen=True)
class TableSpec:
    """One experiment: degrees-of-freedom list and an input grid (p or x)."""
    experiment: str
    n_list: tuple
    grid: tuple

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment {self.experiment!r}")
        if not self.n_list or not self.grid:
            raise ValueError("n_list and grid must be non-empty")


DEFAULT_SPECS = {
    "fig1_asym_cdf": TableSpec("fig1_asym_cdf", (10.0, 100.0, 1000.0), _FIG1_X),
    "fig2_central_inv": TableSpec("fig2_central_inv", (5.0, 10.0, 100.0),
                                  tuple(0.5 - d for d in FIG2_DELTAS)),
    "fig3_fixed_point": TableSpec("fig3_fixed_point", (2.0, 10.0, 100.0), _FIG3_P),
    "fig4_uniform_inv": TableSpec("fig4_uniform_inv", (10.0, 100.0, 1000.0), _FIG4_P),
    "table1_tail": TableSpec("table1_tail", (10.0,), TABLE1_PS),
}

# single reference points used by the test suite beyond the table grids
EXTRA_QUANTILE_POINTS = (
    (10.0, 0.5 + 1e-5),   # fixed-point worked example
    (10.0, 1e-8),         # left-tail worked example
    (25.0, 1e-8),         # left-tail degradation example
    (10.0, 0.44),         # erfc-inversion worked example
)


def frozen_entries():
    """Ordered (kind, n, arg) triplets the frozen oracle table must contain."""
    entries = []
    spec = DEFAULT_SPECS["fig1_asym_cdf"]
    for n in spec.n_list:
        for x in spec.grid:
            entries.append(("cdf", n, x))
    for n in SCALING_NS:
        for x in SCALING_X:
            if (("cdf", n, x)) not in entries:
                entries.append(("cdf", n, x))
    for name in ("fig2_central_inv", "fig3_fixed_point", "fig4_uniform_inv",
                 "table1_tail"):
        spec = DEFAULT_SPECS[name]
        for n in spec.n_list:
            for p in spec.grid:
                if ("quantile", n, p) not in entries:
                    entries.append(("quantile", n, p))
    for n, p in EXTRA_QUANTILE_POINTS:
        if ("quantile", n, p) not in entries:
            entries.append(("quantile", n, p))
    return entries
