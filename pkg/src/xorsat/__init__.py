"""Random k-XOR-SAT: GF(2) linear algebra, threshold bounds, experiments.

Submodules:

* ``gf2``     bit-packed GF(2) matrices: rank, kernels, solving
* ``model``   clauses, formulas, uniform sampling, text format
* ``bounds``  entropy, omega, E(Y), theta_k, beta_k roots
* ``witness`` T/U/V rank-deficiency counters for width-3 rows
* ``sweep``   seeded Monte Carlo sweeps, crossing estimate, CSV
* ``oracle``  exhaustive exact-rational references at tiny scale
* ``cli``     the ``xorsat`` command
"""

from .gf2 import BitMatrix, EchelonResult, SolveResult
from .model import Clause, Formula, ModelDomainError
from .bounds import BoundsReport, bounds_report, expected_y, theta, beta_upper
from .witness import WitnessCounts, count_tuv
from .sweep import SweepConfig, SweepPoint, estimate_crossing, run_point, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "EchelonResult",
    "SolveResult",
    "Clause",
    "Formula",
    "ModelDomainError",
    "BoundsReport",
    "bounds_report",
    "expected_y",
    "theta",
    "beta_upper",
    "WitnessCounts",
    "count_tuv",
    "SweepConfig",
    "SweepPoint",
    "estimate_crossing",
    "run_point",
    "run_sweep",
    "__version__",
]
