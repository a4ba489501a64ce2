"""Pure threshold equilibria of two-agent Bayesian double games.

Exact quantities come back as fractions.Fraction; infinite thresholds as float infinities.
"""

from ._core import (
    DgpdParams,
    Game,
    InputError,
    SolverError,
    brute_force,
    dgpd_search,
    general_search,
    regret,
    run_cli,
    solve_continuous,
)

__all__ = [
    "DgpdParams",
    "Game",
    "InputError",
    "SolverError",
    "brute_force",
    "dgpd_search",
    "general_search",
    "regret",
    "run_cli",
    "solve_continuous",
]
