"""Exact and asymptotic acyclic-orientation counts for complete
multipartite graphs and graph blow-ups, with partition-sum models and
their saddle constants."""
from .asymptotics import (AsymptoticValue, WINDOW_GAMMA, asy_equal_window,
                          asy_fixed_part, asy_finite_profile, asy_turan,
                          asy_turan_tutte, far_tail_bound, tutte_correction)
from .blowup import (BlowupBase, C5HessianReport, blowup_vertex_transitive,
                     c5_hessian_check)
from .exact import (PartitionSpec, ao_bruteforce, ao_exact, ao_one_large_part,
                    chromatic_eval, h_s_exact, product_polynomial,
                    split_refinements, turan_parts)
from .montecarlo import RunsEstimate, random_runs_estimate
from .numdiff import hessian_from_gradient
from .partition_sums import (QuadraticModelResult, partition_sum,
                             partitions_iter, quadratic_model)
from .proportions import (CriticalPoint, asy_fixed_proportion,
                          solve_fixed_proportion)
from .quadrature import QuadratureError, tanh_sinh
from .rng import SplitMix64
from .saddle import (SaddleProblem, SaddleResult, entropy_integral,
                     occupancy_integral, solve_saddle, variance_constant)
from .stirling import (LaurentTruncation, collision_polynomial,
                       falling_factorial, log_pm_series, pm_polynomial,
                       rising_factorial, stirling2, stirling_row)
from .tables import (RowCheck, RunReport, TableReport, table_ids,
                     verify_table, verify_tables)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticValue", "WINDOW_GAMMA", "asy_equal_window", "asy_fixed_part",
    "asy_finite_profile", "asy_turan", "asy_turan_tutte", "far_tail_bound",
    "tutte_correction",
    "BlowupBase", "C5HessianReport", "blowup_vertex_transitive",
    "c5_hessian_check",
    "PartitionSpec", "ao_bruteforce", "ao_exact", "ao_one_large_part",
    "chromatic_eval", "h_s_exact", "product_polynomial", "split_refinements",
    "turan_parts",
    "RunsEstimate", "random_runs_estimate",
    "hessian_from_gradient",
    "QuadraticModelResult", "partition_sum", "partitions_iter",
    "quadratic_model",
    "CriticalPoint", "asy_fixed_proportion", "solve_fixed_proportion",
    "QuadratureError", "tanh_sinh",
    "SplitMix64",
    "SaddleProblem", "SaddleResult", "entropy_integral", "occupancy_integral",
    "solve_saddle", "variance_constant",
    "LaurentTruncation", "collision_polynomial", "falling_factorial",
    "log_pm_series", "pm_polynomial", "rising_factorial", "stirling2",
    "stirling_row",
    "RowCheck", "RunReport", "TableReport", "table_ids", "verify_table",
    "verify_tables",
    "__version__",
]
