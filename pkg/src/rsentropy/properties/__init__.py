from .generators import rand_dist, rand_state
from .suites import SUITES, ParamGrid, SuiteReport, run_all, run_suite

__all__ = ["SUITES", "ParamGrid", "SuiteReport", "rand_dist", "rand_state", "run_all", "run_suite"]
