from .checks import (CHECKS, BaseCheck, CheckResult, build_check,
                     default_bound, random_finite_adele, random_ideal,
                     random_idele)
from .selfcheck import DEFAULT_CHECKS, run_selfcheck

__all__ = [
    'CHECKS', 'BaseCheck', 'CheckResult', 'build_check', 'default_bound',
    'random_finite_adele', 'random_ideal', 'random_idele', 'DEFAULT_CHECKS',
    'run_selfcheck'
]
