import random

from ..domains import GlobalField, build_field
from ..utils import get_root_logger
from .checks import build_check

DEFAULT_CHECKS = [
    dict(type='ValuationAxioms', samples=100),
    dict(type='RepresentativeIndependence', samples=100),
    dict(type='Uniformizers'),
    dict(type='FactorizationRoundTrip', samples=50),
    dict(type='LocalizationRoundTrip', samples=50),
    dict(type='SurjectivityAndKernel', samples=50),
    dict(type='ClassGroupQuotient', samples=20),
]


def _field_defaults(field_cfg, cfg):
    # only polynomial factorization over Fq is randomized
    factor_seed = cfg.get('factor_seed', None)
    if factor_seed is None or field_cfg['type'] != 'FunctionField':
        return None
    return dict(factor_seed=factor_seed)


def run_selfcheck(cfg, logger=None):
    """Run the checks of a self-check config.

    Args:
        cfg (Config | dict): Needs ``field`` (a field config or a built
            field); optional ``checks`` (list of check configs), ``seed``
            (default 0), ``factor_seed`` (passed to Fq(t) fields) and
            ``log_level``.
        logger (logging.Logger, optional): Defaults to the root logger.

    Returns:
        list[CheckResult]: One result per check, in config order.
    """
    if logger is None:
        logger = get_root_logger(log_level=cfg.get('log_level', 'INFO'))
    field = cfg['field']
    if not isinstance(field, GlobalField):
        field = build_field(field, _field_defaults(field, cfg))
    seed = cfg.get('seed', 0)
    rng = random.Random(seed)
    logger.info(f'Self-check of {field} with seed {seed}')
    results = []
    for check_cfg in cfg.get('checks', None) or DEFAULT_CHECKS:
        check = build_check(check_cfg)
        result = check(field, rng)
        verdict = 'passed' if result.passed else f'FAILED ({result.detail})'
        logger.info(f'{result.name}: {verdict} on {result.samples} samples')
        results.append(result)
    return results
