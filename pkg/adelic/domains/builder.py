from mmcv.utils import Registry, build_from_cfg

FIELDS = Registry('field')


def build_field(cfg, default_args=None):
    """Build a global field from a config dict.

    Examples:
        >>> build_field(dict(type='QuadraticField', d=-5)).name
        'Q(sqrt -5)'
    """
    return build_from_cfg(cfg, FIELDS, default_args)
