import logging

from mmcv.utils import get_logger


def get_root_logger(log_file=None, log_level=logging.INFO):
    """Get the root logger of the package.

    The logger writes to standard error (and to ``log_file`` if given), so
    command reports on standard output stay clean.

    Args:
        log_file (str, optional): File path of log. Defaults to None.
        log_level (int): The level of logger. Defaults to logging.INFO.

    Returns:
        :obj:`logging.Logger`: The obtained logger.
    """
    return get_logger('adelic', log_file, log_level)
