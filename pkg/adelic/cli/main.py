import argparse
import sys

from mmcv import Config, DictAction

from ..utils import get_root_logger
from ..utils.errors import InsufficientPrecision, MathError, ParseError
from .commands import COMMANDS, build_command
from .formatting import dump_report, make_report
from .grammar import parse_field

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_MATH_ERROR = 3
EXIT_INSUFFICIENT_PRECISION = 4
EXIT_INTERNAL_ERROR = 5

DEFAULT_RUNTIME = dict(
    log_level='WARNING', tolerance=1e-9, seed=0, factor_seed=0)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--field', required=True, help='Q, "Q(sqrt d)" or "Fq(t;q=N)"')
    common.add_argument(
        '--json', action='store_true', help='emit one JSON document')
    common.add_argument(
        '--prec',
        type=int,
        default=None,
        help='precision of adele components given without "prec" '
        '(default: exact)')
    common.add_argument(
        '--seed', type=int, default=None, help='seed of randomized checks')
    common.add_argument('--config', help='runtime config file')
    common.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override settings of the runtime config, e.g. tolerance=1e-6')

    parser = argparse.ArgumentParser(
        prog='adelic', description='Adeles, ideles and ideal class groups')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name in COMMANDS.module_dict:
        command = build_command(name)
        p = subparsers.add_parser(name, parents=[common], help=command.help)
        command.add_arguments(p)
    return parser


def runtime_config(args):
    cfg = Config(dict(DEFAULT_RUNTIME))
    if args.config is not None:
        cfg.merge_from_dict(dict(Config.fromfile(args.config)))
    if args.cfg_options is not None:
        cfg.merge_from_dict(args.cfg_options)
    if args.seed is not None:
        cfg.seed = args.seed
    return cfg


def parse_and_run(argv=None):
    """Run one command line and print its report to standard output.

    Returns:
        int: 0 on success, 1 when a check fails, 2 on a parse error, 3 on a
            mathematical error, 4 when the precision is insufficient and 5
            on any other error.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    cfg = runtime_config(args)
    logger = get_root_logger(log_level=cfg.log_level)
    try:
        field = parse_field(args.field, factor_seed=cfg.factor_seed)
        payload, text = build_command(args.command)(field, args, cfg)
    except ParseError as e:
        logger.error(f'parse error: {e}')
        return EXIT_PARSE_ERROR
    except InsufficientPrecision as e:
        logger.error(f'insufficient precision: {e}')
        return EXIT_INSUFFICIENT_PRECISION
    except MathError as e:
        logger.error(f'{type(e).__name__}: {e}')
        return EXIT_MATH_ERROR
    except Exception as e:
        logger.error(f'internal error in {args.command}: '
                     f'{type(e).__name__}: {e}')
        return EXIT_INTERNAL_ERROR
    if args.json:
        print(dump_report(make_report(args.command, field, payload)))
    else:
        print(text)
    return EXIT_OK if payload.get('passed', True) else EXIT_CHECK_FAILED


def main():
    sys.exit(parse_and_run())
