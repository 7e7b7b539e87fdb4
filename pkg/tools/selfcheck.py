import argparse
import sys

from mmcv import Config, DictAction

from adelic import __version__
from adelic.apis import run_selfcheck
from adelic.utils import collect_env, get_root_logger


def parse_args():
    parser = argparse.ArgumentParser(
        description='Run a randomized self-check suite on one field')
    parser.add_argument('config', help='self-check config file path')
    parser.add_argument('--seed', type=int, default=None, help='random seed')
    parser.add_argument('--log-file', help='also write the log to this file')
    parser.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override some settings in the used config, the key-value pair '
        'in xxx=yyy format will be merged into config file')
    return parser.parse_args()


def main():
    args = parse_args()

    cfg = Config.fromfile(args.config)
    if args.cfg_options is not None:
        cfg.merge_from_dict(args.cfg_options)
    if args.seed is not None:
        cfg.seed = args.seed

    logger = get_root_logger(log_file=args.log_file, log_level=cfg.log_level)
    env_info = '\n'.join(f'{k}: {v}' for k, v in collect_env().items())
    dash_line = '-' * 60 + '\n'
    logger.info('Environment info:\n' + dash_line + env_info + '\n' +
                dash_line)
    logger.info(f'adelic {__version__}, config {args.config}')

    results = run_selfcheck(cfg, logger)
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.error(f'failed checks: {", ".join(failed)}')
        sys.exit(1)
    logger.info(f'all {len(results)} checks passed')


if __name__ == '__main__':
    main()
