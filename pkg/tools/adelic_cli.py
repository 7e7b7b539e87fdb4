import sys

from adelic.cli import parse_and_run


def main():
    sys.exit(parse_and_run(sys.argv[1:]))


if __name__ == '__main__':
    main()
