from .commands import COMMANDS, BaseCommand, build_command
from .grammar import (field_config, parse_adele, parse_element, parse_field,
                      parse_ideal, parse_local, parse_place)
from .main import build_parser, main, parse_and_run

__all__ = [
    'COMMANDS', 'BaseCommand', 'build_command', 'field_config', 'parse_adele',
    'parse_element', 'parse_field', 'parse_ideal', 'parse_local',
    'parse_place', 'build_parser', 'main', 'parse_and_run'
]
