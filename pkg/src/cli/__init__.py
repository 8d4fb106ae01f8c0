from .request import (ComputationRequest, RunOptions, RequestError, parse_request, build_parser,
                      parse_a_flag, parse_d_flag, COMMANDS)
from .render import ResultDocument, render_output, render_text
from .base_command import BaseCommand
from .command_engine import CommandEngine

__all__ = ['ComputationRequest', 'RunOptions', 'RequestError', 'parse_request', 'build_parser',
           'parse_a_flag', 'parse_d_flag', 'COMMANDS', 'ResultDocument', 'render_output',
           'render_text', 'BaseCommand', 'CommandEngine']
