"""
Command-line front end for the simultaneous root finder.
"""

from .app import build_arg_parser, main
from .jobs import JobSpec, UsageError, parse_complex, parse_complex_list

__all__ = ['build_arg_parser', 'main', 'JobSpec', 'UsageError', 'parse_complex', 'parse_complex_list']
