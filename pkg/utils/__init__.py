"""
Utility functions for the simultaneous root finder.
"""

from .logging import Logger, default_logger
from .exporter import TraceExporter

__all__ = ['Logger', 'default_logger', 'TraceExporter']
