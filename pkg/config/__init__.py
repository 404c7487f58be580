"""
Configuration module for the simultaneous root finder.
"""

from .settings import Settings, SolverConfig, OracleSettings, OutputSettings, Method

__all__ = ['Settings', 'SolverConfig', 'OracleSettings', 'OutputSettings', 'Method']
