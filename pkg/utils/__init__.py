"""
Utility modules for the fully optimal spanning tree toolkit.
"""

from utils.config import SolverConfig, get_config
from utils.logging_setup import configure_logging

__all__ = ['SolverConfig', 'get_config', 'configure_logging']
