"""
Coxeter Workbench - Interface Module
Command line front end, report formatting and the fixture battery.
"""

from .cli import run, build_parser
from .report_formatter import ReportFormatter, OutputFormat
from .battery import Scorecard, verify_fixtures

__all__ = [
    'run',
    'build_parser',
    'ReportFormatter',
    'OutputFormat',
    'Scorecard',
    'verify_fixtures',
]
