"""Command-line front end: model files, configuration, reports and the ``bcn`` entry point."""

from .commands import CommandRunner, parse_index_list
from .config import AnalysisConfig
from .model_file import ModelFileError, load_model, matrix_payload
from .reports import Report

__all__ = [
    'AnalysisConfig',
    'CommandRunner',
    'ModelFileError',
    'Report',
    'load_model',
    'matrix_payload',
    'parse_index_list',
]
