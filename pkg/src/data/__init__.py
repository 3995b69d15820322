"""
Taucheck Data

File formats, corpus algebras, the enumeration oracle and report records.
"""

from .corpus import CorpusFamily, CorpusSpec, standard_corpus
from .enumerate import enumerate_modules, enumerate_support_tau_tilting, enumerate_tau_tilting
from .formats import dump_algebra, dump_module, load_algebra, load_module, parse_algebra, parse_module
from .reports import Report

__all__ = [
    'CorpusFamily',
    'CorpusSpec',
    'standard_corpus',
    'enumerate_modules',
    'enumerate_tau_tilting',
    'enumerate_support_tau_tilting',
    'parse_algebra',
    'load_algebra',
    'dump_algebra',
    'parse_module',
    'load_module',
    'dump_module',
    'Report',
]
