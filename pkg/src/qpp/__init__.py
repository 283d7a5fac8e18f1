"""Exact q-series identity verification for overpartition-pair generating functions."""

from .errors import QppError
from .identities import IdentityReport, check_ids, run_all, run_check
from .series import BivarSeries, FracQSeries, LaurentPoly, QSeries

__all__ = [
    "BivarSeries",
    "FracQSeries",
    "IdentityReport",
    "LaurentPoly",
    "QSeries",
    "QppError",
    "check_ids",
    "run_all",
    "run_check",
]
