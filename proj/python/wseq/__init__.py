"""Weight sequences, weight functions and weight matrices.

Thin layer over the compiled ``_wseq`` module: JSON payloads come back as dicts,
with the strings "+inf" / "-inf" turned into floats.
"""

import json
import math

from . import _wseq
from ._wseq import DomainError, HorizonError, catalog, cli, multi_index, omega, phi_star, reconstruct, tabulate

__all__ = [
    "DomainError",
    "HorizonError",
    "catalog",
    "check",
    "cli",
    "index",
    "multi_index",
    "omega",
    "phi_star",
    "reciprocity",
    "reconstruct",
    "run_suite",
    "tabulate",
]


def _decode(obj):
    if isinstance(obj, dict):
        return {k: _decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode(v) for v in obj]
    if obj == "+inf":
        return math.inf
    if obj == "-inf":
        return -math.inf
    return obj


def _load(text):
    return _decode(json.loads(text))


def check(condition, matrix, J=0):
    """Verdict of a condition id (e.g. "L-roumieu", "thm32-I-iii") on a matrix spec."""
    return _load(_wseq.check_json(condition, matrix, J))


def index(kind, M, N, J=0):
    """Growth index: kind is beta-L, alpha-omega1, alpha-mg or beta-omega6 (M <= N)."""
    return _load(_wseq.index_json(kind, M, N, J))


def reciprocity(which, M, N, J=0):
    """Reciprocity report for which = "L" or "mg"."""
    return _load(_wseq.reciprocity_json(which, M, N, J))


def run_suite(suite, subject, J=0):
    """Equivalence suite report; the raw text is byte-identical across runs."""
    return _load(_wseq.run_suite_json(suite, subject, J))
