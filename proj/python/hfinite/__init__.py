"""Exact U(h)-free modules, weight windows and coherent-family certificates."""

import json as _json

from . import _core
from ._core import HfiniteError, Module, dual

__all__ = [
    "HfiniteError",
    "Module",
    "admissible_word_list",
    "build_module",
    "bracket_report",
    "certify",
    "compare",
    "deg_k",
    "dual",
    "dump_module",
    "load_module",
    "normal_form",
    "tensor",
    "trace_polynomial",
]


def _text(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def _strings(values):
    return [str(v) for v in values]


def build_module(spec):
    """Build a module from a spec dict (or its JSON text)."""
    return _core.build_module_json(_text(spec))


def dump_module(module):
    return _json.loads(module.dump_json())


def load_module(dump):
    return _core.load_module_json(_text(dump))


def bracket_report(module):
    return _json.loads(module.bracket_report_json())


def certify(module, base, radius=6, probes=()):
    """Almost-coherence certificate on the window of the given radius around base."""
    return _json.loads(_core.certify_json(module, _strings(base), radius, list(probes)))


def compare(a, b, base, radius=6, threshold=None):
    return _json.loads(_core.compare_json(a, b, _strings(base), radius, threshold))


def deg_k(n, dynkin, k):
    return int(_core.deg_k(n, _strings(dynkin), k))


def tensor(module, dynkin):
    """Tensor product with the simple finite-dimensional module of the given Dynkin labels."""
    return _core.tensor(module, _strings(dynkin))


def trace_polynomial(module, base, radius, word):
    return _core.trace_polynomial(module, _strings(base), radius, list(word))


def normal_form(family, n, dynkin):
    return _core.normal_form(family, n, _strings(dynkin))


def admissible_word_list(n, dynkin, family=1):
    """Reduced words, 1-based simple reflection indices."""
    return _core.admissible_word_list(n, _strings(dynkin), family)
