"""Python access to the weave library.

Structured values are returned as plain dicts and lists. N-graphs travel as
JSON-compatible dicts and can be passed back to the functions that take a
weave.
"""

import json

from . import _weave
from ._weave import WeaveError, cartan_matrix, coxeter_number, num_criteria, positive_roots

__all__ = [
    "WeaveError",
    "cartan_matrix",
    "coxeter_number",
    "coxeter_period",
    "enumerate_counts",
    "equivariant",
    "linear",
    "mutate",
    "num_criteria",
    "positive_roots",
    "quiver",
    "run_criterion",
    "tripod",
    "y_seed",
]


def _dump(weave):
    return weave if isinstance(weave, str) else json.dumps(weave)


def enumerate_counts(type, cap=100000):
    """Seed and cluster-variable counts; B, C, F, G are enumerated folded."""
    return json.loads(_weave.enumerate_counts(type, cap))


def coxeter_period(type, cap=64):
    return json.loads(_weave.coxeter_period(type, cap))


def tripod(a, b, c):
    return json.loads(_weave.tripod(a, b, c))


def linear(n):
    return json.loads(_weave.linear(n))


def quiver(weave):
    """Intersection quiver as {"m", "n", "arrows": [[i, j, k], ...]}, 0-based."""
    return json.loads(_weave.ngraph_quiver(_dump(weave)))


def mutate(weave, k):
    """Legendrian mutation at cycle k (0-based)."""
    return json.loads(_weave.ngraph_mutate(_dump(weave), k))


def y_seed(weave, seed=1):
    """Monodromy y-seed for generic flags drawn from `seed`; y values are "p/q" strings."""
    return json.loads(_weave.y_seed(_dump(weave), seed))


def equivariant(weave, k, seed=1):
    return _weave.equivariant(_dump(weave), k, seed)


def run_criterion(id, seed=1, long_tests=False):
    return json.loads(_weave.run_criterion(id, seed, long_tests))
