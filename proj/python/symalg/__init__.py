"""Socle and center invariants of blocks of finite group algebras."""

import json

from . import _symalg
from ._symalg import (
    DEFAULT_SEED,
    InputError,
    ValidationError,
    __version__,
    catalog,
    field_name,
    group_order,
    multiplicative_order,
    splitting_degree,
    sweep_groups,
)

__all__ = [
    "DEFAULT_SEED",
    "InputError",
    "ValidationError",
    "__version__",
    "analyze",
    "analyze_cayley",
    "analyze_permutations",
    "catalog",
    "field_name",
    "group_order",
    "markdown",
    "multiplicative_order",
    "splitting_degree",
    "sweep_groups",
]


def analyze(group, prime, field_degree=None, seed=DEFAULT_SEED):
    """Report for a catalog group as a dict (same layout as the CLI JSON)."""
    return json.loads(_symalg.analyze(group, prime, field_degree, seed, "json"))


def markdown(group, prime, field_degree=None, seed=DEFAULT_SEED):
    return _symalg.analyze(group, prime, field_degree, seed, "md")


def analyze_cayley(table, prime, field_degree=None, seed=DEFAULT_SEED, name="cayley"):
    """Report for a group given by its Cayley table; index 0 is the identity."""
    return json.loads(_symalg.analyze_cayley(table, prime, field_degree, seed, name))


def analyze_permutations(degree, generators, prime, field_degree=None, seed=DEFAULT_SEED, name="perms"):
    return json.loads(_symalg.analyze_permutations(degree, generators, prime, field_degree, seed, name))
