"""Sortable permutations, torsion-free classes and Jordan-Hoelder checks on type A quivers.

Quivers are strings over '<' and '>' ("><" is 1 -> 2 <- 3). Permutations use one-line
notation ("4312"). Interval modules are written "[i,j)".
"""

import json

from . import _tfjhp
from ._tfjhp import (
    BoundError,
    DomainError,
    ParseError,
    binv,
    catalan_count,
    coxeter_word,
    inversions,
    is_semibrick,
    is_semibrick_linear,
    is_semibrick_shifted,
    jhp_by_count,
    length,
    semibrick_count,
    simples,
    sortables,
    sorting_factors,
    suite_names,
    support,
    tf_class,
    tf_class_count,
    torsion_free_verdict,
    verify,
)


def is_sortable(perm, quiver):
    return sorting_factors(perm, quiver) is not None


def jhp_check(perm, quiver, rule="as-defined"):
    """Per-step dagger/ddagger values and totals along the canonical reflection plan."""
    return json.loads(_tfjhp.plan_jhp_json(perm, quiver, rule))


def jhp_table(quiver, rule="as-defined"):
    return json.loads(_tfjhp.jhp_table_json(quiver, rule))


def check_wjhp(intervals, quiver, universe_dim=8, prime=2):
    return json.loads(_tfjhp.filt_check_json(list(intervals), quiver, True, universe_dim, prime))


def check_jhp(intervals, quiver, universe_dim=8, prime=2):
    return json.loads(_tfjhp.filt_check_json(list(intervals), quiver, False, universe_dim, prime))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
