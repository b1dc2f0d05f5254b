"""Dependence analysis and minimal memory sets.

Memory sets of a cellular automaton are closed under intersection, so the set
of coordinates a rule actually depends on is itself a memory set and is the
smallest one.  :func:`minimize` computes it coordinate by coordinate, and the
resulting table is the canonical form used for equality of automata.
"""

from __future__ import annotations

import numpy as np

from .automaton import RuleTable
from .errors import ConsistencyError, DomainError
from .group import Element, FiniteSubset

CanonicalForm = RuleTable


def _cube(t: RuleTable) -> np.ndarray:
    # axis i <-> memory[i], since memory[0] is the least significant digit
    m = len(t.memory)
    return t.array.reshape((t.k,) * m, order="F") if m else t.array.reshape(())


def _live_axes(t: RuleTable) -> list:
    cube = _cube(t)
    live = []
    for i in range(cube.ndim):
        first = np.take(cube, [0], axis=i)
        live.append(bool(np.any(cube != first)))
    return live


def depends_on(t: RuleTable, s: Element) -> bool:
    """Whether changing the symbol at ``s`` can change the output of ``t``."""
    if s not in t.memory:
        raise DomainError(f"{s!r} is not in the memory set")
    return _live_axes(t)[t.memory.index(s)]


def dependence_set(t: RuleTable) -> FiniteSubset:
    return tuple(s for s, live in zip(t.memory, _live_axes(t)) if live)


def _project(t: RuleTable, keep: list, fill: int) -> np.ndarray:
    cube = _cube(t)
    index = tuple(slice(None) if live else fill for live in keep)
    return np.asarray(cube[index]).reshape(-1, order="F")


def minimize(t: RuleTable) -> CanonicalForm:
    """Restrict ``t`` to its dependence set.

    Dead coordinates are fixed to symbol 0; every call cross-checks the
    projection against the fill ``k - 1``.
    """
    live = _live_axes(t)
    if all(live):
        return t
    table = _project(t, live, 0)
    if t.k > 1 and not np.array_equal(table, _project(t, live, t.k - 1)):
        raise ConsistencyError("projection depends on the value of a dead coordinate")
    memory = tuple(s for s, keep in zip(t.memory, live) if keep)
    return RuleTable(t.ctx, t.alphabet, memory, tuple(table.tolist()))


def extend_rule(t: RuleTable, superset) -> RuleTable:
    """The same automaton written over a larger memory set (new coordinates ignored)."""
    memory = t.ctx.subset(tuple(t.memory) + tuple(superset))
    if memory == t.memory:
        return t
    from .automaton import pattern_digits

    digits = pattern_digits(t.k, len(memory))
    cols = [memory.index(s) for s in t.memory]
    index = digits[:, cols] @ np.array(t._weights, dtype=np.int64)
    return RuleTable(t.ctx, t.alphabet, memory, tuple(t.array[index].tolist()))


def is_memory_subset(t: RuleTable, subset) -> bool:
    """Whether ``subset`` is a memory set of ``t``.

    Equivalently: ``mu(p) == mu(q)`` whenever ``p`` and ``q`` agree on ``subset``.
    """
    subset = set(subset)
    t = extend_rule(t, subset)
    return all(s in subset for s in dependence_set(t))


def restrict_rule(t: RuleTable, subset) -> RuleTable:
    """Re-express ``t`` over the memory set ``subset``."""
    subset = t.ctx.subset(subset)
    if not is_memory_subset(t, subset):
        raise DomainError(f"{subset!r} is not a memory set of this rule")
    wide = extend_rule(t, subset)
    keep = [s in subset for s in wide.memory]
    return RuleTable(t.ctx, t.alphabet, subset, tuple(_project(wide, keep, 0).tolist()))
