"""Subshifts of finite type and rules that preserve them.

A configuration ``x`` lies in the subshift ``X`` when no forbidden pattern
``q`` occurs in it, i.e. there is no ``g`` with ``x(g s) == q(s)`` for every
``s`` in the domain of ``q``.  Membership is decided exactly for every
configuration kind the library can represent:

* full tables over a finite group scan every ``g``;
* periodic configurations over Z^d scan one period box;
* finitely supported configurations over an infinite group scan the ``g``
  whose window meets the support, plus the all-background case.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .automaton import RuleTable, star
from .config import (
    Alphabet,
    Configuration,
    FiniteSupport,
    FullTable,
    Pattern,
    Periodic,
    pattern_from_json,
    pattern_to_json,
)
from .errors import (
    ClosureWitnessError,
    DomainError,
    InvalidProbeError,
    UnsupportedError,
    UnsupportedExactnessError,
)
from .group import GroupContext


@dataclass(frozen=True)
class Sft:
    ctx: GroupContext
    alphabet: Alphabet
    forbidden: tuple = ()

    def __post_init__(self):
        unique = []
        for q in self.forbidden:
            if self.ctx.subset(q.domain) != tuple(q.domain):
                raise ValueError(f"forbidden pattern domain is not canonical: {q.domain!r}")
            for a in q.values:
                self.alphabet.check(a)
            if q not in unique:
                unique.append(q)
        object.__setattr__(self, "forbidden", tuple(unique))


def sft_from_json(ctx: GroupContext, alphabet: Alphabet, data: dict) -> Sft:
    return Sft(ctx, alphabet, tuple(pattern_from_json(ctx, q) for q in data.get("forbidden", [])))


def sft_to_json(X: Sft) -> dict:
    return {"forbidden": [pattern_to_json(X.ctx, q) for q in X.forbidden]}


def golden_mean(ctx: GroupContext | None = None) -> Sft:
    """Binary sequences on Z with no two adjacent ones."""
    ctx = ctx or GroupContext.integers(1)
    return Sft(ctx, Alphabet(2), (Pattern(((0,), (1,)), (1, 1)),))


def _occurs(x: Configuration, q: Pattern, g) -> bool:
    op = x.ctx.op
    return all(x.at(op(g, s)) == v for s, v in zip(q.domain, q.values))


def _positions(x: Configuration, q: Pattern) -> Iterable:
    ctx = x.ctx
    if isinstance(x, FullTable):
        return ctx.enumerate()
    if isinstance(x, Periodic):
        return x.domain()
    if isinstance(x, FiniteSupport):
        if ctx.is_finite:
            return ctx.enumerate()
        inverses = [ctx.inv(s) for s in q.domain]
        return {ctx.op(t, si) for t in x.support_set for si in inverses}
    raise UnsupportedExactnessError(f"membership is not decidable for {type(x).__name__}")


def find_occurrence(X: Sft, x: Configuration):
    """First ``(g, q)`` with forbidden ``q`` occurring at ``g`` in ``x``, else ``None``."""
    if x.ctx != X.ctx:
        raise DomainError("configuration and subshift live on different groups")
    for q in X.forbidden:
        if not q.domain:
            return x.ctx.identity, q
        if (
            isinstance(x, FiniteSupport)
            and not x.ctx.is_finite
            and all(v == x.background for v in q.values)
        ):
            # some translate of the domain misses the finite support
            return next(_far_position(x, q)), q
        for g in _positions(x, q):
            if _occurs(x, q, g):
                return g, q
    return None


def _far_position(x: FiniteSupport, q: Pattern):
    ctx = x.ctx
    r = 0
    taken = set(x.support_set)
    while True:
        for g in ctx.ball(r):
            if not any(ctx.op(g, s) in taken for s in q.domain):
                yield g
        r += 1


def member(X: Sft, x: Configuration) -> bool:
    return find_occurrence(X, x) is None


def periodic_members(X: Sft, period_max: int = 4) -> list:
    """Members of ``X`` on Z given by a repeated word of length at most ``period_max``."""
    if X.ctx != GroupContext.integers(1):
        raise UnsupportedError("periodic probes are generated on Z only")
    out = []
    for p in range(1, period_max + 1):
        for cells in product(range(X.alphabet.size), repeat=p):
            x = Periodic(X.ctx, (p,), cells)
            if member(X, x):
                out.append(x)
    return out


def closure_check(t: RuleTable, X: Sft, probes: Sequence[Configuration]):
    """First probe ``x`` with ``T(x)`` outside ``X``, or ``None`` if all stay inside.

    ``T(x)`` is the configuration ``(f_T(g^-1 . x))_g``.
    """
    for x in probes:
        if not member(X, x):
            raise InvalidProbeError(x)
    for x in probes:
        if not member(X, t.apply(x)):
            return x
    return None


def star_restricted(t1: RuleTable, t2: RuleTable, X: Sft, probes: Sequence[Configuration]) -> RuleTable:
    """``t1 * t2`` for two rules mapping ``X`` into itself, re-verified on ``probes``."""
    for t in (t1, t2):
        bad = closure_check(t, X, probes)
        if bad is not None:
            raise DomainError(f"rule does not map the probe {bad!r} into the subshift")
    composite = star(t1, t2)
    bad = closure_check(composite, X, probes)
    if bad is not None:
        raise ClosureWitnessError(bad)
    return composite
