"""Entourages of the pro-discrete uniformity, and inference of local rules.

For a finite group every relation on ``A^G`` is a finite set of pairs, so the
inclusions used in the proofs about memory sets can be checked exactly.
Configurations are referred to by their position in
:func:`~groupca.config.all_configurations`.

:func:`infer_from_oracle` reconstructs a rule table from a black-box local
function.  The answer is exact for finite groups; for infinite groups it is a
certificate on a finite, seeded family of probe configurations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Sequence

from .automaton import RuleTable, pattern_digits
from .config import Alphabet, Configuration, FiniteSupport, all_configurations, from_pattern
from .errors import CapExceededError, InvalidElementError, OracleFaultError
from .group import Element, GroupContext
from .memory import minimize

RELATION_CAP = 64
PROBE_CAP = 4096


@dataclass(frozen=True)
class Relation:
    ctx: GroupContext
    alphabet: Alphabet
    pairs: tuple

    def __post_init__(self):
        n = self.alphabet.size ** self.ctx.order
        pairs = tuple(sorted(set(self.pairs)))
        if any(not (0 <= i < n and 0 <= j < n) for i, j in pairs):
            raise ValueError(f"relation indices must lie in 0..{n - 1}")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return pair in self._set

    @cached_property
    def _set(self):
        return frozenset(self.pairs)

    def __le__(self, other):
        return subset(self, other)


def _configs(ctx, alphabet, cap=RELATION_CAP):
    return all_configurations(ctx, alphabet, cap=cap)


def _same_space(r1: Relation, r2: Relation):
    if r1.ctx != r2.ctx or r1.alphabet.size != r2.alphabet.size:
        raise InvalidElementError("relations live on different configuration spaces")


def _kernel(ctx, alphabet, key) -> Relation:
    """All pairs ``(x, y)`` with ``key(x) == key(y)``."""
    classes = {}
    for i, x in enumerate(_configs(ctx, alphabet)):
        classes.setdefault(key(x), []).append(i)
    return Relation(ctx, alphabet, tuple(p for members in classes.values() for p in product(members, repeat=2)))


def basic_entourage(ctx: GroupContext, alphabet: Alphabet, window: Iterable[Element]) -> Relation:
    """``W_window``: pairs of configurations agreeing on ``window``."""
    window = ctx.subset(window)
    return _kernel(ctx, alphabet, lambda x: x.restrict(window).values)


def diagonal(ctx: GroupContext, alphabet: Alphabet) -> Relation:
    return basic_entourage(ctx, alphabet, ctx.enumerate())


def diagonal_preimage(f, ctx: GroupContext, alphabet: Alphabet) -> Relation:
    """``(f x f)^-1(Delta_A)`` for a rule table or any callable local function."""
    fn = f.local_eval if isinstance(f, RuleTable) else f
    return _kernel(ctx, alphabet, fn)


def compose_relations(r1: Relation, r2: Relation) -> Relation:
    """``r1 o r2 = {(x, y) : (x, z) in r1 and (z, y) in r2 for some z}``."""
    _same_space(r1, r2)
    succ = {}
    for z, y in r2.pairs:
        succ.setdefault(z, []).append(y)
    return Relation(r1.ctx, r1.alphabet, tuple((x, y) for x, z in r1.pairs for y in succ.get(z, ())))


def subset(r1: Relation, r2: Relation) -> bool:
    _same_space(r1, r2)
    return r2._set.issuperset(r1.pairs)


# -- inference from black-box local functions --------------------------------


@dataclass(frozen=True)
class LocalOracle:
    """A black-box local function ``f: A^G -> A``."""

    fn: Callable[[Configuration], int]
    ctx: GroupContext
    alphabet: Alphabet
    radius_hint: int | None = None
    pure: bool = True

    def __call__(self, x):
        return self.fn(x)


def rule_oracle(t: RuleTable) -> LocalOracle:
    return LocalOracle(t.local_eval, t.ctx, t.alphabet, radius_hint=t.radius())


@dataclass(frozen=True)
class Inferred:
    rule: RuleTable
    radius: int
    n_probes: int
    exact: bool
    ok = True

    def label(self) -> str:
        return "exact" if self.exact else f"verified on {self.n_probes} probes"


@dataclass(frozen=True)
class NotInferred:
    """No window up to ``radius`` determines the oracle; ``witness`` proves it."""

    radius: int
    witness: tuple
    values: tuple
    n_probes: int
    ok = False


class _Memo:
    """Queries each configuration twice on first sight to catch nondeterminism."""

    def __init__(self, oracle: LocalOracle):
        self.oracle = oracle
        self.cache = {}

    def __call__(self, x):
        try:
            return self.cache[x]
        except KeyError:
            pass
        a, b = self.oracle(x), self.oracle(x)
        if a != b:
            raise OracleFaultError(f"oracle returned {a} and then {b} on {x!r}")
        self.oracle.alphabet.check(a)
        self.cache[x] = a
        return a


def _random_probes(ctx, k, window, region, pattern, count, rng):
    fixed = dict(zip(window, pattern))
    outside = [g for g in region if g not in fixed]
    for _ in range(count):
        values = {g: rng.randrange(k) for g in outside}
        values.update(fixed)
        yield FiniteSupport(ctx, rng.randrange(k), values)


def _probe_family(ctx, alphabet, r, window, n_random, rng, cap):
    k = alphabet.size
    if ctx.is_finite:
        yield from all_configurations(ctx, alphabet, cap=cap)
        return
    margin = ctx.ball(r + 1)
    exhaustive = margin if k ** len(margin) <= cap else window
    if k ** len(exhaustive) > cap:
        raise CapExceededError("probe patterns", k ** len(exhaustive), cap)
    for values in product(range(k), repeat=len(exhaustive)):
        yield FiniteSupport(ctx, 0, zip(exhaustive, values))
    region = ctx.ball(max(3, r + 1))
    for pattern in product(range(k), repeat=len(window)):
        yield from _random_probes(ctx, k, window, region, pattern, n_random, rng)


def infer_from_oracle(
    f: LocalOracle, r_max: int, n_random: int = 64, seed: int = 0, cap: int = PROBE_CAP
) -> Inferred | NotInferred:
    """Find the smallest ball that determines ``f`` and read off its rule table.

    For each radius ``r`` the probe family is checked for two configurations
    that agree on ``ball(r)`` but receive different values.  The first radius
    without such a pair yields the table, evaluated on configurations that
    realise each pattern with background 0, and then minimized.
    """
    ctx, alphabet = f.ctx, f.alphabet
    query = _Memo(f)
    rng = random.Random(seed)
    failure = None
    for r in range(r_max + 1):
        window = ctx.ball(r)
        seen = {}
        n_probes = 0
        conflict = None
        for x in _probe_family(ctx, alphabet, r, window, n_random, rng, cap):
            n_probes += 1
            key = x.restrict(window).values
            value = query(x)
            first = seen.setdefault(key, (value, x))
            if first[0] != value:
                conflict = ((first[1], x), (first[0], value))
                break
        if conflict is not None:
            failure = NotInferred(r, conflict[0], conflict[1], n_probes)
            continue
        table = []
        for digits in pattern_digits(alphabet.size, len(window)).tolist():
            table.append(query(from_pattern(ctx, dict(zip(window, digits)), 0)))
        rule = RuleTable(ctx, alphabet, window, tuple(table))
        return Inferred(minimize(rule), r, n_probes, exact=ctx.is_finite)
    return failure


# -- equivariance ------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    h: Element
    x: Configuration
    g: Element
    shifted_then_mapped: int
    mapped_then_shifted: int


@dataclass(frozen=True)
class EquivarianceReport:
    checked: int
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def equivariance_check(
    T: Callable[[Configuration], Configuration],
    probes: Sequence[Configuration],
    window: Sequence[Element],
    shifts: Sequence[Element] | None = None,
) -> EquivarianceReport:
    """Check ``T(h.x)(g) == T(x)(h^-1 g)`` for probes ``x``, ``h`` in ``shifts``, ``g`` in ``window``.

    ``shifts`` defaults to ``window``.  Stops at the first violation.
    """
    shifts = tuple(window) if shifts is None else tuple(shifts)
    checked = 0
    for x in probes:
        ctx = x.ctx
        tx = T(x)
        for h in shifts:
            thx = T(x.shift(h))
            hinv = ctx.inv(h)
            for g in window:
                checked += 1
                lhs, rhs = thx.at(g), tx.at(ctx.op(hinv, g))
                if lhs != rhs:
                    return EquivarianceReport(checked, Counterexample(h, x, g, lhs, rhs))
    return EquivarianceReport(checked)
