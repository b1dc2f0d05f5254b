"""Seeded property suites for the algebra of cellular automata.

Each ``check_*`` function runs one family of laws and returns a
:class:`Report`; the command-line ``verify`` subcommand and the test suite
both drive these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import chain, combinations, product

from .automaton import (
    RuleTable,
    builtin_rule,
    compose_global,
    equals,
    identity_rule,
    pattern_digits,
    star,
)
from .config import Alphabet, Configuration, FiniteSupport, FullTable, Periodic, from_pattern
from .group import GroupContext
from .memory import dependence_set, is_memory_subset, minimize
from .uniform import basic_entourage, compose_relations, diagonal_preimage, equivariance_check, subset


@dataclass
class Report:
    name: str
    passed: int = 0
    total: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, detail=None):
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 5:
            self.failures.append(detail)

    def __str__(self):
        return f"{self.name}: {self.passed}/{self.total} pass"


# -- random data ---------------------------------------------------------------

Z = GroupContext.integers(1)
F2 = GroupContext.free(2)


def sample_families():
    """``(ctx, memory pool, largest memory size)`` for the random rule suites."""
    fams = [(GroupContext.cyclic(n), tuple(range(n)), 3) for n in range(1, 7)]
    fams.append((Z, Z.ball(2), 3))
    fams.append((F2, F2.ball(1), 2))
    return fams


def random_rule(rng: random.Random, ctx: GroupContext, k: int, pool, max_size: int) -> RuleTable:
    size = rng.randint(0, min(max_size, len(pool)))
    memory = ctx.subset(rng.sample(list(pool), size))
    table = tuple(rng.randrange(k) for _ in range(k**size))
    return RuleTable(ctx, Alphabet(k), memory, table)


def random_setting(rng: random.Random):
    ctx, pool, max_size = rng.choice(sample_families())
    k = rng.choice((2, 3))
    if k == 3 and not ctx.is_finite:
        max_size = min(max_size, 2)
    return ctx, k, pool, max_size


def random_configuration(rng: random.Random, ctx: GroupContext, k: int) -> Configuration:
    if ctx.is_finite:
        return FullTable(ctx, tuple(rng.randrange(k) for _ in range(ctx.order)))
    region = ctx.ball(3)
    support = {g: rng.randrange(k) for g in rng.sample(list(region), rng.randint(0, len(region)))}
    return FiniteSupport(ctx, rng.randrange(k), support)


# -- suites -------------------------------------------------------------------


def check_theorem_a(samples: int = 1000, seed: int = 42) -> Report:
    """Symbolic ``*`` against composition of global maps."""
    rng = random.Random(seed)
    report = Report("theoremA")
    for _ in range(samples):
        ctx, k, pool, size = random_setting(rng)
        t1 = random_rule(rng, ctx, k, pool, size)
        t2 = random_rule(rng, ctx, k, pool, size)
        report.record(equals(star(t1, t2), compose_global(t1, t2)), (t1, t2))
    return report


def check_monoid(samples: int = 300, seed: int = 42) -> Report:
    rng = random.Random(seed)
    report = Report("monoid")
    for _ in range(samples):
        ctx, k, pool, size = random_setting(rng)
        size = min(size, 2)
        t1, t2, t3 = (random_rule(rng, ctx, k, pool, size) for _ in range(3))
        report.record(equals(star(star(t1, t2), t3), star(t1, star(t2, t3))), ("assoc", t1, t2, t3))
        p1 = identity_rule(ctx, Alphabet(k))
        left, right = minimize(star(p1, t1)), minimize(star(t1, p1))
        report.record(left == minimize(t1) and right == minimize(t1), ("identity", t1))
    return report


def _assemble(ctx: GroupContext, values: dict) -> Configuration:
    # a configuration agreeing with ``values`` on its keys
    return from_pattern(ctx, values, 0)


def homomorphism_chain(t1: RuleTable, t2: RuleTable, x: Configuration) -> list:
    """Every side of the chain ``f_{T1 o T2}(x) = ... = (f_T1 * f_T2)(x)``."""
    ctx = t1.ctx
    e = ctx.identity
    s1 = t1.memory
    composite = compose_global(t1, t2)
    t2x = t2.apply(x)
    return [
        composite.local_eval(x),
        composite.apply(x).at(e),
        t1.apply(t2x).at(e),
        t1.local_eval(t2x),
        t1.local_eval(_assemble(ctx, {g: t2x.at(g) for g in s1})),
        t1.local_eval(_assemble(ctx, {g: t2x.shift(ctx.inv(g)).at(e) for g in s1})),
        t1.local_eval(_assemble(ctx, {g: t2.apply(x.shift(ctx.inv(g))).at(e) for g in s1})),
        t1.local_eval(_assemble(ctx, {g: t2.local_eval(x.shift(ctx.inv(g))) for g in s1})),
        star(t1, t2).local_eval(x),
    ]


def check_homomorphism_chain(samples: int = 100, seed: int = 42) -> Report:
    rng = random.Random(seed)
    report = Report("homomorphism")
    for _ in range(samples):
        ctx, k, pool, size = random_setting(rng)
        t1 = random_rule(rng, ctx, k, pool, size)
        t2 = random_rule(rng, ctx, k, pool, size)
        x = random_configuration(rng, ctx, k)
        sides = homomorphism_chain(t1, t2, x)
        for i in range(len(sides) - 1):
            report.record(sides[i] == sides[i + 1], (i, t1, t2, x))
    return report


def powerset(items):
    items = tuple(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def brute_memory_sets(t: RuleTable) -> list:
    """Subsets of the memory set on which the table is determined, by pairwise comparison."""
    k, memory = t.k, t.memory
    patterns = [dict(zip(memory, d)) for d in pattern_digits(k, len(memory)).tolist()]
    found = []
    for omega in powerset(memory):
        ok = all(
            t.table[i] == t.table[j]
            for i, j in product(range(len(patterns)), repeat=2)
            if all(patterns[i][s] == patterns[j][s] for s in omega)
        )
        if ok:
            found.append(frozenset(omega))
    return found


def corollary_b_rules(ctx: GroupContext, k: int = 2, max_size: int = 3, sampled: int = 500, seed: int = 42):
    """All tables for memory sets smaller than ``max_size``, plus samples at ``max_size``."""
    rng = random.Random(seed)
    A = Alphabet(k)
    elements = ctx.enumerate()
    for size in range(max_size):
        for memory in combinations(elements, size):
            for table in product(range(k), repeat=k**size):
                yield RuleTable(ctx, A, memory, table)
    top = list(combinations(elements, max_size))
    for _ in range(sampled):
        memory = rng.choice(top)
        yield RuleTable(ctx, A, memory, tuple(rng.randrange(k) for _ in range(k**max_size)))


def check_corollary_b(
    ctx: GroupContext | None = None, k: int = 2, max_size: int = 3, sampled: int = 500, seed: int = 42
) -> Report:
    """Dependence set against brute-force memory subsets."""
    ctx = ctx or GroupContext.cyclic(4)
    report = Report("corollaryB")
    for t in corollary_b_rules(ctx, k, max_size, sampled, seed):
        dep = frozenset(dependence_set(t))
        memory_sets = brute_memory_sets(t)
        meet = frozenset(t.memory).intersection(*memory_sets)
        closed = all(a & b in memory_sets for a in memory_sets for b in memory_sets)
        agrees = all(is_memory_subset(t, om) == (frozenset(om) in memory_sets) for om in powerset(t.memory))
        ok = (
            dep in memory_sets
            and dep == meet
            and all(dep <= m for m in memory_sets)
            and closed
            and agrees
            and frozenset(minimize(t).memory) == dep
        )
        report.record(ok, t)
    return report


def check_entourages(ctx: GroupContext, k: int = 2) -> Report:
    """Entourage inclusions for every rule whose memory set is the whole group."""
    A = Alphabet(k)
    G = ctx.enumerate()
    report = Report(f"entourages[{ctx.describe()}]")
    subsets = [frozenset(s) for s in powerset(G)]
    W = {s: basic_entourage(ctx, A, s) for s in subsets}
    products = {(s, t): compose_relations(W[s], W[t]) for s in subsets for t in subsets}
    meets_ok = all(subset(W[s & t], products[s, t]) for s in subsets for t in subsets)
    for table in product(range(k), repeat=k ** len(G)):
        rule = RuleTable(ctx, A, G, table)
        V = diagonal_preimage(rule, ctx, A)
        VV = compose_relations(V, V)
        mem = {s for s in subsets if subset(W[s], V)}
        ok = (
            meets_ok
            and subset(W[frozenset(G)], V)
            and subset(VV, V)
            and all(subset(products[s, t], VV) for s in mem for t in mem)
            and all(is_memory_subset(rule, s) == (s in mem) for s in subsets)
        )
        report.record(ok, rule)
    return report


BUILTINS = ("identity", "const:0", "const:1", "xor", "majority3", "rule110", "shift_right")


def equivariance_probes(rng: random.Random, n: int, ctx: GroupContext = Z, k: int = 2) -> list:
    probes = [random_configuration(rng, ctx, k) for _ in range(n)]
    if ctx == Z:
        probes += [Periodic(ctx, (p,), tuple(rng.randrange(k) for _ in range(p))) for p in (1, 2, 3, 5)]
    return probes


def check_equivariance(samples: int = 20, seed: int = 42) -> Report:
    rng = random.Random(seed)
    report = Report("equivariance")
    probes = equivariance_probes(rng, samples)
    for name in BUILTINS:
        rule = builtin_rule(name)
        result = equivariance_check(rule.apply, probes, Z.ball(4), Z.ball(2))
        report.record(result.passed, (name, result.counterexample))
    return report
