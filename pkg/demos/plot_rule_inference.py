"""
Recovering a rule from a black box
==================================

Given only a function that reads a configuration and returns the symbol at
the origin, we search for the smallest radius that explains it. On Z this
is a certificate over the probes used. On a finite group it is exact.
"""

from groupca import Alphabet, GroupContext, RuleTable, builtin_rule, infer_from_oracle, rule_oracle
from groupca.config import FiniteSupport
from groupca.uniform import LocalOracle, equivariance_check

result = infer_from_oracle(rule_oracle(builtin_rule("rule110")), r_max=2, seed=1)
print(result.radius, result.label(), result.rule.table)

ctx = GroupContext.cyclic(6)
hidden = RuleTable(ctx, Alphabet(2), (1, 5), (0, 1, 1, 1))
exact = infer_from_oracle(rule_oracle(hidden), r_max=3)
print(exact.radius, exact.label(), exact.rule.memory)

# a function that reads a cell two steps away cannot be explained at radius 1
Z = GroupContext.integers(1)
far = LocalOracle(lambda x: x.at((2,)), Z, Alphabet(2))
miss = infer_from_oracle(far, r_max=1)
print(miss.ok, miss.values)

# a map that treats the origin specially is not shift equivariant


def flip_origin(x):
    return FiniteSupport(Z, x.background, dict(x.support) | {(0,): 1 - x.at((0,))})


report = equivariance_check(flip_origin, [FiniteSupport.delta(Z)], Z.ball(2), shifts=[(1,)])
c = report.counterexample
print(report.passed, "shift", c.h, "cell", c.g, c.shifted_then_mapped, "!=", c.mapped_then_shifted)
