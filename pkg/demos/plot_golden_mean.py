"""
Rules restricted to the golden mean shift
=========================================

The golden mean shift forbids two adjacent ones. A rule acts on it when it
never creates such a pair. We use every periodic point of period at most 4
as a probe.
"""

from groupca import Alphabet, GroupContext, builtin_rule, closure_check, constant_rule, golden_mean, member, star_restricted
from groupca.config import Periodic
from groupca.subshift import periodic_members

Z = GroupContext.integers(1)
X = golden_mean()
probes = periodic_members(X, 4)
print(len(probes), "periodic points")
print(member(X, Periodic(Z, (3,), (1, 0, 0))), member(X, Periodic(Z, (3,), (1, 1, 0))))

shift = builtin_rule("shift_right")
print("shift closed:", closure_check(shift, X, probes) is None)
bad = closure_check(builtin_rule("xor"), X, probes)
print("xor escapes on", bad.to_json())

composite = star_restricted(shift, constant_rule(Z, Alphabet(2), 0), X, probes)
print(composite.memory, composite.table)
