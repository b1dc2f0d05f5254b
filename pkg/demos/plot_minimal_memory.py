"""
Minimal memory sets
===================

A rule may list cells it never reads. Dropping them one coordinate at a time
gives the smallest memory set, and brute force over subsets agrees.
"""

from groupca import Alphabet, GroupContext, RuleTable, builtin_rule, is_memory_subset, minimize, star
from groupca.laws import brute_memory_sets

xx = star(builtin_rule("xor"), builtin_rule("xor"))
m = minimize(xx)
print("declared:", xx.memory)
print("minimal: ", m.memory, m.table)

# every memory set contains the minimal one
for subset in brute_memory_sets(xx):
    assert set(m.memory) <= set(subset)
print(len(brute_memory_sets(xx)), "memory subsets of", len(xx.memory), "cells")

# padding with an unread cell is harmless
print(is_memory_subset(builtin_rule("majority3"), [(-1,), (0,), (1,), (7,)]))

# on Z/4 the memory set {0, 1, 2} with a table ignoring cell 1
ctx = GroupContext.cyclic(4)
t = RuleTable(ctx, Alphabet(2), (0, 1, 2), tuple(p0 & p2 for p2 in (0, 1) for p1 in (0, 1) for p0 in (0, 1)))
print(minimize(t).memory)
