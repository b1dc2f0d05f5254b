"""
Memory sets as relations between configurations
===============================================

On a finite group every relation on configurations is a finite set of pairs.
A window is a memory set exactly when agreeing on the window forces the local
rule to agree.
"""

from groupca import Alphabet, GroupContext, RuleTable, is_memory_subset
from groupca.laws import check_entourages, powerset
from groupca.uniform import basic_entourage, compose_relations, diagonal_preimage, subset

ctx, A = GroupContext.cyclic(3), Alphabet(2)
rule = RuleTable(ctx, A, (0, 1, 2), (0, 1, 1, 0, 0, 1, 1, 0))
V = diagonal_preimage(rule, ctx, A)
print("|V| =", len(V), " V o V == V:", compose_relations(V, V) == V)

for window in powerset(ctx.enumerate()):
    W = basic_entourage(ctx, A, window)
    print(window, len(W), subset(W, V), is_memory_subset(rule, window))

print(check_entourages(GroupContext.cyclic(2)))
print(check_entourages(ctx))
