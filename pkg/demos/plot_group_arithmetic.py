"""
Arithmetic in the groups we can compute with
============================================

Elements of Z^d are integer tuples, elements of a free group are reduced
words, and a finite group is given by its multiplication table.
"""

from groupca import GroupContext, parse_group

# integers: addition of tuples
Z2 = GroupContext.integers(2)
print(Z2.op((1, 2), (3, -1)), Z2.inv((1, 2)))

# free group of rank two, words print with capital letters for inverses
F2 = parse_group("F2")
a, b = F2.parse_element("a"), F2.parse_element("b")
w = F2.op(F2.op(a, b), F2.inv(a))
print(F2.format_element(w), F2.format_element(F2.op(w, F2.inv(w))) or "(identity)")

# word balls grow like 1, 5, 17, 53 in F2 and like 1, 3, 5 in Z
print([len(F2.ball(r)) for r in range(4)])
print([F2.format_element(g) or "e" for g in F2.ball(1)])

# a finite group from its Cayley table
Z5 = parse_group("Z/5")
print(Z5.op(3, 4), Z5.inv(2), Z5.describe())
