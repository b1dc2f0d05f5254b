"""
Composing local rules without touching configurations
=====================================================

The product of two local rules is computed from their tables alone. We check
that it agrees with composing the global maps.
"""

from groupca import builtin_rule, compose_global, equals, minimize, star

xor = builtin_rule("xor")
rule110 = builtin_rule("rule110")

# xor composed with itself only looks at cells 0 and 2
both = star(xor, xor)
print(both.memory, "->", minimize(both).memory)

# the table product agrees with the composed global maps
print(equals(star(rule110, xor), compose_global(rule110, xor)))

# composition is associative but not commutative
print(equals(star(star(xor, rule110), xor), star(xor, star(rule110, xor))))
print(equals(star(xor, rule110), star(rule110, xor)))
