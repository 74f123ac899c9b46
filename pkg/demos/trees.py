"""Binary trees as operations: enumeration, substitution and the free property.

Run with ``python demos/trees.py``.
"""
from operadtower.lsym import end_function, end_view
from operadtower.treeop import PAIR, ZERO, V_VIEW, free_extend_V, parse_v, v0_dot, v_enumerate, v_gamma

# degree n trees are the ways to bracket n inputs; the counts are Catalan numbers
for n in range(1, 8):
    print(n, len(v_enumerate(n)))

print([str(t) for t in v_enumerate(3)])

# gamma grafts the i-th argument onto the i-th leaf
outer = parse_v("(1,1)")
print(v_gamma(outer, [parse_v("(1,1)"), parse_v("1")]))

# adding a zero tree gives the unital version, where zero cancels
print(v0_dot(ZERO, PAIR), v0_dot(PAIR, ZERO))

# a tree is a formula in one binary operation, so picking XOR on bits
# extends uniquely to every tree
end = end_view((0, 1))
xor = end_function((0, 1), 2, lambda a, b: a ^ b)
evaluate = free_extend_V(end, xor)
for t in v_enumerate(3):
    print(t, evaluate(t))
