"""Trees with marked leaves: the pointed-magma operations and the maps between them.

Unmarked leaves stand for a fixed constant, so a degree 1 element can hide a
large tree.
"""
from operadtower.lsym import check_operad_map, end_function, end_view
from operadtower.treeop import V0_VIEW, V_VIEW, parse_v
from operadtower.zoperad import (Z_VIEW, free_extend_Z, map_V_to_Z, parse_z, project_Z_to_V0,
                                 z_decompose, z_enumerate, z_gamma)

# degree counts how many leaves are inputs, internal degree counts all leaves
for x in z_enumerate(1, 3):
    print(x, "degree", x.degree, "internal", x.internal)

x = parse_z("[((1,1),(1,1));{2,3,4}]")
print("split at the root:", *z_decompose(x))

print(z_gamma(parse_z("[(1,1);{1,2}]"), [parse_z("[1;{1}]"), parse_z("[1;{}]")]))

# the tower V -> Z -> V0: marking every leaf, then letting the constant act as a unit
t = parse_v("((1,1),1)")
print(map_V_to_Z(t), project_Z_to_V0(map_V_to_Z(t)))
print(check_operad_map(map_V_to_Z, V_VIEW, Z_VIEW, 4).summary()["total"], "instances checked")

# a constant and a binary operation determine an evaluator on all of Z
end = end_view((0, 1))
one = end_function((0, 1), 0, lambda: 1)
conj = end_function((0, 1), 2, lambda a, b: a & b)
g = free_extend_Z(end, one, conj)
print(g(parse_z("[((1,1),1);{2}]")), check_operad_map(g, Z_VIEW, end, 3).ok)
print(project_Z_to_V0(parse_z("[((1,1),(1,1));{1,4}]")), V0_VIEW.name)
