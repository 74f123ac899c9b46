"""Adding permutations to a plain operad, and the block permutations that make it work."""
from operadtower.lsym import (LElement, adjoint_lift, binary_operations, check_operad_map,
                              check_sym_axioms, end_view, l_act, l_embed, l_gamma, l_view)
from operadtower.perm import Permutation, block_permutation, direct_sum, transposition
from operadtower.treeop import LEAF, PAIR, V_VIEW, free_extend_V, v_gamma

t = transposition()
# swap two blocks of sizes 2 and 1
print(block_permutation(t, [2, 1]))
print(direct_sum([t, Permutation((1,))]))

# an element is a tree together with a relabelling of its inputs
x = LElement(PAIR, t)
print(x, l_act(x, t))
print(l_gamma(x, [l_embed(PAIR), l_embed(LEAF)], v_gamma))

lv = l_view(V_VIEW)
report = check_sym_axioms(lv, 3)
print(report.to_text())

# any evaluator of plain trees lifts to the symmetric version
end = end_view((0, 1))
implies = binary_operations((0, 1))[13]
lifted = adjoint_lift(free_extend_V(end, implies))
print(implies, lifted(x), check_operad_map(lifted, lv, end, 3).ok)
