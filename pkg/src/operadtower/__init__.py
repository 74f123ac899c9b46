"""Operads of magmas, their symmetrizations, and symmetric monoidal coherence.

Modules:

* ``perm``: permutations, block permutations and direct sums;
* ``treeop``: the tree operads ``V`` and ``V0`` and the terminal operad ``T``;
* ``zoperad``: the pointed-magma operad ``Z``;
* ``lsym``: symmetrization ``L``, endomorphism operads and exhaustive law checks;
* ``catop``: the categorical operad ``Y = E(LZ)`` acting on two monoidal models;
* ``coherence``: synthesis of structure-move sequences between expressions;
* ``cli``: the command-line front end.
"""

from .perm import Permutation, apply_to_list, block_permutation, compose, direct_sum, identity, inverse
from .report import InstanceLimitExceeded, Report
from .treeop import LEAF, PAIR, ZERO, T_VIEW, V0_VIEW, V_VIEW, free_extend_V, v_enumerate, v_gamma
from .zoperad import Z_VIEW, ZElement, free_extend_Z, map_V_to_Z, project_Z_to_V0, z_enumerate, z_gamma
from .lsym import (LElement, adjoint_lift, check_nonsym_axioms, check_operad_map, check_sym_axioms,
                   end_view, l_gamma, l_view)

__version__ = "0.1.0"
