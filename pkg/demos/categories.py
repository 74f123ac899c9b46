"""Structure isomorphisms as unique morphisms, acting on words and on expressions.

The word model is the free permutative category on a two-letter alphabet:
objects are words and morphisms are letter-preserving bijections.
"""
from operadtower.catop import (check_diagrams, expression_model, structure_morphisms, word_model,
                               y_morphism_action, y_object_action)
from operadtower.coherence import Var

words = word_model()
ms = structure_morphisms()
for name, f in ms.items():
    print(name, f.src, "->", f.tgt)

print(y_object_action(ms["tau"].tgt, ["ab", "c"], words))
print(y_morphism_action(ms["tau"], ["ab", "b"], words))

exprs = expression_model()
print(y_morphism_action(ms["alpha"], [Var(1), Var(2), Var(3)], exprs))

for model in (words, exprs):
    print(check_diagrams(model).to_text())
