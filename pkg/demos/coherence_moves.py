"""Finding a sequence of structure moves between two bracketings.

Any two expressions over the same distinct variables are connected, and the
leaf bijection of the moves only depends on the endpoints.
"""
from operadtower.coherence import check_coherence_corpus, parse_expr, synthesize, tracked_replay

pairs = [
    ("((x1*x2)*x3)", "(x1*(x2*x3))"),
    ("(x2*x1)", "(x1*x2)"),
    ("((I*x3)*(x1*x2))", "(x2*(x3*(x1*I)))"),
]
for src, tgt in pairs:
    seq = synthesize(parse_expr(src), parse_expr(tgt))
    end, bij = tracked_replay(seq)
    print(f"{src} -> {tgt}: {len(seq)} moves, bijection {bij}")
    print("  ", " ".join(str(m) for m in seq.moves))
    assert str(end) == tgt

print(check_coherence_corpus(3).to_text())
