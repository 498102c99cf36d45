#!/usr/bin/env python3
"""Tour of grammar documents, tree weights, and letter-count series.

A weighted grammar assigns every parse tree the product of its rule
weights, and every word the sum of the weights of its parse trees.
Because we only track how often each letter occurs — not where — the
grammar's behaviour is summarised by a power series in commuting
letter variables.  This script loads a few small grammars, walks their
trees, and computes that series three different ways.
"""

from fractions import Fraction

from wcfg import (
    enumerate_trees,
    grammar_series,
    load_grammar,
    parikh_series_bruteforce,
    render_grammar,
    render_series,
    tree_weight,
    tree_yield,
    word_weight_map,
)

print("=" * 70)
print("1. A grammar document")
print("=" * 70)

g = load_grammar("grammars/binary_tail.wcfg")
print(render_grammar(g))

print()
print("=" * 70)
print("2. Trees, yields, weights")
print("=" * 70)

# Enumerate every parse tree producing at most 5 terminal letters.
trees = enumerate_trees(g, max_terminals=5)
print(f"trees with at most 5 letters: {len(trees)}")
for tree in trees:
    word = " ".join(tree_yield(g, tree)) or "eps"
    print(f"  yield {word:14}  weight {tree_weight(g, tree)}")

# The word weight pools every tree with the same yield.
print()
print("word weights up to length 5:")
for word, weight in sorted(word_weight_map(g, 5).items()):
    print(f"  {' '.join(word) or 'eps':14}  {weight}")

print()
print("=" * 70)
print("3. The letter-count series")
print("=" * 70)

# Two independent routes to the same series: solve the grammar's
# equation system by fixed-point iteration, or enumerate trees and sum
# weights per letter-count vector.  They must agree.
order = 8
fast = grammar_series(g, order)
slow = parikh_series_bruteforce(g, order)
print(f"fixed-point  : {render_series(fast)}")
print(f"brute force  : {render_series(slow)}")
print(f"agree        : {fast == slow}")

print()
print("=" * 70)
print("4. The same machinery over other semirings")
print("=" * 70)

# Weights from the natural numbers count parse trees...
amb = load_grammar("grammars/exponential_ambiguity.wcfg")
print("tree counts     :", render_series(grammar_series(amb, 6)))

# ...and tropical weights compute the cheapest parse per letter count.
paths = load_grammar("grammars/tropical_paths.wcfg")
print("cheapest parses :", render_series(grammar_series(paths, 6)))

print()
print("=" * 70)
print("5. Rational weights can cancel")
print("=" * 70)

# Two copies of a quadratic recursion with opposite signs: the series
# collapses to the single letter 'a' even though no single tree says so.
cc = load_grammar("grammars/catalan_cancellation.wcfg")
print(render_series(grammar_series(cc, 9)))
assert grammar_series(cc, 9).coefficient((1,)) == Fraction(1)
print("every higher coefficient cancelled to zero")
