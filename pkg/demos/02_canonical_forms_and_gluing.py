"""Canonical tables, gluing, and the two parents of every disjoint pair.

Every class of partial prefix maps has one reduced table over the whole
space.  Gluing two classes with disjoint supports stacks them over the
two halves; since either class can take the left half, every such pair
is the subdivision of exactly two parents.
"""

from cubex import VSystem, canonicalize, glue, reduce_table
from cubex.oracle import random_v_element, rng_from_seed

vs = VSystem()

# sibling table entries merge until the table is reduced
raw = [("00", "10"), ("01", "11"), ("1", "0")]
print("raw table:    ", raw)
print("reduced table:", reduce_table(raw))

# a table over a smaller ball is transported to the whole space
print("\nmap on B_1 sending 1x -> 0x:", canonicalize([("1", "0")], domain="1"))

# expanding splits a class into its two halves; gluing undoes it
rng = rng_from_seed(2024)
b = random_v_element(rng, depth_bound=3)
left, right = b.children()
print("\nrandom class:   ", b)
print("left half:      ", left)
print("right half:     ", right)
print("glued back:     ", glue(left, right), "(equal:", glue(left, right) == b, ")")

# the pair {left, right} has exactly two parents: b and the swapped gluing
parents = vs.coexpansions(frozenset((left, right)))
print("\nparents of the pair:")
for p in parents:
    print("  ", p)
assert len(parents) == 2 and b in parents

# with the identity halves, the parents are the identity and the swap
idcls = vs.parse_element([["", ""]])
l, r = idcls.children()
print("\nparents of the two half-balls:", [str(p) for p in vs.coexpansions(frozenset((l, r)))])
