"""From one associative instance to the whole zoo of derived ones.

Pipeline: search for operator families by brute force, split the
product into dendriform halves, re-total them, derive a pre-Lie
product and a Lie bracket, and check every identity along the way.
All constructions run their own pre- and post-checks; nothing here is
trusted without an exhaustive basis evaluation.
"""

from fractions import Fraction

from bihomega import (SearchConfig, assoc_as_prelie, assoc_to_lie,
                      brute_force_rb_search, check_instance,
                      constant_product_instance, cyclic_group,
                      dendriform_to_prelie, dendriform_total,
                      lie_rb_to_postlie, make_two_dim_example, postlie_to_lie,
                      prelie_to_lie, rb_bracket_lie, rb_split_dendriform,
                      rb_star_associative, two_dim_params)
from bihomega.core import AlgebraKind

W = cyclic_group(2)
base = make_two_dim_example(
    two_dim_params(W, [[1, 1], [1, 1]], [1, 1], [1, 1]), reading="e2")
print("base instance:")
for line in check_instance(base).summary_lines():
    print("  " + line)

# every weight-1 operator family with entries in {-1, 0, 1}
rbs = brute_force_rb_search(base, SearchConfig(weight=Fraction(1)))
print(f"\nfound {len(rbs)} weight-1 operator families")
rb = rbs[-1]
print("using R at identity:", [list(rb.maps.matrix(0).row(i))
                               for i in range(2)])

# split, then re-total: the sum of the halves is the star product
dend = rb_split_dendriform(base, rb)
print("\ndendriform halves:")
for line in check_instance(dend).summary_lines():
    print("  " + line)
total = dendriform_total(dend)
star = rb_star_associative(base, rb)
print("total of halves equals star product:",
      total.product("mul") == star.product("mul"))

# the halves combine into a pre-Lie product, whose commutator-style
# bracket closes into a Lie algebra
prelie = dendriform_to_prelie(dend)
print("\npre-Lie from the halves passes:", check_instance(prelie).passed)
lie = prelie_to_lie(prelie)
print("Lie from the pre-Lie passes:", check_instance(lie).passed)

# two routes to the same bracket on the associative side
direct = assoc_to_lie(base)
staged = prelie_to_lie(assoc_as_prelie(base))
print("\ndirect bracket equals staged bracket:",
      direct.product("bracket") == staged.product("bracket"))

# on the Lie side, an operator family gives a PostLie structure, and
# its derived bracket agrees with the operator bracket
lie2 = constant_product_instance(
    AlgebraKind.LIE, W, {"bracket": [[[0, 0], [0, 1]], [[0, -1], [0, 0]]]})
rbs2 = brute_force_rb_search(lie2, SearchConfig(weight=Fraction(1),
                                                target_count=4))
rb2 = rbs2[-1]
post = lie_rb_to_postlie(lie2, rb2)
print("\nPostLie from Lie + operator:")
for line in check_instance(post).summary_lines():
    print("  " + line)
via = postlie_to_lie(post)
straight = rb_bracket_lie(lie2, rb2)
print("PostLie route equals direct operator bracket:",
      via.product("bracket") == straight.product("bracket"))
