"""The 2-dim worked instance, including the ambiguous structure map.

The instance lives over a finite semigroup W: products are
e_i *_{a,b} e_j = c(a,b) e_i, the first structure map scales by a
character r, and the second structure map has two plausible readings
of where it sends e2. We build both and let the checker decide.
"""

from bihomega import (check_bihom_associative, cyclic_group,
                      make_two_dim_example, two_dim_params,
                      two_dim_reading_report)

W = cyclic_group(2)

# side-conditions: r and l multiplicative, c compatible with both.
# The sign character works: r = l = (1, -1), c(a, b) = sign(a b).
params = two_dim_params(W, c=[[1, -1], [-1, 1]],
                        rthree=[1, -1], lthree=[1, -1])
print("side-condition violations:", params.violations() or "none")

for reading, (inst, report) in two_dim_reading_report(params).items():
    q0 = inst.q.matrix(0)
    print(f"\nreading {reading}: q maps e2 to a multiple of {reading}")
    print("  q at the identity element:",
          [list(q0.row(i)) for i in range(2)])
    for line in report.summary_lines():
        print("  " + line)

# Both readings satisfy every axiom. They are not the same algebra,
# though: the verbatim reading has a singular second structure map, so
# constructions that need q^-1 (commutator brackets, the dendriform to
# pre-Lie step) only accept the corrected reading.
verbatim = make_two_dim_example(params, reading="e1")
corrected = make_two_dim_example(params, reading="e2")
print("\nverbatim q is singular:", end=" ")
try:
    verbatim.q.inverse()
    print("no")
except Exception as exc:
    print(f"yes ({exc})")
print("corrected q is invertible:",
      corrected.q.inverse() is not None)

# A broken parameter tuple is rejected before any tensor is built.
bad = two_dim_params(W, c=[[1, 1], [1, 1]], rthree=[1, 2], lthree=[1, 1])
print("\nbad parameters:", bad.violations()[0])

# And a broken tensor is caught by the checker with a witness.
from bihomega import AlgebraKind, BilinearFamily, new_instance

inst = make_two_dim_example(params)
mul = inst.product("mul")
bumped = BilinearFamily.from_function(
    W, 2, lambda a, b, i, j: tuple(
        v + (1 if (a, b, i, j, k) == (0, 1, 0, 0, 1) else 0)
        for k, v in enumerate(mul.basis_product(a, b, i, j))))
broken = new_instance(AlgebraKind.BIHOM_ASSOCIATIVE, W,
                      (("mul", bumped),), inst.p, inst.q)
report = check_bihom_associative(broken)
print("\nafter bumping one structure constant:")
print(report.summary())
