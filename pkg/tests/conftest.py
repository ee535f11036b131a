"""Shared corpus of instances used across the suites.

The corpus mixes closed families (zero products, constant structure
constants), the worked 2-dim instance, and instances bootstrapped
through the checked constructions.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bihomega.constructions import (assoc_as_prelie, lie_rb_to_postlie,
                                    rb_split_dendriform)
from bihomega.core import AlgebraKind, RotaBaxterFamily, new_instance
from bihomega.forge import (SearchConfig, brute_force_rb_search,
                            constant_product_instance, make_two_dim_example,
                            two_dim_params, zero_instance)
from bihomega.linalg import Matrix
from bihomega.core import LinearFamily
from bihomega.semigroup import SemigroupTable, cyclic_group, trivial_semigroup

TRIVIAL = trivial_semigroup()
C2 = cyclic_group(2)
C3 = cyclic_group(3)

LIE_2D = [[[0, 0], [0, 1]], [[0, -1], [0, 0]]]          # {e1,e2}=e2
ZINBIEL_2D = [[[0, 1], [0, 0]], [[0, 0], [0, 0]]]       # e1*e1=e2


def two_dim_instance(omega, c_value=1, reading="e2"):
    n = omega.order
    params = two_dim_params(
        omega,
        [[c_value] * n for _ in range(n)],
        [1] * n, [1] * n)
    return make_two_dim_example(params, reading=reading)


def _nontrivial_twisted_assoc():
    """The 2-dim instance over C2 with a sign character as p and q."""
    params = two_dim_params(C2, [[1, -1], [-1, 1]], [1, -1], [1, -1])
    return make_two_dim_example(params, reading="e2")


def associative_corpus():
    """Associative instances with invertible structure maps."""
    return [
        ("zero_assoc_trivial", zero_instance(AlgebraKind.BIHOM_ASSOCIATIVE,
                                             TRIVIAL, 2)),
        ("zero_assoc_c2", zero_instance(AlgebraKind.BIHOM_ASSOCIATIVE, C2, 2)),
        ("two_dim_trivial", two_dim_instance(TRIVIAL)),
        ("two_dim_trivial_c2scalar", two_dim_instance(TRIVIAL, c_value=2)),
        ("two_dim_c2", two_dim_instance(C2)),
        ("two_dim_c2_sign", _nontrivial_twisted_assoc()),
    ]


def lie_corpus():
    return [
        ("zero_lie_c2", zero_instance(AlgebraKind.LIE, C2, 2)),
        ("const_lie_trivial",
         constant_product_instance(AlgebraKind.LIE, TRIVIAL,
                                   {"bracket": LIE_2D})),
        ("const_lie_c2",
         constant_product_instance(AlgebraKind.LIE, C2, {"bracket": LIE_2D})),
    ]


def _dendriform_sample():
    base = two_dim_instance(C2)
    rbs = brute_force_rb_search(base, SearchConfig(target_count=3))
    return rb_split_dendriform(base, rbs[-1])


def _postlie_sample():
    from fractions import Fraction
    lie = constant_product_instance(AlgebraKind.LIE, C2, {"bracket": LIE_2D})
    rbs = brute_force_rb_search(lie, SearchConfig(weight=Fraction(1),
                                                  target_count=3))
    return lie_rb_to_postlie(lie, rbs[-1])


def _prepoisson_samples():
    prelie = assoc_as_prelie(two_dim_instance(C2))
    tri = prelie.product("triangle")
    from bihomega.core import BilinearFamily
    zero = BilinearFamily.zero(C2, 2)
    zin = constant_product_instance(AlgebraKind.ZINBIEL, C2,
                                    {"star": ZINBIEL_2D})
    return [
        ("prepoisson_tri_only",
         new_instance(AlgebraKind.PREPOISSON, C2,
                      (("triangle", tri), ("star", zero)),
                      prelie.p, prelie.q)),
        ("prepoisson_star_only",
         new_instance(AlgebraKind.PREPOISSON, C2,
                      (("triangle", zero), ("star", zin.product("star"))),
                      zin.p, zin.q)),
    ]


def full_corpus():
    """Every kind represented, all instances pass their checkers."""
    out = list(associative_corpus())
    out += [(f"zero_{kind.value}_c2", zero_instance(kind, C2, 2))
            for kind in AlgebraKind
            if kind is not AlgebraKind.BIHOM_ASSOCIATIVE]
    out += lie_corpus()
    out.append(("const_zinbiel_c2",
                constant_product_instance(AlgebraKind.ZINBIEL, C2,
                                          {"star": ZINBIEL_2D})))
    out.append(("prelie_from_assoc", assoc_as_prelie(two_dim_instance(C2))))
    out.append(("dendriform_from_split", _dendriform_sample()))
    out.append(("postlie_from_rb", _postlie_sample()))
    out += _prepoisson_samples()
    return out


def perturb_entry(inst, slot, a, b, i, j, k):
    """Copy of inst with one structure constant bumped by +1."""
    from fractions import Fraction

    from bihomega.core import BilinearFamily

    fam = inst.product(slot)

    def fn(aa, bb, ii, jj):
        cell = fam.basis_product(aa, bb, ii, jj)
        if (aa, bb, ii, jj) == (a, b, i, j):
            cell = tuple(v + (1 if kk == k else 0)
                         for kk, v in enumerate(cell))
        return cell

    products = tuple(
        (name, BilinearFamily.from_function(inst.omega, inst.dim, fn)
         if name == slot else f)
        for name, f in inst.products)
    return new_instance(inst.kind, inst.omega, products, inst.p, inst.q)


def first_failing_perturbation(inst):
    """First single-constant +1 perturbation (lexicographic) that fails
    the kind's checker, or None if every one still passes."""
    from bihomega.checkers import check_instance

    for slot in inst.slot_names:
        for a in inst.omega.indices():
            for b in inst.omega.indices():
                for i in range(inst.dim):
                    for j in range(inst.dim):
                        for k in range(inst.dim):
                            cand = perturb_entry(inst, slot, a, b, i, j, k)
                            report = check_instance(cand)
                            if not report.passed:
                                return cand, report
    return None


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


@pytest.fixture(scope="session")
def assoc_corpus():
    return associative_corpus()


@pytest.fixture(scope="session")
def lie_instances():
    return lie_corpus()
