from fractions import Fraction

import pytest

import classical
from bihomega.checkers import check_instance, check_rota_baxter
from bihomega.constructions import (assoc_as_prelie, assoc_to_lie,
                                    dendriform_to_prelie, dendriform_total,
                                    lie_rb_to_postlie, postlie_to_lie,
                                    prelie_to_lie, rb_bracket_lie,
                                    rb_lie_to_prelie, rb_split_dendriform,
                                    rb_star_associative, yau_twist)
from bihomega.core import (AlgebraKind, BilinearFamily, LinearFamily,
                           RotaBaxterFamily, new_instance)
from bihomega.errors import (KindMismatch, MorphismCheckFailed,
                             NonCommutingFamilies, NonzeroWeight,
                             PreconditionCheckFailed, Singular)
from bihomega.forge import (constant_product_instance, make_two_dim_example,
                            two_dim_params, zero_instance)
from bihomega.linalg import Matrix
from bihomega.semigroup import cyclic_group, trivial_semigroup
from conftest import LIE_2D, two_dim_instance

TRIVIAL = trivial_semigroup()
C2 = cyclic_group(2)


def rb_const(omega, rows, weight=0):
    fam = LinearFamily.constant(omega, Matrix.from_rows(rows))
    return RotaBaxterFamily(fam, Fraction(weight))


def test_yau_twist_identity_pair_is_fixpoint():
    a = two_dim_instance(C2)
    ident = LinearFamily.identity(C2, 2)
    out = yau_twist(a, ident, ident)
    assert out.products == a.products
    assert out.p == a.p
    assert out.q == a.q


def test_yau_twist_projection_pair():
    a = two_dim_instance(C2)
    # column sums 1: a morphism of the product e_i * e_j = e_i
    m = Matrix.from_rows([[1, 1], [0, 0]])
    p2 = LinearFamily.constant(C2, m)
    out = yau_twist(a, p2, p2)
    for al in C2.indices():
        for be in C2.indices():
            for i in range(2):
                for j in range(2):
                    assert (out.product("mul").basis_product(al, be, i, j)
                            == (1, 0))
    assert out.p.matrix(0) == m
    assert check_instance(out).passed


def test_yau_twist_rejects_non_morphism():
    a = two_dim_instance(C2)
    bad = LinearFamily.constant(C2, Matrix.from_rows([[1, 1], [0, 1]]))
    with pytest.raises(MorphismCheckFailed):
        yau_twist(a, bad, bad)


def test_yau_twist_rejects_noncommuting_pair():
    a = zero_instance(AlgebraKind.BIHOM_ASSOCIATIVE, C2, 2)
    p2 = LinearFamily.constant(C2, Matrix.from_rows([[0, 1], [0, 0]]))
    q2 = LinearFamily.constant(C2, Matrix.from_rows([[0, 0], [1, 0]]))
    with pytest.raises(NonCommutingFamilies) as err:
        yau_twist(a, p2, q2)
    assert err.value.names == ("p2", "q2")


def test_rb_star_zero_operator_scales_by_weight():
    a = two_dim_instance(C2)
    rb = rb_const(C2, [[0, 0], [0, 0]], weight=2)
    out = rb_star_associative(a, rb)
    assert out.product("mul") == a.product("mul").scale(Fraction(2))


def test_rb_star_minus_weight_identity_negates():
    a = two_dim_instance(C2)
    rb = rb_const(C2, [[-1, 0], [0, -1]], weight=1)
    out = rb_star_associative(a, rb)
    # x*y = x(-y) + (-x)y + xy = -xy
    assert out.product("mul") == a.product("mul").scale(Fraction(-1))


def test_rb_star_rejects_non_operator():
    a = two_dim_instance(C2)
    bad = rb_const(C2, [[1, 0], [0, 2]], weight=0)
    with pytest.raises(PreconditionCheckFailed):
        rb_star_associative(a, bad)


def test_splitting_round_trip():
    a = two_dim_instance(C2)
    for weight, rows in ((0, [[0, 0], [0, 0]]), (1, [[-1, 0], [0, -1]]),
                         (1, [[0, 0], [0, -1]])):
        rb = rb_const(C2, rows, weight=weight)
        if not check_rota_baxter(a, rb).passed:
            continue
        dend = rb_split_dendriform(a, rb)
        total = dendriform_total(dend)
        star = rb_star_associative(a, rb)
        assert total.product("mul") == star.product("mul")


def test_dendriform_total_kind_mismatch():
    with pytest.raises(KindMismatch):
        dendriform_total(two_dim_instance(C2))


def test_dendriform_to_prelie_matches_classical_oracle():
    # trivial index semigroup, identity maps: reduces to the classical map
    a = two_dim_instance(TRIVIAL)
    rb = rb_const(TRIVIAL, [[0, 0], [0, -1]], weight=1)
    assert check_rota_baxter(a, rb).passed
    dend = rb_split_dendriform(a, rb)
    pre = dendriform_to_prelie(dend)
    prec = [[list(dend.product("prec").basis_product(0, 0, i, j))
             for j in range(2)] for i in range(2)]
    succ = [[list(dend.product("succ").basis_product(0, 0, i, j))
             for j in range(2)] for i in range(2)]
    expected = classical.dendriform_to_prelie(prec, succ)
    got = [[list(pre.product("triangle").basis_product(0, 0, i, j))
            for j in range(2)] for i in range(2)]
    assert got == expected


def test_dendriform_to_prelie_needs_invertible_maps():
    params = two_dim_params(C2, [[1, 1], [1, 1]], [1, 1], [1, 1])
    a = make_two_dim_example(params, reading="e1")  # singular q
    dend = new_instance(AlgebraKind.DENDRIFORM, C2,
                        (("prec", a.product("mul")),
                         ("succ", BilinearFamily.zero(C2, 2))),
                        a.p, a.q)
    with pytest.raises(Singular):
        dendriform_to_prelie(dend)


def test_chain_equality_assoc_to_lie():
    for a in (two_dim_instance(TRIVIAL), two_dim_instance(C2)):
        direct = assoc_to_lie(a)
        staged = prelie_to_lie(assoc_as_prelie(a))
        assert direct.product("bracket") == staged.product("bracket")


def test_assoc_to_lie_matches_classical_commutator():
    a = two_dim_instance(TRIVIAL)
    out = assoc_to_lie(a)
    cube = [[list(a.product("mul").basis_product(0, 0, i, j))
             for j in range(2)] for i in range(2)]
    expected = classical.commutator(cube)
    got = [[list(out.product("bracket").basis_product(0, 0, i, j))
            for j in range(2)] for i in range(2)]
    assert got == expected


def test_rb_bracket_lie_precondition_failure():
    sym = constant_product_instance(
        AlgebraKind.LIE, C2, {"bracket": [[[0, 0], [0, 1]], [[0, 1], [0, 0]]]})
    rb = rb_const(C2, [[0, 0], [0, 0]], weight=0)
    with pytest.raises(PreconditionCheckFailed):
        rb_bracket_lie(sym, rb)
    # unchecked skips the gate
    out = rb_bracket_lie(sym, rb, unchecked=True)
    assert out.kind is AlgebraKind.LIE


def test_rb_lie_to_prelie_weight_zero_only():
    lie = constant_product_instance(AlgebraKind.LIE, C2, {"bracket": LIE_2D})
    rb = rb_const(C2, [[0, 0], [0, 0]], weight=1)
    with pytest.raises(NonzeroWeight):
        rb_lie_to_prelie(lie, rb)


def test_rb_lie_to_prelie_zero_operator():
    lie = constant_product_instance(AlgebraKind.LIE, C2, {"bracket": LIE_2D})
    rb = rb_const(C2, [[0, 0], [0, 0]], weight=0)
    out = rb_lie_to_prelie(lie, rb)
    assert out.product("triangle") == BilinearFamily.zero(C2, 2)


def test_postlie_diagram_commutes():
    lie = constant_product_instance(AlgebraKind.LIE, C2, {"bracket": LIE_2D})
    for lam in (Fraction(0), Fraction(1), Fraction(-1)):
        for rows in ([[0, 0], [0, 0]], [[-lam, 0], [0, -lam]]):
            rb = rb_const(C2, rows, weight=lam)
            if not check_rota_baxter(lie, rb).passed:
                continue
            via_postlie = postlie_to_lie(lie_rb_to_postlie(lie, rb))
            direct = rb_bracket_lie(lie, rb)
            assert (via_postlie.product("bracket")
                    == direct.product("bracket"))


def test_postlie_to_lie_matches_classical_oracle():
    lie = constant_product_instance(AlgebraKind.LIE, TRIVIAL,
                                    {"bracket": LIE_2D})
    rb = rb_const(TRIVIAL, [[-1, 0], [0, -1]], weight=1)
    post = lie_rb_to_postlie(lie, rb)
    br = [[list(post.product("bracket").basis_product(0, 0, i, j))
           for j in range(2)] for i in range(2)]
    tri = [[list(post.product("triangle").basis_product(0, 0, i, j))
            for j in range(2)] for i in range(2)]
    expected = classical.postlie_to_lie(br, tri)
    out = postlie_to_lie(post)
    got = [[list(out.product("bracket").basis_product(0, 0, i, j))
            for j in range(2)] for i in range(2)]
    assert got == expected


def test_outputs_carry_provenance():
    a = two_dim_instance(C2)
    out = assoc_to_lie(a)
    assert out.provenance is not None
    assert out.provenance.construction == "assoc_to_lie"
    assert out.provenance.input_digests == (a.digest(),)
