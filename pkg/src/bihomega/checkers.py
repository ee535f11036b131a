"""Exhaustive basis-evaluation checkers for every defining identity.

By multilinearity an identity holds for all vectors iff it holds on all
basis tuples, so each checker enumerates semigroup indices and basis
indices lexicographically and compares both sides exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .core import (ASSOCIATIVE_KINDS, AlgebraInstance, AlgebraKind,
                   BilinearFamily, LinearFamily, RotaBaxterFamily)
from .errors import KindMismatch, NonCommutativeOmega, ShapeMismatch
from .linalg import Vector, basis_vector, vec_add, vec_scale, vec_sub
from .reports import AxiomResult, CheckReport, Witness
from .semigroup import is_commutative_table

DEFAULT_WITNESS_CAP = 10

Cell = tuple[tuple[str, ...], tuple[int, ...], Vector, Vector]


def _gather(axiom: str, cells: Iterable[Cell], cap: int) -> AxiomResult:
    witnesses = []
    total = 0
    for indices, basis, lhs, rhs in cells:
        if lhs != rhs:
            total += 1
            if len(witnesses) < cap:
                witnesses.append(Witness(indices, basis, lhs, rhs))
    return AxiomResult(axiom, total == 0, tuple(witnesses), total)


class _Eval:
    """Cached basis images for one instance."""

    def __init__(self, inst: AlgebraInstance):
        self.inst = inst
        self.omega = inst.omega
        self.n = inst.omega.order
        self.d = inst.dim
        self.basis = [basis_vector(self.d, i) for i in range(self.d)]
        self.pcol = self._columns(inst.p)
        self.qcol = self._columns(inst.q)

    def _columns(self, fam: LinearFamily) -> list[list[Vector]]:
        return [[fam.apply(a, e) for e in self.basis] for a in self.omega.indices()]

    def mul(self, a: int, b: int) -> int:
        return self.omega.mul(a, b)

    def label(self, *indices: int) -> tuple[str, ...]:
        return tuple(self.omega.elements[a] for a in indices)


def _multiplicativity_cells(ev: _Eval, fam: LinearFamily,
                            cols: list[list[Vector]],
                            product: BilinearFamily) -> Iterator[Cell]:
    # f_{ab}(e_i *_{a,b} e_j) = f_a(e_i) *_{a,b} f_b(e_j)
    for a in range(ev.n):
        for b in range(ev.n):
            ab = ev.mul(a, b)
            for i in range(ev.d):
                for j in range(ev.d):
                    lhs = fam.apply(ab, product.basis_product(a, b, i, j))
                    rhs = product.apply(a, b, cols[a][i], cols[b][j])
                    yield ev.label(a, b), (i, j), lhs, rhs


def _mult_results(ev: _Eval, product: BilinearFamily, cap: int,
                  prefix: str = "") -> list[AxiomResult]:
    return [
        _gather(prefix + "p-multiplicativity",
                _multiplicativity_cells(ev, ev.inst.p, ev.pcol, product), cap),
        _gather(prefix + "q-multiplicativity",
                _multiplicativity_cells(ev, ev.inst.q, ev.qcol, product), cap),
    ]


def _require_kind(inst: AlgebraInstance, kinds: tuple[AlgebraKind, ...]):
    if inst.kind not in kinds:
        wanted = ", ".join(k.value for k in kinds)
        raise KindMismatch(f"checker expects kind in {{{wanted}}}, got {inst.kind.value}")


def _require_commutative(inst: AlgebraInstance):
    if not is_commutative_table(inst.omega):
        raise NonCommutativeOmega(
            f"{inst.kind.value} checker requires a commutative index semigroup")


def check_bihom_associative(inst: AlgebraInstance,
                            max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """p/q multiplicativity plus the twisted associativity identity."""
    _require_kind(inst, ASSOCIATIVE_KINDS)
    ev = _Eval(inst)
    mul = inst.product("mul")

    def assoc_cells() -> Iterator[Cell]:
        # p_a(x) * (y * z) = (x * y) * q_c(z), indices threading a,bc | ab,c
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    bc = ev.mul(b, c)
                    ab = ev.mul(a, b)
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                lhs = mul.apply(a, bc, ev.pcol[a][i],
                                                mul.basis_product(b, c, j, k))
                                rhs = mul.apply(ab, c,
                                                mul.basis_product(a, b, i, j),
                                                ev.qcol[c][k])
                                yield ev.label(a, b, c), (i, j, k), lhs, rhs

    results = _mult_results(ev, mul, max_witnesses)
    results.append(_gather("bihom-associativity", assoc_cells(), max_witnesses))
    return CheckReport(inst.kind.value, tuple(results))


def check_dendriform(inst: AlgebraInstance,
                     max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Multiplicativity over both halves plus the three splitting axioms."""
    _require_kind(inst, (AlgebraKind.DENDRIFORM,))
    ev = _Eval(inst)
    prec = inst.product("prec")
    succ = inst.product("succ")

    def left_cells() -> Iterator[Cell]:
        # (x < y) <_{ab,c} q_c(z) = p_a(x) <_{a,bc} (y < z + y > z)
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    ab, bc = ev.mul(a, b), ev.mul(b, c)
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                lhs = prec.apply(ab, c, prec.basis_product(a, b, i, j),
                                                 ev.qcol[c][k])
                                inner = vec_add(prec.basis_product(b, c, j, k),
                                                succ.basis_product(b, c, j, k))
                                rhs = prec.apply(a, bc, ev.pcol[a][i], inner)
                                yield ev.label(a, b, c), (i, j, k), lhs, rhs

    def middle_cells() -> Iterator[Cell]:
        # (x > y) <_{ab,c} q_c(z) = p_a(x) >_{a,bc} (y < z)
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    ab, bc = ev.mul(a, b), ev.mul(b, c)
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                lhs = prec.apply(ab, c, succ.basis_product(a, b, i, j),
                                                 ev.qcol[c][k])
                                rhs = succ.apply(a, bc, ev.pcol[a][i],
                                                 prec.basis_product(b, c, j, k))
                                yield ev.label(a, b, c), (i, j, k), lhs, rhs

    def right_cells() -> Iterator[Cell]:
        # p_a(x) >_{a,bc} (y > z) = (x < y + x > y) >_{ab,c} q_c(z)
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    ab, bc = ev.mul(a, b), ev.mul(b, c)
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                lhs = succ.apply(a, bc, ev.pcol[a][i],
                                                 succ.basis_product(b, c, j, k))
                                outer = vec_add(prec.basis_product(a, b, i, j),
                                                succ.basis_product(a, b, i, j))
                                rhs = succ.apply(ab, c, outer, ev.qcol[c][k])
                                yield ev.label(a, b, c), (i, j, k), lhs, rhs

    results = []
    for slot, fam in (("prec-", prec), ("succ-", succ)):
        results.extend(_mult_results(ev, fam, max_witnesses, prefix=slot))
    results.append(_gather("dendriform-left", left_cells(), max_witnesses))
    results.append(_gather("dendriform-middle", middle_cells(), max_witnesses))
    results.append(_gather("dendriform-right", right_cells(), max_witnesses))
    return CheckReport(inst.kind.value, tuple(results))


def _prelie_results(ev: _Eval, tri: BilinearFamily, cap: int,
                    prefix: str = "") -> list[AxiomResult]:
    def cells() -> Iterator[Cell]:
        # pq_a(x) |> (p_b(y) |> z) - (q_a(x) |> p_b(y)) |> q_c(z) is
        # symmetric under swapping (x,a) with (y,b)
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                lhs = _prelie_associator(ev, tri, a, b, c, i, j, k)
                                rhs = _prelie_associator(ev, tri, b, a, c, j, i, k)
                                yield ev.label(a, b, c), (i, j, k), lhs, rhs

    results = _mult_results(ev, tri, cap, prefix=prefix)
    results.append(_gather(prefix + "prelie-identity", cells(), cap))
    return results


def _prelie_associator(ev: _Eval, tri: BilinearFamily, a: int, b: int, c: int,
                       i: int, j: int, k: int) -> Vector:
    # pq_a(x) |>_{a,bc} (p_b(y) |>_{b,c} z) - (q_a(x) |>_{a,b} p_b(y)) |>_{ab,c} q_c(z)
    pq_x = ev.inst.p.apply(a, ev.qcol[a][i])
    first = tri.apply(a, ev.mul(b, c), pq_x,
                      tri.apply(b, c, ev.pcol[b][j], ev.basis[k]))
    second = tri.apply(ev.mul(a, b), c,
                       tri.apply(a, b, ev.qcol[a][i], ev.pcol[b][j]),
                       ev.qcol[c][k])
    return vec_sub(first, second)


def check_prelie(inst: AlgebraInstance,
                 max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Twisted left-symmetry of the associator plus p/q multiplicativity."""
    _require_kind(inst, (AlgebraKind.PRELIE,))
    _require_commutative(inst)
    ev = _Eval(inst)
    results = _prelie_results(ev, inst.product("triangle"), max_witnesses)
    return CheckReport(inst.kind.value, tuple(results))


def _lie_results(ev: _Eval, br: BilinearFamily, cap: int,
                 prefix: str = "") -> list[AxiomResult]:
    def skew_cells() -> Iterator[Cell]:
        # {q_a(x), p_b(y)}_{a,b} = -{q_b(y), p_a(x)}_{b,a}
        for a in range(ev.n):
            for b in range(ev.n):
                for i in range(ev.d):
                    for j in range(ev.d):
                        lhs = br.apply(a, b, ev.qcol[a][i], ev.pcol[b][j])
                        rhs = vec_scale(-1, br.apply(b, a, ev.qcol[b][j],
                                                     ev.pcol[a][i]))
                        yield ev.label(a, b), (i, j), lhs, rhs

    def jacobi_cells() -> Iterator[Cell]:
        # {q_a^2(x), {q_b(y), p_c(z)}_{b,c}}_{a,bc} + two cyclic shifts = 0
        zero = tuple(Fraction(0) for _ in range(ev.d))
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                total = _jacobi_term(ev, br, a, b, c, i, j, k)
                                total = vec_add(total,
                                                _jacobi_term(ev, br, b, c, a, j, k, i))
                                total = vec_add(total,
                                                _jacobi_term(ev, br, c, a, b, k, i, j))
                                yield ev.label(a, b, c), (i, j, k), total, zero

    results = _mult_results(ev, br, cap, prefix=prefix)
    results.append(_gather(prefix + "skew-symmetry", skew_cells(), cap))
    results.append(_gather(prefix + "jacobi", jacobi_cells(), cap))
    return results


def _jacobi_term(ev: _Eval, br: BilinearFamily, a: int, b: int, c: int,
                 i: int, j: int, k: int) -> Vector:
    qq_x = ev.inst.q.apply(a, ev.qcol[a][i])
    inner = br.apply(b, c, ev.qcol[b][j], ev.pcol[c][k])
    return br.apply(a, ev.mul(b, c), qq_x, inner)


def check_lie(inst: AlgebraInstance,
              max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Twisted skew-symmetry and Jacobi, plus p/q multiplicativity."""
    _require_kind(inst, (AlgebraKind.LIE,))
    _require_commutative(inst)
    ev = _Eval(inst)
    results = _lie_results(ev, inst.product("bracket"), max_witnesses)
    return CheckReport(inst.kind.value, tuple(results))


def check_postlie(inst: AlgebraInstance,
                  max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Full re-verification: Lie axioms on the bracket, multiplicativity
    over the triangle product, and both compatibility identities."""
    _require_kind(inst, (AlgebraKind.POSTLIE,))
    _require_commutative(inst)
    ev = _Eval(inst)
    br = inst.product("bracket")
    tri = inst.product("triangle")

    def first_cells() -> Iterator[Cell]:
        # {q_a(x), p_b(y)} |>_{ab,c} q_c(z) = associator difference in x,y
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                lhs = tri.apply(
                                    ev.mul(a, b), c,
                                    br.apply(a, b, ev.qcol[a][i], ev.pcol[b][j]),
                                    ev.qcol[c][k])
                                rhs = vec_sub(
                                    _prelie_associator(ev, tri, a, b, c, i, j, k),
                                    _prelie_associator(ev, tri, b, a, c, j, i, k))
                                yield ev.label(a, b, c), (i, j, k), lhs, rhs

    def second_cells() -> Iterator[Cell]:
        # pq_a(x) |>_{a,bc} {y,z}_{b,c}
        #   = {q_a(x) |> y, q_c(z)}_{ab,c} + {q_b(y), p_a(x) |> z}_{b,ac}
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                pq_x = ev.inst.p.apply(a, ev.qcol[a][i])
                                lhs = tri.apply(a, ev.mul(b, c), pq_x,
                                                br.basis_product(b, c, j, k))
                                t1 = br.apply(
                                    ev.mul(a, b), c,
                                    tri.apply(a, b, ev.qcol[a][i], ev.basis[j]),
                                    ev.qcol[c][k])
                                t2 = br.apply(
                                    b, ev.mul(a, c), ev.qcol[b][j],
                                    tri.apply(a, c, ev.pcol[a][i], ev.basis[k]))
                                yield (ev.label(a, b, c), (i, j, k), lhs,
                                       vec_add(t1, t2))

    results = _lie_results(ev, br, max_witnesses, prefix="bracket-")
    results.extend(_mult_results(ev, tri, max_witnesses, prefix="triangle-"))
    results.append(_gather("postlie-first-identity", first_cells(), max_witnesses))
    results.append(_gather("postlie-second-identity", second_cells(), max_witnesses))
    return CheckReport(inst.kind.value, tuple(results))


def _zinbiel_results(ev: _Eval, star: BilinearFamily, cap: int,
                     prefix: str = "") -> list[AxiomResult]:
    def cells() -> Iterator[Cell]:
        # pq_a(x) * (p_b(y) * z) = (q_a(x) * p_b(y)) * q_c(z)
        #                        + (q_b(y) * p_a(x)) * q_c(z)
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                pq_x = ev.inst.p.apply(a, ev.qcol[a][i])
                                lhs = star.apply(
                                    a, ev.mul(b, c), pq_x,
                                    star.apply(b, c, ev.pcol[b][j], ev.basis[k]))
                                t1 = star.apply(
                                    ev.mul(a, b), c,
                                    star.apply(a, b, ev.qcol[a][i], ev.pcol[b][j]),
                                    ev.qcol[c][k])
                                t2 = star.apply(
                                    ev.mul(b, a), c,
                                    star.apply(b, a, ev.qcol[b][j], ev.pcol[a][i]),
                                    ev.qcol[c][k])
                                yield (ev.label(a, b, c), (i, j, k), lhs,
                                       vec_add(t1, t2))

    results = _mult_results(ev, star, cap, prefix=prefix)
    results.append(_gather(prefix + "zinbiel-identity", cells(), cap))
    return results


def check_zinbiel(inst: AlgebraInstance,
                  max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    _require_kind(inst, (AlgebraKind.ZINBIEL,))
    _require_commutative(inst)
    ev = _Eval(inst)
    results = _zinbiel_results(ev, inst.product("star"), max_witnesses)
    return CheckReport(inst.kind.value, tuple(results))


def check_prepoisson(inst: AlgebraInstance,
                     max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Pre-Lie axioms on the triangle product, zinbiel axioms on the star
    product, plus the two compatibility identities."""
    _require_kind(inst, (AlgebraKind.PREPOISSON,))
    _require_commutative(inst)
    ev = _Eval(inst)
    tri = inst.product("triangle")
    star = inst.product("star")

    def first_cells() -> Iterator[Cell]:
        # (q_a(x) |> p_b(y) - q_b(y) |> p_a(x)) *_{ab,c} q_c(z)
        #   = pq_a(x) |>_{a,bc} (p_b(y) * z) - pq_b(y) *_{b,ac} (p_a(x) |> z)
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                comm = vec_sub(
                                    tri.apply(a, b, ev.qcol[a][i], ev.pcol[b][j]),
                                    tri.apply(b, a, ev.qcol[b][j], ev.pcol[a][i]))
                                lhs = star.apply(ev.mul(a, b), c, comm, ev.qcol[c][k])
                                pq_x = ev.inst.p.apply(a, ev.qcol[a][i])
                                pq_y = ev.inst.p.apply(b, ev.qcol[b][j])
                                t1 = tri.apply(
                                    a, ev.mul(b, c), pq_x,
                                    star.apply(b, c, ev.pcol[b][j], ev.basis[k]))
                                t2 = star.apply(
                                    b, ev.mul(a, c), pq_y,
                                    tri.apply(a, c, ev.pcol[a][i], ev.basis[k]))
                                yield (ev.label(a, b, c), (i, j, k), lhs,
                                       vec_sub(t1, t2))

    def second_cells() -> Iterator[Cell]:
        # (q_a(x) * p_b(y) + q_b(y) * p_a(x)) |>_{ab,c} q_c(z)
        #   = pq_a(x) *_{a,bc} (p_b(y) |> z) + pq_b(y) *_{b,ac} (p_a(x) |> z)
        for a in range(ev.n):
            for b in range(ev.n):
                for c in range(ev.n):
                    for i in range(ev.d):
                        for j in range(ev.d):
                            for k in range(ev.d):
                                symm = vec_add(
                                    star.apply(a, b, ev.qcol[a][i], ev.pcol[b][j]),
                                    star.apply(b, a, ev.qcol[b][j], ev.pcol[a][i]))
                                lhs = tri.apply(ev.mul(a, b), c, symm, ev.qcol[c][k])
                                pq_x = ev.inst.p.apply(a, ev.qcol[a][i])
                                pq_y = ev.inst.p.apply(b, ev.qcol[b][j])
                                t1 = star.apply(
                                    a, ev.mul(b, c), pq_x,
                                    tri.apply(b, c, ev.pcol[b][j], ev.basis[k]))
                                t2 = star.apply(
                                    b, ev.mul(a, c), pq_y,
                                    tri.apply(a, c, ev.pcol[a][i], ev.basis[k]))
                                yield (ev.label(a, b, c), (i, j, k), lhs,
                                       vec_add(t1, t2))

    results = _prelie_results(ev, tri, max_witnesses, prefix="triangle-")
    results.extend(_zinbiel_results(ev, star, max_witnesses, prefix="star-"))
    results.append(_gather("prepoisson-first-identity", first_cells(), max_witnesses))
    results.append(_gather("prepoisson-second-identity", second_cells(), max_witnesses))
    return CheckReport(inst.kind.value, tuple(results))


def check_rota_baxter(inst: AlgebraInstance, rb: RotaBaxterFamily,
                      max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """The weight-lambda operator identity on every product component,
    plus commutation with both structure maps."""
    if rb.maps.dim != inst.dim or rb.maps.omega != inst.omega:
        raise ShapeMismatch("operator family does not match the instance")
    ev = _Eval(inst)
    rcol = [[rb.maps.apply(a, e) for e in ev.basis] for a in range(ev.n)]
    lam = rb.weight
    results = []

    for slot, fam in inst.products:
        def rb_cells(fam=fam) -> Iterator[Cell]:
            # m(R_a x, R_b y) = R_{ab}( m(R_a x, y) + m(x, R_b y) + lam m(x,y) )
            for a in range(ev.n):
                for b in range(ev.n):
                    ab = ev.mul(a, b)
                    for i in range(ev.d):
                        for j in range(ev.d):
                            lhs = fam.apply(a, b, rcol[a][i], rcol[b][j])
                            inner = vec_add(
                                fam.apply(a, b, rcol[a][i], ev.basis[j]),
                                fam.apply(a, b, ev.basis[i], rcol[b][j]))
                            inner = vec_add(
                                inner, vec_scale(lam, fam.basis_product(a, b, i, j)))
                            rhs = rb.maps.apply(ab, inner)
                            yield ev.label(a, b), (i, j), lhs, rhs

        results.append(_gather(f"rb-identity-{slot}", rb_cells(), max_witnesses))

    for name, fam, cols in (("p", inst.p, ev.pcol), ("q", inst.q, ev.qcol)):
        def commute_cells(fam=fam, cols=cols) -> Iterator[Cell]:
            for a in range(ev.n):
                for i in range(ev.d):
                    lhs = rb.maps.apply(a, cols[a][i])
                    rhs = fam.apply(a, rcol[a][i])
                    yield ev.label(a), (i,), lhs, rhs

        results.append(_gather(f"rb-commutes-{name}", commute_cells(), max_witnesses))
    return CheckReport("rota-baxter", tuple(results))


def check_morphism(f: LinearFamily, src: AlgebraInstance, dst: AlgebraInstance,
                   max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Multiplicativity over every product plus structure-map intertwining."""
    if src.kind != dst.kind:
        raise KindMismatch("morphism endpoints must share a kind")
    if f.dim != src.dim or dst.dim != src.dim or f.omega != src.omega \
            or dst.omega != src.omega:
        raise ShapeMismatch("morphism family does not match the instances")
    ev = _Eval(src)
    fcol = [[f.apply(a, e) for e in ev.basis] for a in range(ev.n)]
    results = []

    for slot in src.slot_names:
        sp = src.product(slot)
        dp = dst.product(slot)

        def cells(sp=sp, dp=dp) -> Iterator[Cell]:
            # f_{ab}(e_i *_{a,b} e_j) = f_a(e_i) *'_{a,b} f_b(e_j)
            for a in range(ev.n):
                for b in range(ev.n):
                    ab = ev.mul(a, b)
                    for i in range(ev.d):
                        for j in range(ev.d):
                            lhs = f.apply(ab, sp.basis_product(a, b, i, j))
                            rhs = dp.apply(a, b, fcol[a][i], fcol[b][j])
                            yield ev.label(a, b), (i, j), lhs, rhs

        results.append(_gather(f"morphism-{slot}", cells(), max_witnesses))

    for name, s_fam, d_fam in (("p", src.p, dst.p), ("q", src.q, dst.q)):
        def twine_cells(s_fam=s_fam, d_fam=d_fam) -> Iterator[Cell]:
            # d_a(f_a(e_i)) = f_a(s_a(e_i))
            for a in range(ev.n):
                for i in range(ev.d):
                    lhs = d_fam.apply(a, fcol[a][i])
                    rhs = f.apply(a, s_fam.apply(a, ev.basis[i]))
                    yield ev.label(a), (i,), lhs, rhs

        results.append(_gather(f"intertwine-{name}", twine_cells(), max_witnesses))
    return CheckReport("morphism", tuple(results))


_KIND_CHECKERS = {
    AlgebraKind.OMEGA_ASSOCIATIVE: check_bihom_associative,
    AlgebraKind.BIHOM_ASSOCIATIVE: check_bihom_associative,
    AlgebraKind.DENDRIFORM: check_dendriform,
    AlgebraKind.PRELIE: check_prelie,
    AlgebraKind.LIE: check_lie,
    AlgebraKind.POSTLIE: check_postlie,
    AlgebraKind.ZINBIEL: check_zinbiel,
    AlgebraKind.PREPOISSON: check_prepoisson,
}


def check_instance(inst: AlgebraInstance,
                   max_witnesses: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Dispatch to the checker matching the instance's kind tag."""
    return _KIND_CHECKERS[inst.kind](inst, max_witnesses)
