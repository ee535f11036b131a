"""Instance supply: the worked 2-dim example, reduction embeddings,
closed families, and brute-force searches with checkers as oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .checkers import check_bihom_associative, check_morphism, check_rota_baxter
from .core import (ASSOCIATIVE_KINDS, AlgebraInstance, AlgebraKind,
                   BilinearFamily, LinearFamily, Provenance, RotaBaxterFamily,
                   new_instance)
from .errors import BudgetExceeded, ConditionViolated, ShapeMismatch
from .linalg import Matrix, basis_vector, frac, vec_scale, zero_vector
from .reports import CheckReport
from .semigroup import SemigroupTable

DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class TwoDimExampleParams:
    """Scalar data of the worked 2-dim instance.

    c maps index pairs to scalars; rthree and lthree are the two scalar
    characters of the semigroup used by the structure maps.
    """

    omega: SemigroupTable
    c: tuple[tuple[Fraction, ...], ...]
    rthree: tuple[Fraction, ...]
    lthree: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.omega.order
        if len(self.c) != n or any(len(row) != n for row in self.c):
            raise ShapeMismatch("c must be an n x n scalar table")
        if len(self.rthree) != n or len(self.lthree) != n:
            raise ShapeMismatch("rthree and lthree need one scalar per element")

    def violations(self) -> list[tuple[str, tuple[str, ...]]]:
        """All failing side-conditions, lexicographic in the indices."""
        out = []
        om = self.omega
        for a in om.indices():
            for b in om.indices():
                ab = om.mul(a, b)
                if self.rthree[ab] != self.rthree[a] * self.rthree[b]:
                    out.append(("rthree-multiplicative",
                                (om.elements[a], om.elements[b])))
                if self.lthree[ab] != self.lthree[a] * self.lthree[b]:
                    out.append(("lthree-multiplicative",
                                (om.elements[a], om.elements[b])))
        for a in om.indices():
            for b in om.indices():
                for g in om.indices():
                    ab = om.mul(a, b)
                    bg = om.mul(b, g)
                    lhs = self.c[a][b] * self.lthree[g] * self.c[ab][g]
                    rhs = self.c[a][bg] * self.rthree[a] * self.c[b][g]
                    if lhs != rhs:
                        out.append(("c-cocycle",
                                    (om.elements[a], om.elements[b],
                                     om.elements[g])))
        return out


def two_dim_params(omega: SemigroupTable, c, rthree, lthree) -> TwoDimExampleParams:
    return TwoDimExampleParams(
        omega,
        tuple(tuple(frac(v) for v in row) for row in c),
        tuple(frac(v) for v in rthree),
        tuple(frac(v) for v in lthree))


def make_two_dim_example(params: TwoDimExampleParams,
                         reading: str = "e1") -> AlgebraInstance:
    """Build the 2-dim instance; products e_i * e_j = c(a,b) e_i.

    reading selects the second structure map's image of e2: "e1" takes
    the source text verbatim, "e2" applies the plausible correction.
    The checker, not this builder, is the arbiter of which reading is a
    valid algebra.
    """
    if reading not in ("e1", "e2"):
        raise ValueError("reading must be 'e1' or 'e2'")
    bad = params.violations()
    if bad:
        condition, indices = bad[0]
        raise ConditionViolated(condition, indices)
    om = params.omega

    def product(a, b, i, j):
        return vec_scale(params.c[a][b], basis_vector(2, i))

    p = LinearFamily(om, 2, tuple(
        Matrix.diagonal((params.rthree[a], params.rthree[a]))
        for a in om.indices()))
    if reading == "e1":
        q_mats = tuple(Matrix.from_rows([[params.lthree[a], params.lthree[a]],
                                         [0, 0]])
                       for a in om.indices())
    else:
        q_mats = tuple(Matrix.diagonal((params.lthree[a], params.lthree[a]))
                       for a in om.indices())
    q = LinearFamily(om, 2, q_mats)
    return new_instance(
        AlgebraKind.BIHOM_ASSOCIATIVE, om,
        (("mul", BilinearFamily.from_function(om, 2, product)),), p, q,
        Provenance("two_dim_example", (("reading", reading),)))


def two_dim_reading_report(params: TwoDimExampleParams
                           ) -> dict[str, tuple[AlgebraInstance, CheckReport]]:
    """Build both readings of the ambiguous structure map and record
    each checker verdict, without guessing which one was intended."""
    out = {}
    for reading in ("e1", "e2"):
        inst = make_two_dim_example(params, reading=reading)
        out[reading] = (inst, check_bihom_associative(inst))
    return out


def embed_omega_as_bihom(a: AlgebraInstance) -> AlgebraInstance:
    """Attach explicit identity structure maps and the BiHom kind tag."""
    if not (a.p.is_identity() and a.q.is_identity()):
        raise ShapeMismatch("embedding applies to identity-structure instances")
    kind = (AlgebraKind.BIHOM_ASSOCIATIVE if a.kind in ASSOCIATIVE_KINDS
            else a.kind)
    ident = LinearFamily.identity(a.omega, a.dim)
    return new_instance(kind, a.omega, a.products, ident, ident,
                        Provenance("embed_omega_as_bihom"))


def zero_instance(kind: AlgebraKind, omega: SemigroupTable, dim: int,
                  p: LinearFamily | None = None,
                  q: LinearFamily | None = None) -> AlgebraInstance:
    """All products zero; passes every checker for any commuting p, q."""
    zero = BilinearFamily.zero(omega, dim)
    products = tuple((slot, zero) for slot in kind.product_slots)
    p = p or LinearFamily.identity(omega, dim)
    q = q or LinearFamily.identity(omega, dim)
    return new_instance(kind, omega, products, p, q, Provenance("zero_instance"))


def constant_product_instance(kind: AlgebraKind, omega: SemigroupTable,
                              tensors: dict[str, list[list[list]]]
                              ) -> AlgebraInstance:
    """Lift classical structure constants to a constant indexed family
    with identity structure maps."""
    dims = {len(t) for t in tensors.values()}
    dim = dims.pop()

    products = []
    for slot in kind.product_slots:
        cube = tensors[slot]
        products.append((slot, BilinearFamily.from_function(
            omega, dim, lambda a, b, i, j, cube=cube: cube[i][j])))
    ident = LinearFamily.identity(omega, dim)
    return new_instance(kind, omega, tuple(products), ident, ident,
                        Provenance("constant_product_instance"))


@dataclass(frozen=True)
class SearchConfig:
    """Bounds for brute-force searches over small-entry matrix families."""

    entries: tuple[Fraction, ...] = (Fraction(-1), Fraction(0), Fraction(1))
    weight: Fraction = Fraction(0)
    budget: int = DEFAULT_BUDGET
    target_count: int | None = None

    def __post_init__(self):
        if not self.entries:
            raise ValueError("entry set must be nonempty")
        object.__setattr__(self, "entries",
                           tuple(frac(v) for v in self.entries))
        object.__setattr__(self, "weight", frac(self.weight))


def _family_candidates(omega: SemigroupTable, dim: int, cfg: SearchConfig):
    """All matrix families with entries from the configured set, in
    deterministic lexicographic order."""
    cells = omega.order * dim * dim
    space = len(cfg.entries) ** cells
    if space > cfg.budget:
        raise BudgetExceeded(space, cfg.budget)
    per_matrix = dim * dim
    for assignment in itertools.product(cfg.entries, repeat=cells):
        mats = tuple(
            Matrix(dim, dim, assignment[a * per_matrix:(a + 1) * per_matrix])
            for a in omega.indices())
        yield LinearFamily(omega, dim, mats)


def brute_force_rb_search(a: AlgebraInstance,
                          cfg: SearchConfig) -> list[RotaBaxterFamily]:
    """All weight-cfg.weight operator families over the entry set that
    pass check_rota_baxter, in enumeration order."""
    found = []
    for fam in _family_candidates(a.omega, a.dim, cfg):
        rb = RotaBaxterFamily(fam, cfg.weight)
        if check_rota_baxter(a, rb, max_witnesses=1).passed:
            found.append(rb)
            if cfg.target_count is not None and len(found) >= cfg.target_count:
                break
    return found


def make_endomorphism_pairs(a: AlgebraInstance, cfg: SearchConfig
                            ) -> list[tuple[LinearFamily, LinearFamily]]:
    """Commuting endomorphism pairs suitable for twisting.

    Always starts with (id, id); found morphisms contribute (f, f) and
    the power pair (f, f o f), plus cross pairs that commute.
    """
    morphisms = []
    for fam in _family_candidates(a.omega, a.dim, cfg):
        if not fam.commutes_with(a.p)[0] or not fam.commutes_with(a.q)[0]:
            continue
        if check_morphism(fam, a, a, max_witnesses=1).passed:
            morphisms.append(fam)
            if cfg.target_count is not None and len(morphisms) >= cfg.target_count:
                break
    ident = LinearFamily.identity(a.omega, a.dim)
    pairs = [(ident, ident)]
    for f in morphisms:
        # a family may fail to commute with itself across indices
        if not f.commutes_with(f)[0]:
            continue
        pairs.append((f, f))
        pairs.append((f, f.compose(f)))
    for f, g in itertools.combinations(morphisms, 2):
        if f.commutes_with(g)[0]:
            pairs.append((f, g))
    return pairs
