"""Hand-coded classical (untwisted, unindexed) checkers and transforms.

These are deliberately independent of the library: plain structure
constant cubes t[i][j] -> coefficient list, evaluated on basis triples.
They serve as the oracle for the reduction law (trivial index semigroup,
identity structure maps).
"""

from fractions import Fraction


def apply(t, x, y):
    d = len(t)
    out = [Fraction(0)] * d
    for i in range(d):
        for j in range(d):
            if x[i] != 0 and y[j] != 0:
                for k in range(d):
                    out[k] += x[i] * y[j] * Fraction(t[i][j][k])
    return out


def basis(d, i):
    return [Fraction(1 if j == i else 0) for j in range(d)]


def add(x, y):
    return [a + b for a, b in zip(x, y)]


def sub(x, y):
    return [a - b for a, b in zip(x, y)]


def check_assoc(t):
    d = len(t)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = apply(t, basis(d, i), apply(t, basis(d, j), basis(d, k)))
                rhs = apply(t, apply(t, basis(d, i), basis(d, j)), basis(d, k))
                if lhs != rhs:
                    return False
    return True


def check_dendriform(prec, succ):
    d = len(prec)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x, y, z = basis(d, i), basis(d, j), basis(d, k)
                xy_p = apply(prec, x, y)
                xy_s = apply(succ, x, y)
                yz_p = apply(prec, y, z)
                yz_s = apply(succ, y, z)
                if apply(prec, xy_p, z) != apply(prec, x, add(yz_p, yz_s)):
                    return False
                if apply(prec, xy_s, z) != apply(succ, x, yz_p):
                    return False
                if apply(succ, x, yz_s) != apply(succ, add(xy_p, xy_s), z):
                    return False
    return True


def _associator(t, x, y, z):
    return sub(apply(t, apply(t, x, y), z), apply(t, x, apply(t, y, z)))


def check_prelie(t):
    d = len(t)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x, y, z = basis(d, i), basis(d, j), basis(d, k)
                if _associator(t, x, y, z) != _associator(t, y, x, z):
                    return False
    return True


def check_lie(t):
    d = len(t)
    for i in range(d):
        for j in range(d):
            x, y = basis(d, i), basis(d, j)
            if apply(t, x, y) != [-v for v in apply(t, y, x)]:
                return False
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x, y, z = basis(d, i), basis(d, j), basis(d, k)
                total = apply(t, x, apply(t, y, z))
                total = add(total, apply(t, y, apply(t, z, x)))
                total = add(total, apply(t, z, apply(t, x, y)))
                if any(v != 0 for v in total):
                    return False
    return True


def check_postlie(br, tri):
    if not check_lie(br):
        return False
    d = len(br)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x, y, z = basis(d, i), basis(d, j), basis(d, k)
                lhs = apply(tri, apply(br, x, y), z)
                rhs = sub(apply(tri, x, apply(tri, y, z)),
                          apply(tri, apply(tri, x, y), z))
                rhs = sub(rhs, apply(tri, y, apply(tri, x, z)))
                rhs = add(rhs, apply(tri, apply(tri, y, x), z))
                if lhs != rhs:
                    return False
                lhs = apply(tri, x, apply(br, y, z))
                rhs = add(apply(br, apply(tri, x, y), z),
                          apply(br, y, apply(tri, x, z)))
                if lhs != rhs:
                    return False
    return True


def check_zinbiel(t):
    d = len(t)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x, y, z = basis(d, i), basis(d, j), basis(d, k)
                lhs = apply(t, x, apply(t, y, z))
                rhs = add(apply(t, apply(t, x, y), z),
                          apply(t, apply(t, y, x), z))
                if lhs != rhs:
                    return False
    return True


def check_prepoisson(tri, star):
    if not check_prelie(tri) or not check_zinbiel(star):
        return False
    d = len(tri)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                x, y, z = basis(d, i), basis(d, j), basis(d, k)
                lhs = apply(star, sub(apply(tri, x, y), apply(tri, y, x)), z)
                rhs = sub(apply(tri, x, apply(star, y, z)),
                          apply(star, y, apply(tri, x, z)))
                if lhs != rhs:
                    return False
                lhs = apply(tri, add(apply(star, x, y), apply(star, y, x)), z)
                rhs = add(apply(star, x, apply(tri, y, z)),
                          apply(star, y, apply(tri, x, z)))
                if lhs != rhs:
                    return False
    return True


# transforms ---------------------------------------------------------


def _build(d, fn):
    return [[fn(i, j) for j in range(d)] for i in range(d)]


def apply_matrix(m, x):
    d = len(x)
    return [sum((Fraction(m[i][j]) * x[j] for j in range(d)), Fraction(0))
            for i in range(d)]


def commutator(t):
    d = len(t)
    return _build(d, lambda i, j: sub(apply(t, basis(d, i), basis(d, j)),
                                      apply(t, basis(d, j), basis(d, i))))


def rb_star(t, r, lam):
    d = len(t)

    def cell(i, j):
        x, y = basis(d, i), basis(d, j)
        out = apply(t, x, apply_matrix(r, y))
        out = add(out, apply(t, apply_matrix(r, x), y))
        return add(out, [Fraction(lam) * v for v in apply(t, x, y)])

    return _build(d, cell)


def rb_split(t, r, lam):
    d = len(t)
    prec = _build(d, lambda i, j: add(
        apply(t, basis(d, i), apply_matrix(r, basis(d, j))),
        [Fraction(lam) * v for v in apply(t, basis(d, i), basis(d, j))]))
    succ = _build(d, lambda i, j: apply(
        t, apply_matrix(r, basis(d, i)), basis(d, j)))
    return prec, succ


def dendriform_total(prec, succ):
    d = len(prec)
    return _build(d, lambda i, j: add(apply(prec, basis(d, i), basis(d, j)),
                                      apply(succ, basis(d, i), basis(d, j))))


def dendriform_to_prelie(prec, succ):
    d = len(prec)
    return _build(d, lambda i, j: sub(apply(succ, basis(d, i), basis(d, j)),
                                      apply(prec, basis(d, j), basis(d, i))))


def rb_bracket(t, r, lam):
    return rb_star(t, r, lam)  # same shape of formula on a bracket


def rb_triangle(t, r):
    d = len(t)
    return _build(d, lambda i, j: apply(t, apply_matrix(r, basis(d, i)),
                                        basis(d, j)))


def postlie_to_lie(br, tri):
    d = len(br)
    return _build(d, lambda i, j: add(
        sub(apply(tri, basis(d, i), basis(d, j)),
            apply(tri, basis(d, j), basis(d, i))),
        apply(br, basis(d, i), basis(d, j))))
