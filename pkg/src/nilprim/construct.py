"""Explicit generator constructions: the semidihedral Sylow 2-subgroup of
GL(2, q), dihedral / generalised quaternion subgroups, degree-2 nilpotent
primitive groups, the degree-2m Q8 x C construction, and the Galois
(restriction of scalars) blow-up.
"""

import itertools

from nilprim import matgrp, singer
from nilprim.ff import (FieldError, embed_subfield, make_field,
                        sum_of_two_squares_minus_one)
from nilprim.matgrp import (KIND_DH, KIND_GQ, KIND_Q8, KIND_SD, MatrixGroup,
                            identity, mat_mul, mat_neg, mat_pow,
                            recognize_isotype, scalar_matrix)


class InadmissibleError(ValueError):
    """Requested parameters fall outside the classified family."""


def two_adic_valuation_part(n):
    """Largest t with 2^t | n."""
    t = 0
    while n % 2 == 0:
        t += 1
        n //= 2
    return t


def require_q3mod4(F):
    if F.q % 4 != 3:
        raise InadmissibleError(f"q = {F.q} is not congruent to 3 mod 4")


def sylow2_gl2(F):
    """Semidihedral Sylow 2-subgroup generators (x, y) of GL(2, q) and the
    exponent t with 2^t exactly dividing q + 1; the subgroup <x, y> has
    order 2^(t+2), |x| = 2^(t+1), |y| = 2."""
    require_q3mod4(F)
    q = F.q
    t = two_adic_valuation_part(q + 1)
    E = make_field(F.p, 2 * F.k)
    emb = embed_subfield(F, E)
    omega = E.primitive
    norm = E.pow(omega, q + 1)            # lies in the embedded GF(q)
    trace = E.add(omega, E.pow(omega, q))
    norm_f = emb.inverse(norm)
    trace_f = emb.inverse(trace)
    M = ((0, 1), (F.neg(norm_f), trace_f))
    x = mat_pow(F, M, (q * q - 1) // 2 ** (t + 1))
    y = ((1, 0), (trace_f, F.neg(1)))
    return x, y, t


def maximal_class_subgroup(F, kind, s):
    """Dihedral or generalised quaternion subgroup of GL(2, q) of order 2^s,
    3 <= s <= t + 1, built inside the semidihedral Sylow 2-subgroup."""
    if kind not in (KIND_DH, KIND_GQ):
        raise InadmissibleError(f"kind must be dihedral or generalised "
                                f"quaternion, got {kind}")
    x, y, t = sylow2_gl2(F)
    if not 3 <= s <= t + 1:
        raise InadmissibleError(f"order 2^{s} out of range 3 <= s <= {t + 1}")
    a = mat_pow(F, x, 2 ** (t + 2 - s))   # order 2^(s-1), inverted by y
    if kind == KIND_DH:
        gens = [a, y]
    else:
        # b = x*y squares to the central involution x^(2^t) and inverts a
        gens = [a, mat_mul(F, x, y)]
    return MatrixGroup(F, gens)


def semidihedral_sylow_group(F):
    x, y, t = sylow2_gl2(F)
    return MatrixGroup(F, [x, y])


def _admissible_deg2_kinds(t):
    """(kind, s) pairs admissible as the 2-part of a nilpotent primitive
    subgroup of GL(2, q); D8 (s = 3 dihedral) is monomial and excluded."""
    out = [(KIND_Q8, 3)]
    for s in range(4, t + 2):
        out.append((KIND_GQ, s))
        out.append((KIND_DH, s))
    out.append((KIND_SD, t + 2))
    return out


def nilprim_gl2(F, kind, s=None, c_order=1):
    """Nonabelian nilpotent primitive subgroup G2 x C of GL(2, q): G2 of the
    requested kind and order 2^s, C the scalar subgroup of odd order c_order."""
    require_q3mod4(F)
    q = F.q
    t = two_adic_valuation_part(q + 1)
    if kind == KIND_Q8:
        s = 3
    elif kind == KIND_SD and s is None:
        s = t + 2
    if s is None:
        raise InadmissibleError("order exponent s is required for this kind")
    if kind == KIND_DH and s == 3:
        raise InadmissibleError(
            "D8 is a Sylow 2-subgroup of the monomial subgroup, hence "
            "imprimitive; dihedral groups need order at least 16 here")
    if (kind, s) not in _admissible_deg2_kinds(t):
        raise InadmissibleError(
            f"({kind}, 2^{s}) is not admissible in GL(2,{q}) (t = {t})")
    if c_order % 2 == 0 or (q - 1) % c_order != 0:
        raise InadmissibleError(
            f"scalar order {c_order} must be odd and divide q - 1 = {q - 1}")
    if kind == KIND_SD:
        g2 = semidihedral_sylow_group(F)
    elif kind == KIND_Q8:
        g2 = maximal_class_subgroup(F, KIND_GQ, 3)
    else:
        g2 = maximal_class_subgroup(F, kind, s)
    gens = list(g2.generators)
    if c_order > 1:
        xi = F.pow(F.primitive, (q - 1) // c_order)
        gens.append(scalar_matrix(F, 2, xi))
    return MatrixGroup(F, gens)


def _block2(F, m, blocks):
    """Assemble a 2m x 2m matrix from four m x m blocks [[A,B],[C,D]]."""
    (A, B), (C, D) = blocks
    rows = []
    for i in range(m):
        rows.append(tuple(A[i]) + tuple(B[i]))
    for i in range(m):
        rows.append(tuple(C[i]) + tuple(D[i]))
    return tuple(rows)


def _algebra_sum_of_squares(F, x, m):
    """(e, f) with e^2 + f^2 = -1 inside the field F[x], x an irreducible
    m x m matrix; deterministic coefficient-lexicographic scan."""
    powers = [identity(F, m)]
    for _ in range(m - 1):
        powers.append(mat_mul(F, powers[-1], x))

    def combo(coeffs):
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = 0
                for c, P in zip(coeffs, powers):
                    if c:
                        acc = F.add(acc, F.mul(c, P[i][j]))
                row.append(acc)
            rows.append(tuple(row))
        return tuple(rows)

    sqrt = {}
    for coeffs in itertools.product(range(F.q), repeat=m):
        el = combo(coeffs)
        sq = mat_mul(F, el, el)
        if sq not in sqrt:
            sqrt[sq] = el
    minus_one = mat_neg(F, identity(F, m))
    for coeffs in itertools.product(range(F.q), repeat=m):
        e = combo(coeffs)
        target = _mat_sub(F, minus_one, mat_mul(F, e, e))
        if target in sqrt:
            return e, sqrt[target]
    raise FieldError("no sum-of-two-squares decomposition found")  # unreachable


def _mat_sub(F, A, B):
    return tuple(tuple(F.sub(a, b) for a, b in zip(ra, rb))
                 for ra, rb in zip(A, B))


def q8_times_c(m, F, c_order):
    """Q8 x C_{c_order} <= GL(2m, q): the case-2 construction with an
    abelian imprimitive index-2 subgroup.

    a and g are 2x2 block matrices [[0,1],[-1,0]] and [[e,f],[f,-e]] with
    e, f in the field generated by the primitive cyclic block x, solving
    e^2 + f^2 = -1; C is generated by diag(x, x).
    """
    require_q3mod4(F)
    if m % 2 == 0 or m == 1:
        raise InadmissibleError(f"m must be odd and greater than 1, got {m}")
    q = F.q
    if (q ** m - 1) % c_order != 0 or not singer.is_primitive_cyclic(c_order, m, q):
        raise InadmissibleError(
            f"order {c_order} is not primitive cyclic for GL({m},{q})")
    x = singer.canonical_abelian(c_order, m, F).generators[0]
    e, f = _algebra_sum_of_squares(F, x, m)
    zero = tuple(tuple(0 for _ in range(m)) for _ in range(m))
    one = identity(F, m)
    a = _block2(F, m, ((zero, one), (mat_neg(F, one), zero)))
    g = _block2(F, m, ((e, f), (f, mat_neg(F, e))))
    c = _block2(F, m, ((x, zero), (zero, x)))
    return MatrixGroup(F, [a, g, c])


def galois_blowup(H, F_base):
    """Restriction of scalars: rewrite a degree-r group over GF(q^s) as a
    degree r*s group over GF(q) by replacing each entry with its
    multiplication matrix in the power basis of the extension."""
    E = H.F
    if E.p != F_base.p or E.k % F_base.k != 0 or E.k == F_base.k:
        raise FieldError("group field is not a proper extension of the base")
    rel = singer.relative_extension(F_base, E)
    s = rel.s
    r = H.n
    mult = {}

    def mm(alpha):
        if alpha not in mult:
            mult[alpha] = rel.mult_matrix(alpha)
        return mult[alpha]

    gens = []
    for M in H.generators:
        rows = [[None] * r for _ in range(r)]
        for i in range(r):
            for j in range(r):
                rows[i][j] = mm(M[i][j])
        big = []
        for i in range(r):
            for u in range(s):
                big.append(tuple(x for j in range(r) for x in rows[i][j][u]))
        gens.append(tuple(big))
    return MatrixGroup(F_base, gens)


def nilprim_gl2m(m, F, kind, s=None, c_order=1):
    """Degree-2m nilpotent primitive group: the degree-2 construction over
    GF(q^m) blown up to GL(2m, q), kept only if irreducible over GF(q) and
    primitive."""
    from nilprim import classify
    require_q3mod4(F)
    if m % 2 == 0 or m == 1:
        raise InadmissibleError(f"m must be odd and greater than 1, got {m}")
    E = make_field(F.p, F.k * m)
    H = nilprim_gl2(E, kind, s, c_order)
    G = galois_blowup(H, F)
    dim = singer.enveloping_dimension(F, G.generators)
    if dim != 4 * m:
        raise InadmissibleError(
            f"blow-up is reducible over GF({F.q}) (enveloping dimension "
            f"{dim} != {4 * m}): the degree-2 group is realisable over a "
            f"proper subfield")
    verdict = classify.is_nilpotent_primitive(G)
    if verdict.verdict != "primitive":
        raise InadmissibleError(f"blow-up is not primitive: {verdict.verdict}")
    return G
