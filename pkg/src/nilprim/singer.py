"""Singer cycles, enveloping-algebra dimension, and the arithmetic
criteria for irreducibility / imprimitivity / primitivity of cyclic
subgroups of GL(n, q).
"""

from functools import lru_cache

from nilprim import linalg, matgrp
from nilprim.ff import FieldError, embed_subfield, make_field
from nilprim.matgrp import (MatrixGroup, divisors, identity, mat_mul, mat_pow,
                            vec_mat)


class RelativeExtension:
    """GF(q^s) as an s-dimensional space over GF(q), in the power basis
    {1, theta, ..., theta^(s-1)} of the big field's primitive element."""

    def __init__(self, F, E):
        if E.p != F.p or E.k % F.k != 0:
            raise FieldError("not an extension")
        self.F = F
        self.E = E
        self.s = E.k // F.k
        self.emb = embed_subfield(F, E)
        p = F.p
        self.Fp = make_field(p, 1)
        theta = E.primitive
        self.theta_pows = [E.pow(theta, i) for i in range(self.s)]
        # GF(p)-basis of E indexed (power i, F-coefficient digit t)
        rows = []
        for tp in self.theta_pows:
            for t in range(F.k):
                b = self.emb(F.encode(tuple(1 if u == t else 0 for u in range(F.k))))
                rows.append(E.decode(E.mul(tp, b)))
        M = tuple(tuple(r) for r in rows)
        Minv = linalg.solve_inverse(self.Fp, M)
        assert Minv is not None
        self._Minv = Minv

    def coords(self, z):
        """Coordinates of z in the power basis, as a tuple of s F-elements."""
        x = vec_mat(self.Fp, self.E.decode(z), self._Minv)
        k = self.F.k
        return tuple(self.F.encode(tuple(x[i * k:(i + 1) * k])) for i in range(self.s))

    def map_matrix(self, fn):
        """Matrix (row convention) of an F-linear map fn: E -> E."""
        return tuple(self.coords(fn(tp)) for tp in self.theta_pows)

    def mult_matrix(self, alpha):
        """Matrix of multiplication by alpha on E, over F."""
        E = self.E
        return tuple(self.coords(E.mul(tp, alpha)) for tp in self.theta_pows)


@lru_cache(maxsize=None)
def relative_extension(F, E):
    return RelativeExtension(F, E)


@lru_cache(maxsize=None)
def extension_field(F, n):
    """GF(q^n) over GF(q) = F."""
    return make_field(F.p, F.k * n)


def singer_cycle(n, F):
    """Companion matrix of the minimal polynomial over GF(q) of a primitive
    element of GF(q^n); a cyclic generator of order q^n - 1."""
    if n < 1:
        raise FieldError("degree must be positive")
    if n == 1:
        return ((F.primitive,),)
    E = extension_field(F, n)
    rel = relative_extension(F, E)
    theta = E.primitive
    # minimal polynomial over F: product of (X - theta^(q^i))
    q = F.q
    poly = [1]  # coefficients in E, little-endian, monic
    conj = theta
    for _ in range(n):
        out = [0] * (len(poly) + 1)
        nc = E.neg(conj)
        for i, a in enumerate(poly):
            out[i] = E.add(out[i], E.mul(a, nc))
            out[i + 1] = E.add(out[i + 1], a)
        poly = out
        conj = E.pow(conj, q)
    assert conj == theta and len(poly) == n + 1 and poly[-1] == 1
    emb = rel.emb
    coeffs = [emb.inverse(c) for c in poly[:-1]]
    rows = [tuple(1 if j == i + 1 else 0 for j in range(n)) for i in range(n - 1)]
    rows.append(tuple(F.neg(c) for c in coeffs))
    return tuple(rows)


def enveloping_dimension(F, gens, cap=None):
    """Dimension over F of the linear span of the group generated by gens,
    by spanning-set saturation."""
    n = len(gens[0])
    if cap is None:
        cap = n * n
    basis = linalg.SpanBasis(F, n * n)
    mats = []

    def flat(M):
        return tuple(x for row in M for x in row)

    ident = identity(F, n)
    basis.add(flat(ident))
    mats.append(ident)
    frontier = [ident]
    while frontier:
        nxt = []
        for B in frontier:
            for g in gens:
                C = mat_mul(F, B, g)
                if basis.add(flat(C)):
                    mats.append(C)
                    nxt.append(C)
        frontier = nxt
    return basis.dim


def is_irreducible_cyclic(d, n, q):
    """Order criterion: a cyclic subgroup of order d of a Singer torus of
    GL(n, q) is irreducible iff d divides no q^m - 1 with m | n proper."""
    if (q**n - 1) % d != 0:
        raise ValueError(f"{d} does not divide q^n - 1 = {q**n - 1}")
    return all((q**m - 1) % d != 0 for m in divisors(n) if m < n)


def is_imprimitive_cyclic(d, n, q):
    """Order criterion: irreducible cyclic of order d is imprimitive iff
    d divides k(q^(n/k) - 1) for some prime k dividing n."""
    if not is_irreducible_cyclic(d, n, q):
        raise ValueError(f"order {d} is not irreducible for GL({n},{q})")
    primes = [k for k in divisors(n) if k > 1 and len(divisors(k)) == 2]
    return any((k * (q ** (n // k) - 1)) % d == 0 for k in primes)


def is_primitive_cyclic(d, n, q):
    if (q**n - 1) % d != 0:
        raise ValueError(f"{d} does not divide q^n - 1 = {q**n - 1}")
    return is_irreducible_cyclic(d, n, q) and not is_imprimitive_cyclic(d, n, q)


def canonical_abelian(d, n, F):
    """The conjugacy-class representative of irreducible abelian subgroups
    of order d: the d-th power quotient of the Singer cycle."""
    q = F.q
    if (q**n - 1) % d != 0:
        raise ValueError(f"{d} does not divide q^n - 1")
    if not is_irreducible_cyclic(d, n, q):
        raise ValueError(f"order {d} is reducible for GL({n},{q})")
    S = singer_cycle(n, F)
    return MatrixGroup(F, [mat_pow(F, S, (q**n - 1) // d)])


def singer_normalizer_frobenius(n, F):
    """Matrix g with g^-1 S g = S^q for the Singer cycle S: the q-power
    map on GF(q^n) written in the companion (power) basis."""
    if n < 2:
        raise FieldError("degree must be at least 2")
    E = extension_field(F, n)
    rel = relative_extension(F, E)
    q = F.q
    return rel.map_matrix(lambda z: E.pow(z, q) if z else 0)
