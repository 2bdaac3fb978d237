"""Matrices over a FieldCtx, group closure, and recognition of the
nilpotent isomorphism types (cyclic, Q8, generalised quaternion, dihedral,
semidihedral) x odd cyclic.

A matrix is a tuple of row tuples of encoded field elements; the tuple
itself is the canonical hashable key used in closures and set comparisons.
"""

import math
from dataclasses import dataclass

from nilprim import linalg
from nilprim.ff import FieldError

DEFAULT_CLOSURE_CAP = 2**20

KIND_TRIVIAL = "trivial"
KIND_CYCLIC = "cyclic"
KIND_Q8 = "quaternion8"
KIND_GQ = "generalised_quaternion"
KIND_DH = "dihedral"
KIND_SD = "semidihedral"

MAXIMAL_CLASS_KINDS = (KIND_Q8, KIND_GQ, KIND_DH, KIND_SD)


class ClosureCapError(RuntimeError):
    pass


class NotInFamilyError(ValueError):
    """Group is outside the classified nilpotent family."""


# ---------------------------------------------------------------------------
# matrix primitives
# ---------------------------------------------------------------------------

def identity(F, n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def scalar_matrix(F, n, c):
    return tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(F, A, B):
    n = len(A)
    m = len(B[0])
    inner = len(B)
    Bcols = tuple(zip(*B))
    add, mul = F.add, F.mul
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            Bj = Bcols[j]
            acc = 0
            for k in range(inner):
                a = Ai[k]
                if a:
                    acc = add(acc, mul(a, Bj[k]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_neg(F, A):
    return tuple(tuple(F.neg(x) for x in row) for row in A)


def mat_pow(F, A, e):
    n = len(A)
    if e < 0:
        A = mat_inv(F, A)
        e = -e
    result = identity(F, n)
    while e:
        if e & 1:
            result = mat_mul(F, result, A)
        A = mat_mul(F, A, A)
        e >>= 1
    return result


def mat_inv(F, A):
    inv = linalg.solve_inverse(F, A)
    if inv is None:
        raise FieldError("matrix is not invertible")
    return inv


def is_invertible(F, A):
    return linalg.solve_inverse(F, A) is not None


def vec_mat(F, v, A):
    """Row vector times matrix."""
    n = len(A)
    add, mul = F.add, F.mul
    out = []
    for j in range(len(A[0])):
        acc = 0
        for i in range(n):
            x = v[i]
            if x:
                acc = add(acc, mul(x, A[i][j]))
        out.append(acc)
    return tuple(out)


def mat_to_str(F, A):
    """Row-major text form: rows joined by ';', coefficients by ','."""
    return ";".join(",".join(F.elem_to_str(x) for x in row) for row in A)


def mat_from_str(F, s):
    rows = []
    for row_s in s.split(";"):
        flat = [int(t) for t in row_s.split(",")]
        if len(flat) % F.k != 0:
            raise FieldError("row length is not a multiple of the field degree")
        row = []
        for i in range(0, len(flat), F.k):
            row.append(F.encode(tuple(flat[i:i + F.k])))
        rows.append(tuple(row))
    return tuple(rows)


def matrix_order(F, M, cap=DEFAULT_CLOSURE_CAP):
    """Least e >= 1 with M^e = 1."""
    n = len(M)
    if not is_invertible(F, M):
        raise FieldError("matrix is not invertible")
    ident = identity(F, n)
    acc = M
    e = 1
    while acc != ident:
        acc = mat_mul(F, acc, M)
        e += 1
        if e > cap:
            raise ClosureCapError(f"order exceeds cap {cap}")
    return e


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

def close(F, gens, cap=DEFAULT_CLOSURE_CAP):
    """Full multiplicative closure of invertible generators, breadth-first.

    Deterministic element order: identity first, then discovery order.
    """
    n = len(gens[0]) if gens else 0
    for g in gens:
        if not is_invertible(F, g):
            raise FieldError("generator is not invertible")
    ident = identity(F, n)
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mat_mul(F, x, g)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise ClosureCapError(f"closure exceeds cap {cap}")
        frontier = nxt
    return tuple(order)


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsoType:
    """Isomorphism-type descriptor: Sylow 2 kind and order, odd cyclic order."""
    sylow2_kind: str
    sylow2_order: int
    odd_order: int

    def in_classified_family(self):
        k, s = self.sylow2_kind, self.sylow2_order
        if k == KIND_Q8:
            return s == 8
        if k in (KIND_GQ, KIND_DH, KIND_SD):
            return s >= 16
        return k in (KIND_TRIVIAL, KIND_CYCLIC)

    def as_dict(self):
        return {"sylow2_kind": self.sylow2_kind,
                "sylow2_order": self.sylow2_order,
                "odd_order": self.odd_order}


class MatrixGroup:
    """Generator list plus lazily computed element closure."""

    def __init__(self, F, generators, cap=DEFAULT_CLOSURE_CAP):
        if not generators:
            raise FieldError("need at least one generator (use the identity)")
        n = len(generators[0])
        for g in generators:
            if len(g) != n or any(len(r) != n for r in g):
                raise FieldError("generators must be square of equal degree")
        self.F = F
        self.n = n
        self.generators = tuple(tuple(tuple(row) for row in g) for g in generators)
        self.cap = cap
        self._elements = None
        self._element_set = None
        self._orders = None

    @property
    def elements(self):
        if self._elements is None:
            self._elements = close(self.F, self.generators, self.cap)
            self._element_set = frozenset(self._elements)
        return self._elements

    @property
    def element_set(self):
        self.elements
        return self._element_set

    @property
    def order(self):
        return len(self.elements)

    def element_orders(self):
        if self._orders is None:
            F = self.F
            ident = identity(F, self.n)
            orders = {ident: 1}
            for g in self.elements:
                if g in orders:
                    continue
                # walk the cyclic group of g, labelling every power
                powers = [g]
                acc = g
                while True:
                    acc = mat_mul(F, acc, g)
                    if acc == ident:
                        break
                    powers.append(acc)
                e = len(powers) + 1
                for i, h in enumerate(powers, start=1):
                    if h not in orders:
                        orders[h] = e // math.gcd(e, i)
            self._orders = orders
        return self._orders

    def is_abelian(self):
        F = self.F
        gens = self.generators
        return all(mat_mul(F, a, b) == mat_mul(F, b, a)
                   for i, a in enumerate(gens) for b in gens[i + 1:])

    def contains(self, M):
        return M in self.element_set

    def conjugate(self, X):
        """The group X^-1 G X."""
        F = self.F
        Xi = mat_inv(F, X)
        return MatrixGroup(F, [mat_mul(F, mat_mul(F, Xi, g), X)
                               for g in self.generators], cap=self.cap)

    def __repr__(self):
        return f"MatrixGroup(n={self.n}, gens={len(self.generators)})"


def cyclic_group(F, M, cap=DEFAULT_CLOSURE_CAP):
    return MatrixGroup(F, [M], cap=cap)


# ---------------------------------------------------------------------------
# structure: Sylow decomposition, isotype recognition, derived subgroup
# ---------------------------------------------------------------------------

def _two_part(n):
    t = 1
    while n % 2 == 0:
        t *= 2
        n //= 2
    return t


def decompose_2_odd(G):
    """(Sylow 2-subgroup, odd cyclic Hall subgroup) of a nilpotent group.

    Raises NotInFamilyError if the 2-elements or odd elements fail to form
    subgroups (G not nilpotent) or the odd part is not cyclic.
    """
    F = G.F
    orders = G.element_orders()
    two_elems = [g for g in G.elements if _two_part(orders[g]) == orders[g]]
    odd_elems = [g for g in G.elements if orders[g] % 2 == 1]
    n2, nodd = len(two_elems), len(odd_elems)
    if n2 * nodd != G.order:
        raise NotInFamilyError("group is not nilpotent: 2-part times odd part "
                               f"is {n2}*{nodd} != {G.order}")
    two_set = frozenset(two_elems)
    # closure check: the p-elements of a nilpotent group form the Sylow
    for a in two_elems:
        for b in G.generators:
            c = mat_mul(F, mat_mul(F, mat_inv(F, b), a), b)
            if c not in two_set:
                raise NotInFamilyError("2-elements are not closed under conjugation")
    for i, a in enumerate(two_elems):
        for b in two_elems[i:]:
            if mat_mul(F, a, b) not in two_set:
                raise NotInFamilyError("group is not nilpotent: 2-elements "
                                       "are not multiplicatively closed")
    odd_gen = max(odd_elems, key=lambda g: (orders[g], g))
    if orders[odd_gen] != nodd:
        raise NotInFamilyError("odd part is not cyclic")
    sylow2 = MatrixGroup(F, two_elems, cap=G.cap)
    odd = MatrixGroup(F, [odd_gen], cap=G.cap)
    return sylow2, odd


def recognize_isotype(G):
    """IsoType of a nilpotent group with cyclic odd part.

    The Sylow 2-subgroup must be trivial, cyclic, or of maximal class with
    a cyclic subgroup of index 2; anything else raises NotInFamilyError.
    """
    F = G.F
    sylow2, odd = decompose_2_odd(G)
    odd_order = odd.order
    s2 = sylow2.order
    if s2 == 1:
        return IsoType(KIND_TRIVIAL, 1, odd_order)
    orders = {g: G.element_orders()[g] for g in sylow2.elements}
    max_order = max(orders.values())
    if max_order == s2:
        return IsoType(KIND_CYCLIC, s2, odd_order)
    if max_order * 2 != s2:
        raise NotInFamilyError("Sylow 2-subgroup has no cyclic subgroup of index 2")
    # cyclic index-2 subgroup: maximal order, then least serialisation
    a = min((g for g in sylow2.elements if orders[g] == max_order),
            key=lambda g: mat_to_str(F, g))
    w = max_order
    powers = {}
    acc = identity(F, G.n)
    for i in range(w):
        powers[acc] = i
        acc = mat_mul(F, acc, a)
    g = min((h for h in sylow2.elements if h not in powers),
            key=lambda h: mat_to_str(F, h))
    conj = mat_mul(F, mat_mul(F, mat_inv(F, g), a), g)
    if conj not in powers:
        raise NotInFamilyError("cyclic index-2 subgroup is not normal")
    e = powers[conj]
    g2 = mat_mul(F, g, g)
    central_involution = mat_pow(F, a, w // 2)
    if e == w - 1:
        if g2 == identity(F, G.n):
            return IsoType(KIND_DH, s2, odd_order)
        if g2 == central_involution:
            kind = KIND_Q8 if s2 == 8 else KIND_GQ
            return IsoType(kind, s2, odd_order)
        raise NotInFamilyError("inverting outside element with unexpected square")
    if w >= 8 and e == w // 2 - 1:
        return IsoType(KIND_SD, s2, odd_order)
    raise NotInFamilyError(f"Sylow 2-subgroup is not of maximal class "
                           f"(conjugation exponent {e} on a cyclic subgroup of order {w})")


def commutator(F, a, b):
    return mat_mul(F, mat_mul(F, mat_inv(F, a), mat_inv(F, b)), mat_mul(F, a, b))


def derived_subgroup(G):
    """Subgroup generated by generator commutators, normally closed."""
    F = G.F
    gens = G.generators
    comms = []
    seen = set()
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            c = commutator(F, a, b)
            if c not in seen:
                seen.add(c)
                comms.append(c)
    if not comms:
        return MatrixGroup(F, [identity(F, G.n)], cap=G.cap)
    # normal closure under conjugation by generators
    frontier = list(comms)
    while frontier:
        nxt = []
        for c in frontier:
            for g in gens:
                d = mat_mul(F, mat_mul(F, mat_inv(F, g), c), g)
                if d not in seen:
                    seen.add(d)
                    comms.append(d)
                    nxt.append(d)
        frontier = nxt
    return MatrixGroup(F, comms, cap=G.cap)


def is_cyclic(G):
    orders = G.element_orders()
    return max(orders.values()) == G.order


# ---------------------------------------------------------------------------
# subgroup enumeration
# ---------------------------------------------------------------------------

GENERIC_SUBGROUP_CAP = 512


def _closure_indices(gen_idx, mul_row):
    """Closure of a set of element indices under the Cayley table."""
    seen = set(gen_idx)
    seen.add(0)  # identity index
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            row = mul_row[x]
            for g in gen_idx:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def all_subgroups_generic(G):
    """Every subgroup of G, as frozensets of matrices.  Cayley-table BFS;
    only feasible for small closed groups."""
    elems = G.elements
    if len(elems) > GENERIC_SUBGROUP_CAP:
        raise ClosureCapError(
            f"generic subgroup enumeration capped at {GENERIC_SUBGROUP_CAP}")
    F = G.F
    index = {g: i for i, g in enumerate(elems)}
    mul_row = [[index[mat_mul(F, a, b)] for b in elems] for a in elems]
    trivial = frozenset([0])
    subs = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            for gi in range(len(elems)):
                if gi in H:
                    continue
                K = _closure_indices(set(H) | {gi}, mul_row)
                if K not in subs:
                    subs.add(K)
                    nxt.append(K)
        frontier = nxt
    return [frozenset(elems[i] for i in H) for H in subs]


def _cyclic_subgroups_of_cyclic(G):
    """Subgroups of a cyclic group: one per divisor of the order."""
    F = G.F
    orders = G.element_orders()
    gen = max(G.elements, key=lambda g: (orders[g], g))
    N = G.order
    out = []
    for d in sorted(divisors(N)):
        g = mat_pow(F, gen, N // d)
        sub = set()
        acc = identity(F, G.n)
        for _ in range(d):
            sub.add(acc)
            acc = mat_mul(F, acc, g)
        out.append(frozenset(sub))
    return out


def all_subgroups(G):
    """All subgroups of G.

    Uses the coprime direct-product decomposition for nilpotent groups
    (every subgroup of G2 x C with gcd(|G2|, |C|) = 1 is a product), the
    divisor lattice for cyclic groups, and capped Cayley BFS otherwise.
    """
    if is_cyclic(G):
        return _cyclic_subgroups_of_cyclic(G)
    F = G.F
    try:
        sylow2, odd = decompose_2_odd(G)
    except NotInFamilyError:
        return all_subgroups_generic(G)
    subs2 = all_subgroups_generic(sylow2)
    subs_odd = _cyclic_subgroups_of_cyclic(odd)
    out = []
    for P in subs2:
        for Q in subs_odd:
            out.append(frozenset(mat_mul(F, s, c) for s in P for c in Q))
    return out


def subgroups_of_index(G, k):
    """Subgroups of index k, as frozensets of matrices."""
    if G.order % k != 0:
        return []
    target = G.order // k
    return [H for H in all_subgroups(G) if len(H) == target]


def small_generating_set(F, n, elems):
    """A small generating set for a subgroup given by its element list."""
    gens = []
    span = {identity(F, n)}
    total = len(elems)
    for g in sorted(elems):
        if g in span:
            continue
        gens.append(g)
        frontier = list(span)
        span.add(g)
        frontier.append(g)
        while frontier:
            nxt = []
            for x in frontier:
                for h in gens:
                    y = mat_mul(F, x, h)
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(span) == total:
            break
    return gens if gens else [identity(F, n)]


def subgroup_to_group(G, H):
    """Wrap a frozenset subgroup as a MatrixGroup with its elements cached."""
    elems = sorted(H)
    gens = small_generating_set(G.F, G.n, elems)
    sub = MatrixGroup(G.F, gens, cap=G.cap)
    sub._elements = tuple(elems)
    sub._element_set = frozenset(elems)
    return sub


def divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
