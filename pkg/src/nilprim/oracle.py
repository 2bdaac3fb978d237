"""Independent brute-force verifiers: spinning, block-system enumeration,
absolute irreducibility, centraliser dimension, conjugacy search.

These are the ground truth against which the arithmetic criteria are
tested; they never consult the criteria themselves.
"""

import itertools
from dataclasses import dataclass, field

from nilprim import linalg
from nilprim.matgrp import (all_subgroups, divisors, mat_mul, mat_inv,
                            subgroup_to_group, vec_mat)

VECTOR_SWEEP_CAP = 10**7
CONJUGACY_BUDGET = 10**6


class OracleCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^n in canonical reduced-echelon form."""
    n: int
    basis: tuple  # rref rows
    dim: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "dim", len(self.basis))


def _canonical(F, rows):
    return tuple(linalg.rref(F, list(rows)))


def spin(F, v, gens):
    """Smallest subspace containing v invariant under all gens."""
    n = len(v)
    basis = linalg.SpanBasis(F, n)
    basis.add(v)
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = vec_mat(F, w, g)
                if basis.add(u):
                    nxt.append(u)
        frontier = nxt
    return Subspace(n, basis.rref_rows())


def line_representatives(F, n):
    """One vector per projective point: first nonzero coordinate is 1."""
    for lead in range(n):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(F.q), repeat=n - lead - 1):
            yield prefix + tail


def all_nonzero_vectors(F, n):
    for v in itertools.product(range(F.q), repeat=n):
        if any(v):
            yield v


def is_irreducible_bruteforce(G, mode="lines"):
    """True iff every nonzero vector spins to the full space.

    mode "lines" sweeps one representative per projective point (sufficient:
    spin is invariant under scaling); mode "vectors" sweeps them all.
    """
    F, n = G.F, G.n
    if F.q**n > VECTOR_SWEEP_CAP:
        raise OracleCapError(f"vector sweep of size {F.q**n} exceeds cap")
    sweep = line_representatives(F, n) if mode == "lines" else all_nonzero_vectors(F, n)
    gens = G.generators
    for v in sweep:
        if spin(F, v, gens).dim < n:
            return False
    return True


@dataclass(frozen=True)
class BlockSystem:
    """Imprimitivity system: components permuted by each generator."""
    components: tuple           # of Subspace, in canonical sorted order
    permutations: tuple         # per generator, tuple of component indices

    @property
    def size(self):
        return len(self.components)


def _image_subspace(F, sub, g):
    return Subspace(sub.n, _canonical(F, [vec_mat(F, r, g) for r in sub.basis]))


def _direct_sum_is_full(F, comps, n):
    rows = [r for c in comps for r in c.basis]
    if sum(c.dim for c in comps) != n:
        return False
    return linalg.rank(F, rows) == n


def find_block_systems(G):
    """Complete list of imprimitivity systems of an irreducible group.

    For each divisor k > 1 of the degree: every system of size k arises by
    spinning a vector under an index-k subgroup (the component stabiliser)
    and taking the orbit of the resulting minimal submodule.
    """
    F, n = G.F, G.n
    systems = {}
    for k in divisors(n):
        if k == 1 or G.order % k != 0:
            continue
        target_dim = n // k
        for H in _index_k_subgroups(G, k):
            Hgens = _small_generating_set(G, H)
            seen_subs = set()
            for v in line_representatives(F, n):
                U = spin(F, v, Hgens)
                if U.dim != target_dim or U.basis in seen_subs:
                    continue
                seen_subs.add(U.basis)
                system = _orbit_system(G, U, k)
                if system is not None:
                    key = frozenset(c.basis for c in system.components)
                    systems.setdefault(key, system)
    return sorted(systems.values(), key=lambda s: (s.size, s.components[0].basis))


def _orbit_system(G, U, k):
    """Orbit of U under G if it forms a size-k direct-sum decomposition."""
    F, n = G.F, G.n
    comps = {U.basis: U}
    frontier = [U]
    while frontier:
        nxt = []
        for W in frontier:
            for g in G.generators:
                img = _image_subspace(F, W, g)
                if img.basis not in comps:
                    if len(comps) >= k:
                        return None
                    comps[img.basis] = img
                    nxt.append(img)
        frontier = nxt
    if len(comps) != k:
        return None
    ordered = sorted(comps.values(), key=lambda c: c.basis)
    if not _direct_sum_is_full(F, ordered, n):
        return None
    index = {c.basis: i for i, c in enumerate(ordered)}
    perms = []
    for g in G.generators:
        perms.append(tuple(index[_image_subspace(F, c, g).basis] for c in ordered))
    return BlockSystem(tuple(ordered), tuple(perms))


def _index_k_subgroups(G, k):
    if G.order % k != 0:
        return []
    target = G.order // k
    return [H for H in all_subgroups(G) if len(H) == target]


def _small_generating_set(G, H):
    from nilprim.matgrp import small_generating_set
    return small_generating_set(G.F, G.n, sorted(H))


def is_absolutely_irreducible(G):
    """Burnside criterion: the enveloping algebra is the full matrix algebra."""
    from nilprim.singer import enveloping_dimension
    return enveloping_dimension(G.F, G.generators) == G.n * G.n


def centralizer_basis(G):
    """Basis of {X : Xg = gX for all generators g} in Mat(n, F)."""
    F, n = G.F, G.n
    rows = []
    for g in G.generators:
        # (XG - GX)[r][c] = sum_j X[r][j] g[j][c] - g[r][j] X[j][c]
        for r in range(n):
            for c in range(n):
                coeff = [0] * (n * n)
                for j in range(n):
                    coeff[r * n + j] = F.add(coeff[r * n + j], g[j][c])
                    coeff[j * n + c] = F.sub(coeff[j * n + c], g[r][j])
                rows.append(tuple(coeff))
    sols = linalg.nullspace(F, rows, n * n)
    return [tuple(tuple(s[i * n:(i + 1) * n]) for i in range(n)) for s in sols]


def centralizer_dimension(G):
    return len(centralizer_basis(G))


def _intertwiner_space(F, n, pairs):
    """Basis of {X : X g = h X for each (g, h) pair}."""
    rows = []
    for g, h in pairs:
        for r in range(n):
            for c in range(n):
                coeff = [0] * (n * n)
                for j in range(n):
                    coeff[r * n + j] = F.add(coeff[r * n + j], g[j][c])
                    coeff[j * n + c] = F.sub(coeff[j * n + c], h[r][j])
                rows.append(tuple(coeff))
    sols = linalg.nullspace(F, rows, n * n)
    return [tuple(tuple(s[i * n:(i + 1) * n]) for i in range(n)) for s in sols]


def _invertible_in_span(F, n, basis, budget=4096):
    """First invertible matrix in the span of the basis, scanning
    coefficient tuples deterministically; None if there is none."""
    if not basis:
        return None
    if F.q ** len(basis) > budget:
        raise OracleCapError("intertwiner span too large to scan")
    from nilprim.matgrp import is_invertible
    for coeffs in itertools.product(range(F.q), repeat=len(basis)):
        if not any(coeffs):
            continue
        X = tuple(tuple(
            _linear_combo_entry(F, basis, coeffs, i, j) for j in range(n))
            for i in range(n))
        if is_invertible(F, X):
            return X
    return None


def _linear_combo_entry(F, basis, coeffs, i, j):
    acc = 0
    for c, B in zip(coeffs, basis):
        if c:
            acc = F.add(acc, F.mul(c, B[i][j]))
    return acc


def conjugacy_search(G, H, budget=CONJUGACY_BUDGET):
    """An invertible X with X G X^-1 = H, or None after exhausting the
    generator-image search.

    Candidate images are filtered by element order and pairwise product
    orders before solving the intertwining system X g_i = h_i X.
    """
    if G.F != H.F or G.n != H.n:
        raise ValueError("groups must live in the same GL(n, q)")
    if G.order != H.order:
        return None
    F, n = G.F, G.n
    gens = G.generators
    g_orders = [_order_of(G, g) for g in gens]
    h_orders = H.element_orders()
    candidates = [sorted(h for h in H.elements if h_orders[h] == og)
                  for og in g_orders]
    pair_orders = {}
    for i in range(len(gens)):
        for j in range(len(gens)):
            if i != j:
                pair_orders[(i, j)] = _order_of(G, mat_mul(F, gens[i], gens[j]))
    tried = 0
    for images in itertools.product(*candidates):
        ok = True
        for (i, j), o in pair_orders.items():
            if h_orders.get(mat_mul(F, images[i], images[j])) != o:
                ok = False
                break
        if not ok:
            continue
        tried += 1
        if tried > budget:
            raise OracleCapError(f"conjugacy search budget {budget} exhausted")
        basis = _intertwiner_space(F, n, list(zip(gens, images)))
        X = _invertible_in_span(F, n, basis)
        if X is not None:
            # X g X^-1 = image for every generator, and |<images>| = |H|
            return X
    return None


def _order_of(G, g):
    orders = G.element_orders()
    if g in orders:
        return orders[g]
    from nilprim.matgrp import matrix_order
    return matrix_order(G.F, g)


# ---------------------------------------------------------------------------
# structural sweeps used by the verification battery
# ---------------------------------------------------------------------------

def normal_abelian_subgroups(G):
    """All normal abelian subgroups of a closed group, as frozensets."""
    F = G.F
    out = []
    for H in all_subgroups(G):
        elems = sorted(H)
        if any(mat_mul(F, a, b) != mat_mul(F, b, a)
               for i, a in enumerate(elems) for b in elems[i + 1:]):
            continue
        if _is_normal(G, H):
            out.append(H)
    return out


def _is_normal(G, H):
    F = G.F
    for g in G.generators:
        gi = mat_inv(F, g)
        for h in _small_generating_set(G, H):
            if mat_mul(F, mat_mul(F, gi, h), g) not in H:
                return False
    return True


def subgroup_is_cyclic(G, H):
    sub = subgroup_to_group(G, H)
    orders = sub.element_orders()
    return max(orders.values()) == len(H)


def index_two_subgroups(G):
    return _index_k_subgroups(G, 2)
