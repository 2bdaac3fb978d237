"""Exact linear algebra over a FieldCtx: echelon forms, solving, nullspaces.

Vectors are tuples of encoded field elements; matrices are tuples of row
tuples.  Row convention throughout: vectors are rows, maps act on the right.
"""


def vec_scale(F, v, c):
    return tuple(F.mul(c, x) for x in v)


def vec_sub_scaled(F, v, w, c):
    """v - c*w"""
    return tuple(F.sub(x, F.mul(c, y)) for x, y in zip(v, w))


class SpanBasis:
    """Incremental echelon basis of a subspace of F^n."""

    def __init__(self, F, n):
        self.F = F
        self.n = n
        self.rows = []     # echelon rows, pivot normalised to 1
        self.pivots = []   # pivot column of each row

    def reduce(self, v):
        F = self.F
        for piv, row in zip(self.pivots, self.rows):
            if v[piv] != 0:
                v = vec_sub_scaled(F, v, row, v[piv])
        return v

    def add(self, v):
        """Reduce v against the basis; insert if independent.  True if grown."""
        F = self.F
        v = self.reduce(tuple(v))
        for j, x in enumerate(v):
            if x != 0:
                v = vec_scale(F, v, F.inv(x))
                # keep rows sorted by pivot
                pos = 0
                while pos < len(self.pivots) and self.pivots[pos] < j:
                    pos += 1
                self.rows.insert(pos, v)
                self.pivots.insert(pos, j)
                return True
        return False

    def contains(self, v):
        return all(x == 0 for x in self.reduce(tuple(v)))

    @property
    def dim(self):
        return len(self.rows)

    def rref_rows(self):
        """Fully reduced rows (unique canonical form), sorted by pivot."""
        F = self.F
        rows = list(self.rows)
        for i in range(len(rows)):
            for j0, (piv, other) in enumerate(zip(self.pivots, rows)):
                if j0 != i and rows[i][piv] != 0:
                    rows[i] = vec_sub_scaled(F, rows[i], other, rows[i][piv])
        return tuple(rows)


def rref(F, rows):
    """Canonical reduced row echelon form (zero rows dropped)."""
    basis = SpanBasis(F, len(rows[0]) if rows else 0)
    for r in rows:
        basis.add(r)
    return basis.rref_rows()


def rank(F, rows):
    basis = SpanBasis(F, len(rows[0]) if rows else 0)
    for r in rows:
        basis.add(r)
    return basis.dim


def nullspace(F, rows, ncols):
    """Basis of {x in F^ncols : rows . x^T = 0}, each constraint a row."""
    reduced = rref(F, rows) if rows else ()
    pivots = []
    for r in reduced:
        for j, x in enumerate(r):
            if x != 0:
                pivots.append(j)
                break
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for piv, r in zip(pivots, reduced):
            # piv-entry satisfies x_piv = -sum_{j>piv} r_j x_j
            v[piv] = F.neg(r[f])
        basis.append(tuple(v))
    return basis


def solve_inverse(F, M):
    """Inverse of a square matrix, or None if singular."""
    n = len(M)
    aug = [list(M[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, n):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        aug[row], aug[piv] = aug[piv], aug[row]
        inv_p = F.inv(aug[row][col])
        aug[row] = [F.mul(inv_p, x) for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                c = aug[r][col]
                aug[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(aug[r], aug[row])]
        row += 1
    return tuple(tuple(r[n:]) for r in aug)
