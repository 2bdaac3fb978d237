"""Exact arithmetic in GF(p^k): residues of polynomials over the prime field.

Elements are encoded as integers in [0, p^k): the little-endian base-p
encoding of the coefficient tuple in the residue basis.  All searches
(moduli, primitive elements, square decompositions) run in a fixed
coefficient-lexicographic order so results are reproducible byte for byte.
"""

import itertools
from functools import lru_cache

FIELD_SIZE_CAP = 2**31
TABLE_CAP = 2**20        # exp/log tables built up to this size
ADD_TABLE_CAP = 1024     # dense add table built up to this size


class FieldError(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n):
    """Prime factorisation by trial division, as a dict prime -> exponent."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# polynomials over GF(p): little-endian coefficient tuples, trimmed
# ---------------------------------------------------------------------------

def poly_trim(f):
    i = len(f)
    while i > 0 and f[i - 1] == 0:
        i -= 1
    return tuple(f[:i])


def poly_add(f, g, p):
    n = max(len(f), len(g))
    f = tuple(f) + (0,) * (n - len(f))
    g = tuple(g) + (0,) * (n - len(g))
    return poly_trim([(a + b) % p for a, b in zip(f, g)])


def poly_sub(f, g, p):
    n = max(len(f), len(g))
    f = tuple(f) + (0,) * (n - len(f))
    g = tuple(g) + (0,) * (n - len(g))
    return poly_trim([(a - b) % p for a, b in zip(f, g)])


def poly_mul(f, g, p):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return poly_trim(out)


def poly_mod(f, m, p):
    """Remainder of f modulo a monic polynomial m."""
    f = list(poly_trim(f))
    dm = len(m) - 1
    while len(f) - 1 >= dm and f:
        lead = f[-1]
        shift = len(f) - 1 - dm
        for i in range(dm + 1):
            f[shift + i] = (f[shift + i] - lead * m[i]) % p
        f = list(poly_trim(f))
    return tuple(f)


def poly_gcd(f, g, p):
    f, g = poly_trim(f), poly_trim(g)
    while g:
        inv_lead = pow(g[-1], p - 2, p)
        monic_g = tuple((c * inv_lead) % p for c in g)
        f, g = g, poly_mod(f, monic_g, p)
    return f


def poly_powmod(f, e, m, p):
    result = (1,)
    f = poly_mod(f, m, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, f, p), m, p)
        f = poly_mod(poly_mul(f, f, p), m, p)
        e >>= 1
    return result


def is_irreducible(m, p):
    """Rabin test for a monic polynomial m of degree k over GF(p).

    m is irreducible iff x^(p^k) = x mod m and gcd(x^(p^(k/r)) - x, m) = 1
    for every prime r dividing k.
    """
    k = len(m) - 1
    if k < 1 or m[-1] != 1:
        return False
    x = (0, 1)
    for r in factorize(k):
        h = poly_powmod(x, p ** (k // r), m, p)
        if len(poly_gcd(poly_sub(h, x, p), m, p)) > 1:
            return False
    return poly_powmod(x, p**k, m, p) == poly_mod(x, m, p)


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

class FieldCtx:
    """GF(p^k) with a fixed irreducible modulus and cached primitive element.

    Immutable after construction; all operations are pure.  Elements are
    ints in [0, q); 0 and 1 encode the additive and multiplicative units.
    """

    def __init__(self, p, k, modulus=None):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if k < 1:
            raise FieldError(f"extension degree must be positive, got {k}")
        q = p**k
        if q > FIELD_SIZE_CAP:
            raise FieldError(f"field size {q} exceeds cap {FIELD_SIZE_CAP}")
        self.p = p
        self.k = k
        self.q = q
        if modulus is not None:
            modulus = poly_trim(tuple(c % p for c in modulus))
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree k")
            if not is_irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over GF({p})")
            self.modulus = modulus
        else:
            self.modulus = self._find_modulus()
        self._prime_field = k == 1
        self._digits = None
        self._init_tables()
        self.primitive = self._find_primitive()

    def _find_modulus(self):
        p, k = self.p, self.k
        if k == 1:
            return (0, 1)
        for low in itertools.product(range(p), repeat=k):
            cand = low + (1,)
            if is_irreducible(cand, p):
                return cand
        raise FieldError("no irreducible modulus found")  # unreachable

    # -- encoding ----------------------------------------------------------

    def encode(self, coeffs):
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c % self.p
        return v

    def decode(self, x):
        if self._digits is not None:
            return self._digits[x]
        out = []
        for _ in range(self.k):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def elements_lex(self):
        """All elements, in coefficient-lexicographic order."""
        for coeffs in itertools.product(range(self.p), repeat=self.k):
            yield self.encode(coeffs)

    # -- table construction ------------------------------------------------

    def _raw_mul(self, a, b):
        prod = poly_mul(self.decode(a), self.decode(b), self.p)
        return self.encode(poly_mod(prod, self.modulus, self.p))

    def _raw_pow(self, a, e):
        f = poly_powmod(self.decode(a), e, self.modulus, self.p)
        return self.encode(f)

    def _init_tables(self):
        q = self.q
        self._exp = None
        self._log = None
        self._add_table = None
        self._neg_table = None
        if q <= TABLE_CAP and not self._prime_field:
            self._digits = [None] * q
            x = 0
            for _ in range(q):
                self._digits[x] = self._decode_slow(x)
                x += 1
        if q <= ADD_TABLE_CAP and not self._prime_field:
            p = self.p
            neg = [self.encode(tuple((-c) % p for c in self.decode(a)))
                   for a in range(q)]
            self._neg_table = neg
            add = []
            for a in range(q):
                da = self.decode(a)
                row = [self.encode(tuple((x + y) % p for x, y in zip(da, self.decode(b))))
                       for b in range(q)]
                add.append(row)
            self._add_table = add

    def _decode_slow(self, x):
        out = []
        for _ in range(self.k):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def _find_primitive(self):
        q = self.q
        target = q - 1
        prime_divs = list(factorize(target))
        for cand in self.elements_lex():
            if cand == 0:
                continue
            if all(self._raw_pow(cand, target // r) != 1 for r in prime_divs):
                self._build_exp_log(cand)
                return cand
        raise FieldError("no primitive element found")  # unreachable

    def _build_exp_log(self, gen):
        q = self.q
        if q > TABLE_CAP:
            return
        exp = [1] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        self._exp = exp
        self._log = log

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self._prime_field:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        p = self.p
        return self.encode(tuple((x + y) % p for x, y in zip(self.decode(a), self.decode(b))))

    def neg(self, a):
        if self._prime_field:
            return (-a) % self.p
        if self._neg_table is not None:
            return self._neg_table[a]
        p = self.p
        return self.encode(tuple((-c) % p for c in self.decode(a)))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._prime_field:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._raw_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._prime_field:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._raw_pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        e %= self.q - 1
        if self._prime_field:
            return pow(a, e, self.p)
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._raw_pow(a, e)

    @property
    def minus_one(self):
        return self.neg(1)

    # -- misc ----------------------------------------------------------------

    def descriptor(self):
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"{self.p}^{self.k}/{coeffs}"

    def elem_to_str(self, x):
        return ",".join(str(c) for c in self.decode(x))

    def elem_from_str(self, s):
        coeffs = tuple(int(t) for t in s.split(","))
        if len(coeffs) != self.k:
            raise FieldError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return self.encode(coeffs)

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.k}))"

    def __eq__(self, other):
        return (isinstance(other, FieldCtx)
                and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))


@lru_cache(maxsize=None)
def _make_field_cached(p, k, modulus):
    return FieldCtx(p, k, modulus)


def make_field(p, k, modulus=None):
    """GF(p^k) with a deterministically chosen modulus and primitive element."""
    if modulus is not None:
        modulus = tuple(modulus)
    return _make_field_cached(p, k, modulus)


@lru_cache(maxsize=None)
def field_from_size(q):
    """GF(q) for a prime power q, with the default modulus."""
    fac = factorize(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, k), = fac.items()
    return make_field(p, k)


def parse_field_descriptor(desc):
    head, _, coeffs = desc.partition("/")
    pk, _, kk = head.partition("^")
    p, k = int(pk), int(kk)
    modulus = tuple(int(t) for t in coeffs.split(",")) if coeffs else None
    return make_field(p, k, modulus)


# ---------------------------------------------------------------------------
# element orders, Frobenius maps, subfield embeddings
# ---------------------------------------------------------------------------

def element_order(F, x):
    """Least e >= 1 with x^e = 1, by prime-by-prime descent from q - 1."""
    if x == 0:
        raise FieldError("order of zero is undefined")
    e = F.q - 1
    for r, mult in factorize(e).items():
        for _ in range(mult):
            if F.pow(x, e // r) == 1:
                e //= r
            else:
                break
    return e


def frobenius(F, x, base_size, j):
    """x^(base_size^j), the j-th power of the size-base_size Frobenius."""
    fac = factorize(base_size)
    if len(fac) != 1 or next(iter(fac)) != F.p:
        raise FieldError(f"{base_size} is not a power of the characteristic {F.p}")
    d = fac[F.p]
    if F.k % d != 0:
        raise FieldError(f"GF({base_size}) is not a subfield of GF({F.p}^{F.k})")
    if x == 0:
        return 0
    return F.pow(x, pow(base_size, j % (F.k // d), F.q - 1))


class Embedding:
    """Injective ring map GF(q_small) -> GF(q_big), with partial inverse."""

    def __init__(self, F_small, F_big, fwd):
        self.F_small = F_small
        self.F_big = F_big
        self._fwd = fwd
        self._bwd = {v: u for u, v in fwd.items()}

    def apply(self, x):
        return self._fwd[x]

    def __call__(self, x):
        return self._fwd[x]

    def inverse(self, y):
        """Preimage of y; raises if y is outside the embedded subfield."""
        if y not in self._bwd:
            raise FieldError("element lies outside the embedded subfield")
        return self._bwd[y]

    def contains(self, y):
        return y in self._bwd


def minimal_polynomial_over_prime(F, x):
    """Minimal polynomial of x over GF(p), as a little-endian tuple."""
    conjugates = []
    y = x
    while True:
        conjugates.append(y)
        y = F.pow(y, F.p)
        if y == x:
            break
    # product of (X - conj) over the distinct conjugates, in F[X]
    poly = [1]
    for c in conjugates:
        nc = F.neg(c)
        out = [0] * (len(poly) + 1)
        for i, a in enumerate(poly):
            out[i] = F.add(out[i], F.mul(a, nc))
            out[i + 1] = F.add(out[i + 1], a)
        poly = out
    coeffs = []
    for a in poly:
        da = F.decode(a)
        if any(da[1:]):
            raise FieldError("minimal polynomial has a non-prime-field coefficient")
        coeffs.append(da[0])
    return tuple(coeffs)


@lru_cache(maxsize=None)
def embed_subfield(F_small, F_big):
    """The deterministic field embedding GF(p^a) -> GF(p^b), a | b."""
    if F_small.p != F_big.p:
        raise FieldError("different characteristics")
    if F_big.k % F_small.k != 0:
        raise FieldError(
            f"GF({F_small.p}^{F_small.k}) does not embed in GF({F_big.p}^{F_big.k})")
    if F_small.q > TABLE_CAP:
        raise FieldError("embedding table too large")
    gamma = F_small.primitive
    target_order = F_small.q - 1
    minpoly = minimal_polynomial_over_prime(F_small, gamma)
    # image of gamma: first element of matching order that is a root of
    # gamma's minimal polynomial, in power order of the big primitive element
    step = (F_big.q - 1) // target_order
    beta = None
    for j in range(1, target_order + 1):
        if gcd(j, target_order) != 1:
            continue
        cand = F_big.pow(F_big.primitive, step * j)
        acc = 0
        for c in reversed(minpoly):
            acc = F_big.add(F_big.mul(acc, cand), c % F_big.p)
        if acc == 0:
            beta = cand
            break
    if beta is None:
        raise FieldError("no embedding found")  # unreachable for valid inputs
    fwd = {0: 0}
    u, v = 1, 1
    for _ in range(target_order):
        fwd[u] = v
        u = F_small.mul(u, gamma)
        v = F_big.mul(v, beta)
    return Embedding(F_small, F_big, fwd)


def gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def sum_of_two_squares_minus_one(F):
    """First (e, f) in scan order with e^2 + f^2 = -1 in F; p must be odd."""
    if F.p == 2:
        raise FieldError("characteristic 2 is rejected: -1 is already a square")
    sqrt = {}
    for x in F.elements_lex():
        s = F.mul(x, x)
        if s not in sqrt:
            sqrt[s] = x
    m1 = F.minus_one
    for e in F.elements_lex():
        target = F.sub(m1, F.mul(e, e))
        if target in sqrt:
            return e, sqrt[target]
    raise FieldError("no solution found")  # unreachable: p odd always has one
