"""Decision procedure for nilpotent primitivity and full enumeration of
conjugacy classes of nilpotent primitive subgroups of GL(n, q).

Conjugacy is decided by isomorphism type (the classification theorem for
this family); explicit conjugating certificates come from the oracle.
"""

from dataclasses import dataclass, field

from nilprim import construct, matgrp, oracle, singer
from nilprim.ff import factorize, field_from_size
from nilprim.matgrp import (KIND_CYCLIC, KIND_Q8, KIND_TRIVIAL, IsoType,
                            MatrixGroup, NotInFamilyError, divisors, identity,
                            mat_mul, mat_neg, mat_pow, mat_to_str,
                            recognize_isotype, subgroup_to_group)

CASE_ABELIAN = "abelian"
CASE_DEG2 = "deg2"
CASE_Q8 = "q8_case2"
CASE_3 = "case3"

_CASE_RANK = {CASE_ABELIAN: 0, CASE_DEG2: 1, CASE_Q8: 2, CASE_3: 3}


@dataclass
class Verdict:
    verdict: str            # not_nilpotent | reducible | imprimitive | primitive
    trace: dict = field(default_factory=dict)

    @property
    def is_primitive(self):
        return self.verdict == "primitive"


@dataclass
class ClassRecord:
    n: int
    q: int
    case_tag: str
    isotype: IsoType
    group_order: int
    generators: tuple       # of matrices over GF(q)
    certificate: dict

    def sort_key(self):
        return (_CASE_RANK[self.case_tag], self.isotype.sylow2_order,
                self.isotype.odd_order)

    def group(self, F):
        return MatrixGroup(F, list(self.generators))


def is_nilpotent_primitive(G):
    """Verdict with trace for a subgroup of GL(n, q), q odd.

    Pipeline: nilpotency and 2 x odd decomposition; irreducibility by the
    spinning oracle; abelian groups via the cyclic order criterion;
    nonabelian groups via their cyclic index-2 subgroup, falling back to
    the Q8-with-imprimitive-index-2 characterisation.
    """
    F, n = G.F, G.n
    if F.q % 2 == 0:
        raise ValueError("even characteristic is out of scope")
    trace = {"n": n, "q": F.q, "order": G.order}
    try:
        sylow2, odd = matgrp.decompose_2_odd(G)
    except NotInFamilyError as exc:
        trace["reason"] = str(exc)
        return Verdict("not_nilpotent", trace)
    trace["sylow2_order"] = sylow2.order
    trace["odd_order"] = odd.order
    if not oracle.is_irreducible_bruteforce(G):
        trace["branch"] = "spin"
        return Verdict("reducible", trace)
    if G.is_abelian():
        d = G.order
        trace["branch"] = "abelian_criterion"
        trace["d"] = d
        if singer.is_imprimitive_cyclic(d, n, F.q):
            trace["imprimitive_witness"] = [
                k for k in divisors(n)
                if k > 1 and len(divisors(k)) == 2
                and (k * (F.q ** (n // k) - 1)) % d == 0]
            return Verdict("imprimitive", trace)
        return Verdict("primitive", trace)
    # nonabelian: analyse the cyclic index-2 subgroup A = <a> x C
    try:
        iso = recognize_isotype(G)
    except NotInFamilyError as exc:
        trace["reason"] = str(exc)
        return Verdict("not_nilpotent", trace)
    trace["isotype"] = iso.as_dict()
    a = _max_order_cyclic_2_generator(G, sylow2)
    A = MatrixGroup(F, [a, odd.generators[0]], cap=G.cap)
    trace["index2_cyclic_order"] = A.order
    if 2 * A.order != G.order:
        trace["reason"] = "no cyclic subgroup of index 2"
        return Verdict("not_nilpotent", trace)
    if not oracle.is_irreducible_bruteforce(A):
        trace["branch"] = "index2_reducible"
        return Verdict("imprimitive", trace)
    if not singer.is_imprimitive_cyclic(A.order, n, F.q):
        # a primitive subgroup forces primitivity of the whole group
        trace["branch"] = "index2_primitive"
        return Verdict("primitive", trace)
    # A irreducible but imprimitive: primitive iff the Q8 x C shape holds
    trace["branch"] = "index2_imprimitive"
    ok, detail = _q8_case2_conditions(G, sylow2, odd)
    trace["q8_conditions"] = detail
    return Verdict("primitive" if ok else "imprimitive", trace)


def _max_order_cyclic_2_generator(G, sylow2):
    """Generator of a maximal-order cyclic subgroup of index <= 2 in the
    Sylow 2-subgroup (deterministic tie-break by serialisation)."""
    F = G.F
    orders = G.element_orders()
    max_order = max(orders[g] for g in sylow2.elements)
    return min((g for g in sylow2.elements if orders[g] == max_order),
               key=lambda g: mat_to_str(F, g))


def _q8_case2_conditions(G, sylow2, odd):
    """Conditions for a primitive group with imprimitive index-2 subgroup:
    G2 = Q8 with a^2 = g^2 = [a,g] = -1, and the odd part acting with
    primitive irreducible blocks of degree n/2."""
    F, n = G.F, G.n
    detail = {}
    try:
        iso2 = recognize_isotype(sylow2)
    except NotInFamilyError as exc:
        return False, {"reason": str(exc)}
    detail["sylow2_kind"] = iso2.sylow2_kind
    if iso2.sylow2_kind != KIND_Q8:
        return False, detail
    orders = G.element_orders()
    order4 = [g for g in sylow2.elements if orders[g] == 4]
    a = min(order4, key=lambda g: mat_to_str(F, g))
    g = next(h for h in sorted(order4, key=lambda h: mat_to_str(F, h))
             if h not in (a, matgrp.mat_inv(F, a)))
    minus1 = mat_neg(F, identity(F, n))
    rels = (mat_mul(F, a, a) == minus1
            and mat_mul(F, g, g) == minus1
            and matgrp.commutator(F, a, g) == minus1)
    detail["relations_minus_one"] = rels
    if not rels:
        return False, detail
    if n % 2 != 0:
        return False, detail
    m = n // 2
    c_order = odd.order
    env = singer.enveloping_dimension(F, odd.generators)
    detail["odd_block_degree"] = env
    if env != m:
        return False, detail
    prim = singer.is_primitive_cyclic(c_order, m, F.q) if (F.q**m - 1) % c_order == 0 else False
    detail["odd_block_primitive"] = prim
    return prim, detail


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _abelian_isotype(d):
    fac = factorize(d) if d > 1 else {}
    s2 = 2 ** fac.get(2, 0)
    kind = KIND_TRIVIAL if d == 1 else KIND_CYCLIC
    return IsoType(kind, s2, d // s2)


def _abelian_certificate(d, n, q):
    return {
        "criterion": "cyclic_order",
        "d": d,
        "irreducible": [{"m": m, "q^m-1": q**m - 1, "divides": (q**m - 1) % d == 0}
                        for m in divisors(n) if m < n],
        "imprimitive": [{"k": k, "k(q^(n/k)-1)": k * (q ** (n // k) - 1),
                         "divides": (k * (q ** (n // k) - 1)) % d == 0}
                        for k in divisors(n) if k > 1 and len(divisors(k)) == 2],
    }


def enumerate_classes(n, q, nonabelian_only=False):
    """Complete duplicate-free census of conjugacy classes of nilpotent
    primitive subgroups of GL(n, q)."""
    if n < 2:
        raise ValueError("degree must be at least 2")
    if q % 2 == 0:
        raise ValueError("even field size is out of scope")
    F = field_from_size(q)
    records = []
    if not nonabelian_only:
        for d in divisors(q**n - 1):
            if not singer.is_irreducible_cyclic(d, n, q):
                continue
            if singer.is_imprimitive_cyclic(d, n, q):
                continue
            gen = singer.canonical_abelian(d, n, F).generators[0]
            records.append(ClassRecord(
                n=n, q=q, case_tag=CASE_ABELIAN, isotype=_abelian_isotype(d),
                group_order=d, generators=(gen,),
                certificate=_abelian_certificate(d, n, q)))
    records.extend(_nonabelian_classes(n, q, F))
    records.sort(key=ClassRecord.sort_key)
    return records


def _nonabelian_classes(n, q, F):
    if q % 4 != 3 or n % 2 != 0 or (n // 2) % 2 == 0:
        return []
    m = n // 2
    out = []
    if m == 1:
        t = construct.two_adic_valuation_part(q + 1)
        for kind, s in construct._admissible_deg2_kinds(t):
            for c in divisors(q - 1):
                if c % 2 == 0:
                    continue
                G = construct.nilprim_gl2(F, kind, s, c)
                iso = recognize_isotype(G)
                out.append(ClassRecord(
                    n=n, q=q, case_tag=CASE_DEG2, isotype=iso,
                    group_order=G.order, generators=G.generators,
                    certificate=is_nilpotent_primitive(G).trace))
        return out
    # case 2: Q8 x C over GF(q), C primitive odd cyclic for GL(m, q)
    for c in divisors(q**m - 1):
        if c % 2 == 0 or c == 1:
            continue
        if not singer.is_primitive_cyclic(c, m, q):
            continue
        G = construct.q8_times_c(m, F, c)
        iso = recognize_isotype(G)
        out.append(ClassRecord(
            n=n, q=q, case_tag=CASE_Q8, isotype=iso,
            group_order=G.order, generators=G.generators,
            certificate=is_nilpotent_primitive(G).trace))
    # case 3: blow-ups of degree-2 groups over GF(q^m) with |G2| >= 16
    qm = q**m
    tm = construct.two_adic_valuation_part(qm + 1)
    seen = {r.isotype for r in out}
    for kind, s in construct._admissible_deg2_kinds(tm):
        if kind == KIND_Q8:
            continue  # 2**s == 8 duplicates case 2 (|G2| > 8 in case 3)
        for c in divisors(qm - 1):
            if c % 2 == 0:
                continue
            try:
                G = construct.nilprim_gl2m(m, F, kind, s, c)
            except construct.InadmissibleError:
                continue
            iso = recognize_isotype(G)
            if iso in seen:
                continue
            seen.add(iso)
            out.append(ClassRecord(
                n=n, q=q, case_tag=CASE_3, isotype=iso,
                group_order=G.order, generators=G.generators,
                certificate=is_nilpotent_primitive(G).trace))
    return out


def count_nonabelian_classes(n, q):
    """For degree 2 the closed-form r(t-1); otherwise the enumerated count."""
    if q % 4 != 3 or n % 2 != 0 or (n // 2) % 2 == 0:
        return 0
    if n == 2:
        t = construct.two_adic_valuation_part(q + 1)
        r = len(divisors(q - 1))
        return r * (t - 1)
    return len(enumerate_classes(n, q, nonabelian_only=True))


def same_class(G, H, certify=True):
    """Conjugacy in GL(n, q), decided by isomorphism type; for small sizes
    additionally certified by an explicit conjugating matrix."""
    vg = is_nilpotent_primitive(G)
    vh = is_nilpotent_primitive(H)
    if not (vg.is_primitive and vh.is_primitive):
        raise ValueError("both groups must be nilpotent primitive")
    if G.order != H.order:
        return False, None
    same = recognize_isotype(G) == recognize_isotype(H)
    if not same:
        return False, None
    if not certify:
        return True, None
    X = oracle.conjugacy_search(G, H)
    return True, X
