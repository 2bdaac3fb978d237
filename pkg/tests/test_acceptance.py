"""Acceptance battery.

Each test covers one numbered criterion, checks exact values (no numeric
tolerances: everything here is integer arithmetic), and enforces the stated
wall-clock budget.  One summary line is printed per criterion.

Criterion 9 is applied to the nonabelian records at (6,3): the centraliser
of an abelian irreducible group is its enveloping field, which has dimension
n = 6 there, and that value is asserted alongside.
"""

import time

from nilprim import classify, construct, matgrp, oracle, singer, verify
from nilprim.classify import (count_nonabelian_classes, enumerate_classes,
                              is_nilpotent_primitive)
from nilprim.construct import (galois_blowup, nilprim_gl2, q8_times_c,
                               sylow2_gl2, two_adic_valuation_part)
from nilprim.ff import field_from_size, make_field
from nilprim.matgrp import (KIND_Q8, KIND_SD, MatrixGroup, all_subgroups_generic,
                            divisors, mat_pow, recognize_isotype,
                            scalar_matrix, subgroup_to_group)
from nilprim.oracle import (conjugacy_search, find_block_systems,
                            is_absolutely_irreducible,
                            is_irreducible_bruteforce, spin)

F3 = make_field(3, 1)


def _report(name, elapsed, budget):
    print(f"PASS {name}: {elapsed:.2f}s (budget {budget}s)")
    assert elapsed < budget


def test_criterion_1_class_counts():
    """Nonabelian class count in GL(2,q) equals r(t-1)."""
    t0 = time.monotonic()
    expected = {3: 2, 7: 8, 11: 4, 19: 6}
    for q, want in expected.items():
        got = count_nonabelian_classes(2, q)
        assert got == want, (q, got, want)
        # cross-check the closed form against actual enumeration
        recs = enumerate_classes(2, q, nonabelian_only=True)
        assert len(recs) == want
        # and against r(t-1) computed from scratch
        r = len(divisors(q - 1))
        t = two_adic_valuation_part(q + 1)
        assert want == r * (t - 1)
    _report("criterion 1 (class counts)", time.monotonic() - t0, 10)


def test_criterion_2_sylow_generators():
    """The (x, y) closure is the full semidihedral Sylow 2-subgroup."""
    t0 = time.monotonic()
    for q in (3, 7, 11):
        F = field_from_size(q)
        x, y, t = sylow2_gl2(F)
        G = MatrixGroup(F, [x, y])
        assert G.order == 2 ** (t + 2)
        assert recognize_isotype(G).sylow2_kind == matgrp.KIND_SD
        gl_order = q * (q - 1) ** 2 * (q + 1)
        two_part = 2 ** two_adic_valuation_part(gl_order)
        assert G.order == two_part
    _report("criterion 2 (Sylow generators)", time.monotonic() - t0, 1)


def test_criterion_3_criterion_oracle_equivalence():
    """Divisor criteria agree with spinning / block-system oracles."""
    t0 = time.monotonic()
    mismatches = []
    for n, q in [(2, 3), (2, 7), (3, 3)]:
        F = field_from_size(q)
        for d in divisors(q ** n - 1):
            irr = singer.is_irreducible_cyclic(d, n, q)
            G = singer.canonical_abelian(d, n, F) if irr else None
            if irr:
                if not is_irreducible_bruteforce(G):
                    mismatches.append((n, q, d, "irreducible"))
                imp = singer.is_imprimitive_cyclic(d, n, q)
                has_blocks = bool(find_block_systems(G))
                if imp != has_blocks:
                    mismatches.append((n, q, d, "imprimitive"))
            else:
                # reducible by the criterion: some vector spins short.
                # build the order-d subgroup of the Singer cycle directly.
                S = singer.singer_cycle(n, F)
                M = mat_pow(F, S, (q ** n - 1) // d)
                H = MatrixGroup(F, [M])
                if is_irreducible_bruteforce(H):
                    mismatches.append((n, q, d, "reducible"))
    assert mismatches == []
    _report("criterion 3 (criterion-oracle equivalence)",
            time.monotonic() - t0, 30)


def test_criterion_4_completeness_gl23():
    """Every nilpotent primitive subgroup of GL(2,3) lands in exactly one
    enumerated class."""
    t0 = time.monotonic()
    a = ((0, 1), (1, 1))   # order 8
    b = ((1, 1), (0, 1))   # transvection
    GL23 = MatrixGroup(F3, [a, b])
    assert GL23.order == 48
    reps = [rec.group(F3) for rec in enumerate_classes(2, 3)]
    assert [R.order for R in reps] == [8, 8, 16]

    found = {i: 0 for i in range(len(reps))}
    nilprim_subgroups = 0
    for H in all_subgroups_generic(GL23):
        sub = subgroup_to_group(GL23, H)
        if not is_nilpotent_primitive(sub).is_primitive:
            continue
        nilprim_subgroups += 1
        matches = [i for i, R in enumerate(reps)
                   if R.order == sub.order
                   and conjugacy_search(sub, R) is not None]
        assert len(matches) == 1, (sorted(H), matches)
        found[matches[0]] += 1
    # Singer C8: 3 conjugates; Q8 normal: 1; SD16 Sylow: 3
    assert nilprim_subgroups == 7
    assert sorted(found.values()) == [1, 3, 3]
    assert all(v > 0 for v in found.values())
    _report("criterion 4 (completeness at (2,3))", time.monotonic() - t0, 30)


def test_criterion_5_q8_c13_end_to_end():
    """Q8 x C13 in GL(6,3): irreducible by full sweep, primitive, defining
    relations hold, index-2 abelian subgroup imprimitive with 2 components."""
    t0 = time.monotonic()
    G = q8_times_c(3, F3, 13)
    assert G.order == 104

    # full 729-vector spin sweep (not just line representatives)
    assert is_irreducible_bruteforce(G, mode="vectors")
    assert find_block_systems(G) == []

    a, g = G.generators[0], G.generators[1]
    minus = scalar_matrix(F3, 6, F3.neg(1))
    assert mat_pow(F3, a, 2) == minus
    assert mat_pow(F3, g, 2) == minus
    assert matgrp.commutator(F3, a, g) == minus

    idx2 = [H for H in oracle.index_two_subgroups(G)]
    abelian_52 = [H for H in idx2
                  if subgroup_to_group(G, H).is_abelian() and len(H) == 52]
    assert abelian_52
    for H in abelian_52:
        A = subgroup_to_group(G, H)
        systems = find_block_systems(A)
        assert systems
        assert all(s.size == 2 for s in systems)
    _report("criterion 5 (Q8 x C13 end to end)", time.monotonic() - t0, 60)


def test_criterion_6_conjugacy_of_constructions():
    """Direct and blow-up constructions of the order-104 group are conjugate;
    distinct isotypes are not."""
    t0 = time.monotonic()
    direct = q8_times_c(3, F3, 13)

    F27 = make_field(3, 3)
    small = nilprim_gl2(F27, KIND_Q8, c_order=13)
    blown = galois_blowup(small, F3)
    assert blown.order == direct.order == 104
    assert recognize_isotype(blown) == recognize_isotype(direct)
    X = conjugacy_search(direct, blown)
    assert X is not None
    Xi = matgrp.mat_inv(F3, X)
    for g in direct.generators:
        assert matgrp.mat_mul(F3, matgrp.mat_mul(F3, X, g), Xi) \
            in blown.element_set

    recs = enumerate_classes(6, 3, nonabelian_only=True)
    groups = [(rec.isotype, rec.group(F3)) for rec in recs]
    for i, (iso_a, A) in enumerate(groups):
        for iso_b, B in groups[i + 1:]:
            if iso_a != iso_b:
                assert conjugacy_search(A, B) is None
    _report("criterion 6 (conjugacy of constructions)",
            time.monotonic() - t0, 300)


def test_criterion_7_degree_restrictions():
    """No nonabelian records outside degree 2m with m odd."""
    t0 = time.monotonic()
    for n, q in [(3, 3), (4, 3), (5, 3), (3, 7), (4, 7)]:
        recs = enumerate_classes(n, q, nonabelian_only=True)
        assert recs == [], (n, q)
    _report("criterion 7 (degree restrictions)", time.monotonic() - t0, 5)


def test_criterion_8_structural_battery():
    """Derived subgroup cyclic, abelian normals cyclic, index-2 subgroups
    irreducible, Sylow 2 kind inside the classified family."""
    t0 = time.monotonic()
    violations = []
    for n, q in [(2, 3), (2, 7), (6, 3)]:
        F = field_from_size(q)
        for rec in enumerate_classes(n, q):
            G = rec.group(F)
            if not rec.isotype.in_classified_family():
                violations.append((n, q, rec.group_order, "isotype"))
            batt = verify.structural_battery(G)
            for name, ok in batt.items():
                if not ok:
                    violations.append((n, q, rec.group_order, name))
    assert violations == []
    _report("criterion 8 (structural battery)", time.monotonic() - t0, 120)


def test_criterion_9_centralizer_dimensions():
    """Centraliser dimension m = 3 for the nonabelian (6,3) records (the
    abelian ones centralise their degree-6 enveloping field), and 1 for the
    absolutely irreducible degree-2 records."""
    t0 = time.monotonic()
    for rec in enumerate_classes(6, 3):
        G = rec.group(F3)
        dim = oracle.centralizer_dimension(G)
        if rec.case_tag == classify.CASE_ABELIAN:
            assert dim == 6, (rec.group_order, dim)
        else:
            assert dim == 3, (rec.group_order, dim)
    for q in (3, 7):
        F = field_from_size(q)
        for rec in enumerate_classes(2, q, nonabelian_only=True):
            G = rec.group(F)
            assert is_absolutely_irreducible(G)
            assert oracle.centralizer_dimension(G) == 1
    _report("criterion 9 (centraliser dimensions)", time.monotonic() - t0, 10)
