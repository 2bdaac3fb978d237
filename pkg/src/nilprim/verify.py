"""Verification battery: the decision procedure cross-checked by the
brute-force oracles, plus the structural properties every group of the
classified family must satisfy.
"""

import time

from nilprim import classify, matgrp, oracle
from nilprim.matgrp import NotInFamilyError


def run_battery(G, with_block_oracle=True):
    """Full property battery on a closed matrix group.

    Returns {"verdict", "passed", "checks": [{check, verdict, witness?,
    elapsed}, ...]}; passed is True iff the group is nilpotent primitive
    and every oracle cross-check agrees.
    """
    checks = []

    def run(name, fn):
        t0 = time.perf_counter()
        try:
            verdict, witness = fn()
        except (NotInFamilyError, oracle.OracleCapError) as exc:
            verdict, witness = False, str(exc)
        checks.append({
            "check": name,
            "verdict": verdict,
            **({"witness": witness} if witness is not None else {}),
            "elapsed": round(time.perf_counter() - t0, 6),
        })
        return verdict

    decision = classify.is_nilpotent_primitive(G)
    checks.append({"check": "decision_procedure", "verdict": decision.verdict,
                   "witness": decision.trace, "elapsed": 0.0})
    passed = decision.is_primitive

    irr = run("spin_irreducible", lambda: (oracle.is_irreducible_bruteforce(G), None))
    passed = passed and irr

    if with_block_oracle and irr:
        def block_check():
            systems = oracle.find_block_systems(G)
            witness = [{"size": s.size, "component_dims":
                        [c.dim for c in s.components]} for s in systems]
            return not systems, witness or None
        passed = run("no_block_system", block_check) and passed

    def derived_cyclic():
        D = matgrp.derived_subgroup(G)
        return matgrp.is_cyclic(D), {"order": D.order}
    passed = run("derived_subgroup_cyclic", derived_cyclic) and passed

    def isotype_check():
        iso = matgrp.recognize_isotype(G)
        return iso.in_classified_family(), iso.as_dict()
    passed = run("isotype_in_family", isotype_check) and passed

    return {"verdict": decision.verdict, "passed": bool(passed), "checks": checks}


def structural_battery(G):
    """The Sylow/normal-subgroup/index-2 battery for an already-primitive
    group: derived subgroup cyclic, abelian normal subgroups cyclic,
    index-2 subgroups irreducible."""
    results = {}
    D = matgrp.derived_subgroup(G)
    results["derived_cyclic"] = matgrp.is_cyclic(D)
    results["normal_abelian_all_cyclic"] = all(
        oracle.subgroup_is_cyclic(G, H)
        for H in oracle.normal_abelian_subgroups(G))
    results["index2_all_irreducible"] = all(
        oracle.is_irreducible_bruteforce(matgrp.subgroup_to_group(G, H))
        for H in oracle.index_two_subgroups(G))
    return results
