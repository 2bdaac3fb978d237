"""JSON document forms for groups, class records, and censuses.

Schema version 1.  Matrices use the text form from matgrp (rows joined by
';', coefficients by ','); fields use the descriptor "p^k/modulus".
"""

from nilprim.ff import parse_field_descriptor
from nilprim.matgrp import MatrixGroup, mat_from_str, mat_to_str

SCHEMA_VERSION = 1


class ParseError(ValueError):
    pass


def group_to_doc(G, case_tag=None, isotype=None):
    doc = {
        "schema": SCHEMA_VERSION,
        "n": G.n,
        "q": G.F.q,
        "field": G.F.descriptor(),
        "generators": [mat_to_str(G.F, g) for g in G.generators],
        "order": G.order,
    }
    if case_tag is not None:
        doc["case"] = case_tag
    if isotype is not None:
        doc["isotype"] = isotype.as_dict()
    return doc


def group_from_doc(doc):
    try:
        if doc.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
            raise ParseError(f"unsupported schema {doc.get('schema')}")
        F = parse_field_descriptor(doc["field"])
        n = int(doc["n"])
        gens = [mat_from_str(F, s) for s in doc["generators"]]
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"malformed group document: {exc}") from exc
    for g in gens:
        if len(g) != n:
            raise ParseError(f"generator degree {len(g)} != n = {n}")
    try:
        return MatrixGroup(F, gens)
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def record_to_doc(rec, F):
    return {
        "schema": SCHEMA_VERSION,
        "n": rec.n,
        "q": rec.q,
        "field": F.descriptor(),
        "case": rec.case_tag,
        "isotype": rec.isotype.as_dict(),
        "order": rec.group_order,
        "generators": [mat_to_str(F, g) for g in rec.generators],
        "certificate": rec.certificate,
    }


def census_to_doc(n, q, records, F, certify=None):
    """certify, when given, is a list of oracle reports aligned with records."""
    classes = []
    for i, rec in enumerate(records):
        doc = record_to_doc(rec, F)
        if certify is not None and certify[i] is not None:
            doc["oracle"] = certify[i]
        classes.append(doc)
    abelian = sum(1 for r in records if r.case_tag == "abelian")
    return {
        "schema": SCHEMA_VERSION,
        "n": n,
        "q": q,
        "classes": classes,
        "counts": {"abelian": abelian, "nonabelian": len(records) - abelian},
    }
