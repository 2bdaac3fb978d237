"""FastAPI service wrapping the classification engine.

Endpoints mirror the CLI commands: enumerate, construct, verify, count,
and direct oracle checks.  Domain errors map to 400 with a machine-readable
code; resource-cap overruns map to code "cap_exceeded".
"""

from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from nilprim import classify, construct, matgrp, oracle, serialize, verify
from nilprim.ff import FieldError, field_from_size
from nilprim.matgrp import ClosureCapError, NotInFamilyError, mat_to_str


class EnumerateRequest(BaseModel):
    n: int = Field(ge=2)
    q: int = Field(ge=3)
    nonabelian_only: bool = False
    certify: bool = False


class ConstructRequest(BaseModel):
    n: int = Field(ge=2)
    q: int = Field(ge=3)
    kind: str
    s: Optional[int] = None
    c_order: int = 1


class CountRequest(BaseModel):
    n: int = Field(ge=2)
    q: int = Field(ge=3)


class GroupDoc(BaseModel):
    schema_: int = Field(default=serialize.SCHEMA_VERSION, alias="schema")
    n: int
    q: int
    field: str
    generators: list[str]
    order: Optional[int] = None
    case: Optional[str] = None
    isotype: Optional[dict] = None

    model_config = {"populate_by_name": True}


class VerifyRequest(BaseModel):
    group: GroupDoc


class OracleRequest(BaseModel):
    check: str
    group: GroupDoc
    other: Optional[GroupDoc] = None


KIND_ALIASES = {
    "q8": matgrp.KIND_Q8,
    "quaternion8": matgrp.KIND_Q8,
    "gq": matgrp.KIND_GQ,
    "generalised_quaternion": matgrp.KIND_GQ,
    "dh": matgrp.KIND_DH,
    "dihedral": matgrp.KIND_DH,
    "sd": matgrp.KIND_SD,
    "semidihedral": matgrp.KIND_SD,
}

app = FastAPI(title="nilprim", version="0.1.0",
              description="Nilpotent primitive subgroups of GL(n, q)")


def _bad_request(code, message):
    raise HTTPException(status_code=400, detail={"code": code, "message": message})


def _group_from_model(doc: GroupDoc):
    try:
        return serialize.group_from_doc(doc.model_dump(by_alias=True))
    except serialize.ParseError as exc:
        _bad_request("parse_error", str(exc))
    except FieldError as exc:
        _bad_request("parse_error", str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/enumerate")
def enumerate_endpoint(req: EnumerateRequest):
    try:
        F = field_from_size(req.q)
    except FieldError as exc:
        _bad_request("invalid_parameters", str(exc))
    if req.q % 2 == 0:
        _bad_request("invalid_parameters", "field size must be odd")
    try:
        records = classify.enumerate_classes(req.n, req.q,
                                             nonabelian_only=req.nonabelian_only)
    except (ClosureCapError, oracle.OracleCapError) as exc:
        _bad_request("cap_exceeded", str(exc))
    certificates = None
    if req.certify:
        certificates = [verify.run_battery(rec.group(F)) for rec in records]
    return serialize.census_to_doc(req.n, req.q, records, F, certificates)


@app.post("/count")
def count_endpoint(req: CountRequest):
    if req.q % 2 == 0:
        _bad_request("invalid_parameters", "field size must be odd")
    try:
        field_from_size(req.q)
    except FieldError as exc:
        _bad_request("invalid_parameters", str(exc))
    try:
        nonabelian = classify.count_nonabelian_classes(req.n, req.q)
        total = len(classify.enumerate_classes(req.n, req.q))
    except (ClosureCapError, oracle.OracleCapError) as exc:
        _bad_request("cap_exceeded", str(exc))
    return {"schema": serialize.SCHEMA_VERSION, "n": req.n, "q": req.q,
            "counts": {"abelian": total - nonabelian, "nonabelian": nonabelian}}


@app.post("/construct")
def construct_endpoint(req: ConstructRequest):
    kind = KIND_ALIASES.get(req.kind.lower())
    if kind is None:
        _bad_request("invalid_parameters", f"unknown kind {req.kind!r}")
    try:
        F = field_from_size(req.q)
    except FieldError as exc:
        _bad_request("invalid_parameters", str(exc))
    try:
        if req.n == 2:
            G = construct.nilprim_gl2(F, kind, req.s, req.c_order)
            case = classify.CASE_DEG2
        elif req.n % 2 == 0 and (req.n // 2) % 2 == 1:
            m = req.n // 2
            if kind == matgrp.KIND_Q8:
                G = construct.q8_times_c(m, F, req.c_order)
                case = classify.CASE_Q8
            else:
                G = construct.nilprim_gl2m(m, F, kind, req.s, req.c_order)
                case = classify.CASE_3
        else:
            _bad_request("inadmissible",
                         f"no nonabelian nilpotent primitive groups in degree "
                         f"{req.n}: the degree must be 2m with m odd")
    except construct.InadmissibleError as exc:
        _bad_request("inadmissible", str(exc))
    except FieldError as exc:
        _bad_request("invalid_parameters", str(exc))
    except (ClosureCapError, oracle.OracleCapError) as exc:
        _bad_request("cap_exceeded", str(exc))
    iso = matgrp.recognize_isotype(G)
    return serialize.group_to_doc(G, case_tag=case, isotype=iso)


@app.post("/verify")
def verify_endpoint(req: VerifyRequest):
    G = _group_from_model(req.group)
    try:
        report = verify.run_battery(G)
    except (ClosureCapError, oracle.OracleCapError) as exc:
        _bad_request("cap_exceeded", str(exc))
    except NotInFamilyError as exc:
        return {"verdict": "not_nilpotent", "passed": False,
                "checks": [{"check": "decision_procedure",
                            "verdict": "not_nilpotent", "witness": str(exc),
                            "elapsed": 0.0}]}
    return report


@app.post("/oracle")
def oracle_endpoint(req: OracleRequest):
    G = _group_from_model(req.group)
    try:
        if req.check == "irreducible":
            verdict = oracle.is_irreducible_bruteforce(G)
            witness = None
        elif req.check == "absolutely_irreducible":
            verdict = oracle.is_absolutely_irreducible(G)
            witness = None
        elif req.check == "block_systems":
            systems = oracle.find_block_systems(G)
            verdict = bool(systems)
            witness = [{"size": s.size,
                        "components": [[" ".join(map(str, r)) for r in c.basis]
                                       for c in s.components]}
                       for s in systems]
        elif req.check == "centralizer_dimension":
            verdict = oracle.centralizer_dimension(G)
            witness = None
        elif req.check == "conjugate":
            if req.other is None:
                _bad_request("invalid_parameters", "conjugate check needs 'other'")
            H = _group_from_model(req.other)
            X = oracle.conjugacy_search(G, H)
            verdict = X is not None
            witness = mat_to_str(G.F, X) if X is not None else None
        else:
            _bad_request("invalid_parameters", f"unknown check {req.check!r}")
    except (ClosureCapError, oracle.OracleCapError) as exc:
        _bad_request("cap_exceeded", str(exc))
    out = {"check": req.check, "verdict": verdict}
    if witness is not None:
        out["witness"] = witness
    return out
