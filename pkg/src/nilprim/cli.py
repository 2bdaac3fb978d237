"""Command-line client for the nilprim service.

By default requests are served in-process (ASGI transport against the
FastAPI app), so no server is needed; --server points the same commands at
a running instance.  `nilprim serve` starts one.

Exit codes: 0 pass, 1 property failure, 2 usage/parse error, 3 resource cap.
"""

import argparse
import json
import sys

import httpx

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def make_client(server=None):
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    from fastapi.testclient import TestClient
    from nilprim.service import app
    return TestClient(app, raise_server_exceptions=False)


def _post(client, path, payload):
    resp = client.post(path, json=payload)
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", {})
        except Exception:
            detail = {}
        code = detail.get("code") if isinstance(detail, dict) else None
        message = detail.get("message") if isinstance(detail, dict) else str(detail)
        print(f"error: {message or resp.text}", file=sys.stderr)
        return None, EXIT_CAP if code == "cap_exceeded" else EXIT_USAGE
    return resp.json(), EXIT_OK


def _emit(doc, table=False):
    if table and "counts" in doc and "classes" not in doc:
        print(f"n={doc['n']} q={doc['q']} abelian={doc['counts']['abelian']} "
              f"nonabelian={doc['counts']['nonabelian']}")
    elif table and "classes" in doc:
        print(f"n={doc['n']} q={doc['q']} abelian={doc['counts']['abelian']} "
              f"nonabelian={doc['counts']['nonabelian']}")
        for rec in doc["classes"]:
            iso = rec["isotype"]
            print(f"  {rec['case']:<9} order={rec['order']:<6} "
                  f"sylow2={iso['sylow2_kind']}({iso['sylow2_order']}) "
                  f"odd={iso['odd_order']}")
    else:
        print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_enumerate(args, client):
    payload = {"n": args.n, "q": args.q,
               "nonabelian_only": args.nonabelian_only, "certify": args.certify}
    doc, code = _post(client, "/enumerate", payload)
    if doc is None:
        return code
    _emit(doc, table=args.table)
    return EXIT_OK


def cmd_count(args, client):
    doc, code = _post(client, "/count", {"n": args.n, "q": args.q})
    if doc is None:
        return code
    _emit(doc, table=args.table)
    return EXIT_OK


def cmd_construct(args, client):
    payload = {"n": args.n, "q": args.q, "kind": args.kind,
               "s": args.s, "c_order": args.c}
    doc, code = _post(client, "/construct", payload)
    if doc is None:
        return code
    _emit(doc)
    return EXIT_OK


def _load_group_file(path):
    try:
        with open(path) as fh:
            return json.load(fh), EXIT_OK
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read group file: {exc}", file=sys.stderr)
        return None, EXIT_USAGE


def cmd_verify(args, client):
    doc, code = _load_group_file(args.file)
    if doc is None:
        return code
    report, code = _post(client, "/verify", {"group": doc})
    if report is None:
        return code
    _emit(report)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_oracle(args, client):
    doc, code = _load_group_file(args.file)
    if doc is None:
        return code
    payload = {"check": args.check, "group": doc}
    if args.other:
        other, code = _load_group_file(args.other)
        if other is None:
            return code
        payload["other"] = other
    report, code = _post(client, "/oracle", payload)
    if report is None:
        return code
    _emit(report)
    if args.check in ("irreducible", "absolutely_irreducible", "conjugate"):
        return EXIT_OK if report["verdict"] else EXIT_FAIL
    return EXIT_OK


def cmd_serve(args, client):
    import uvicorn
    from nilprim.service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nilprim",
        description="Nilpotent primitive subgroups of GL(n, q): enumerate, "
                    "construct, verify, count.")
    parser.add_argument("--server", default=None,
                        help="base URL of a running nilprim service "
                             "(default: serve in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="census of conjugacy classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--nonabelian-only", action="store_true")
    p.add_argument("--certify", action="store_true",
                   help="attach oracle verification reports to each record")
    p.add_argument("--table", action="store_true", help="tabular output")
    p.add_argument("--json", dest="table", action="store_false")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="class counts only")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("construct", help="explicit generators for one group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kind", required=True,
                   help="q8 | gq | dh | sd (or full names)")
    p.add_argument("--s", type=int, default=None,
                   help="order exponent: |Sylow 2| = 2^s")
    p.add_argument("--c", type=int, default=1, help="odd cyclic part order")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run the property battery on a group file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="run one brute-force check on a group file")
    p.add_argument("check", choices=["irreducible", "absolutely_irreducible",
                                     "block_systems", "centralizer_dimension",
                                     "conjugate"])
    p.add_argument("file")
    p.add_argument("--other", default=None,
                   help="second group file for the conjugate check")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.func is cmd_serve:
        return cmd_serve(args, None)
    with make_client(args.server) as client:
        return args.func(args, client)


if __name__ == "__main__":
    sys.exit(main())
