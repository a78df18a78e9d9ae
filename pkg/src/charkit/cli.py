"""Command-line client for the computation service.

Every subcommand issues one request against the FastAPI app -- in-process by
default (no server needed), or against a remote instance given via
--server or the CHARKIT_SERVER environment variable -- and prints the JSON
response.  The exit code is 0 only when every invariant check reported by
the service passed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import httpx


def _request(server: str | None, method: str, path: str,
             payload: dict | None) -> httpx.Response:
    server = server or os.environ.get("CHARKIT_SERVER")
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.request(method, path, json=payload)
    # no server configured: drive the ASGI app in-process
    import asyncio

    from .service.app import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://charkit.local", timeout=None
        ) as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _call(args, method: str, path: str, payload: dict | None = None) -> int:
    resp = _request(args.server, method, path, payload or {})
    try:
        doc = resp.json()
    except json.JSONDecodeError:
        print(resp.text, file=sys.stderr)
        return 2
    print(json.dumps(doc, indent=2))
    if resp.status_code != 200:
        return 2
    return 0 if doc.get("ok", True) else 1


def _parse_ordering(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="charkit",
        description="exact Weyl-group, Hecke-trace and Fourier computations",
    )
    parser.add_argument("--server", help="remote service URL (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="root system summary")
    p.add_argument("--type", required=True)

    p = sub.add_parser("coxeter-conj", help="conjugate one Coxeter ordering into another")
    p.add_argument("--type", default="E7")
    p.add_argument("--source", required=True, help="comma-separated 1-based nodes")
    p.add_argument("--target", required=True)

    p = sub.add_parser("chartable", help="exact character table")
    p.add_argument("--group", required=True,
                   help='preset (Z1..Z9, S2..S5, D4, Q8) or "perm: (1,2); (1,2,3)"')

    p = sub.add_parser("fourier", help="pair set and pairing matrix of a small group")
    p.add_argument("--group", required=True)

    p = sub.add_parser("sandbox", help="exhaustive GL_n(F_q) verification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--check", default="heckeuch",
                   choices=["heckeuch", "cells", "cellpartition", "cellproducts", "hecke"])

    pe7 = sub.add_parser("e7", help="sign determination and final value table")
    e7sub = pe7.add_subparsers(dest="e7_command", required=True)
    p = e7sub.add_parser("sign", help="solve for the unit scalar")
    p.add_argument("--families", help="family dataset path (default: bundled)")
    p.add_argument("--traces", help="trace dataset path (default: bundled)")
    p.add_argument("--no-positivity", action="store_true",
                   help="drop the positivity axiom (demonstrates ambiguity)")
    p = e7sub.add_parser("table", help="values at the regular unipotent classes")
    p.add_argument("--q", type=int, help="specialize at this prime power")
    p.add_argument("--families")
    p.add_argument("--traces")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    args = parser.parse_args(argv)

    if args.command == "roots":
        return _call(args, "POST", "/roots", {"type": args.type})
    if args.command == "coxeter-conj":
        return _call(args, "POST", "/coxeter-conj", {
            "type": args.type,
            "source": _parse_ordering(args.source),
            "target": _parse_ordering(args.target),
        })
    if args.command == "chartable":
        return _call(args, "POST", "/chartable", {"group": args.group})
    if args.command == "fourier":
        return _call(args, "POST", "/fourier", {"group": args.group})
    if args.command == "sandbox":
        return _call(args, "POST", "/sandbox",
                     {"n": args.n, "q": args.q, "check": args.check})
    if args.command == "e7" and args.e7_command == "sign":
        return _call(args, "POST", "/e7/sign", {
            "families": args.families, "traces": args.traces,
            "positivity": not args.no_positivity,
        })
    if args.command == "e7" and args.e7_command == "table":
        return _call(args, "POST", "/e7/table", {
            "q": args.q, "families": args.families, "traces": args.traces,
        })
    if args.command == "serve":
        import uvicorn
        from .service.app import app
        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
