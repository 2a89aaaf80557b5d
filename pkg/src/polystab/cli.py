"""Thin command-line client for the analysis service.

Every command builds the same request model the HTTP API accepts and
renders the same response model; by default the service handlers run
in-process, with `--url` the request is POSTed to a running server
instead.  Exit codes are a stable scripting contract:

    0   Stable / all properties passed
    1   NotStable / a property failed / roots not proven stable
    2   input could not be parsed or validated
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import NoConvergence, ParseError, PolystabError
from .service import schemas
from .service.app import (
    app,
    handle_analyze,
    handle_box,
    handle_fuzz,
    handle_minors,
    handle_roots,
)

EXIT_STABLE = 0
EXIT_NOT_STABLE = 1
EXIT_INPUT_ERROR = 2


class LocalClient:
    """Runs the service handlers in-process."""

    def analyze(self, req): return handle_analyze(req)
    def minors(self, req): return handle_minors(req)
    def roots(self, req): return handle_roots(req)
    def fuzz(self, req): return handle_fuzz(req)
    def box(self, req): return handle_box(req)


class HttpClient:
    """POSTs requests to a remote polystab server."""

    def __init__(self, base_url: str):
        import httpx

        self._client = httpx.Client(base_url=base_url, timeout=600.0)

    def _post(self, path: str, req, response_model):
        resp = self._client.post(path, json=req.model_dump(by_alias=True))
        if resp.status_code >= 400:
            body = resp.json()
            detail = body.get("detail", resp.text)
            name = body.get("error", "ParseError")
            exc_cls = {"NoConvergence": NoConvergence}.get(name, ParseError)
            raise exc_cls(f"{name}: {detail}" if name != "ParseError" else str(detail))
        return response_model.model_validate(resp.json())

    def analyze(self, req): return self._post("/v1/analyze", req, schemas.AnalyzeResponse)
    def minors(self, req): return self._post("/v1/minors", req, schemas.MinorsResponse)
    def roots(self, req): return self._post("/v1/roots", req, schemas.RootsResponse)
    def fuzz(self, req): return self._post("/v1/fuzz", req, schemas.FuzzResponse)
    def box(self, req): return self._post("/v1/box", req, schemas.BoxResponse)


def _client(args) -> LocalClient | HttpClient:
    if getattr(args, "url", None):
        return HttpClient(args.url)
    return LocalClient()


def _split_coeffs(text: str) -> list[str]:
    parts = [part.strip() for part in text.split(",")]
    if not parts or any(not part for part in parts):
        raise ParseError(f"bad coefficient list {text!r}")
    return parts


def _polynomial_in(args) -> schemas.PolynomialIn:
    return schemas.PolynomialIn(
        coeffs=_split_coeffs(args.coeffs),
        degree=args.degree,
        leading=args.leading,
        exact=not args.float,
    )


def _dump(model) -> str:
    return json.dumps(model.model_dump(by_alias=True), indent=2, sort_keys=True)


def _fmt_value(v) -> str:
    if isinstance(v, str):
        return v[:-2] if v.endswith("/1") else v
    return repr(v)


def _print_witnesses(witnesses) -> None:
    if witnesses:
        pairs = "  ".join(f"{name}={_fmt_value(value)}" for name, value in witnesses)
        print(f"witnesses: {pairs}")


def _print_root_report(report: schemas.RootReportOut) -> None:
    for r in report.roots:
        sign = "+" if r.im >= 0 else "-"
        print(f"  {r.re!r} {sign} {abs(r.im)!r}i")
    print(f"max real part: {report.max_real_part!r}")
    print(f"classification: {report.classification} (margin {report.margin:g})")
    print(f"residual: {report.residual:.3e}  iterations: {report.iterations}")


def cmd_analyze(args) -> int:
    req = schemas.AnalyzeRequest(
        polynomial=_polynomial_in(args),
        include_roots=args.roots,
        margin=args.margin,
    )
    resp = _client(args).analyze(req)
    if args.json:
        print(_dump(resp))
    else:
        print(f"degree {resp.input.degree} ({resp.input.domain}) "
              f"coeffs: {', '.join(_fmt_value(c) for c in resp.input.coeffs)}")
        minors = "  ".join(
            f"delta{i}={_fmt_value(v)}" for i, v in enumerate(resp.minors, start=1)
        )
        print(f"minors: {minors}")
        print(f"verdict: {resp.verdict}  [{resp.certificate}]")
        _print_witnesses(resp.witnesses)
        if resp.roots is not None:
            print("roots:")
            _print_root_report(resp.roots)
        print(f"time: {resp.timing_ms:.2f} ms")
    return EXIT_STABLE if resp.verdict == "Stable" else EXIT_NOT_STABLE


def cmd_minors(args) -> int:
    req = schemas.MinorsRequest(polynomial=_polynomial_in(args))
    resp = _client(args).minors(req)
    if args.json:
        print(_dump(resp))
    else:
        for i, v in enumerate(resp.minors, start=1):
            print(f"delta{i} = {_fmt_value(v)}")
        if resp.delta4 is not None:
            print(f"delta4 by determinant: {_fmt_value(resp.delta4.determinant)}")
            print(f"delta4 by expansion:   {_fmt_value(resp.delta4.expanded)}")
            print(f"delta4 by factoring:   {_fmt_value(resp.delta4.factored)}")
            print(f"agree: {str(resp.delta4.agree).lower()}")
        if resp.note:
            print(resp.note)
    if resp.delta4 is not None and not resp.delta4.agree:
        return EXIT_NOT_STABLE
    return EXIT_STABLE


def cmd_roots(args) -> int:
    req = schemas.RootsRequest(polynomial=_polynomial_in(args), margin=args.margin)
    resp = _client(args).roots(req)
    if args.json:
        print(_dump(resp))
    else:
        print(f"degree {resp.input.degree} roots:")
        _print_root_report(resp.report)
    return EXIT_STABLE if resp.report.classification == "Stable" else EXIT_NOT_STABLE


def cmd_fuzz(args) -> int:
    lo, hi = args.degrees
    req = schemas.FuzzRequest(
        count=args.count, degree_lo=lo, degree_hi=hi, seed=args.seed, margin=args.margin
    )
    resp = _client(args).fuzz(req)
    if args.json:
        print(_dump(resp))
    else:
        print(f"fuzz: count={resp.count} degrees={resp.degree_lo}..{resp.degree_hi} "
              f"seed={resp.seed} margin={resp.margin:g}")
        for name in sorted(resp.checks):
            check = resp.checks[name]
            print(f"  {name}: checked={check.checked} failures={check.failures}")
        print(f"verdicts: Stable={resp.verdict_counts.get('Stable', 0)} "
              f"NotStable={resp.verdict_counts.get('NotStable', 0)}")
        for ce in resp.counterexamples:
            print(f"counterexample [{ce.property}] degree={ce.degree} "
                  f"coeffs={','.join(ce.coeffs)}")
            print(f"  {ce.detail}")
        print("result: " + ("all properties passed" if resp.ok else "FAILURES"))
    return EXIT_STABLE if resp.ok else EXIT_NOT_STABLE


def cmd_box(args) -> int:
    try:
        text = open(args.bounds, "r", encoding="utf-8").read()
    except OSError as exc:
        raise ParseError(f"cannot read bounds file: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed bounds JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    try:
        bounds_in = schemas.BoundsIn.model_validate(doc)
    except Exception as exc:
        raise ParseError(f"bad bounds document: {exc}") from exc
    req = schemas.BoxRequest(box=bounds_in, count=args.count, seed=args.seed)
    resp = _client(args).box(req)
    if args.json:
        print(_dump(resp))
    else:
        print(f"degree {resp.degree} box")
        if resp.cor1 is not None:
            print("entire family unstable (Cor 1)")
            _print_witnesses(resp.cor1.witnesses)
        if resp.cor3 is not None:
            print("entire family unstable (Cor 3)")
            _print_witnesses(resp.cor3.witnesses)
        if not resp.family_unstable:
            print("no whole-family certificate")
        s = resp.samples
        print(f"samples: {s.count}  Stable={s.stable}  NotStable={s.not_stable}")
    if resp.family_unstable or resp.samples.not_stable > 0:
        return EXIT_NOT_STABLE
    return EXIT_STABLE


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_STABLE


def _degrees(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return (int(lo), int(hi))
        value = int(text)
        return (value, value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad degree range {text!r}") from exc


def _add_common(parser: argparse.ArgumentParser, polynomial: bool) -> None:
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    parser.add_argument("--url", help="send the request to a running server instead")
    if polynomial:
        parser.add_argument("--coeffs", required=True,
                            help="comma-separated a1..an (decimals or fractions like 9/4)")
        parser.add_argument("--degree", type=int, help="expected degree, cross-checked")
        parser.add_argument("--leading", help="divide through by this leading coefficient")
        group = parser.add_mutually_exclusive_group()
        group.add_argument("--exact", action="store_true", default=True,
                           help="exact rational arithmetic (default)")
        group.add_argument("--float", action="store_true", default=False,
                           help="IEEE double arithmetic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polystab",
        description="Hurwitz stability analysis of monic real polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="decide stability with a certificate")
    _add_common(p, polynomial=True)
    p.add_argument("--roots", action="store_true", help="also run the root oracle")
    p.add_argument("--margin", type=float, default=1e-8)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("minors", help="print the Hurwitz minors and the delta4 routes")
    _add_common(p, polynomial=True)
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("roots", help="find all roots and classify")
    _add_common(p, polynomial=True)
    p.add_argument("--margin", type=float, default=1e-8)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("fuzz", help="run the randomized property checks")
    _add_common(p, polynomial=False)
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--degrees", type=_degrees, default=(5, 9),
                   help="degree range, e.g. 5..9 or a single degree")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--margin", type=float, default=1e-8)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("box", help="certificates and sampling for a coefficient box")
    _add_common(p, polynomial=False)
    p.add_argument("--bounds", required=True, help="JSON bounds file")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_box)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_STABLE
    except PolystabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Exception as exc:  # pydantic validation of request fields
        if type(exc).__module__.startswith("pydantic"):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
        raise


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
