"""Command-line client for the engine.

The CLI contains no mathematics: it loads files, forwards payloads to the
handler layer (in process by default, or over HTTP to a running service via
``--server``), renders reports, and maps failures to exit codes:

    0  success / all checks clean
    1  mathematical failure (axiom, relation, condition, coefficient)
    2  input or parse error (including invalid structures)
    3  unsupported configuration (positive characteristic homology)

All JSON output is canonical, so identical inputs give byte-identical bytes.
"""

import json
import sys
from pathlib import Path

import click

from . import api
from .errors import (
    AxiomError,
    CharNotZero,
    EngineError,
    InvalidStructure,
    NotAGroup,
    ParseError,
    SingularAntipode,
    error_from_code,
)
from .serialize import dumps_canonical

EXIT_MATH = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3

_INPUT_ERRORS = (ParseError, InvalidStructure, NotAGroup, SingularAntipode, AxiomError)


def exit_code_for(err):
    if isinstance(err, _INPUT_ERRORS):
        return EXIT_INPUT
    if isinstance(err, CharNotZero):
        return EXIT_UNSUPPORTED
    return EXIT_MATH


class LocalClient:
    """In-process client: calls the handler layer directly."""

    def call(self, op, payload):
        return api.HANDLERS[op](payload)


class HttpClient:
    """Client for a running service; reconstructs typed errors from codes."""

    def __init__(self, base_url, transport=None):
        import httpx

        self._client = httpx.Client(
            base_url=base_url, transport=transport, timeout=600.0
        )

    def call(self, op, payload):
        response = self._client.post(f"/api/{op}", json=payload)
        if response.status_code == 400:
            body = response.json()
            raise error_from_code(body.get("code", ""), body.get("detail", ""))
        response.raise_for_status()
        return response.json()


def make_client(server):
    return HttpClient(server) if server else LocalClient()


def _load_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None


def _fail(err):
    click.echo(f"error [{err.code}]: {err}", err=True)
    sys.exit(exit_code_for(err))


def _common_options(fn):
    fn = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "table"]),
        default="table",
        show_default=True,
        help="report rendering",
    )(fn)
    fn = click.option(
        "--server",
        default=None,
        metavar="URL",
        help="send the request to a running service instead of computing in process",
    )(fn)
    return fn


@click.group()
def main():
    """Exact-arithmetic checks for Hopf-algebraic cyclic structures."""


@main.command("verify-hopf")
@click.argument("hopf_path", metavar="HOPF")
@_common_options
def cmd_verify_hopf(hopf_path, fmt, server):
    """Check every Hopf axiom of HOPF as an exact matrix identity."""
    try:
        report = make_client(server).call(
            "verify-hopf", {"hopf": _load_json(hopf_path)}
        )
    except EngineError as err:
        _fail(err)
    if fmt == "json":
        click.echo(dumps_canonical(report), nl=False)
    else:
        for check in report["checks"]:
            line = f"{'PASS' if check['passed'] else 'FAIL'}  {check['name']}"
            mm = check.get("first_mismatch")
            if mm:
                line += (
                    f"  (first mismatch at ({mm['row']},{mm['col']}):"
                    f" {mm['lhs']} != {mm['rhs']})"
                )
            click.echo(line)
        click.echo("all axioms hold" if report["passed"] else "axioms FAIL")
    sys.exit(0 if report["passed"] else EXIT_MATH)


@main.command("check-coeff")
@click.argument("hopf_path", metavar="HOPF")
@click.argument("coeff_path", metavar="COEFF")
@click.option("--i", "index", type=int, default=0, show_default=True, help="compatibility index")
@click.option(
    "--stability",
    is_flag=True,
    help="also require stability at the same index for a clean exit",
)
@_common_options
def cmd_check_coeff(hopf_path, coeff_path, index, stability, fmt, server):
    """Check the generalized compatibility and stability of a coefficient."""
    payload = {
        "hopf": _load_json(hopf_path),
        "coeff": _load_json(coeff_path),
        "i": index,
        "require_stability": stability,
    }
    try:
        report = make_client(server).call("check-coeff", payload)
    except EngineError as err:
        _fail(err)
    if fmt == "json":
        click.echo(dumps_canonical(report), nl=False)
    else:
        yn = lambda b: "yes" if b else "no"  # noqa: E731
        click.echo(f"index i = {report['i']}")
        click.echo(f"  compatibility, symmetric form:   {yn(report['yd_route1'])}")
        click.echo(f"  compatibility, coaction form:    {yn(report['yd_route2'])}")
        mm = report.get("yd_first_mismatch")
        if mm:
            click.echo(
                f"  first violated entry: ({mm['row']},{mm['col']})"
                f" {mm['lhs']} != {mm['rhs']}"
            )
        click.echo(f"  stability, even power:           {yn(report['stability_even'])}")
        click.echo(f"  stability, odd power:            {yn(report['stability_odd'])}")
    sys.exit(0 if report["requested_ok"] else EXIT_MATH)


@main.command("build")
@click.argument("hopf_path", metavar="HOPF")
@click.argument("coeff_path", metavar="COEFF")
@click.argument("object_path", metavar="OBJECT")
@click.option(
    "--theory",
    type=click.Choice(["cov-alg", "cov-coalg", "contra-alg", "contra-coalg"]),
    required=True,
)
@click.option("--degree", type=click.IntRange(1, 8), default=2, show_default=True, help="degree cap")
@click.option(
    "--allow-paracyclic",
    is_flag=True,
    help="accept a compatible but unstable coefficient",
)
@click.option(
    "--builder",
    type=click.Choice(["direct", "generic"]),
    default="direct",
    show_default=True,
)
@click.option("--out", type=click.Path(), default=None, help="output path (default stdout)")
@click.option("--server", default=None, metavar="URL")
def cmd_build(hopf_path, coeff_path, object_path, theory, degree, allow_paracyclic, builder, out, server):
    """Build the (co)cyclic tower of OBJECT with coefficient COEFF."""
    payload = {
        "hopf": _load_json(hopf_path),
        "coeff": _load_json(coeff_path),
        "object": _load_json(object_path),
        "theory": theory,
        "degree": degree,
        "allow_paracyclic": allow_paracyclic,
        "builder": builder,
    }
    try:
        result = make_client(server).call("build", payload)
    except EngineError as err:
        _fail(err)
    text = dumps_canonical(result["object"])
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)
    sys.exit(0)


@main.command("verify-relations")
@click.argument("object_path", metavar="OBJECT")
@_common_options
def cmd_verify_relations(object_path, fmt, server):
    """Exhaustively check the (co)cyclic relations of a serialized tower."""
    try:
        report = make_client(server).call(
            "verify-relations", {"object": _load_json(object_path)}
        )
    except EngineError as err:
        _fail(err)
    if fmt == "json":
        click.echo(dumps_canonical(report), nl=False)
    else:
        click.echo(f"checked {report['checked']} relation instances")
        if report["passed"]:
            click.echo("all relations hold")
        else:
            for v in report["violations"]:
                idx = ",".join(str(k) for k in v["indices"])
                click.echo(f"FAIL  {v['relation']}  degree {v['degree']}  ({idx})")
    sys.exit(0 if report["passed"] else EXIT_MATH)


@main.command("homology")
@click.argument("object_path", metavar="OBJECT")
@_common_options
def cmd_homology(object_path, fmt, server):
    """Hochschild and cyclic (co)homology dimensions of a serialized tower."""
    try:
        report = make_client(server).call(
            "homology", {"object": _load_json(object_path)}
        )
    except EngineError as err:
        _fail(err)
    if fmt == "json":
        click.echo(dumps_canonical(report), nl=False)
    else:
        click.echo("degree  hochschild  cyclic")
        for q, (hh, hc) in enumerate(zip(report["hochschild"], report["cyclic"])):
            click.echo(f"{q:>6}  {hh:>10}  {hc:>6}")
        click.echo(f"(degrees above {report['max_valid_degree']} unavailable)")
    sys.exit(0)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def cmd_serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("hopfcyc.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
