"""Command-line front end; a thin HTTP client for the service app.

By default requests are served in-process (no socket); pass --server to
talk to a remote instance.  Exit codes: 0 all good, 1 a requested check
failed, 2 invalid parameters or transport failure.
"""

from __future__ import annotations

import json
import os
import sys

import click
import httpx


def _default_order() -> int:
    try:
        return int(os.environ.get("AJACK_DEFAULT_ORDER", "10"))
    except ValueError:
        return 10


class Client:
    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=300.0)
        else:
            import warnings
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient
            from .service import app as service_app
            self._client = TestClient(service_app)

    def post(self, path: str, payload: dict) -> dict:
        try:
            resp = self._client.post(path, json=payload)
        except httpx.HTTPError as exc:
            click.echo(f"transport error: {exc}", err=True)
            sys.exit(2)
        if resp.status_code == 422:
            detail = resp.json().get("detail", resp.text)
            click.echo(f"invalid parameters: {detail}", err=True)
            sys.exit(2)
        if resp.status_code != 200:
            click.echo(f"server error {resp.status_code}: {resp.text}",
                       err=True)
            sys.exit(2)
        return resp.json()


def _flatten(prefix: str, obj, rows: list):
    if isinstance(obj, dict):
        for key in obj:
            _flatten(f"{prefix}.{key}" if prefix else str(key), obj[key], rows)
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, obj))


def emit(data: dict, fmt: str, output: str | None):
    if fmt == "json":
        text = json.dumps(data, indent=2, sort_keys=True)
    elif fmt == "csv":
        rows = []
        _flatten("", data, rows)
        text = "key,value\n" + "\n".join(f"{k},{v}" for k, v in rows)
    else:
        rows = []
        _flatten("", data, rows)
        width = max((len(k) for k, _ in rows), default=0)
        text = "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _finish(data: dict):
    """Exit 1 when the payload reports a failed check."""
    if data.get("pass") is False:
        sys.exit(1)


server_option = click.option("--server", default=None,
                             help="base URL of a running service "
                                  "(default: in-process)")
format_option = click.option("--format", "fmt", default="json",
                             type=click.Choice(["json", "csv", "text"]))
output_option = click.option("--output", default=None,
                             help="write the report to this path")


def common(fn):
    return server_option(format_option(output_option(fn)))


@click.group()
def main():
    """Exact Jack series for affine sl2 and their modular data."""


# -- jack ---------------------------------------------------------------

@main.group()
def jack():
    """Jack series computation and closed-form checks."""


@jack.command("compute")
@click.option("--K", "K", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--l", "l", type=int, required=True)
@click.option("--order", type=int, default=None)
@click.option("--delta-shift", type=int, default=0)
@click.option("--unnormalized", is_flag=True, default=False)
@common
def jack_compute(K, k, l, order, delta_shift, unnormalized, server, fmt, output):
    data = Client(server).post("/jack/compute", {
        "K": K, "k": k, "l": l, "order": order or _default_order(),
        "delta_shift": delta_shift, "include_unnormalized": unnormalized})
    emit(data, fmt, output)


@jack.command("closed-form")
@click.option("--K", "K", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--l", "l", type=int, required=True)
@click.option("--order", type=int, default=None)
@common
def jack_closed_form(K, k, l, order, server, fmt, output):
    data = Client(server).post("/jack/closed-form", {
        "K": K, "k": k, "l": l, "order": order or _default_order()})
    emit(data, fmt, output)


def _level_cmd(level):
    @click.option("--k-max", type=int, default=3)
    @click.option("--order", type=int, default=None)
    @common
    def cmd(k_max, order, server, fmt, output):
        data = Client(server).post(f"/jack/check-level{level}", {
            "k_max": k_max, "order": order or _default_order()})
        emit(data, fmt, output)
        _finish(data)
    cmd.__name__ = f"check_level{level}"
    return cmd


jack.command("check-level1")(_level_cmd(1))
jack.command("check-level2")(_level_cmd(2))


@jack.command("heat-check")
@click.option("--K", "K", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--order", type=int, default=None)
@common
def jack_heat_check(K, k, order, server, fmt, output):
    data = Client(server).post("/jack/heat-check", {
        "K": K, "k": k, "order": order or _default_order()})
    emit(data, fmt, output)
    _finish(data)


# -- smatrix ------------------------------------------------------------

@main.group()
def smatrix():
    """S-matrix construction and identity checks."""


@smatrix.command("build")
@click.option("--K", "K", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--form", type=click.Choice(["product", "macdonald", "fixture"]),
              default="product")
@common
def smatrix_build(K, k, form, server, fmt, output):
    data = Client(server).post("/smatrix/build", {"K": K, "k": k, "form": form})
    emit(data, fmt, output)


@smatrix.command("cross-check")
@click.option("--k-max", type=int, default=5)
@click.option("--K-max", "K_max", type=int, default=4)
@click.option("--tol", type=float, default=1e-10)
@common
def smatrix_cross_check(k_max, K_max, tol, server, fmt, output):
    data = Client(server).post("/smatrix/cross-check", {
        "K_max": K_max, "k_max": k_max, "tol": tol})
    emit(data, fmt, output)
    _finish(data)


@smatrix.command("sj")
@click.option("--K", "K", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--form", type=click.Choice(["product", "macdonald", "fixture"]),
              default="product")
@common
def smatrix_sj(K, k, form, server, fmt, output):
    data = Client(server).post("/smatrix/sj", {"K": K, "k": k, "form": form})
    emit(data, fmt, output)


@smatrix.command("relations")
@click.option("--K", "K", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@common
def smatrix_relations(K, k, server, fmt, output):
    data = Client(server).post("/smatrix/relations", {"K": K, "k": k})
    emit(data, fmt, output)
    _finish(data)


# -- modular / selberg / gfactor / theta --------------------------------

@main.group()
def modular():
    """Numeric modular-transformation verification."""


@modular.command("verify-s")
@click.option("--K", "K", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--z", default="0.17,0", help='complex as "re,im"')
@click.option("--tau", default="0,1.3", help='complex as "re,im"')
@click.option("--u", default="0,0", help='complex as "re,im"')
@click.option("--order", type=int, default=20)
@click.option("--tol", type=float, default=1e-6)
@common
def modular_verify_s(K, k, z, tau, u, order, tol, server, fmt, output):
    data = Client(server).post("/modular/verify-s", {
        "K": K, "k": k, "z": z, "tau": tau, "u": u,
        "order": order, "tol": tol})
    emit(data, fmt, output)
    _finish(data)


@main.command("selberg")
@click.option("--n", type=int, required=True)
@click.option("--alpha", type=float, required=True)
@click.option("--beta", type=float, required=True)
@click.option("--gamma", type=float, required=True)
@click.option("--mode", type=click.Choice(["closed", "quadrature"]),
              default="closed")
@common
def selberg(n, alpha, beta, gamma, mode, server, fmt, output):
    data = Client(server).post("/selberg/eval", {
        "n": n, "alpha": alpha, "beta": beta, "gamma": gamma, "mode": mode})
    emit(data, fmt, output)


@main.command("gfactor")
@click.option("--K", "K", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--mode", type=click.Choice(["ratio", "absolute"]),
              default="ratio")
@common
def gfactor(K, k, m, mode, server, fmt, output):
    data = Client(server).post("/gfactor", {
        "K": K, "k": k, "m": m, "mode": mode})
    emit(data, fmt, output)


@main.group()
def theta():
    """Theta-function checks."""


@theta.command("check-laws")
@click.option("--samples", type=int, default=20)
@click.option("--tol", type=float, default=1e-9)
@click.option("--seed", type=int, default=7)
@common
def theta_check_laws(samples, tol, seed, server, fmt, output):
    data = Client(server).post("/theta/check-laws", {
        "samples": samples, "tol": tol, "seed": seed})
    emit(data, fmt, output)
    _finish(data)


# -- suite --------------------------------------------------------------

@main.group()
def suite():
    """Bundled verification suites."""


@suite.command("acceptance")
@click.option("--quick", is_flag=True, default=False)
@click.option("--only", multiple=True,
              help="restrict to these criterion ids (repeatable)")
@common
def suite_acceptance(quick, only, server, fmt, output):
    data = Client(server).post("/suite/acceptance", {
        "quick": quick, "only": list(only) or None})
    for r in data["results"]:
        click.echo(f"{r['id']}: {'PASS' if r['pass'] else 'FAIL'} - "
                   f"{r['detail']}", err=True)
    emit(data, fmt, output)
    _finish(data)


if __name__ == "__main__":
    main()
