"""Command-line client for the template service.

The CLI builds a run request from flags (and an optional key=value config
file), posts it to the generation endpoint, and writes the returned
artifacts to the output directory. By default the request is served
in-process over the ASGI interface, so no server needs to be running;
--server points the same client at a live instance instead.
"""
from __future__ import annotations

import argparse
import asyncio
import sys
from pathlib import Path

import httpx

from conestack.service import app


class CliError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(f"usage: {message}")


# config-file key -> (request field, converter); 'out' stays client-side
_ON_OFF = {"on": True, "off": False}
_CONFIG_KEYS = {
    "curve": ("curve", str),
    "start": ("start_x", float),
    "spacing": ("band_spacing", float),
    "count": ("count", int),
    "scale": ("scale_mm_per_unit", float),
    "page": ("page", str),
    "color": ("color_mode", str),
    "tabs": ("tabs", lambda v: _ON_OFF[v]),
    "overhang": ("overhang", float),
    "report_only": ("report_only", lambda v: _ON_OFF[v]),
    "out": ("out", str),
}


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="conestack",
        description="Generate papercraft cone-stack templates (SVG pages) and a "
        "numeric report for a surface of revolution.",
    )
    parser.add_argument("--curve", help="builtin name ('reciprocal') or 'f=EXPR; df=EXPR'")
    parser.add_argument("--start", type=float, help="first tangent abscissa")
    parser.add_argument("--spacing", type=float, help="band spacing, arc length along the curve")
    parser.add_argument("--count", type=int, help="number of cones")
    parser.add_argument("--scale", type=float, help="mm per curve unit")
    parser.add_argument("--page", help="letter | a4 | WxH (mm)")
    parser.add_argument("--color", choices=["color", "white"], help="band fill mode")
    parser.add_argument("--tabs", choices=["on", "off"], help="glue tabs on sector edges")
    parser.add_argument("--overhang", type=float, help="trim distance past the last tangent point, curve units")
    parser.add_argument("--out", help="output directory (default ./out)")
    parser.add_argument("--report-only", action="store_true", help="skip SVG pages, write reports only")
    parser.add_argument("--config", help="key=value config file; flags override it")
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    return parser


def load_config_file(path: str) -> dict:
    payload = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"config {path}:{lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip().strip("\"'")
        if key not in _CONFIG_KEYS:
            raise CliError(f"config {path}:{lineno}: unknown key {key!r}")
        field, convert = _CONFIG_KEYS[key]
        try:
            payload[field] = convert(value)
        except (ValueError, KeyError):
            raise CliError(f"config {path}:{lineno}: bad value {value!r} for {key!r}") from None
    return payload


def build_payload(args: argparse.Namespace) -> tuple[dict, Path]:
    payload = {}
    if args.config:
        payload.update(load_config_file(args.config))
    flag_fields = {
        "curve": args.curve,
        "start_x": args.start,
        "band_spacing": args.spacing,
        "count": args.count,
        "scale_mm_per_unit": args.scale,
        "page": args.page,
        "color_mode": args.color,
        "overhang": args.overhang,
    }
    for key, value in flag_fields.items():
        if value is not None:
            payload[key] = value
    if args.tabs is not None:
        payload["tabs"] = _ON_OFF[args.tabs]
    if args.report_only:
        payload["report_only"] = True
    file_out = payload.pop("out", None)
    outdir = Path(args.out if args.out is not None else (file_out or "out"))
    return payload, outdir


async def _post_generate(payload: dict, server: str | None) -> httpx.Response:
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=300.0) as client:
            return await client.post("/generate", json=payload)
    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, base_url="http://conestack") as client:
        return await client.post("/generate", json=payload)


def _describe_failure(response: httpx.Response) -> str:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, str):
        return detail
    if isinstance(detail, list) and detail:
        first = detail[0]
        loc = ".".join(str(p) for p in first.get("loc", []) if p != "body")
        return f"invalid config: {loc}: {first.get('msg', 'rejected')}"
    return f"request failed with status {response.status_code}"


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_arg_parser().parse_args(argv)
        payload, outdir = build_payload(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        response = asyncio.run(_post_generate(payload, args.server))
    except httpx.HTTPError as exc:
        print(f"error: io: cannot reach the service: {exc}", file=sys.stderr)
        return 1
    if response.status_code != 200:
        print(f"error: {_describe_failure(response)}", file=sys.stderr)
        return 1

    body = response.json()
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        for artifact in body["artifacts"]:
            path = outdir / artifact["filename"]
            path.write_bytes(artifact["content"].encode("utf-8"))
            print(f"wrote {path}")
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 1
    print(f"{body['cone_count']} cones on {body['page_count']} pages")
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
