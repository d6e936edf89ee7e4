"""Reading and writing the JSON fan file format.

A fan file is a JSON object with exactly the keys mode, n, m, rays, and
max_cones.  Ray order is semantic (ray i belongs to vertex i) and is never
changed; cones are canonicalized to sorted tuples in lexicographic order.
Parsing checks the structural invariants and rejects anything off-contract
with a `FanFormatError`; the deeper geometric axioms stay with `validate`.

Rendering is canonical: parse then render is the identity on rendered
files, and render after parse canonicalizes cone order.
"""

from __future__ import annotations

import json

from .fans import MODES, FanData
from .lattice import is_primitive
from .simplicial import SimplicialComplex


class FanFormatError(ValueError):
    """A fan file violates the format contract."""


_KEYS = ("mode", "n", "m", "rays", "max_cones")


def _require_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise FanFormatError(f"{what} must be an integer, got {value!r}")
    return value


def parse_fan(text: str) -> FanData:
    """Parse the JSON fan format into a FanData, checking structure."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FanFormatError(
            f"malformed JSON at line {exc.lineno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise FanFormatError("fan file must be a JSON object")
    unknown = sorted(set(doc) - set(_KEYS))
    if unknown:
        raise FanFormatError(f"unknown keys: {', '.join(unknown)}")
    missing = [k for k in _KEYS if k not in doc]
    if missing:
        raise FanFormatError(f"missing keys: {', '.join(missing)}")

    mode = doc["mode"]
    if mode not in MODES:
        raise FanFormatError(f"mode must be one of {MODES}, got {mode!r}")
    n = _require_int(doc["n"], "n")
    m = _require_int(doc["m"], "m")
    if n < 1 or m < 1:
        raise FanFormatError("n and m must be positive")

    rays = doc["rays"]
    if not isinstance(rays, list) or len(rays) != m:
        raise FanFormatError(f"rays must be a list of {m} vectors")
    parsed_rays = []
    for idx, ray in enumerate(rays, start=1):
        if not isinstance(ray, list) or len(ray) != n:
            raise FanFormatError(f"ray {idx} must be a list of {n} integers")
        vec = tuple(_require_int(x, f"ray {idx} entry") for x in ray)
        if not any(vec):
            raise FanFormatError(f"ray {idx} is zero")
        if mode == "smallcover":
            if any(x not in (0, 1) for x in vec):
                raise FanFormatError(
                    f"ray {idx} must have entries in {{0, 1}} in smallcover mode"
                )
        elif not is_primitive(vec):
            raise FanFormatError(f"ray {idx} = {list(vec)} is not primitive")
        parsed_rays.append(vec)

    cones = doc["max_cones"]
    if not isinstance(cones, list) or not cones:
        raise FanFormatError("max_cones must be a nonempty list")
    normalized = []
    for idx, cone in enumerate(cones, start=1):
        if not isinstance(cone, list) or not cone:
            raise FanFormatError(f"cone {idx} must be a nonempty list of vertices")
        verts = [_require_int(v, f"cone {idx} vertex") for v in cone]
        for v in verts:
            if not 1 <= v <= m:
                raise FanFormatError(
                    f"cone {idx} vertex {v} is outside 1..{m}"
                )
        if len(set(verts)) != len(verts):
            raise FanFormatError(f"cone {idx} repeats a vertex")
        normalized.append(tuple(sorted(verts)))
    if len(set(normalized)) != len(normalized):
        dup = next(c for c in normalized if normalized.count(c) > 1)
        raise FanFormatError(f"duplicate maximal cone {list(dup)}")

    try:
        complex_ = SimplicialComplex.from_faces(m, normalized)
        return FanData(n=n, m=m, rays=tuple(parsed_rays), complex=complex_, mode=mode)
    except ValueError as exc:
        raise FanFormatError(str(exc)) from exc


def render_fan(fan: FanData) -> str:
    """Canonical text of a fan: fixed key order, rays in semantic order,
    cones sorted, one top-level key per line."""
    rays = json.dumps([list(v) for v in fan.rays])
    cones = json.dumps([list(c) for c in fan.complex.facets])
    return (
        "{\n"
        f'  "mode": {json.dumps(fan.mode)},\n'
        f'  "n": {fan.n},\n'
        f'  "m": {fan.m},\n'
        f'  "rays": {rays},\n'
        f'  "max_cones": {cones}\n'
        "}\n"
    )


def load_fan(path) -> FanData:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_fan(handle.read())


def save_fan(path, fan: FanData) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(render_fan(fan))
