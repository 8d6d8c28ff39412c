"""JSON readers and writers for group tables, Hopf specs, pairings and doubles.

Complex arrays are nested lists with ``[re, im]`` pairs at the leaves.
Floats are written with ``repr`` precision, so a read/write cycle is
byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .double import DoubleSpec
from .exceptions import InvalidGroupError, SpecFormatError
from .groups import GroupTable
from .hopf import HopfSpec
from .pairing import PairingSpec

_HOPF_ARRAYS = {"mult": 3, "unit": 1, "comult": 3, "counit": 1, "antipode": 2, "star": 2}


def encode_complex(arr) -> list:
    arr = np.asarray(arr, dtype=np.complex128)
    return np.stack([arr.real, arr.imag], axis=-1).tolist()


def decode_complex(data, ndim: int | None = None, name: str = "array") -> np.ndarray:
    try:
        raw = np.asarray(data, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise SpecFormatError(f"{name}: not a rectangular array of [re, im] pairs ({exc})") from exc
    if raw.ndim == 0 or raw.shape[-1] != 2:
        raise SpecFormatError(f"{name}: leaves must be [re, im] pairs")
    if ndim is not None and raw.ndim != ndim + 1:
        raise SpecFormatError(f"{name}: expected rank {ndim}, got {raw.ndim - 1}")
    if not np.all(np.isfinite(raw)):
        raise SpecFormatError(f"{name}: non-finite entries")
    out = np.empty(raw.shape[:-1], dtype=np.complex128)
    # assign parts separately; re + 1j * im would turn -0.0 into 0.0
    out.real, out.imag = raw[..., 0], raw[..., 1]
    return out


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2) + "\n"
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _load_json(path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"{path}: invalid JSON ({exc})") from exc


# -- groups -----------------------------------------------------------------

def group_to_dict(G: GroupTable) -> dict:
    out: dict[str, Any] = {"order": G.order, "product": G.product.tolist()}
    if G.label is not None:
        out["label"] = G.label
    return out


def group_from_dict(data: Any) -> GroupTable:
    if not isinstance(data, dict) or "product" not in data:
        raise SpecFormatError("group file must be an object with a 'product' table")
    product = data["product"]
    if not isinstance(product, list) or not all(isinstance(row, list) for row in product):
        raise SpecFormatError("'product' must be a nested list")
    if not all(isinstance(v, int) and not isinstance(v, bool) for row in product for v in row):
        raise SpecFormatError("'product' entries must be integers")
    G = GroupTable.from_product(product, label=data.get("label"))
    if "order" in data and data["order"] != G.order:
        raise InvalidGroupError("closure", f"declared order {data['order']} but table has {G.order} rows")
    return G


def read_group(path) -> GroupTable:
    return group_from_dict(_load_json(path))


def write_group(G: GroupTable, path) -> None:
    Path(path).write_text(dumps(group_to_dict(G)))


# -- Hopf specs ---------------------------------------------------------------

def spec_to_dict(H: HopfSpec) -> dict:
    out: dict[str, Any] = {}
    if H.label is not None:
        out["label"] = H.label
    out["dim"] = H.dim
    for name in _HOPF_ARRAYS:
        out[name] = encode_complex(getattr(H, name))
    out["integral"] = None if H.integral is None else encode_complex(H.integral)
    return out


def spec_from_dict(data: Any) -> HopfSpec:
    if not isinstance(data, dict):
        raise SpecFormatError("spec must be a JSON object")
    missing = [k for k in ("dim", *_HOPF_ARRAYS) if k not in data]
    if missing:
        raise SpecFormatError(f"spec is missing fields: {', '.join(missing)}")
    arrays = {name: decode_complex(data[name], ndim, name) for name, ndim in _HOPF_ARRAYS.items()}
    integral = data.get("integral")
    if integral is not None:
        integral = decode_complex(integral, 1, "integral")
    n = data["dim"]
    if not isinstance(n, int) or arrays["unit"].shape != (n,):
        raise SpecFormatError(f"'dim' = {n!r} disagrees with the unit vector")
    try:
        return HopfSpec(**arrays, integral=integral, label=data.get("label"))
    except ValueError as exc:
        raise SpecFormatError(str(exc)) from exc


def read_spec(path) -> HopfSpec:
    return spec_from_dict(_load_json(path))


def write_spec(H: HopfSpec, path) -> None:
    Path(path).write_text(dumps(spec_to_dict(H)))


# -- pairings -----------------------------------------------------------------

def pairing_to_dict(Pr: PairingSpec) -> dict:
    return {"A": spec_to_dict(Pr.A), "B": spec_to_dict(Pr.B), "P": encode_complex(Pr.P)}


def pairing_from_dict(data: Any, base: Path | None = None) -> PairingSpec:
    if not isinstance(data, dict) or not {"A", "B", "P"} <= data.keys():
        raise SpecFormatError("pairing must be an object with 'A', 'B' and 'P'")

    def side(ref):
        if isinstance(ref, str):
            path = Path(ref)
            if base is not None and not path.is_absolute():
                path = base / path
            return read_spec(path)
        return spec_from_dict(ref)

    A, B = side(data["A"]), side(data["B"])
    P = decode_complex(data["P"], 2, "P")
    if P.shape != (A.dim, B.dim):
        raise SpecFormatError(f"P has shape {P.shape}, expected {(A.dim, B.dim)}")
    return PairingSpec(A, B, P)


def read_pairing(path) -> PairingSpec:
    return pairing_from_dict(_load_json(path), base=Path(path).parent)


def write_pairing(Pr: PairingSpec, path) -> None:
    Path(path).write_text(dumps(pairing_to_dict(Pr)))


# -- doubles ------------------------------------------------------------------

def double_to_dict(D: DoubleSpec) -> dict:
    out = spec_to_dict(D.H)
    out["embed_A"] = encode_complex(D.embed_A)
    out["embed_B"] = encode_complex(D.embed_B)
    out["index_map"] = D.index_map.tolist()
    out["source"] = pairing_to_dict(D.source)
    return out


def is_double_dict(data: Any) -> bool:
    return isinstance(data, dict) and {"embed_A", "embed_B", "index_map", "source"} <= data.keys()


def double_from_dict(data: Any) -> DoubleSpec:
    if not is_double_dict(data):
        raise SpecFormatError("not a double export (needs embed_A, embed_B, index_map, source)")
    H = spec_from_dict(data)
    source = pairing_from_dict(data["source"])
    return DoubleSpec(
        H=H,
        index_map=np.asarray(data["index_map"], dtype=np.int64),
        embed_A=decode_complex(data["embed_A"], 2, "embed_A"),
        embed_B=decode_complex(data["embed_B"], 2, "embed_B"),
        theta=H.integral,
        source=source,
    )


def read_double(path) -> DoubleSpec:
    return double_from_dict(_load_json(path))


def write_double(D: DoubleSpec, path) -> None:
    Path(path).write_text(dumps(double_to_dict(D)))


def load_json(path) -> Any:
    return _load_json(path)
