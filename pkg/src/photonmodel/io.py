"""JSON, npz and CSV formats for tensors, helicity bases, states and runs."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from .helicity import HelicityBasis
from .schrodinger import EvolutionConfig, MomentumGrid, SpinorField
from .tensor import TRANSFORM_TOL, AntisymTensor, PhotonTensor

PathLike = Union[str, Path]
OBSERVABLE_COLUMNS = ("step", "time", "norm", "energy", "helicity", "defect")


class SchemaError(ValueError):
    """Input document does not match the expected layout."""


def _field(doc: dict, name: str, where: str):
    if not isinstance(doc, dict):
        raise SchemaError(f"{where}: expected a JSON object")
    if name not in doc:
        raise SchemaError(f"{where}: missing field {name!r}")
    return doc[name]


def _vec(doc: dict, name: str, where: str) -> list:
    v = _field(doc, name, where)
    if not (isinstance(v, list) and len(v) == 3 and all(isinstance(x, (int, float)) for x in v)):
        raise SchemaError(f"{where}: field {name!r} must be a list of 3 numbers")
    return [float(x) for x in v]


def dumps(doc) -> str:
    # json uses repr for floats: shortest string that round-trips exactly
    return json.dumps(doc, indent=2, sort_keys=False, allow_nan=False)


# ---------------------------------------------------------------- tensors


def tensor_to_dict(t: Union[AntisymTensor, PhotonTensor], k=None) -> dict:
    if isinstance(t, PhotonTensor):
        return {
            "e": [float(x) for x in t.e],
            "b": [float(x) for x in t.b],
            "k": [float(x) for x in t.k],
            "helicity": int(t.helicity),
            "omega": t.omega,
        }
    doc = {"e": [float(x) for x in t.e], "b": [float(x) for x in t.b]}
    if k is not None:
        doc["k"] = [float(x) for x in k]
    return doc


def tensor_from_dict(doc: dict) -> Union[AntisymTensor, PhotonTensor]:
    """Read a tensor document; with ``k`` and ``helicity`` present the photon
    constraints are checked and a :class:`PhotonTensor` is returned."""
    f = AntisymTensor(_vec(doc, "e", "tensor"), _vec(doc, "b", "tensor"))
    if "k" in doc and "helicity" in doc:
        h = doc["helicity"]
        if h not in (1, -1):
            raise SchemaError("tensor: field 'helicity' must be +1 or -1")
        return PhotonTensor(f, _vec(doc, "k", "tensor"), int(h), tol=TRANSFORM_TOL)
    return f


def tensor_k(doc: dict):
    return _vec(doc, "k", "tensor") if "k" in doc else None


# ------------------------------------------------------- complex vectors


def complex_to_json(v) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex).reshape(-1)]


def complex_from_json(v, name: str = "vector") -> np.ndarray:
    try:
        arr = np.array(v, dtype=float)
    except (TypeError, ValueError):
        raise SchemaError(f"{name}: expected a list of [re, im] pairs") from None
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise SchemaError(f"{name}: expected a list of [re, im] pairs")
    return arr[:, 0] + 1j * arr[:, 1]


def basis_to_dict(basis: HelicityBasis) -> dict:
    return {
        "k": [float(x) for x in basis.k],
        "chi_plus": complex_to_json(basis.chi_plus),
        "chi_minus": complex_to_json(basis.chi_minus),
        "chi_zero": complex_to_json(basis.chi_zero),
    }


def basis_from_dict(doc: dict) -> HelicityBasis:
    vecs = {}
    for name in ("chi_plus", "chi_minus", "chi_zero"):
        vecs[name] = complex_from_json(_field(doc, name, "helicity basis"), name)
    return HelicityBasis(np.array(_vec(doc, "k", "helicity basis")), **vecs)


# ---------------------------------------------------------------- states


def state_to_dict(state: SpinorField) -> dict:
    return {
        "n": state.grid.n,
        "p_max": state.grid.p_max,
        "representation": state.representation,
        "values": complex_to_json(state.values),
    }


def state_from_dict(doc: dict) -> SpinorField:
    grid = MomentumGrid(_field(doc, "n", "state"), _field(doc, "p_max", "state"))
    values = complex_from_json(_field(doc, "values", "state"), "values")
    if values.size != 3 * grid.n**3:
        raise SchemaError(f"state: field 'values' must hold {grid.n}^3 complex triples")
    return SpinorField(grid, values.reshape(grid.shape + (3,)), _field(doc, "representation", "state"))


def save_state(state: SpinorField, path: PathLike) -> None:
    """Write a state file.  ``.json`` paths get the JSON layout; anything
    else gets an ``npz`` container with the same fields."""
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(dumps(state_to_dict(state)))
        return
    with open(path, "wb") as fh:
        np.savez(
            fh,
            n=state.grid.n,
            p_max=state.grid.p_max,
            representation=state.representation,
            values=np.ascontiguousarray(state.values).reshape(-1, 3),
        )


def load_state(path: PathLike) -> SpinorField:
    path = Path(path)
    if path.suffix == ".json":
        return state_from_dict(json.loads(path.read_text()))
    with open(path, "rb") as fh:
        try:
            data = np.load(fh, allow_pickle=False)
        except (ValueError, OSError) as exc:
            raise SchemaError(f"state file {path} is not a valid npz container: {exc}") from None
        with data:
            missing = [k for k in ("n", "p_max", "representation", "values") if k not in data]
            if missing:
                raise SchemaError(f"state: missing field {missing[0]!r}")
            grid = MomentumGrid(int(data["n"]), float(data["p_max"]))
            values = np.asarray(data["values"])
            if values.size != 3 * grid.n**3:
                raise SchemaError(f"state: field 'values' must hold {grid.n}^3 complex triples")
            return SpinorField(grid, values.reshape(grid.shape + (3,)), str(data["representation"]))


# ---------------------------------------------------------- run configs


def config_from_dict(doc: dict) -> EvolutionConfig:
    return EvolutionConfig(
        dt=float(_field(doc, "dt", "evolution config")),
        steps=_field(doc, "steps", "evolution config"),
        project_transverse=bool(doc.get("project_transverse", False)),
        observables_every=doc.get("observables_every", 0),
    )


def observables_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=OBSERVABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: repr(row[k]) if isinstance(row[k], float) else row[k] for k in OBSERVABLE_COLUMNS})
    return buf.getvalue()
