"""JSON wire formats and a float-exact serializer."""

from __future__ import annotations

import json
import math

import numpy as np

from .elko import ElkoSpinor
from .forms import TWO_FORM_BASIS, CurvatureSample, TorsionSample
from .spinors import as_spinor

PAIR_KEYS = tuple(f"{a}{b}" for a, b in TWO_FORM_BASIS)


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite float {x!r} cannot be serialized")
    s = format(x, ".17g")
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def _encode(obj, indent: int, level: int) -> str:
    pad = "\n" + " " * (indent * (level + 1)) if indent else ""
    end = "\n" + " " * (indent * level) if indent else ""
    sep = "," if indent else ", "
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in seq):
            return "[" + ", ".join(_encode(v, 0, 0) for v in seq) + "]"
        items = [f"{pad}{_encode(v, indent, level + 1)}" for v in seq]
        return "[" + sep.join(items) + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """JSON text with every float written to 17 significant digits."""
    return _encode(obj, indent, 0)


def spinor_from_json(obj) -> np.ndarray:
    """Parse {"components": [[re, im] x 4]}."""
    if not isinstance(obj, dict) or "components" not in obj:
        raise ValueError("spinor JSON needs a 'components' list")
    comps = obj["components"]
    if not isinstance(comps, list) or len(comps) != 4:
        raise ValueError("'components' must hold exactly 4 [re, im] pairs")
    vals = []
    for c in comps:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(v, (int, float)) for v in c)):
            raise ValueError(f"bad component {c!r}; expected [re, im]")
        vals.append(complex(float(c[0]), float(c[1])))
    return as_spinor(vals)


def spinor_to_json(psi) -> dict:
    psi = as_spinor(psi)
    return {"components": [[float(z.real), float(z.imag)] for z in psi]}


def elko_to_json(lam: ElkoSpinor) -> dict:
    m = lam.momentum
    d = {
        "type": lam.conj_type,
        "pair": lam.pair,
        "m": None if m is None else float(m.m),
        "p": None if m is None else float(m.p_mag),
        "theta": None if m is None else float(m.theta),
        "phi": None if m is None else float(m.phi),
    }
    d.update(spinor_to_json(lam.psi))
    return d


def curvature_from_json(obj) -> CurvatureSample:
    """Parse {"Omega": {"01": [6 reals], ...}}; missing pairs are zero."""
    if not isinstance(obj, dict) or not isinstance(obj.get("Omega"), dict):
        raise ValueError("curvature JSON needs an 'Omega' object")
    arr = np.zeros((6, 6))
    for key, vals in obj["Omega"].items():
        if key not in PAIR_KEYS:
            raise ValueError(f"unknown curvature slot {key!r}; use one of {PAIR_KEYS}")
        if not (isinstance(vals, list) and len(vals) == 6):
            raise ValueError(f"slot {key!r} needs 6 coefficients")
        arr[PAIR_KEYS.index(key)] = [float(v) for v in vals]
    return CurvatureSample(arr)


def curvature_to_json(omega: CurvatureSample) -> dict:
    return {"Omega": {k: [float(v) for v in omega.Omega[i]] for i, k in enumerate(PAIR_KEYS)}}


def torsion_from_json(obj) -> TorsionSample:
    """Parse {"Theta": {"0": [6 reals], ..., "3": [...]}}; missing slots are zero."""
    if not isinstance(obj, dict) or not isinstance(obj.get("Theta"), dict):
        raise ValueError("torsion JSON needs a 'Theta' object")
    arr = np.zeros((4, 6))
    for key, vals in obj["Theta"].items():
        if key not in ("0", "1", "2", "3"):
            raise ValueError(f"unknown torsion slot {key!r}")
        if not (isinstance(vals, list) and len(vals) == 6):
            raise ValueError(f"slot {key!r} needs 6 coefficients")
        arr[int(key)] = [float(v) for v in vals]
    return TorsionSample(arr)


def torsion_to_json(t: TorsionSample) -> dict:
    return {"Theta": {str(a): [float(v) for v in t.Theta[a]] for a in range(4)}}
