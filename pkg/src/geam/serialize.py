"""JSON measurement and state files, plus report serialization.

A measurement file is ``{"dimension": d, "groups": [...]}`` where each
group holds ``"operators"``, a list of d x d matrices with entries written
as ``[re, im]`` pairs, and optionally ``"gamma"``.  With gammas present the
operators are equiangular group elements (each group sums to gamma times
the identity); without them each group is a POVM.  A state file holds
either ``"matrix"`` in the same entry format or ``"bloch": [rx, ry, rz]``.

Floats go through Python's shortest round-trip repr, so an export parsed
and exported again is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path

import numpy as np

from .bounds import BoundReport
from .errors import ParseError
from .linalg import bloch_to_density, validate_density
from .measurements import (EquiangularMeasurement, Povm,
                           SymmetricMeasurementSet, characterize_equiangular,
                           characterize_symmetric)


def _matrix_to_obj(m: np.ndarray) -> list:
    # adding 0.0 folds negative zeros, which parsing would not preserve
    return [[[float(v.real) + 0.0, float(v.imag) + 0.0] for v in row]
            for row in m]


def _matrix_from_obj(obj, d: int) -> np.ndarray:
    try:
        arr = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix entries must be [re, im] pairs: {exc}") from None
    if arr.shape != (d, d, 2):
        raise ParseError(f"matrix has shape {arr.shape}, expected ({d}, {d}, 2)")
    return arr[..., 0] + 1j * arr[..., 1]


def measurement_to_obj(m) -> dict:
    if isinstance(m, EquiangularMeasurement):
        groups = [{"gamma": float(w), "operators": [_matrix_to_obj(q) for q in g]}
                  for g, w in zip(m.groups, m.params.weights)]
        return {"dimension": m.dim, "groups": groups}
    if isinstance(m, SymmetricMeasurementSet):
        groups = [{"operators": [_matrix_to_obj(e) for e in p.elements]}
                  for p in m.povms]
        return {"dimension": m.dim, "groups": groups}
    raise ParseError(f"cannot serialize {type(m).__name__}")


def raw_groups_from_obj(obj) -> tuple[int, list[list[np.ndarray]], list[float] | None]:
    """Schema-level parse: (dimension, operator groups, declared gammas).

    Performs no measurement validation, so diagnostics can still be printed
    for files describing broken measurements.
    """
    if not isinstance(obj, dict):
        raise ParseError("measurement file must hold a JSON object")
    try:
        d = int(obj["dimension"])
        raw_groups = obj["groups"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"missing or malformed field: {exc}") from None
    if d < 1:
        raise ParseError(f"dimension must be positive, got {d}")
    if not isinstance(raw_groups, list) or not raw_groups:
        raise ParseError("'groups' must be a nonempty list")
    gamma_flags = [isinstance(g, dict) and "gamma" in g for g in raw_groups]
    if any(gamma_flags) != all(gamma_flags):
        raise ParseError("either every group carries 'gamma' or none does")
    groups = []
    gammas = []
    for g in raw_groups:
        if not isinstance(g, dict) or "operators" not in g:
            raise ParseError("each group needs an 'operators' list")
        ops = [_matrix_from_obj(o, d) for o in g["operators"]]
        if not ops:
            raise ParseError("groups must be nonempty")
        groups.append(ops)
        if "gamma" in g:
            gammas.append(float(g["gamma"]))
    return d, groups, (gammas if gammas else None)


def measurement_from_obj(obj) -> EquiangularMeasurement | SymmetricMeasurementSet:
    _, groups, gammas = raw_groups_from_obj(obj)
    if gammas is not None:
        m = characterize_equiangular(groups)
        declared = np.asarray(gammas)
        if np.max(np.abs(declared - m.params.weights)) > 1e-8:
            raise ParseError("declared gammas disagree with the group sums")
        # keep the declared values: re-deriving them from group sums picks
        # up round-off, which would break the export fixed point
        params = replace(m.params, weights=declared)
        return EquiangularMeasurement(dim=m.dim, groups=m.groups, params=params)
    return characterize_symmetric([Povm(tuple(g)) for g in groups])


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def save_measurement(m, path) -> None:
    Path(path).write_text(dumps(measurement_to_obj(m)), encoding="utf-8")


def _load_json(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from None


def load_measurement(path) -> EquiangularMeasurement | SymmetricMeasurementSet:
    return measurement_from_obj(_load_json(path))


def load_measurement_raw(path) -> tuple[int, list[list[np.ndarray]],
                                        list[float] | None]:
    return raw_groups_from_obj(_load_json(path))


def load_state(path) -> np.ndarray:
    obj = _load_json(path)
    if not isinstance(obj, dict):
        raise ParseError("state file must hold a JSON object")
    if ("matrix" in obj) == ("bloch" in obj):
        raise ParseError("state file needs exactly one of 'matrix' or 'bloch'")
    if "bloch" in obj:
        vec = obj["bloch"]
        if not isinstance(vec, list) or len(vec) != 3:
            raise ParseError("'bloch' must be a list [rx, ry, rz]")
        return bloch_to_density([float(v) for v in vec])
    raw = obj["matrix"]
    if not isinstance(raw, list) or not raw:
        raise ParseError("'matrix' must be a nested list")
    rho = _matrix_from_obj(raw, len(raw))
    return validate_density(rho)


def report_to_obj(report: BoundReport) -> dict:
    """Plain-JSON view of a bound report, with nan-free values."""
    def arr(a):
        return None if a is None else [float(v) for v in np.asarray(a)]

    alphas = sorted(report.group_tsallis)
    entropy = {}
    for a in alphas:
        block = {
            "tsallis_per_group": arr(report.group_tsallis[a]),
            "renyi_per_group": arr(report.group_renyi[a]),
        }
        if report.full_tsallis:
            block["tsallis_full"] = report.full_tsallis[a]
            block["renyi_full"] = report.full_renyi[a]
        entropy[repr(a)] = block

    return {
        "dimension": report.dim,
        "state": {"purity": report.purity,
                  "bloch": None if report.bloch is None else list(report.bloch)},
        "outcome_counts": list(report.counts),
        "groups": {
            "probabilities": [arr(p) for p in report.group_probabilities],
            "index_of_coincidence": arr(report.group_ic),
        },
        "averaging": {
            "weights": arr(report.avg_weights),
            "avg_index_of_coincidence": report.avg_ic,
            "avg_ic_bound": report.avg_ic_bound,
        },
        "full_measurement": None if report.full_probabilities is None else {
            "probabilities": arr(report.full_probabilities),
            "index_of_coincidence": report.full_ic,
        },
        "entropy": entropy,
        "bounds": [
            {"name": e.name, "alpha": e.alpha, "applicable": e.applicable,
             "reason": e.reason, "lhs": e.lhs, "rhs": e.rhs,
             "rhs_state_independent": e.rhs_pure, "lower": e.lower,
             "slack": e.slack}
            for e in report.entries
        ],
    }
