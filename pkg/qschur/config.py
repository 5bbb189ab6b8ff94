"""Configuration loading, defaults, and preset resolution for qschur."""

from __future__ import annotations

from copy import deepcopy
from pathlib import Path
from typing import Any, Optional

import yaml

from qschur.models import SuiteConfig

CONFIG_FILENAME = "qschur.yaml"


def _small_shapes() -> list[dict[str, int]]:
    return [{"n": n, "r": r} for n in (1, 2, 3) for r in (2, 3)]


DEFAULT_CONFIG: dict[str, Any] = {
    "defaults": {
        "trials": 100,
        "seed": 0,
        "support_bound": 6,
        "coeff_bound": 3,
        "exhaustive_limit": 5000,
        "enable_affine_node": False,
    },
    "qcomb": {
        "lemma_m_max": 40,
        "ml_bound": 40,
        "injectivity_bound": 200,
        "formula_x_max": 30,
    },
    "grids": {
        "hecke": {"shapes": _small_shapes(), "lprimes": [None, 2, 3, 4, 5, 6]},
        "bimodule": {"shapes": _small_shapes(), "lprimes": [None, 2, 3, 4, 5, 6]},
        "idempotents": {"shapes": _small_shapes(), "lprimes": [None, 2, 3, 4, 5, 6]},
        "qla": {
            "shapes": [{"n": 2, "r": 2}, {"n": 2, "r": 3}, {"n": 3, "r": 2}, {"n": 3, "r": 3}],
            "lprimes": [None, 2, 3, 4, 6],
        },
        "qcomb": {"shapes": [{"n": 1, "r": 1}], "lprimes": [None, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]},
        "schur": {
            "shapes": [
                {"n": 2, "N": 3, "r": 2},
                {"n": 2, "N": 4, "r": 2},
                {"n": 3, "N": 4, "r": 3},
                {"n": 2, "N": 3, "r": 3},
            ],
            "lprimes": [None, 3],
        },
        "specialization": {"shapes": [{"n": 2, "r": 2}, {"n": 3, "r": 2}], "lprimes": [1, 2, 3, 4, 6]},
        "selftest": {"shapes": [{"n": 2, "r": 2}], "lprimes": [None]},
    },
    "presets": {
        "acceptance": {
            "description": "Full desk-scale acceptance grid.",
        },
        "quick": {
            "description": "Small grids and few samples for a fast smoke run.",
            "defaults": {"trials": 10, "exhaustive_limit": 0},
            "qcomb": {"lemma_m_max": 12, "ml_bound": 12, "injectivity_bound": 30, "formula_x_max": 8},
            "grids": {
                "hecke": {"shapes": [{"n": 2, "r": 2}], "lprimes": [None, 3]},
                "bimodule": {"shapes": [{"n": 2, "r": 2}], "lprimes": [None, 3]},
                "idempotents": {"shapes": [{"n": 2, "r": 2}], "lprimes": [None]},
                "qla": {"shapes": [{"n": 3, "r": 2}], "lprimes": [None]},
                "qcomb": {"shapes": [{"n": 1, "r": 1}], "lprimes": [None, 3, 4]},
                "schur": {"shapes": [{"n": 2, "N": 3, "r": 2}], "lprimes": [None]},
                "specialization": {"shapes": [{"n": 2, "r": 2}], "lprimes": [3]},
            },
        },
    },
}

_SHAPE_KEYS = ("n", "r", "N")
_DEFAULT_KEYS = (
    "trials",
    "seed",
    "support_bound",
    "coeff_bound",
    "exhaustive_limit",
    "enable_affine_node",
    "window",
)
_QCOMB_KEYS = ("lemma_m_max", "ml_bound", "injectivity_bound", "formula_x_max")


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    merged = deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = deepcopy(value)
    return merged


def build_default_config() -> dict[str, Any]:
    return deepcopy(DEFAULT_CONFIG)


def write_default_config(path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(yaml.safe_dump(build_default_config(), sort_keys=False), encoding="utf-8")


def load_config(path: Optional[Path]) -> dict[str, Any]:
    if path is None or not path.exists():
        return build_default_config()
    loaded = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    if not isinstance(loaded, dict):
        raise ValueError(f"{path} must contain a mapping")
    return _deep_merge(DEFAULT_CONFIG, loaded)


def resolve_suite_configs(
    config: dict[str, Any],
    suite: str,
    preset: str = "acceptance",
    overrides: Optional[dict[str, Any]] = None,
) -> list[SuiteConfig]:
    """Expand a suite's grid under a preset into concrete SuiteConfigs.

    Overrides may carry n / r / N (collapsing the shape grid to one shape), lprimes
    (replacing the ring grid), and any SuiteConfig default such as trials or window.
    """
    presets = config.get("presets", {})
    if preset not in presets:
        available = ", ".join(sorted(presets))
        raise ValueError(f"Preset '{preset}' not found. Available: {available}")
    selected = {k: v for k, v in presets[preset].items() if k != "description"}
    resolved = _deep_merge(config, selected)

    grids = resolved.get("grids", {})
    if suite not in grids:
        available = ", ".join(grids)
        raise ValueError(f"Suite '{suite}' not found. Available: {available}")
    grid = grids[suite]
    overrides = dict(overrides or {})

    shapes = [dict(shape) for shape in grid.get("shapes", [{}])]
    if any(overrides.get(key) is not None for key in _SHAPE_KEYS):
        base = shapes[0] if shapes else {}
        shape = {
            key: overrides[key] if overrides.get(key) is not None else base.get(key) for key in _SHAPE_KEYS
        }
        shape = {key: value for key, value in shape.items() if value is not None}
        if suite == "schur" and "N" not in shape:
            raise ValueError("The schur suite needs --N")
        if suite != "schur":
            shape.pop("N", None)
        shapes = [shape]

    lprimes = overrides.get("lprimes")
    if lprimes is None:
        lprimes = list(grid.get("lprimes", [None]))

    defaults = {k: v for k, v in resolved.get("defaults", {}).items() if k in _DEFAULT_KEYS}
    for key in _DEFAULT_KEYS:
        if overrides.get(key) is not None:
            defaults[key] = overrides[key]
    if defaults.get("window") is not None:
        defaults["window"] = tuple(defaults["window"])
    qcomb = {k: int(v) for k, v in resolved.get("qcomb", {}).items() if k in _QCOMB_KEYS}

    configs: list[SuiteConfig] = []
    for shape in shapes:
        for lprime in lprimes:
            configs.append(
                SuiteConfig(
                    **{key: int(value) for key, value in shape.items()},
                    lprime=None if lprime is None else int(lprime),
                    **defaults,
                    **qcomb,
                )
            )
    return configs
