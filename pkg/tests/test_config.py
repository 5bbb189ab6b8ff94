from pathlib import Path

import pytest
import yaml

from qschur.config import build_default_config, load_config, resolve_suite_configs, write_default_config
from qschur.suites import SUITE_ORDER


def test_every_suite_has_a_grid() -> None:
    config = build_default_config()
    assert set(config["grids"]) == set(SUITE_ORDER)


def test_acceptance_preset_expands_shapes_and_rings() -> None:
    configs = resolve_suite_configs(build_default_config(), "hecke")
    assert len(configs) == 6 * 6
    assert {(c.n, c.r) for c in configs} == {(n, r) for n in (1, 2, 3) for r in (2, 3)}
    assert {c.lprime for c in configs} == {None, 2, 3, 4, 5, 6}
    assert all(c.trials == 100 for c in configs)


def test_quick_preset_shrinks_grid_and_bounds() -> None:
    configs = resolve_suite_configs(build_default_config(), "qcomb", preset="quick")
    assert [c.lprime for c in configs] == [None, 3, 4]
    assert all(c.trials == 10 and c.lemma_m_max == 12 and c.formula_x_max == 8 for c in configs)


def test_shape_overrides_collapse_the_grid() -> None:
    configs = resolve_suite_configs(
        build_default_config(),
        "qla",
        overrides={"n": 4, "r": 2, "lprimes": [None, 5], "trials": 3, "window": [0, 5]},
    )
    assert [(c.n, c.r, c.lprime) for c in configs] == [(4, 2, None), (4, 2, 5)]
    assert all(c.trials == 3 and c.window == (0, 5) for c in configs)
    assert all(c.N is None for c in configs)


def test_schur_overrides_keep_large_size() -> None:
    config = build_default_config()
    configs = resolve_suite_configs(config, "schur", overrides={"n": 2, "N": 5, "r": 2, "lprimes": [3]})
    assert [(c.n, c.N, c.r, c.lprime) for c in configs] == [(2, 5, 2, 3)]
    defaulted = resolve_suite_configs(config, "schur", overrides={"r": 3, "lprimes": [None]})
    assert [(c.n, c.N, c.r) for c in defaulted] == [(2, 3, 3)]


def test_unknown_preset_or_suite_is_rejected() -> None:
    config = build_default_config()
    with pytest.raises(ValueError, match="Preset 'nope' not found"):
        resolve_suite_configs(config, "hecke", preset="nope")
    with pytest.raises(ValueError, match="Suite 'nope' not found"):
        resolve_suite_configs(config, "nope")


def test_written_config_loads_back(tmp_path: Path) -> None:
    path = tmp_path / "nested" / "qschur.yaml"
    write_default_config(path)
    assert load_config(path) == build_default_config()


def test_user_config_is_deep_merged(tmp_path: Path) -> None:
    path = tmp_path / "qschur.yaml"
    path.write_text(
        yaml.safe_dump({"defaults": {"trials": 7}, "grids": {"hecke": {"lprimes": [None]}}}),
        encoding="utf-8",
    )
    config = load_config(path)
    assert config["defaults"]["trials"] == 7
    assert config["defaults"]["seed"] == 0
    assert config["grids"]["hecke"]["shapes"] == build_default_config()["grids"]["hecke"]["shapes"]
    configs = resolve_suite_configs(config, "hecke")
    assert {c.lprime for c in configs} == {None}
    assert all(c.trials == 7 for c in configs)


def test_missing_config_falls_back_to_defaults(tmp_path: Path) -> None:
    assert load_config(tmp_path / "absent.yaml") == build_default_config()
    assert load_config(None) == build_default_config()


def test_non_mapping_config_is_rejected(tmp_path: Path) -> None:
    path = tmp_path / "qschur.yaml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError, match="must contain a mapping"):
        load_config(path)
