import pytest

from online_manip.config import (
    CONFIG_ENV,
    NODE_BUDGET_ENV,
    ConfigError,
    Settings,
    get_settings,
    load_settings,
    set_settings,
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    monkeypatch.delenv(NODE_BUDGET_ENV, raising=False)
    yield
    set_settings(None)


def test_defaults():
    settings = load_settings()
    assert settings == Settings()
    assert settings.node_budget == 10_000_000
    assert settings.crosscheck_samples == 5000
    assert settings.workers == 1


def test_yaml_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("node_budget: 500\nworkers: 4\n")
    settings = load_settings(str(path))
    assert settings.node_budget == 500
    assert settings.workers == 4
    assert settings.crosscheck_seed == 0


def test_empty_yaml_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("")
    assert load_settings(str(path)) == Settings()


def test_config_path_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "settings.yaml"
    path.write_text("crosscheck_samples: 12\n")
    monkeypatch.setenv(CONFIG_ENV, str(path))
    assert load_settings().crosscheck_samples == 12


@pytest.mark.parametrize(
    "text",
    [
        "node_budget: 0\n",
        "node_budget: many\n",
        "unknown_key: 1\n",
        "- just\n- a list\n",
        "node_budget: [unclosed\n",
    ],
)
def test_invalid_files(tmp_path, text):
    path = tmp_path / "settings.yaml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_settings(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_settings(str(tmp_path / "absent.yaml"))


def test_node_budget_override(tmp_path, monkeypatch):
    path = tmp_path / "settings.yaml"
    path.write_text("node_budget: 500\n")
    monkeypatch.setenv(NODE_BUDGET_ENV, "77")
    assert load_settings(str(path)).node_budget == 77


@pytest.mark.parametrize("value", ["lots", "0", "-3"])
def test_bad_node_budget_override(monkeypatch, value):
    monkeypatch.setenv(NODE_BUDGET_ENV, value)
    with pytest.raises(ConfigError):
        load_settings()


def test_installed_settings_are_shared():
    set_settings(Settings(node_budget=9))
    assert get_settings().node_budget == 9
    set_settings(None)
    assert get_settings().node_budget == 10_000_000
