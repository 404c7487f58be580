"""
Tests for configuration dataclasses and JSON persistence.
"""

import json

import pytest

from config.settings import Method, OracleSettings, Settings, SolverConfig, resolve_settings


class TestMethod:
    @pytest.mark.parametrize("text, method", [
        ("wdk", Method.WEIERSTRASS_KERNER),
        ("Durand-Kerner", Method.WEIERSTRASS_KERNER),
        ("weierstrass_kerner", Method.WEIERSTRASS_KERNER),
        ("chebyshev", Method.CHEBYSHEV),
        ("tanabe", Method.CHEBYSHEV),
    ])
    def test_parse(self, text, method):
        assert Method.parse(text) is method

    def test_unknown(self):
        with pytest.raises(ValueError):
            Method.parse("halley")


class TestSolverConfig:
    def test_defaults(self):
        config = SolverConfig()
        assert config.tol == 1e-15
        assert config.max_iter == 1000
        assert config.collision_eps == 1e-12
        assert config.method is Method.WEIERSTRASS_KERNER
        assert not config.jitter_retry

    @pytest.mark.parametrize("kwargs", [
        {"tol": 0.0},
        {"tol": -1e-3},
        {"max_iter": 0},
        {"collision_eps": -1.0},
        {"max_jitter_retries": -1},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            SolverConfig(**kwargs)

    def test_replace_validates(self):
        config = SolverConfig().replace(method="chebyshev", tol=1e-10)
        assert config.method is Method.CHEBYSHEV
        assert config.tol == 1e-10
        with pytest.raises(ValueError):
            config.replace(max_iter=0)


class TestPersistence:
    def test_round_trip(self, tmp_path):
        settings = Settings()
        settings.solver = settings.solver.replace(tol=1e-12, method=Method.CHEBYSHEV, jitter_retry=True)
        settings.oracle.n_jobs = 4
        settings.output.format = "jsonl"
        path = tmp_path / "settings.json"
        settings.save_to_file(str(path))

        loaded = Settings.load_from_file(str(path))
        assert loaded.solver == settings.solver
        assert loaded.oracle == settings.oracle
        assert loaded.output == settings.output

    def test_missing_file_gives_defaults(self, tmp_path):
        loaded = Settings.load_from_file(str(tmp_path / "nope.json"))
        assert loaded.solver == SolverConfig()

    def test_unknown_keys_ignored(self, tmp_path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"solver": {"max_iter": 5, "colour": "red"}, "extra": 1}))
        assert Settings.load_from_file(str(path)).solver.max_iter == 5

    def test_corrupt_file_logs_and_defaults(self, tmp_path, quiet_logger):
        path = tmp_path / "settings.json"
        path.write_text("{not json")
        loaded = Settings.load_from_file(str(path), logger=quiet_logger)
        assert loaded.oracle == OracleSettings()
        assert any("[ERROR]" in m for m in quiet_logger.get_messages())

    def test_invalid_values_fall_back(self, tmp_path, quiet_logger):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"solver": {"tol": -1}}))
        assert Settings.load_from_file(str(path), logger=quiet_logger).solver.tol == 1e-15

    def test_resolve_without_path(self):
        assert resolve_settings(None).solver == SolverConfig()
