import pytest

from sigmadep.config.formats import PackagedTomlLoader, TomlFileLoader


class TestTomlFileLoader:
    def test_load_valid_toml(self, tmp_path):
        """A valid TOML file loads as a nested mapping."""
        config_file = tmp_path / "config.toml"
        config_file.write_text('[search]\nmax_order = 4\ns_range = "1..3"')

        data = TomlFileLoader(config_file).load()

        assert data == {"search": {"max_order": 4, "s_range": "1..3"}}

    def test_result_is_read_only(self, tmp_path):
        config_file = tmp_path / "config.toml"
        config_file.write_text("[ode]\nseed = 7")

        data = TomlFileLoader(config_file).load()

        with pytest.raises(TypeError):
            data["ode"] = {}

    def test_required_file_missing(self, tmp_path):
        """A missing required file raises FileNotFoundError."""
        loader = TomlFileLoader(tmp_path / "missing.toml", required=True)

        with pytest.raises(FileNotFoundError):
            loader.load()

    def test_optional_file_missing(self, tmp_path):
        """A missing optional file contributes nothing."""
        loader = TomlFileLoader(tmp_path / "missing.toml", required=False)

        assert loader.load() == {}

    def test_invalid_toml(self, tmp_path):
        """Malformed TOML is ignored with a warning."""
        config_file = tmp_path / "invalid.toml"
        config_file.write_text('key = "value" \n broken_line')

        assert TomlFileLoader(config_file).load() == {}


class TestPackagedTomlLoader:
    def test_defaults_resource(self):
        data = PackagedTomlLoader("defaults.toml").load()

        assert data["search"]["max_order"] == 3
        assert data["output"]["verify"] is True

    def test_missing_resource(self):
        with pytest.raises(FileNotFoundError):
            PackagedTomlLoader("nope.toml").load()
