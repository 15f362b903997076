import json

import pytest
from pydantic import BaseModel

from common.errors import (
    ConfigurationError,
    ImproperColoringError,
    InputError,
    NotRightAngledError,
    PreconditionError,
    StarConditionError,
    UnknownGeneratorError,
)
from common.jsonio import dump_json, load_json_text, read_json, validate_document
from common.settings import get_settings, load_settings, use_settings
from common.tracing import get_trace_recorder, traced


def test_exit_codes():
    assert InputError("bad").exit_code == 2
    assert ConfigurationError("bad").exit_code == 2
    assert UnknownGeneratorError("q").exit_code == 2
    assert PreconditionError("op", "bad").exit_code == 3
    assert NotRightAngledError("op", ("a", "b")).exit_code == 3
    assert ImproperColoringError("op", ("a", "b")).exit_code == 3


def test_error_messages_name_the_object():
    assert "'q'" in str(UnknownGeneratorError("q"))
    assert "a-b" in str(NotRightAngledError("nerve", ("a", "b")))
    e = StarConditionError("pullback_presentation", "c", ["2"])
    assert e.subject == "c"
    assert "star of c" in e.message
    assert str(InputError("oops", source="f.json", location="line 1")) == "f.json: line 1: oops"


def test_json_syntax_error_keeps_position():
    with pytest.raises(InputError) as info:
        load_json_text('{"vertices": [\n  "a"\n  "b"]}', source="broken.json")
    assert info.value.source == "broken.json"
    assert info.value.location.startswith("line 3")


def test_read_json_missing_file(tmp_path):
    with pytest.raises(InputError, match="file not found"):
        read_json(tmp_path / "absent.json")


def test_validate_document_reports_location():
    class Doc(BaseModel):
        rank: int

    with pytest.raises(InputError) as info:
        validate_document(Doc, {"rank": "many"}, source="hom.json")
    assert info.value.location == "rank"
    assert validate_document(Doc, {"rank": 3}).rank == 3


def test_dump_json_is_canonical():
    text = dump_json({"b": 1, "a": [1, 2]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [1, 2], "b": 1}


def test_settings_file_with_comments(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({
        "_comment": "ignored",
        "coloring": {"_comment": "ignored", "exact_vertex_limit": 12},
        "tietze": {"effort": 1, "substitution_bounds": {"0": 0, "1": 3, "2": 9}},
    }))
    settings = load_settings(path)
    assert settings.coloring.exact_vertex_limit == 12
    assert settings.coloring.exact_color_limit == 6
    assert settings.tietze.substitution_bounds[1] == 3


def test_missing_settings_file_uses_defaults(tmp_path):
    settings = load_settings(tmp_path / "nothing.json")
    assert settings.homology.jobs == 1
    assert settings.verification.rewrite_trials == 1000


def test_environment_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv("WORKBENCH_JOBS", "3")
    monkeypatch.setenv("WORKBENCH_LOG_LEVEL", "debug")
    settings = load_settings(tmp_path / "nothing.json")
    assert settings.homology.jobs == 3
    assert settings.app.log_level == "DEBUG"


def test_invalid_settings(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"coloring": {"exact_vertex_limit": 0}}))
    with pytest.raises(ConfigurationError) as info:
        load_settings(path)
    assert info.value.location == "coloring.exact_vertex_limit"

    path.write_text("{ not json")
    with pytest.raises(ConfigurationError):
        load_settings(path)


def test_use_settings_replaces_singleton(tmp_path):
    settings = load_settings(tmp_path / "nothing.json")
    use_settings(settings)
    assert get_settings() is settings


def test_traced_records_success_and_failure():
    recorder = get_trace_recorder()
    recorder.clear()

    @traced("testing", "square")
    def square(x):
        return x * x

    @traced("testing")
    def explode():
        raise InputError("boom")

    assert square(4) == 16
    with pytest.raises(InputError):
        explode()
    entries = recorder.entries("testing")
    assert [e["action"] for e in entries] == ["square", "explode"]
    assert [e["success"] for e in entries] == [True, False]
