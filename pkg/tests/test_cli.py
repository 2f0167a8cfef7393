import io
import os.path as osp
import sys

import pytest

from framestop.apis.run_pipeline import main

from .test_pipeline import DETECTOR_TREND, EVENT_DISPLAY


FIXTURE_TRACE = "1\tP\tgeometry\t0\tgeometry:0\n2\tA\tevent\t1\tevent:1,geometry:0\n3\tA\tevent\t2\tevent:2,geometry:0\n"


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_validate(workdir):
    assert main(["validate", "--config", EVENT_DISPLAY]) == 0
    assert not osp.exists(workdir / "work_dirs")


def test_run_writes_identical_files(workdir):
    trace = workdir / "work_dirs" / "event_display" / "trace.tsv"
    summary = workdir / "work_dirs" / "event_display" / "summary.txt"
    assert main(["run", "--config", EVENT_DISPLAY]) == 0
    first = trace.read_bytes(), summary.read_bytes()
    assert first[0] == FIXTURE_TRACE.encode("utf-8")
    assert main(["run", "--config", EVENT_DISPLAY]) == 0
    assert (trace.read_bytes(), summary.read_bytes()) == first


def test_trace(workdir, capsys):
    assert main(["trace", "--config", EVENT_DISPLAY]) == 0
    assert capsys.readouterr().out == FIXTURE_TRACE
    assert not osp.exists(workdir / "work_dirs")

    assert main(["trace", "--config", EVENT_DISPLAY, "--limit", "1"]) == 0
    assert capsys.readouterr().out == "1\tP\tgeometry\t0\tgeometry:0\n"


def test_trace_keeps_newline_only_endings(workdir, monkeypatch):
    stdout = io.TextIOWrapper(io.BytesIO(), encoding="utf-8", newline="\r\n")
    monkeypatch.setattr(sys, "stdout", stdout)
    assert main(["trace", "--config", EVENT_DISPLAY]) == 0
    assert stdout.buffer.getvalue() == FIXTURE_TRACE.encode("utf-8")


def test_cfg_options(workdir, capsys):
    assert main(["trace", "--config", DETECTOR_TREND, "--cfg-options", "record_limit=2", "--log-level", "WARNING"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 2


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["run"],
        ["explode", "--config", "x.py"],
        ["run", "--config", "x.py", "--limit", "-3"],
        ["run", "--config", "x.py", "--limit", "many"],
        ["run", "--config", "x.py", "--log-level", "LOUD"],
        ["validate", "--config", "x.py", "--cfg-options", "record_limit"],
    ],
)
def test_usage_errors(workdir, argv):
    assert main(argv) == 2


def test_runtime_errors(workdir, capsys):
    assert main(["run", "--config", str(workdir / "missing.py")]) == 1
    err = capsys.readouterr().err
    assert "ConfigError" in err and len(err.strip().splitlines()) == 1

    (workdir / "events.tsv").write_text("event\tfive\tx\n", encoding="utf-8")
    (workdir / "bad.py").write_text('sources = [dict(stream="event", path="events.tsv")]\n', encoding="utf-8")
    assert main(["run", "--config", str(workdir / "bad.py")]) == 1
    assert "ParseError" in capsys.readouterr().err
