import argparse
import io

import pytest

from framestop.utils.file import dump, load
from framestop.utils.meta import Config, ConfigDict, DictAction, Registry, build_from_cfg

from .test_pipeline import DETECTOR_TREND, EVENT_DISPLAY


def test_python_config():
    cfg = Config.fromfile(EVENT_DISPLAY)
    assert cfg.pipeline_cfg.type == "Sequence"
    assert [source.stream for source in cfg.sources] == ["geometry", "event"]
    assert cfg.record_limit is None
    with pytest.raises(AttributeError):
        cfg.pipeline_cfg.missing
    assert "pipeline_cfg" in cfg.pretty_text


def test_yaml_config():
    cfg = Config.fromfile(DETECTOR_TREND)
    assert cfg.experiment_cfg.hv_mode == "lookup"
    assert cfg.pipeline_cfg.children[1].predicate.streams == ["geometry"]


def test_base_and_predefined_variables(tmp_path):
    (tmp_path / "base.py").write_text('record_limit = 3\nsources = [dict(stream="event", path="{{ fileDirname }}/e.tsv")]\n', encoding="utf-8")
    (tmp_path / "child.py").write_text('_base_ = "base.py"\nrecord_limit = 5\n', encoding="utf-8")
    cfg = Config.fromfile(str(tmp_path / "child.py"))
    assert cfg.record_limit == 5
    assert cfg.sources[0].path == str(tmp_path).replace("\\", "/") + "/e.tsv"


def test_merge_from_dict():
    cfg = Config(dict(record_limit=None, sources=[dict(stream="hv", path="hv.tsv"), dict(stream="event", path="e.tsv")]))
    cfg.merge_from_dict({"record_limit": 4, "sources.0.of_interest": False})
    assert cfg.record_limit == 4
    assert cfg.sources[0].of_interest is False and cfg.sources[1].stream == "event"


def test_dict_action():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cfg-options", nargs="+", action=DictAction)
    args = parser.parse_args(["--cfg-options", "record_limit=4", "trace_output=none", "streams=[a,b]", "hv=1.5", "flag=True"])
    assert args.cfg_options == dict(record_limit=4, trace_output=None, streams=["a", "b"], hv=1.5, flag=True)
    with pytest.raises(SystemExit) as exc_info:
        parser.parse_args(["--cfg-options", "record_limit"])
    assert exc_info.value.code == 2


def test_dump_round_trip(tmp_path):
    cfg = Config.fromfile(DETECTOR_TREND)
    path = str(tmp_path / "dumped.yaml")
    cfg.dump(path)
    assert load(path) == cfg.dict().to_dict()
    assert load(io.StringIO(dump(dict(a=[1, 2]), file_format="json")), file_format="json") == dict(a=[1, 2])


def test_registry():
    things = Registry("thing")

    @things.register_module()
    class Thing:
        def __init__(self, size=1):
            self.size = size

    assert "Thing" in things and len(things) == 1
    assert build_from_cfg(dict(type="Thing", size=3), things).size == 3
    assert build_from_cfg(ConfigDict(type="Thing"), things, default_args=dict(size=2)).size == 2
    with pytest.raises(KeyError):
        things.register_module(module=Thing)
    with pytest.raises(KeyError):
        build_from_cfg(dict(size=3), things)
