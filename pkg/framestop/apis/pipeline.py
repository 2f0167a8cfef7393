import os.path as osp
from dataclasses import dataclass, field
from typing import List, Optional

from ..engine import FrameListener, StreamDescriptor, StreamMode, StopEngine, build_frame_factory, check_stream_name, file_stop_source, frame_source
from ..experiment import STANDARD_STREAMS, ExperimentStreamSet, build_analysis_tree, format_summaries
from ..loop import RecordListener, RecordLoop, sequence
from ..utils.data import is_dict, is_integer, is_null, is_str
from ..utils.file import dump
from ..utils.meta import Config, ConfigError, get_dirname, get_logger, mkdir_or_exist, remove_files, resolve_path


DEFAULT_PIPELINE_CFG = dict(
    type="Sequence",
    children=[dict(type="EventCounter"), dict(type="GeometryChangeLogger"), dict(type="HVMonitor")],
)


@dataclass(frozen=True)
class SourceSpec:
    stream: str
    path: str
    mode: StreamMode
    of_interest: bool

    @property
    def descriptor(self):
        return StreamDescriptor(self.stream, self.mode, self.of_interest)


@dataclass
class RunConfig:
    """A validated run: record files, the listener tree and the outputs."""

    sources: List[SourceSpec]
    pipeline_cfg: dict = field(default_factory=lambda: dict(DEFAULT_PIPELINE_CFG))
    frame_factory_cfg: Optional[dict] = None
    record_limit: Optional[int] = None
    trace_output: Optional[str] = None
    summary_output: Optional[str] = None
    parameters: dict = field(default_factory=dict)
    log_level: str = "INFO"

    @classmethod
    def fromfile(cls, filename, options=None, record_limit=None):
        """Load a config file, merge dotted `options` into it and validate the result.

        `record_limit`, when given, overrides the one of the file.
        """
        try:
            cfg = Config.fromfile(filename)
            if options:
                cfg.merge_from_dict(options)
        except ConfigError:
            raise
        except Exception as e:
            raise ConfigError(f"cannot load {filename}: {type(e).__name__}: {e}") from e
        if record_limit is not None:
            cfg["record_limit"] = record_limit
        get_logger().debug(f"Run config {filename}:\n{cfg.pretty_text}")
        return cls.from_config(cfg, config_dir=get_dirname(cfg.filename))

    @classmethod
    def from_config(cls, cfg, config_dir=None):
        cfg = cfg.dict().to_dict() if isinstance(cfg, Config) else dict(cfg)
        known = {"sources", "pipeline_cfg", "experiment_cfg", "frame_factory_cfg", "record_limit", "trace_output",
                 "summary_output", "parameters", "log_level"}
        unknown = sorted(set(cfg) - known)
        if unknown:
            raise ConfigError(f"unknown keys {unknown}")

        experiment_cfg = cfg.get("experiment_cfg", None) or {}
        try:
            stream_set = ExperimentStreamSet(**experiment_cfg)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"experiment_cfg: {e}") from e

        source_cfgs = cfg.get("sources", None) or []
        if not isinstance(source_cfgs, (list, tuple)):
            raise ConfigError(f"`sources` must be a list, got {type(source_cfgs).__name__}")
        sources = [cls._source_spec(i, source_cfg, stream_set, config_dir) for i, source_cfg in enumerate(source_cfgs)]
        if len(sources) == 0:
            raise ConfigError("`sources` must list at least one record file")
        names = [spec.stream for spec in sources]
        duplicated = sorted({name for name in names if names.count(name) > 1})
        if duplicated:
            raise ConfigError(f"streams {duplicated} are given more than once")
        if not any(spec.descriptor.generates_active for spec in sources):
            raise ConfigError("at least one source must be a sequential stream of interest")

        pipeline_cfg = cfg.get("pipeline_cfg", None)
        if is_null(pipeline_cfg):
            pipeline_cfg = dict(DEFAULT_PIPELINE_CFG)
        if not is_dict(pipeline_cfg):
            raise ConfigError(f"`pipeline_cfg` must be a dict, got {type(pipeline_cfg).__name__}")
        frame_factory_cfg = cfg.get("frame_factory_cfg", None)
        if not (is_null(frame_factory_cfg) or is_dict(frame_factory_cfg)):
            raise ConfigError(f"`frame_factory_cfg` must be a dict, got {type(frame_factory_cfg).__name__}")

        record_limit = cfg.get("record_limit", None)
        if not (is_null(record_limit) or is_integer(record_limit) and record_limit >= 0):
            raise ConfigError(f"`record_limit` must be a non-negative integer, got {record_limit!r}")
        parameters = cfg.get("parameters", None) or {}
        if not is_dict(parameters):
            raise ConfigError(f"`parameters` must be a dict, got {type(parameters).__name__}")

        outputs = {}
        for key in ("trace_output", "summary_output"):
            value = cfg.get(key, None)
            if not (is_null(value) or is_str(value)):
                raise ConfigError(f"`{key}` must be a path, got {value!r}")
            outputs[key] = None if is_null(value) else resolve_path(value)
        return cls(
            sources=sources,
            pipeline_cfg=pipeline_cfg,
            frame_factory_cfg=frame_factory_cfg,
            record_limit=None if is_null(record_limit) else int(record_limit),
            parameters=parameters,
            log_level=str(cfg.get("log_level", None) or "INFO").upper(),
            **outputs,
        )

    @staticmethod
    def _source_spec(index, source_cfg, stream_set, config_dir):
        if not is_dict(source_cfg):
            raise ConfigError(f"sources[{index}] must be a dict, got {type(source_cfg).__name__}")
        unknown = sorted(set(source_cfg) - {"stream", "path", "mode", "of_interest"})
        if unknown:
            raise ConfigError(f"sources[{index}]: unknown keys {unknown}")
        stream, path = source_cfg.get("stream", None), source_cfg.get("path", None)
        try:
            check_stream_name(stream)
        except ValueError as e:
            raise ConfigError(f"sources[{index}]: {e}") from e
        if not is_str(path):
            raise ConfigError(f"sources[{index}] ({stream}) needs a `path`")

        standard = stream_set.get(stream) if stream in STANDARD_STREAMS else None
        mode = source_cfg.get("mode", None)
        if is_null(mode):
            if standard is None:
                raise ConfigError(f"sources[{index}] ({stream}) needs a `mode`, sequential or lookup")
            mode = standard.mode
        try:
            mode = mode if isinstance(mode, StreamMode) else StreamMode(str(mode).lower())
        except ValueError as e:
            raise ConfigError(f"sources[{index}] ({stream}): mode must be sequential or lookup, got {mode!r}") from e
        of_interest = source_cfg.get("of_interest", None)
        if is_null(of_interest):
            of_interest = standard is not None and standard.of_interest
        elif not isinstance(of_interest, bool):
            raise ConfigError(f"sources[{index}] ({stream}): of_interest must be a boolean, got {of_interest!r}")
        return SourceSpec(stream, resolve_path(path, config_dir), mode, of_interest)


@dataclass(frozen=True)
class StopTraceEntry:
    ordinal: int
    kind: str
    stream: str
    time: int
    frame_contents: tuple

    def to_line(self):
        contents = ",".join(f"{stream}:{time}" for stream, time in self.frame_contents)
        return f"{self.ordinal}\t{self.kind}\t{self.stream}\t{self.time}\t{contents}\n"

    @classmethod
    def from_frame(cls, ordinal, frame):
        stop = frame.driving_stop
        return cls(ordinal, stop.kind.code, stop.stream.name, stop.time, tuple(frame.record_times()))


def format_trace(entries):
    return "".join(entry.to_line() for entry in entries)


class StopTraceRecorder(RecordListener):
    """Records one trace entry per delivered frame; ordinals continue across resumed runs."""

    def __init__(self):
        super(StopTraceRecorder, self).__init__()
        self.entries = []

    def configure(self, event):
        self.entries = []

    def record_supplied(self, event):
        self.entries.append(StopTraceEntry.from_frame(len(self.entries) + 1, event.record))


@dataclass
class PipelineResult:
    report: object
    trace: List[StopTraceEntry]
    summaries: list

    @property
    def trace_text(self):
        return format_trace(self.trace)

    @property
    def summary_text(self):
        return format_summaries(self.summaries)


def build_engine(run_config):
    engine = StopEngine()
    for spec in run_config.sources:
        engine.register_stop_source(file_stop_source(spec.path, spec.descriptor))
    return engine


def build_components(run_config):
    """Engine (record files parsed), frame factory, analysis tree and the wrapped analyses of a run."""
    engine = build_engine(run_config)
    try:
        factory = build_frame_factory(run_config.frame_factory_cfg)
    except (KeyError, TypeError) as e:
        raise ConfigError(f"frame_factory_cfg: {e}") from e
    tree, analyses = build_analysis_tree(run_config.pipeline_cfg)
    return engine, factory, tree, analyses


def validate_pipeline(run_config):
    """Parse every record file and build the listener tree without running anything."""
    return build_components(run_config)[0]


def _write_outputs(run_config, result):
    outputs = [(run_config.trace_output, result.trace_text), (run_config.summary_output, result.summary_text)]
    written = []
    try:
        for path, text in outputs:
            if path is None:
                continue
            mkdir_or_exist(osp.dirname(path))
            written.append(path)
            dump(text, path, file_format="txt")
    except Exception:
        remove_files(written)
        raise


def run_pipeline(run_config, write_outputs=True):
    """Run the configured listener tree over the frames of the configured record files.

    The stop trace and the analysis summaries are returned and, when `write_outputs` is set, written to the
    configured output files.
    """
    logger = get_logger()
    engine, factory, tree, analyses = build_components(run_config)
    recorder = StopTraceRecorder()

    loop = RecordLoop(frame_source(engine, factory), FrameListener(engine, sequence([recorder, tree])))
    logger.info(f"Loop {loop.loop_id}: {len(engine.sources)} streams, {len(analyses)} analyses, limit {run_config.record_limit}")
    report = loop.run(limit=run_config.record_limit, config=run_config.parameters)
    loop.finish()
    logger.info(f"Loop {loop.loop_id} finished: {report.records_supplied} frames, {report.veto_count} vetoes, {report.end_reason.value}")

    result = PipelineResult(report, list(recorder.entries), [plugin.listener.summary for plugin in analyses])
    if write_outputs:
        _write_outputs(run_config, result)
    return result
