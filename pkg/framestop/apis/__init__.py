# Load the CLI submodule first so the package attribute ``run_pipeline`` is
# rebound to the function below rather than shadowed by the submodule later.
from . import run_pipeline as _run_pipeline_cli  # noqa: F401
from .pipeline import (
    PipelineResult,
    RunConfig,
    SourceSpec,
    StopTraceEntry,
    StopTraceRecorder,
    build_components,
    build_engine,
    format_trace,
    run_pipeline,
    validate_pipeline,
)
