from .builder import FRAME_FACTORIES, build_frame_factory
from .structures import (
    Frame,
    Record,
    Stop,
    StopKind,
    StopSourceState,
    StreamDescriptor,
    StreamId,
    StreamMode,
    check_stream_name,
    check_time,
)
from .frame_factory import DefaultFrameFactory, FactoryError, FrameFactory
from .stop_source import LookupStopSource, SequentialStopSource, StopSource, build_stop_source
from .stop_engine import DuplicateStream, EngineAlreadyRunning, StopEngine, StopNotPending, earliest_passive_stop, next_active_stop
from .frame_source import FrameListener, FrameSource, frame_source
from .record_utils import OrderError, ParseError, dump_records, format_record_line, iter_record_lines, parse_record_file, parse_record_line
from .file_source import file_stop_source
