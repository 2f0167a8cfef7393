from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Optional

from ..utils.data import is_integer
from ..utils.meta import FrameStopError


class StreamMode(Enum):
    SEQUENTIAL = "sequential"
    LOOKUP = "lookup"


class StopKind(Enum):
    ACTIVE = "active"
    PASSIVE = "passive"

    @property
    def rank(self):
        # passive stops go first at equal times
        return 0 if self is StopKind.PASSIVE else 1

    @property
    def code(self):
        return "P" if self is StopKind.PASSIVE else "A"


def check_stream_name(name):
    if not isinstance(name, str) or len(name) == 0:
        raise ValueError(f"A stream name must be a non-empty string, got {name!r}")
    if any(c.isspace() or c in ":," for c in name):
        raise ValueError(f"A stream name cannot contain whitespace, ':' or ',', got {name!r}")
    return name


def check_time(time):
    if not is_integer(time) or time < 0:
        raise ValueError(f"A time stamp must be a non-negative integer, got {time!r}")
    return int(time)


@dataclass(frozen=True)
class StreamId:
    name: str
    registration_index: int

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class StreamDescriptor:
    name: str
    mode: StreamMode = StreamMode.SEQUENTIAL
    of_interest: bool = True

    def __post_init__(self):
        check_stream_name(self.name)
        if not isinstance(self.mode, StreamMode):
            object.__setattr__(self, "mode", StreamMode(str(self.mode).lower()))
        object.__setattr__(self, "of_interest", bool(self.of_interest))

    @property
    def generates_active(self):
        return self.of_interest and self.mode is StreamMode.SEQUENTIAL

    @property
    def generates_passive(self):
        return self.of_interest and self.mode is StreamMode.LOOKUP


@dataclass(frozen=True)
class Record:
    stream: str
    time: int
    payload: str = ""

    def __post_init__(self):
        check_stream_name(self.stream)
        object.__setattr__(self, "time", check_time(self.time))


@dataclass(frozen=True)
class Stop:
    stream: StreamId
    time: int
    kind: StopKind

    @property
    def sort_key(self):
        return self.time, self.kind.rank, self.stream.registration_index

    def __str__(self):
        return f"{self.kind.value.capitalize()}({self.stream.name}, {self.time})"


@dataclass(frozen=True)
class StopSourceState:
    descriptor: StreamDescriptor
    pending_record: Optional[Record]
    last_delivered_time: Optional[int]


class Frame:
    """Snapshot of every stream at one time: for each stream, its latest record at or before `time`.

    A sequential stream of interest only shows records whose own stop was already delivered, so each of
    its records at equal times is the one seen by the frame it drives.

    Frames are filled while open and read-only once frozen. Streams without a record at or before
    `time` are absent. Records are addressed by stream name or StreamId.
    """

    def __init__(self, stop):
        self._time = stop.time
        self._driving_stop = stop
        self._contents = {}
        self._frozen = False

    @property
    def time(self):
        return self._time

    @property
    def driving_stop(self):
        return self._driving_stop

    @property
    def driving_stream(self):
        return self._driving_stop.stream.name

    @property
    def contents(self):
        return MappingProxyType(self._contents)

    @property
    def frozen(self):
        return self._frozen

    def add(self, record):
        if self._frozen:
            raise FrameStopError(f"Frame at {self._time} is frozen, cannot add {record.stream}")
        if record.time > self._time:
            raise FrameStopError(f"Record {record.stream}@{record.time} is later than the frame at {self._time}")
        self._contents[record.stream] = record

    def freeze(self):
        self._frozen = True

    def _key(self, stream):
        return stream.name if isinstance(stream, StreamId) else stream

    def get(self, stream, default=None):
        return self._contents.get(self._key(stream), default)

    def __getitem__(self, stream):
        return self._contents[self._key(stream)]

    def __contains__(self, stream):
        return self._key(stream) in self._contents

    def __len__(self):
        return len(self._contents)

    def __iter__(self):
        return iter(sorted(self._contents))

    def record_times(self):
        """(stream name, record time) pairs in lexicographic stream order."""
        return [(name, self._contents[name].time) for name in sorted(self._contents)]

    def __repr__(self):
        contents = ", ".join(f"{name}@{time}" for name, time in self.record_times())
        return f"{type(self).__name__}({self._driving_stop}, {{{contents}}})"
