import numpy as np

from ..loop import RecordListener
from ..utils.meta import FrameStopError, SourceError, get_logger
from .structures import Record, Stop, StopKind, StopSourceState, StreamDescriptor, StreamMode


class StopSource(RecordListener):
    """Supplies the records of one stream: stop queries for the engine and frame filling.

    Records are held in a table indexed by time. A stop source is also a lifecycle listener, so the frame
    listener manages it next to the analyses and it sees every delivered frame.
    """

    def __init__(self, descriptor, records):
        super(StopSource, self).__init__()
        if not isinstance(descriptor, StreamDescriptor):
            raise TypeError(f"descriptor must be a StreamDescriptor, got {type(descriptor)}")
        self.descriptor = descriptor
        self.stream_id = None
        self.frames_seen = 0
        self._last_delivered_time = None

        records = list(records)
        for record in records:
            if not isinstance(record, Record):
                raise SourceError(f"stream {descriptor.name} got a {type(record).__name__} instead of a Record")
            if record.stream != descriptor.name:
                raise SourceError(f"record of stream {record.stream} supplied to stream {descriptor.name}")
        self._records = self._arrange(records)
        self._times = np.asarray([record.time for record in self._records], dtype=np.int64)

    def _arrange(self, records):
        return records

    @property
    def name(self):
        return self.descriptor.name

    @property
    def records(self):
        return tuple(self._records)

    def bind(self, stream_id):
        if stream_id.name != self.name:
            raise ValueError(f"Cannot bind stream {self.name} to {stream_id}")
        self.stream_id = stream_id

    def _make_stop(self, index, kind):
        if self.stream_id is None:
            raise FrameStopError(f"Stop source {self.name} is not registered with an engine")
        return Stop(self.stream_id, int(self._times[index]), kind)

    def _pending_index(self):
        return None

    @property
    def source_state(self):
        index = self._pending_index()
        pending = None if index is None or index >= len(self._records) else self._records[index]
        return StopSourceState(self.descriptor, pending, self._last_delivered_time)

    def next_active_stop(self):
        return None

    def earliest_passive_stop(self, upcoming_active):
        return None

    def consume(self, stop):
        raise FrameStopError(f"Stream {self.name} does not deliver {stop.kind.value} stops")

    def delivered_count(self):
        """Number of records of this stream already delivered as stops."""
        return 0

    def _latest_index(self, time, delivered=None):
        return int(np.searchsorted(self._times, time, side="right")) - 1

    def latest_record(self, time, delivered=None):
        """Latest record with record.time <= time (the last one in source order among equal times).

        `delivered` is the delivered_count at the moment the frame's stop was delivered; sources that limit
        frames to records already delivered as stops use it.
        """
        index = self._latest_index(time, delivered)
        return self._records[index] if index >= 0 else None

    def fill_frame(self, frame, delivered=None):
        record = self.latest_record(frame.time, delivered)
        if record is not None:
            frame.add(record)

    def configure(self, event):
        self.frames_seen = 0

    def record_supplied(self, event):
        self.frames_seen += 1

    def finish(self, event):
        get_logger().debug(f"Stop source {self.name} took part in {self.frames_seen} frames")

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, records={len(self._records)}, state={self.state.value})"


class SequentialStopSource(StopSource):
    """Records arrive in time order; each record of a stream of interest is one Active stop."""

    def __init__(self, descriptor, records):
        super(SequentialStopSource, self).__init__(descriptor, records)
        if descriptor.mode is not StreamMode.SEQUENTIAL:
            raise ValueError(f"Stream {descriptor.name} is not sequential")
        if len(self._times) > 1 and bool(np.any(np.diff(self._times) < 0)):
            index = int(np.argmax(np.diff(self._times) < 0)) + 1
            raise SourceError(f"stream {self.name}: record {index} at {self._times[index]} is earlier than {self._times[index - 1]}")
        self._cursor = 0

    def _pending_index(self):
        return self._cursor

    def delivered_count(self):
        return self._cursor

    def _latest_index(self, time, delivered=None):
        # streams of interest show only records whose stop is already delivered
        index = super(SequentialStopSource, self)._latest_index(time)
        if self.descriptor.generates_active and delivered is not None:
            index = min(index, delivered - 1)
        return index

    def next_active_stop(self):
        if not self.descriptor.generates_active or self._cursor >= len(self._records):
            return None
        return self._make_stop(self._cursor, StopKind.ACTIVE)

    def consume(self, stop):
        if stop != self.next_active_stop():
            raise FrameStopError(f"{stop} is not the next stop of stream {self.name}")
        self._cursor += 1
        self._last_delivered_time = stop.time


class LookupStopSource(StopSource):
    """A preloaded, time-indexed table queried on demand; each record change is one Passive stop."""

    def __init__(self, descriptor, records):
        super(LookupStopSource, self).__init__(descriptor, records)
        if descriptor.mode is not StreamMode.LOOKUP:
            raise ValueError(f"Stream {descriptor.name} is not a lookup stream")
        self._next_change = 0

    def _arrange(self, records):
        return sorted(records, key=lambda record: record.time)

    def _pending_index(self):
        return self._next_change

    def delivered_count(self):
        return self._next_change

    def earliest_passive_stop(self, upcoming_active):
        if not self.descriptor.generates_passive or self._next_change >= len(self._records):
            return None
        if self._times[self._next_change] > upcoming_active.time:
            return None
        return self._make_stop(self._next_change, StopKind.PASSIVE)

    def consume(self, stop):
        if stop.kind is not StopKind.PASSIVE or self._next_change >= len(self._records) or stop != self._make_stop(self._next_change, StopKind.PASSIVE):
            raise FrameStopError(f"{stop} is not the next change of stream {self.name}")
        self._next_change += 1
        self._last_delivered_time = stop.time


def build_stop_source(descriptor, records):
    if descriptor.mode is StreamMode.SEQUENTIAL:
        return SequentialStopSource(descriptor, records)
    return LookupStopSource(descriptor, records)
