import re

from framestop.engine import LookupStopSource, Record, SequentialStopSource, StopEngine, StreamDescriptor, StreamMode
from framestop.loop import FilterListener, MessageKind, RecordListener, RecordVetoed


LETTERS = {
    MessageKind.CONFIGURE: "C",
    MessageKind.RECORD_SUPPLIED: "R",
    MessageKind.SUSPEND: "S",
    MessageKind.RESUME: "U",
    MessageKind.RECONFIGURE: "G",
    MessageKind.FINISH: "F",
}
LIFECYCLE_PATTERN = re.compile(r"CR*S((U|G)R*S)*F")


class TraceListener(RecordListener):
    """Keeps every handled message kind and supplied record."""

    def __init__(self, name="trace", shared=None):
        super(TraceListener, self).__init__()
        self.name = name
        self.kinds = []
        self.records = []
        self.shared = shared

    def record_supplied(self, event):
        self.records.append(event.record)

    def handle(self, message):
        super(TraceListener, self).handle(message)
        self.kinds.append(message.kind)
        if self.shared is not None:
            self.shared.append((self.name, message.kind))

    @property
    def letters(self):
        return "".join(LETTERS[kind] for kind in self.kinds)


class CountingListener(RecordListener):
    def __init__(self):
        super(CountingListener, self).__init__()
        self.count = 0
        self.summary = None

    def configure(self, event):
        self.count = 0

    def record_supplied(self, event):
        self.count += 1

    def finish(self, event):
        self.summary = dict(records=self.count)


class VetoListener(RecordListener):
    def __init__(self, vetoed):
        super(VetoListener, self).__init__()
        self.vetoed = vetoed

    def record_supplied(self, event):
        if self.vetoed(event.record):
            raise RecordVetoed(f"record {event.record}")


class PredicateFilter(FilterListener):
    def __init__(self, predicate):
        super(PredicateFilter, self).__init__()
        self.predicate = predicate

    def accept(self, event):
        return self.predicate(event.record)


def records_of(stream, *times, payload=None):
    return [Record(stream, time, payload if payload is not None else f"{stream}-{i}") for i, time in enumerate(times)]


def sequential_source(stream, *times, of_interest=True):
    return SequentialStopSource(StreamDescriptor(stream, StreamMode.SEQUENTIAL, of_interest), records_of(stream, *times))


def lookup_source(stream, *times, of_interest=True):
    return LookupStopSource(StreamDescriptor(stream, StreamMode.LOOKUP, of_interest), records_of(stream, *times))


def make_engine(*sources):
    engine = StopEngine()
    for source in sources:
        engine.register_stop_source(source)
    return engine


def drain(engine):
    stops = []
    while True:
        stop = engine.next_stop()
        if stop is None:
            return stops
        stops.append(stop)
