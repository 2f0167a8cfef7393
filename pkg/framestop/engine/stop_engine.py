import heapq
from collections import defaultdict, deque

from ..utils.meta import FrameStopError, SourceError, get_logger
from .frame_factory import FactoryError, FrameFactory
from .stop_source import StopSource
from .structures import Frame, StreamId


class DuplicateStream(FrameStopError):
    def __init__(self, name):
        self.name = name
        super(DuplicateStream, self).__init__(f"stream {name} is already registered")


class EngineAlreadyRunning(FrameStopError):
    def __init__(self):
        super(EngineAlreadyRunning, self).__init__("stop sources cannot be registered once stops are being delivered")


class StopNotPending(FrameStopError):
    def __init__(self, stop):
        self.stop = stop
        super(StopNotPending, self).__init__(f"{stop} was not delivered by this engine or its frame is already built")


class StopEngine:
    """Merges the stops of every registered stream into one time-ordered sequence and builds their frames.

    Sequential streams of interest drive the engine with Active stops. Before an Active stop at time t is
    delivered, every undelivered change of a Lookup stream of interest at or before t is delivered as its own
    Passive stop. Ties go Passive before Active, then to the lower registration index.
    """

    def __init__(self):
        self._sources = []
        self._by_name = {}
        self._drivers = None
        self._pending = defaultdict(deque)
        self.delivered = 0
        self.logger = get_logger()

    @property
    def sources(self):
        return tuple(self._sources)

    @property
    def started(self):
        return self._drivers is not None

    def stream_ids(self):
        return [source.stream_id for source in self._sources]

    def get_source(self, name):
        return self._by_name[name]

    def register_stop_source(self, source, descriptor=None):
        """Add a stream; returns its registration index."""
        if not isinstance(source, StopSource):
            raise TypeError(f"source must be a StopSource, got {type(source)}")
        if descriptor is not None and descriptor != source.descriptor:
            raise ValueError(f"Descriptor {descriptor} does not match the one of its source {source.descriptor}")
        descriptor = source.descriptor
        if self.started:
            raise EngineAlreadyRunning()
        if descriptor.name in self._by_name:
            raise DuplicateStream(descriptor.name)

        stream_id = StreamId(descriptor.name, len(self._sources))
        source.bind(stream_id)
        self._sources.append(source)
        self._by_name[descriptor.name] = source
        self.logger.debug(
            f"Registered stream {descriptor.name} as #{stream_id.registration_index}: {descriptor.mode.value}, "
            f"{'of interest' if descriptor.of_interest else 'not of interest'}, {len(source.records)} records"
        )
        return stream_id.registration_index

    def _start(self):
        self._drivers = []
        for source in self._sources:
            if source.descriptor.generates_active:
                self._push_driver(source)
        if len(self._drivers) == 0:
            self.logger.warning("No sequential stream of interest is registered, no stop will be delivered")

    def _push_driver(self, source):
        stop = self._query(source.next_active_stop)
        if stop is not None:
            heapq.heappush(self._drivers, (stop.sort_key, stop))

    def _query(self, query, *args):
        try:
            return query(*args)
        except FrameStopError:
            raise
        except Exception as e:
            raise SourceError(f"{type(e).__name__}: {e}") from e

    def peek_active_stop(self):
        if not self.started:
            self._start()
        return self._drivers[0][1] if self._drivers else None

    def next_stop(self):
        """The next stop to build a frame for, or None once every driving stream is exhausted."""
        upcoming = self.peek_active_stop()
        if upcoming is None:
            return None

        passive = None
        for source in self._sources:
            if not source.descriptor.generates_passive:
                continue
            candidate = self._query(source.earliest_passive_stop, upcoming)
            if candidate is not None and (passive is None or candidate.sort_key < passive.sort_key):
                passive = candidate

        if passive is not None:
            stop = passive
            self.get_source(stop.stream.name).consume(stop)
        else:
            heapq.heappop(self._drivers)
            stop = upcoming
            source = self.get_source(stop.stream.name)
            source.consume(stop)
            self._push_driver(source)

        self._pending[stop].append(tuple(source.delivered_count() for source in self._sources))
        self.delivered += 1
        self.logger.debug(f"Stop #{self.delivered}: {stop}")
        return stop

    def build_frame(self, stop, factory):
        """Create the frame of a delivered stop and fill it from every registered stream."""
        if len(self._pending.get(stop, ())) == 0:
            raise StopNotPending(stop)

        try:
            frame = factory.create_frame(stop) if isinstance(factory, FrameFactory) else factory(stop)
        except FrameStopError:
            raise
        except Exception as e:
            raise FactoryError(f"{type(e).__name__}: {e}") from e
        if not isinstance(frame, Frame):
            raise FactoryError(f"expected a Frame, got {type(frame).__name__}")
        if frame.time != stop.time or frame.driving_stop != stop or len(frame) > 0:
            raise FactoryError(f"the frame created for {stop} is not an empty frame at {stop.time}")

        for source, delivered in zip(self._sources, self._pending[stop][0]):
            self._query(source.fill_frame, frame, delivered)
        frame.freeze()
        self._pending[stop].popleft()
        if len(self._pending[stop]) == 0:
            del self._pending[stop]
        return frame


def next_active_stop(source):
    return source.next_active_stop()


def earliest_passive_stop(source, upcoming_active):
    return source.earliest_passive_stop(upcoming_active)
