from ..loop import FilterListener
from ..utils.data import is_seq_of, is_str
from .builder import FILTERS


@FILTERS.register_module()
class StreamFilter(FilterListener):
    """Accepts frames driven by one of the given streams."""

    def __init__(self, streams):
        super(StreamFilter, self).__init__()
        streams = [streams] if is_str(streams) else streams
        if not is_seq_of(streams, str):
            raise TypeError(f"streams must be a stream name or a list of names, got {streams!r}")
        self.streams = frozenset(streams)

    def accept(self, event):
        return event.record.driving_stream in self.streams


@FILTERS.register_module()
class TimeRangeFilter(FilterListener):
    """Accepts frames with start <= time < stop; a missing bound is open."""

    def __init__(self, start=None, stop=None):
        super(TimeRangeFilter, self).__init__()
        if start is not None and stop is not None and stop < start:
            raise ValueError(f"Empty time range [{start}, {stop})")
        self.start = start
        self.stop = stop

    def accept(self, event):
        time = event.record.time
        return (self.start is None or time >= self.start) and (self.stop is None or time < self.stop)


@FILTERS.register_module()
class TimeModuloFilter(FilterListener):
    def __init__(self, modulus, remainder=0):
        super(TimeModuloFilter, self).__init__()
        if modulus <= 0 or not 0 <= remainder < modulus:
            raise ValueError(f"Need modulus > 0 and 0 <= remainder < modulus, got {modulus} and {remainder}")
        self.modulus = modulus
        self.remainder = remainder

    def accept(self, event):
        return event.record.time % self.modulus == self.remainder
