from dataclasses import dataclass

from ..engine import StreamDescriptor, StreamMode


GEOMETRY = "geometry"
HIGH_VOLTAGE = "hv"
EVENT = "event"
STANDARD_STREAMS = (GEOMETRY, HIGH_VOLTAGE, EVENT)


@dataclass(frozen=True)
class ExperimentStreamSet:
    """The three streams of the example detector.

    Geometry is a lookup table, events are read in order and the HV mode is chosen per run. All three are of
    interest.
    """

    hv_mode: StreamMode = StreamMode.SEQUENTIAL

    def __post_init__(self):
        if not isinstance(self.hv_mode, StreamMode):
            object.__setattr__(self, "hv_mode", StreamMode(str(self.hv_mode).lower()))

    @property
    def geometry(self):
        return StreamDescriptor(GEOMETRY, StreamMode.LOOKUP, True)

    @property
    def high_voltage(self):
        return StreamDescriptor(HIGH_VOLTAGE, self.hv_mode, True)

    @property
    def event(self):
        return StreamDescriptor(EVENT, StreamMode.SEQUENTIAL, True)

    def descriptors(self):
        return [self.geometry, self.high_voltage, self.event]

    def get(self, name):
        return {descriptor.name: descriptor for descriptor in self.descriptors()}.get(name, None)
