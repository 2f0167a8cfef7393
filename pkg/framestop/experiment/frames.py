from ..engine import FRAME_FACTORIES, Frame, FrameFactory
from .streams import EVENT, GEOMETRY, HIGH_VOLTAGE


class ExperimentFrame(Frame):
    """Frame with attribute access to the standard streams; absent streams read as None."""

    @property
    def geometry(self):
        return self.get(GEOMETRY)

    @property
    def hv(self):
        return self.get(HIGH_VOLTAGE)

    @property
    def event(self):
        return self.get(EVENT)


@FRAME_FACTORIES.register_module()
class ExperimentFrameFactory(FrameFactory):
    def create_frame(self, stop):
        return ExperimentFrame(stop)
