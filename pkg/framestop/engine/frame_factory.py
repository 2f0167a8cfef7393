from ..utils.meta import FrameStopError
from .builder import FRAME_FACTORIES
from .structures import Frame


class FactoryError(FrameStopError):
    def __init__(self, detail):
        self.detail = detail
        super(FactoryError, self).__init__(f"frame factory error: {detail}")


class FrameFactory:
    """Creates the empty frame for a stop; experiments choose the frame class they analyse."""

    def create_frame(self, stop):
        raise NotImplementedError


@FRAME_FACTORIES.register_module()
class DefaultFrameFactory(FrameFactory):
    def create_frame(self, stop):
        return Frame(stop)
