from ..loop import END_OF_SOURCE, RecordListener, Sequence, SequentialSource
from ..utils.meta import get_logger
from .builder import build_frame_factory
from .stop_engine import StopEngine


class FrameSource(SequentialSource):
    """Record-loop source of frames: every pull asks the engine for its next stop and builds that frame."""

    def __init__(self, engine, factory=None):
        if not isinstance(engine, StopEngine):
            raise TypeError(f"engine must be a StopEngine, got {type(engine)}")
        self.engine = engine
        self.factory = factory if factory is not None else build_frame_factory()
        self._ended = False

    def next_record(self):
        if self._ended:
            return END_OF_SOURCE
        stop = self.engine.next_stop()
        if stop is None:
            self._ended = True
            get_logger().debug(f"Frame source ended after {self.engine.delivered} stops")
            return END_OF_SOURCE
        return self.engine.build_frame(stop, self.factory)


class FrameListener(Sequence):
    """Two-phase listener of a frame loop.

    The stop sources come first, in registration order, and see every lifecycle message and frame; the
    analysis tree receives each frame after them, once the frame is filled and frozen.
    """

    def __init__(self, engine, analysis):
        if not isinstance(analysis, RecordListener):
            raise TypeError(f"analysis must be a RecordListener, got {type(analysis)}")
        self.engine = engine
        super(FrameListener, self).__init__(list(engine.sources) + [analysis])

    @property
    def analysis(self):
        return self._children[-1]

    @property
    def invocation_count(self):
        return self.analysis.invocation_count

    @property
    def veto_count(self):
        return self._vetoes + self.analysis.veto_count


def frame_source(engine, factory=None):
    return FrameSource(engine, factory)
