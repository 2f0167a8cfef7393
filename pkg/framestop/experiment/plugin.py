from collections import Counter

from ..loop import RecordListener
from .listener import ExperimentListener
from .support import DispatchSupport


class ExperimentPlugin(RecordListener):
    """Record listener wrapping an ExperimentListener.

    Lifecycle messages are forwarded unchanged; each supplied frame goes through the dispatch support.
    """

    def __init__(self, listener, support=None, name=None):
        super(ExperimentPlugin, self).__init__()
        if not isinstance(listener, ExperimentListener):
            raise TypeError(f"listener must be an ExperimentListener, got {type(listener)}")
        self.listener = listener
        self.support = support if support is not None else DispatchSupport()
        self.name = name if name is not None else type(listener).__name__
        self.handler_counts = Counter()

    def configure(self, event):
        self.handler_counts.clear()
        self.listener.configure(event)

    def reconfigure(self, event):
        self.listener.reconfigure(event)

    def resume(self, event):
        self.listener.resume(event)

    def suspend(self, event):
        self.listener.suspend(event)

    def finish(self, event):
        self.listener.finish(event)

    def record_supplied(self, event):
        self.handler_counts[self.support.dispatch_frame(event.record, self.listener)] += 1

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, state={self.state.value})"


def adapt_listener(listener, support=None, name=None):
    return ExperimentPlugin(listener, support=support, name=name)
