from abc import ABC, abstractmethod

from ..loop import LifecycleHooks


class ExperimentListener(LifecycleHooks, ABC):
    """Experiment-facing analysis interface: one handler per standard stream.

    Each delivered frame invokes exactly one handler, chosen by the stream of the stop that drove it. Lifecycle
    handlers are the same as for any record listener.
    """

    @abstractmethod
    def geometry(self, frame):
        pass

    @abstractmethod
    def high_voltage(self, frame):
        pass

    @abstractmethod
    def event(self, frame):
        pass

    @abstractmethod
    def other_stream(self, frame):
        pass
