from ..utils.meta import get_logger, is_debug_mode
from .states import IllegalTransition, ListenerState, MessageKind, next_state


class LifecycleHooks:
    """No-op handlers for the five lifecycle messages.

    `configure` and `reconfigure` receive a ConfigurationEvent, the others a RecordEvent.
    """

    def configure(self, event):
        pass

    def reconfigure(self, event):
        pass

    def resume(self, event):
        pass

    def suspend(self, event):
        pass

    def finish(self, event):
        pass


class RecordListener(LifecycleHooks):
    """An analysis unit driven by a record loop.

    A listener starts Dormant. `dispatch` moves it along the lifecycle graph and then invokes the handler named
    after the message kind; a message without an edge from the current state raises IllegalTransition before
    any handler runs. Subclasses implement `record_supplied` and override the lifecycle hooks they need.
    """

    def __init__(self):
        self._state = ListenerState.DORMANT
        self._parameters = {}
        self._invocations = 0

    @property
    def state(self):
        return self._state

    @property
    def parameters(self):
        """Parameters of the latest Configure/Reconfigure; Reconfigure replaces them as a whole."""
        return self._parameters

    @property
    def invocation_count(self):
        return self._invocations

    @property
    def veto_count(self):
        return 0

    def record_supplied(self, event):
        raise NotImplementedError

    def dispatch(self, message):
        current = self._state
        target = next_state(current, message.kind)
        self._state = target
        try:
            self.handle(message)
        except IllegalTransition:
            self._state = current
            raise
        return target

    def handle(self, message):
        if message.kind in (MessageKind.CONFIGURE, MessageKind.RECONFIGURE):
            self._parameters = dict(message.payload.parameters)
        self._invocations += 1
        getattr(self, message.kind.value)(message.payload)

    def release(self):
        """End of use. Listeners are only meant to be dropped while Dormant; debug mode asserts it."""
        if is_debug_mode():
            assert self._state is ListenerState.DORMANT, f"{type(self).__name__} released while {self._state.value}"
        elif self._state is not ListenerState.DORMANT:
            get_logger().warning(f"{type(self).__name__} released while {self._state.value}")

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is None:
            self.release()

    def __repr__(self):
        return f"{type(self).__name__}(state={self._state.value})"


class FilterListener(RecordListener):
    """A listener that also gives a per-record verdict; `accept` returning False vetoes the record."""

    def __init__(self):
        super(FilterListener, self).__init__()
        self.verdict = True

    def accept(self, event):
        raise NotImplementedError

    def record_supplied(self, event):
        self.verdict = bool(self.accept(event))


def dispatch_message(listener, message):
    """Apply one legal lifecycle transition to `listener` and invoke its handler. Returns the new state."""
    return listener.dispatch(message)
