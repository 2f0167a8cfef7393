from ..utils.meta import get_logger
from .builder import LISTENERS
from .listener import FilterListener, RecordListener
from .states import MessageKind


class RecordVetoed(Exception):
    """Raised by a handler to stop the rest of its enclosing sequence for the current record."""

    def __init__(self, reason=""):
        self.reason = reason
        super(RecordVetoed, self).__init__(reason)


class CompositeListener(RecordListener):
    def __init__(self, children):
        super(CompositeListener, self).__init__()
        children = list(children)
        if len(children) == 0:
            raise ValueError(f"{type(self).__name__} needs at least one child listener")
        for child in children:
            if not isinstance(child, RecordListener):
                raise TypeError(f"Children of {type(self).__name__} must be RecordListeners, got {type(child)}")
        self._children = children
        self._vetoes = 0

    @property
    def children(self):
        return tuple(self._children)

    @property
    def invocation_count(self):
        return sum(child.invocation_count for child in self._children)

    @property
    def veto_count(self):
        return self._vetoes + sum(child.veto_count for child in self._children)

    def record_supplied(self, event):
        pass

    def handle(self, message):
        if message.kind in (MessageKind.CONFIGURE, MessageKind.RECONFIGURE):
            self._parameters = dict(message.payload.parameters)
        self.forward(message)

    def forward(self, message):
        for child in self._children:
            child.dispatch(message)

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(repr(child) for child in self._children)})"


@LISTENERS.register_module()
class Sequence(CompositeListener):
    """Children handle every message one after the other, in list order."""

    def forward(self, message):
        if message.kind is not MessageKind.RECORD_SUPPLIED:
            return super(Sequence, self).forward(message)
        for child in self._children:
            try:
                child.dispatch(message)
            except RecordVetoed as e:
                self._vetoes += 1
                get_logger().debug(f"Record {message.payload.sequence_number} vetoed in {type(child).__name__}: {e.reason}")
                break


@LISTENERS.register_module()
class Branch(CompositeListener):
    """Each branch sees every message; a veto inside one branch never reaches its siblings."""

    def __init__(self, branches):
        branches = [branch if isinstance(branch, CompositeListener) else Sequence([branch]) for branch in branches]
        super(Branch, self).__init__(branches)

    def forward(self, message):
        for branch in self._children:
            try:
                branch.dispatch(message)
            except RecordVetoed:
                self._vetoes += 1


@LISTENERS.register_module()
class Conditional(CompositeListener):
    """A predicate filter guarding a downstream listener.

    Lifecycle messages reach both; a record reaches the downstream only when the predicate accepts it.
    """

    def __init__(self, predicate, downstream):
        if not isinstance(predicate, FilterListener):
            raise TypeError(f"The predicate of a Conditional must be a FilterListener, got {type(predicate)}")
        if not isinstance(downstream, CompositeListener):
            downstream = Sequence([downstream])
        super(Conditional, self).__init__([predicate, downstream])

    @property
    def predicate(self):
        return self._children[0]

    @property
    def downstream(self):
        return self._children[1]

    def forward(self, message):
        self.predicate.dispatch(message)
        if message.kind is MessageKind.RECORD_SUPPLIED and not self.predicate.verdict:
            self._vetoes += 1
            return
        self.downstream.dispatch(message)


def sequence(listeners):
    return Sequence(listeners)


def branch(sequences):
    return Branch(sequences)


def conditional(predicate, downstream):
    return Conditional(predicate, downstream)
