from .builder import LISTENERS, build_listener
from .states import (
    ConfigurationEvent,
    IllegalTransition,
    ListenerState,
    LoopMessage,
    MessageKind,
    RecordEvent,
    RecordSuppliedEvent,
    TRANSITIONS,
    next_state,
)
from .listener import FilterListener, LifecycleHooks, RecordListener, dispatch_message
from .composite import Branch, CompositeListener, Conditional, RecordVetoed, Sequence, branch, conditional, sequence
from .source import END_OF_SOURCE, IndexedSource, InMemorySource, SequentialSource
from .record_loop import EndReason, LoopAborted, LoopReport, RecordLoop, finish_loop, run_loop
