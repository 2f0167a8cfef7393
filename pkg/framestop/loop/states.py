from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Any, Mapping

from ..utils.meta import FrameStopError


class ListenerState(Enum):
    DORMANT = "dormant"
    CONFIGURED = "configured"
    PROCESSING = "processing"
    SUSPENDED = "suspended"


class MessageKind(Enum):
    """Messages a listener can receive; each value is the name of the handler method it invokes."""

    CONFIGURE = "configure"
    RECONFIGURE = "reconfigure"
    RESUME = "resume"
    SUSPEND = "suspend"
    FINISH = "finish"
    RECORD_SUPPLIED = "record_supplied"


S, M = ListenerState, MessageKind
TRANSITIONS = {
    (S.DORMANT, M.CONFIGURE): S.CONFIGURED,
    (S.CONFIGURED, M.RECORD_SUPPLIED): S.PROCESSING,
    (S.PROCESSING, M.RECORD_SUPPLIED): S.PROCESSING,
    (S.PROCESSING, M.SUSPEND): S.SUSPENDED,
    # a loop over an empty source still has to suspend
    (S.CONFIGURED, M.SUSPEND): S.SUSPENDED,
    (S.SUSPENDED, M.RESUME): S.CONFIGURED,
    (S.SUSPENDED, M.RECONFIGURE): S.CONFIGURED,
    (S.SUSPENDED, M.FINISH): S.DORMANT,
}
del S, M


class IllegalTransition(FrameStopError):
    def __init__(self, current_state, message_kind):
        self.current_state = current_state
        self.message_kind = message_kind
        super(IllegalTransition, self).__init__(f"illegal transition: {message_kind.value} received while {current_state.value}")


def next_state(state, kind):
    target = TRANSITIONS.get((state, kind))
    if target is None:
        raise IllegalTransition(state, kind)
    return target


@dataclass(frozen=True)
class ConfigurationEvent:
    parameters: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        params = {str(k): "" if v is None else str(v) for k, v in dict(self.parameters).items()}
        object.__setattr__(self, "parameters", MappingProxyType(params))

    @classmethod
    def from_pairs(cls, pairs):
        params = {}
        for name, value in pairs:
            if name in params:
                raise ValueError(f"Parameter {name} is given twice")
            params[name] = value
        return cls(params)


@dataclass(frozen=True)
class RecordEvent:
    records_supplied: int = 0
    loop_id: str = ""

    def __post_init__(self):
        if self.records_supplied < 0:
            raise ValueError(f"records_supplied must be >= 0, got {self.records_supplied}")


@dataclass(frozen=True)
class RecordSuppliedEvent:
    record: Any
    sequence_number: int

    def __post_init__(self):
        if self.sequence_number < 1:
            raise ValueError(f"sequence_number starts from 1, got {self.sequence_number}")


PAYLOAD_TYPES = {
    MessageKind.CONFIGURE: ConfigurationEvent,
    MessageKind.RECONFIGURE: ConfigurationEvent,
    MessageKind.RESUME: RecordEvent,
    MessageKind.SUSPEND: RecordEvent,
    MessageKind.FINISH: RecordEvent,
    MessageKind.RECORD_SUPPLIED: RecordSuppliedEvent,
}


@dataclass(frozen=True)
class LoopMessage:
    kind: MessageKind
    payload: Any

    def __post_init__(self):
        expected = PAYLOAD_TYPES[self.kind]
        if not isinstance(self.payload, expected):
            raise TypeError(f"{self.kind.value} carries a {expected.__name__}, got {type(self.payload).__name__}")

    @classmethod
    def configure(cls, parameters=None):
        return cls(MessageKind.CONFIGURE, ConfigurationEvent(parameters or {}))

    @classmethod
    def reconfigure(cls, parameters=None):
        return cls(MessageKind.RECONFIGURE, ConfigurationEvent(parameters or {}))

    @classmethod
    def resume(cls, records_supplied=0, loop_id=""):
        return cls(MessageKind.RESUME, RecordEvent(records_supplied, loop_id))

    @classmethod
    def suspend(cls, records_supplied=0, loop_id=""):
        return cls(MessageKind.SUSPEND, RecordEvent(records_supplied, loop_id))

    @classmethod
    def finish(cls, records_supplied=0, loop_id=""):
        return cls(MessageKind.FINISH, RecordEvent(records_supplied, loop_id))

    @classmethod
    def record_supplied(cls, record, sequence_number):
        return cls(MessageKind.RECORD_SUPPLIED, RecordSuppliedEvent(record, sequence_number))
