import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st
from hypothesis.stateful import RuleBasedStateMachine, invariant, precondition, rule

from framestop.loop import (
    ConfigurationEvent,
    IllegalTransition,
    ListenerState,
    LoopMessage,
    MessageKind,
    RecordEvent,
    RecordSuppliedEvent,
    TRANSITIONS,
    dispatch_message,
    next_state,
)
from framestop.utils.meta import get_random_generator

from .helpers import TraceListener


S, M = ListenerState, MessageKind

LEGAL = {
    (S.DORMANT, M.CONFIGURE): S.CONFIGURED,
    (S.CONFIGURED, M.RECORD_SUPPLIED): S.PROCESSING,
    (S.PROCESSING, M.RECORD_SUPPLIED): S.PROCESSING,
    (S.PROCESSING, M.SUSPEND): S.SUSPENDED,
    (S.CONFIGURED, M.SUSPEND): S.SUSPENDED,
    (S.SUSPENDED, M.RESUME): S.CONFIGURED,
    (S.SUSPENDED, M.RECONFIGURE): S.CONFIGURED,
    (S.SUSPENDED, M.FINISH): S.DORMANT,
}


def message_of(kind):
    if kind is M.RECORD_SUPPLIED:
        return LoopMessage.record_supplied("r", 1)
    return getattr(LoopMessage, kind.value)()


def listener_in(state):
    listener = TraceListener()
    path = {
        S.DORMANT: [],
        S.CONFIGURED: [M.CONFIGURE],
        S.PROCESSING: [M.CONFIGURE, M.RECORD_SUPPLIED],
        S.SUSPENDED: [M.CONFIGURE, M.SUSPEND],
    }[state]
    for kind in path:
        listener.dispatch(message_of(kind))
    listener.kinds.clear()
    listener.records.clear()
    return listener


def test_transition_table():
    assert TRANSITIONS == LEGAL
    assert len(list(itertools.product(S, M))) - len(LEGAL) == 16


def test_new_listener_is_dormant():
    assert TraceListener().state is S.DORMANT


@pytest.mark.parametrize("state,kind", list(itertools.product(S, M)))
def test_every_pair(state, kind):
    listener = listener_in(state)
    if (state, kind) in LEGAL:
        assert dispatch_message(listener, message_of(kind)) is LEGAL[(state, kind)]
        assert listener.state is LEGAL[(state, kind)]
        assert listener.kinds == [kind]
    else:
        with pytest.raises(IllegalTransition) as info:
            dispatch_message(listener, message_of(kind))
        assert info.value.current_state is state and info.value.message_kind is kind
        assert listener.state is state
        assert listener.kinds == []


def test_resume_keeps_parameters_and_reconfigure_replaces_them():
    listener = TraceListener()
    listener.dispatch(LoopMessage.configure(dict(threshold=3, mode="fast")))
    listener.dispatch(LoopMessage.suspend())
    listener.dispatch(LoopMessage.resume())
    assert listener.parameters == dict(threshold="3", mode="fast")
    listener.dispatch(LoopMessage.suspend())
    listener.dispatch(LoopMessage.reconfigure(dict(threshold=5)))
    assert listener.parameters == dict(threshold="5")


def test_random_legal_walk_matches_table():
    rng = get_random_generator(0)
    listener, state = TraceListener(), S.DORMANT
    for _ in range(10000):
        choices = [kind for kind in M if (state, kind) in LEGAL]
        kind = choices[rng.randint(len(choices))]
        state = LEGAL[(state, kind)]
        listener.dispatch(message_of(kind))
    assert listener.state is state
    assert len(listener.kinds) == 10000


def test_next_state():
    assert next_state(S.SUSPENDED, M.FINISH) is S.DORMANT
    with pytest.raises(IllegalTransition):
        next_state(S.PROCESSING, M.FINISH)


def test_events():
    with pytest.raises(ValueError):
        ConfigurationEvent.from_pairs([("a", "1"), ("a", "2")])
    event = ConfigurationEvent.from_pairs([("a", 1), ("b", None)])
    assert dict(event.parameters) == dict(a="1", b="")
    with pytest.raises(TypeError):
        event.parameters["c"] = "3"
    with pytest.raises(ValueError):
        RecordEvent(-1)
    with pytest.raises(ValueError):
        RecordSuppliedEvent("r", 0)
    with pytest.raises(TypeError):
        LoopMessage(M.SUSPEND, ConfigurationEvent())


class LifecycleMachine(RuleBasedStateMachine):
    """Any message may arrive; only table edges move the listener and reach its handlers."""

    def __init__(self):
        super(LifecycleMachine, self).__init__()
        self.listener = TraceListener()
        self.state = S.DORMANT
        self.handled = 0

    @rule(kind=st.sampled_from(list(M)))
    def send(self, kind):
        if (self.state, kind) in LEGAL:
            self.listener.dispatch(message_of(kind))
            self.state = LEGAL[(self.state, kind)]
            self.handled += 1
        else:
            with pytest.raises(IllegalTransition):
                self.listener.dispatch(message_of(kind))

    @precondition(lambda self: self.state is S.SUSPENDED)
    @rule()
    def finish(self):
        self.listener.dispatch(LoopMessage.finish())
        self.state = S.DORMANT
        self.handled += 1

    @invariant()
    def state_matches_table(self):
        assert self.listener.state is self.state
        assert len(self.listener.kinds) == self.handled


LifecycleMachine.TestCase.settings = settings(max_examples=100, stateful_step_count=50, deadline=None)
TestLifecycleMachine = LifecycleMachine.TestCase
