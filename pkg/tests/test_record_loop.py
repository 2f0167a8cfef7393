import pytest

from framestop.loop import (
    EndReason,
    IllegalTransition,
    InMemorySource,
    ListenerState,
    LoopAborted,
    LoopMessage,
    RecordListener,
    RecordLoop,
    SequentialSource,
    branch,
    conditional,
    finish_loop,
    run_loop,
    sequence,
)
from framestop.utils.meta import SourceError, get_random_generator

from .helpers import LIFECYCLE_PATTERN, CountingListener, PredicateFilter, TraceListener, VetoListener


class BrokenSource(SequentialSource):
    def __init__(self, good):
        self.good = good

    def next_record(self):
        if self.good == 0:
            raise IOError("disk went away")
        self.good -= 1
        return "r"


class AbortAfter(RecordListener):
    def __init__(self, n):
        super(AbortAfter, self).__init__()
        self.n = n
        self.seen = 0

    def record_supplied(self, event):
        self.seen += 1
        if self.seen >= self.n:
            raise LoopAborted("enough")


def test_three_records():
    listener = TraceListener()
    report = run_loop(InMemorySource(["a", "b", "c"]), listener)
    assert listener.letters == "CRRRS"
    assert listener.records == ["a", "b", "c"]
    assert report.records_supplied == 3
    assert report.end_reason is EndReason.SOURCE_EXHAUSTED
    assert listener.state is ListenerState.SUSPENDED


def test_limit():
    listener = TraceListener()
    report = run_loop(InMemorySource(range(10)), listener, limit=4)
    assert listener.letters == "CRRRRS"
    assert report.records_supplied == 4
    assert report.end_reason is EndReason.LIMIT_REACHED


def test_zero_limit_and_empty_source():
    listener = TraceListener()
    report = run_loop(InMemorySource(range(3)), listener, limit=0)
    assert listener.letters == "CS" and report.end_reason is EndReason.LIMIT_REACHED

    listener = TraceListener()
    report = run_loop(InMemorySource(), listener)
    assert listener.letters == "CS" and report.records_supplied == 0
    with pytest.raises(ValueError):
        run_loop(InMemorySource(), TraceListener(), limit=-1)


def test_sequence_numbers_and_record_events():
    events = []

    class Recorder(TraceListener):
        def record_supplied(self, event):
            events.append(event.sequence_number)

        def suspend(self, event):
            events.append(("suspend", event.records_supplied))

    loop = RecordLoop(InMemorySource(range(5)), Recorder(), loop_id="loop.test")
    loop.run(limit=2)
    loop.run()
    assert events == [1, 2, ("suspend", 2), 1, 2, 3, ("suspend", 5)]


def test_finish_loop():
    listener = CountingListener()
    run_loop(InMemorySource(), listener)
    finish_loop(listener)
    assert listener.state is ListenerState.DORMANT
    assert listener.summary == dict(records=0)

    processing = TraceListener()
    processing.dispatch(LoopMessage.configure())
    processing.dispatch(LoopMessage.record_supplied("r", 1))
    with pytest.raises(IllegalTransition):
        finish_loop(processing)


def test_resume_and_reconfigure():
    listener = TraceListener()
    loop = RecordLoop(InMemorySource(range(6)), listener)
    loop.run(limit=2, config=dict(cut=1))
    loop.run(limit=2)
    loop.run(config=dict(cut=2), start="reconfigure")
    loop.finish()
    assert listener.letters == "CRRSURRSGRRSF"
    assert listener.parameters == dict(cut="2")
    assert listener.records == list(range(6))
    assert loop.records_supplied == 6


def test_illegal_start():
    listener = TraceListener()
    with pytest.raises(IllegalTransition):
        RecordLoop(InMemorySource(), listener).run(start="resume")
    assert listener.kinds == []


def test_source_error_suspends_listeners():
    listener = TraceListener()
    with pytest.raises(SourceError) as info:
        run_loop(BrokenSource(2), listener)
    assert "disk went away" in str(info.value)
    assert listener.letters == "CRRS"
    assert listener.state is ListenerState.SUSPENDED


def test_handler_error_suspends_listeners():
    class Fails(TraceListener):
        def record_supplied(self, event):
            raise KeyError("bad record")

    listener = Fails()
    with pytest.raises(KeyError):
        run_loop(InMemorySource(range(3)), listener)
    assert listener.state is ListenerState.SUSPENDED


def test_abort():
    trace = TraceListener()
    report = run_loop(InMemorySource(range(10)), sequence([AbortAfter(3), trace]))
    assert report.end_reason is EndReason.ABORTED
    assert report.records_supplied == 3
    # the aborting record never reaches later children
    assert trace.letters == "CRRS"


def test_report_counts():
    veto_odd = VetoListener(lambda record: record % 2 == 1)
    report = run_loop(InMemorySource(range(6)), sequence([veto_odd, TraceListener()]))
    assert report.veto_count == 3
    # configure + 6 records + suspend for the first child, configure + 3 records + suspend for the second
    assert report.listeners_invoked == 8 + 5


def test_veto_outside_a_sequence_skips_only_that_record():
    vetoing = VetoListener(lambda record: record == 1)
    report = run_loop(InMemorySource([0, 1, 2]), vetoing)
    assert report.records_supplied == 3
    assert report.veto_count == 1
    assert report.end_reason is EndReason.SOURCE_EXHAUSTED
    assert vetoing.state is ListenerState.SUSPENDED


def random_tree(rng, listeners, depth=0):
    kind = rng.randint(4) if depth < 2 else 0
    if kind == 0:
        listener = TraceListener()
        listeners.append(listener)
        return listener
    children = [random_tree(rng, listeners, depth + 1) for _ in range(rng.randint(1, 4))]
    if kind == 1:
        return sequence(children)
    if kind == 2:
        return branch(children)
    modulus = int(rng.randint(1, 4))
    return conditional(PredicateFilter(lambda record: record % modulus == 0), sequence(children))


def test_random_drives_follow_lifecycle():
    for seed in range(1000):
        rng = get_random_generator(seed)
        listeners = []
        root = random_tree(rng, listeners)
        loop = RecordLoop(InMemorySource(range(rng.randint(0, 51))), root)
        loop.run(limit=None if rng.rand() < 0.3 else int(rng.randint(0, 20)))
        for _ in range(rng.randint(0, 4)):
            start = "resume" if rng.rand() < 0.5 else "reconfigure"
            loop.run(limit=None if rng.rand() < 0.3 else int(rng.randint(0, 20)), start=start)
        loop.finish()
        for listener in listeners:
            assert LIFECYCLE_PATTERN.fullmatch(listener.letters), (seed, listener.letters)
            assert listener.state is ListenerState.DORMANT
