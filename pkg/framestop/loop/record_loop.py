from dataclasses import dataclass
from enum import Enum

from ..utils.meta import FrameStopError, SourceError, get_logger, random_id_generator
from .composite import RecordVetoed
from .listener import RecordListener
from .source import END_OF_SOURCE
from .states import ConfigurationEvent, IllegalTransition, ListenerState, LoopMessage, MessageKind


class EndReason(Enum):
    SOURCE_EXHAUSTED = "source_exhausted"
    LIMIT_REACHED = "limit_reached"
    ABORTED = "aborted"


@dataclass(frozen=True)
class LoopReport:
    records_supplied: int
    listeners_invoked: int
    veto_count: int
    end_reason: EndReason


class LoopAborted(Exception):
    """Raised by a handler to end the whole loop; listeners are still suspended."""

    def __init__(self, reason=""):
        self.reason = reason
        super(LoopAborted, self).__init__(reason)


class RecordLoop:
    """Drives records from one source into one listener tree.

    A loop owns its source and listener for its whole life: `run` may be called again after a previous run
    suspended the listener (resume or reconfigure), and `finish` releases the listener back to Dormant.
    The record count carried by RecordEvents accumulates across runs of the same loop.
    """

    def __init__(self, source, listener, loop_id=None):
        if not isinstance(listener, RecordListener):
            raise TypeError(f"listener must be a RecordListener, but got {type(listener)}")
        self.source = source
        self.listener = listener
        self.loop_id = loop_id if loop_id is not None else random_id_generator()
        self.records_supplied = 0
        self.logger = get_logger()

    def _start_message(self, start, config):
        state = self.listener.state
        if state is ListenerState.DORMANT:
            if start not in (None, "configure"):
                raise IllegalTransition(state, MessageKind(start))
            return LoopMessage(MessageKind.CONFIGURE, config)
        if state is ListenerState.SUSPENDED:
            if start in (None, "resume"):
                return LoopMessage.resume(self.records_supplied, self.loop_id)
            if start == "reconfigure":
                return LoopMessage(MessageKind.RECONFIGURE, config)
            raise IllegalTransition(state, MessageKind(start))
        raise IllegalTransition(state, MessageKind.CONFIGURE if start is None else MessageKind(start))

    def _pull(self):
        try:
            return self.source.next_record()
        except FrameStopError:
            raise
        except Exception as e:
            raise SourceError(f"{type(e).__name__}: {e}") from e

    def _suspend(self):
        self.listener.dispatch(LoopMessage.suspend(self.records_supplied, self.loop_id))

    def _suspend_after_failure(self):
        if self.listener.state not in (ListenerState.CONFIGURED, ListenerState.PROCESSING):
            return
        try:
            self._suspend()
        except Exception as e:
            self.logger.error(f"Suspending {self.loop_id} after a failure raised {type(e).__name__}: {e}")

    def run(self, limit=None, config=None, start=None):
        """Run one loop phase.

        Args:
            limit (int | None): Maximum number of records to supply in this phase.
            config (dict | ConfigurationEvent | None): Parameters for Configure/Reconfigure.
            start (str | None): "configure", "resume" or "reconfigure"; by default Dormant listeners are
                configured and Suspended ones resumed.
        Returns:
            LoopReport
        """
        if limit is not None and limit < 0:
            raise ValueError(f"limit must be >= 0, got {limit}")
        if not isinstance(config, ConfigurationEvent):
            config = ConfigurationEvent(config or {})

        invoked_before = self.listener.invocation_count
        vetoes_before = self.listener.veto_count
        self.listener.dispatch(self._start_message(start, config))

        supplied, vetoes, end_reason = 0, 0, EndReason.SOURCE_EXHAUSTED
        try:
            while True:
                if limit is not None and supplied >= limit:
                    end_reason = EndReason.LIMIT_REACHED
                    break
                record = self._pull()
                if record is END_OF_SOURCE:
                    break
                supplied += 1
                self.records_supplied += 1
                try:
                    self.listener.dispatch(LoopMessage.record_supplied(record, supplied))
                except RecordVetoed as e:
                    vetoes += 1
                    self.logger.debug(f"Record {supplied} of loop {self.loop_id} vetoed: {e.reason}")
                except LoopAborted as e:
                    self.logger.info(f"Loop {self.loop_id} aborted after {supplied} records: {e.reason}")
                    end_reason = EndReason.ABORTED
                    break
        except Exception:
            self._suspend_after_failure()
            raise
        self._suspend()

        report = LoopReport(
            records_supplied=supplied,
            listeners_invoked=self.listener.invocation_count - invoked_before,
            veto_count=self.listener.veto_count - vetoes_before + vetoes,
            end_reason=end_reason,
        )
        self.logger.debug(f"Loop {self.loop_id} suspended: {supplied} records, {report.veto_count} vetoes, {end_reason.value}")
        return report

    def finish(self):
        finish_loop(self.listener, self.records_supplied, self.loop_id)


def run_loop(source, listener, limit=None, config=None, start=None):
    return RecordLoop(source, listener).run(limit=limit, config=config, start=start)


def finish_loop(listener, records_supplied=0, loop_id=""):
    """Send Finish to a Suspended listener, returning it to Dormant."""
    if listener.state is not ListenerState.SUSPENDED:
        raise IllegalTransition(listener.state, MessageKind.FINISH)
    listener.dispatch(LoopMessage.finish(records_supplied, loop_id))
