from collections import Counter

from ..utils.meta import get_logger
from .builder import ANALYSES
from .listener import ExperimentListener
from .summary import AnalysisSummary


class AnalysisListener(ExperimentListener):
    """Base of the sample analyses: counts frames per driving stream and emits a summary at Finish."""

    default_name = "analysis"

    def __init__(self, name=None):
        self.name = name if name is not None else self.default_name
        self.summary = None
        self._reset()

    def _reset(self):
        self.frames_by_stream = Counter()
        self.first_time = None
        self.last_time = None

    def _observe(self, frame):
        self.frames_by_stream[frame.driving_stream] += 1
        if self.first_time is None:
            self.first_time = frame.time
        self.last_time = frame.time

    def configure(self, event):
        self.summary = None
        self._reset()

    def reconfigure(self, event):
        self.summary = None

    def geometry(self, frame):
        self._observe(frame)

    def high_voltage(self, frame):
        self._observe(frame)

    def event(self, frame):
        self._observe(frame)

    def other_stream(self, frame):
        self._observe(frame)

    def details(self):
        return {}

    def summarize(self):
        return AnalysisSummary(
            name=self.name,
            frames_by_stream={stream: self.frames_by_stream[stream] for stream in sorted(self.frames_by_stream)},
            first_time=self.first_time,
            last_time=self.last_time,
            custom=self.details(),
        )

    def finish(self, event):
        self.summary = self.summarize()
        get_logger().info(f"{self.name}: {self.summary.frames_total} frames, {event.records_supplied} supplied by the loop")


@ANALYSES.register_module()
class EventCounter(AnalysisListener):
    default_name = "event_counter"

    def _reset(self):
        super(EventCounter, self)._reset()
        self.events = 0

    def event(self, frame):
        super(EventCounter, self).event(frame)
        self.events += 1

    def details(self):
        return dict(events=self.events)


@ANALYSES.register_module()
class GeometryChangeLogger(AnalysisListener):
    """Logs every change of the geometry payload seen in any frame, with the time of the new record."""

    default_name = "geometry_change_logger"

    def _reset(self):
        super(GeometryChangeLogger, self)._reset()
        self.changes = []

    def _observe(self, frame):
        super(GeometryChangeLogger, self)._observe(frame)
        record = frame.get("geometry")
        if record is None:
            return
        if len(self.changes) == 0 or self.changes[-1][1] != record.payload:
            self.changes.append((record.time, record.payload))
            get_logger().debug(f"{self.name}: geometry changed at {record.time}")

    def details(self):
        ret = dict(changes=len(self.changes))
        for i, (time, payload) in enumerate(self.changes):
            ret[f"change.{i:04d}"] = dict(time=time, payload=payload)
        return ret


@ANALYSES.register_module()
class HVMonitor(AnalysisListener):
    """For each event frame, whether an HV record was available and its payload."""

    default_name = "hv_monitor"

    def _reset(self):
        super(HVMonitor, self)._reset()
        self.event_frames = []

    def event(self, frame):
        super(HVMonitor, self).event(frame)
        record = frame.get("hv")
        self.event_frames.append((frame.time, None if record is None else record.payload))

    def details(self):
        present = sum(payload is not None for _, payload in self.event_frames)
        ret = dict(hv_present=present, hv_absent=len(self.event_frames) - present)
        for i, (time, payload) in enumerate(self.event_frames):
            entry = dict(time=time, hv_present=payload is not None)
            if payload is not None:
                entry["hv_payload"] = payload
            ret[f"frame.{i:04d}"] = entry
        return ret


def sample_analyses():
    """One instance of each sample analysis, keyed by name."""
    return {listener.name: listener for listener in (EventCounter(), GeometryChangeLogger(), HVMonitor())}
