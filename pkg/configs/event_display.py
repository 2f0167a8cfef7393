# The initial geometry is looked up before the first event is supplied.
sources = [
    dict(stream="geometry", path="data/geometry.tsv"),
    dict(stream="event", path="data/events.tsv"),
]

pipeline_cfg = dict(
    type="Sequence",
    children=[
        dict(type="EventCounter"),
        dict(type="GeometryChangeLogger"),
        dict(type="HVMonitor"),
    ],
)

frame_factory_cfg = dict(type="ExperimentFrameFactory")
record_limit = None
trace_output = "work_dirs/event_display/trace.tsv"
summary_output = "work_dirs/event_display/summary.txt"
