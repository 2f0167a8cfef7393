from .builder import ANALYSES, FILTERS, build_analysis, build_analysis_tree, build_filter
from .streams import EVENT, GEOMETRY, HIGH_VOLTAGE, STANDARD_STREAMS, ExperimentStreamSet
from .listener import ExperimentListener
from .support import DispatchSupport, dispatch_frame
from .plugin import ExperimentPlugin, adapt_listener
from .frames import ExperimentFrame, ExperimentFrameFactory
from .summary import AnalysisSummary, format_summaries, parse_summaries
from .analyses import AnalysisListener, EventCounter, GeometryChangeLogger, HVMonitor, sample_analyses
from .filters import StreamFilter, TimeModuloFilter, TimeRangeFilter
