from .record_utils import parse_record_file
from .stop_source import build_stop_source
from .structures import StreamMode


def file_stop_source(path, descriptor):
    """Stop source over a record file; sequential streams require non-decreasing times."""
    records = parse_record_file(path, sequential=descriptor.mode is StreamMode.SEQUENTIAL, stream=descriptor.name)
    return build_stop_source(descriptor, records)

