"""
Record files: one record per line, `<stream>\t<time>\t<payload>\n`, UTF-8.

Empty lines and lines starting with '#' are skipped. The payload is the remainder of the line (it may hold
tabs, it may be empty) and is never interpreted. Times are non-negative decimal integers.
"""
import os.path as osp

from ..utils.meta import SourceError, check_files_exist
from .structures import Record, check_stream_name


class ParseError(SourceError):
    def __init__(self, line_number, detail, path=None):
        self.line_number = line_number
        where = f"{path}:{line_number}" if path is not None else f"line {line_number}"
        super(ParseError, self).__init__(f"{where}: {detail}")


class OrderError(ParseError):
    def __init__(self, line_number, previous_time, time, path=None):
        self.previous_time = previous_time
        self.time = time
        super(OrderError, self).__init__(line_number, f"time {time} is earlier than the previous time {previous_time}", path)


def parse_record_line(line, line_number=1, path=None):
    """Parse one line; returns None for blank and comment lines."""
    line = line.rstrip("\n")
    if line.endswith("\r"):
        line = line[:-1]
    if len(line) == 0 or line.startswith("#"):
        return None

    fields = line.split("\t", 2)
    if len(fields) < 2:
        raise ParseError(line_number, f"expected <stream>\\t<time>[\\t<payload>], got {line!r}", path)
    stream, time_str = fields[0], fields[1]
    payload = fields[2] if len(fields) == 3 else ""
    try:
        check_stream_name(stream)
    except ValueError as e:
        raise ParseError(line_number, str(e), path)
    if not (time_str.isascii() and time_str.isdigit()):
        raise ParseError(line_number, f"time must be a non-negative integer, got {time_str!r}", path)
    return Record(stream, int(time_str), payload)


def iter_record_lines(lines, sequential=False, stream=None, path=None):
    previous = None
    for line_number, line in enumerate(lines, 1):
        record = parse_record_line(line, line_number, path)
        if record is None:
            continue
        if stream is not None and record.stream != stream:
            raise ParseError(line_number, f"record of stream {record.stream!r} in a file of stream {stream!r}", path)
        if sequential and previous is not None and record.time < previous:
            raise OrderError(line_number, previous, record.time, path)
        previous = record.time
        yield record


def parse_record_file(path, sequential=False, stream=None):
    """Read every record of a record file.

    Args:
        path (str): Record file.
        sequential (bool): Require non-decreasing times (raises OrderError otherwise).
        stream (str | None): When given, every record must belong to this stream.
    Returns:
        list[Record]: Records in file order.
    """
    path = str(path)
    try:
        check_files_exist(path)
        with open(path, "r", encoding="utf-8", newline="") as f:
            return list(iter_record_lines(f, sequential=sequential, stream=stream, path=osp.basename(path)))
    except (OSError, UnicodeDecodeError) as e:
        raise SourceError(f"cannot read {path}: {e}") from e


def format_record_line(record):
    if "\n" in record.payload or "\r" in record.payload:
        raise ValueError(f"The payload of {record.stream}@{record.time} spans several lines")
    return f"{record.stream}\t{record.time}\t{record.payload}\n"


def dump_records(records, file=None):
    """Write records in the line format; returns the text when `file` is None."""
    text = "".join(format_record_line(record) for record in records)
    if file is None:
        return text
    if hasattr(file, "write"):
        file.write(text)
        return
    with open(str(file), "w", encoding="utf-8", newline="") as f:
        f.write(text)
