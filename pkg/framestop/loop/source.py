from ..utils.meta import SourceError


class _EndOfSource:
    def __repr__(self):
        return "END_OF_SOURCE"

    def __bool__(self):
        return False


END_OF_SOURCE = _EndOfSource()


class SequentialSource:
    """Supplies records one at a time, in source order.

    `next_record` returns END_OF_SOURCE once exhausted, and keeps returning it on every later call.
    Failures to read the underlying data raise SourceError.
    """

    def next_record(self):
        raise NotImplementedError

    def __iter__(self):
        while True:
            record = self.next_record()
            if record is END_OF_SOURCE:
                return
            yield record

    def close(self):
        pass


class InMemorySource(SequentialSource):
    def __init__(self, records=()):
        self._records = list(records)
        self._index = 0

    def __len__(self):
        return len(self._records)

    def next_record(self):
        if self._index >= len(self._records):
            return END_OF_SOURCE
        record = self._records[self._index]
        self._index += 1
        return record


class IndexedSource(InMemorySource):
    """An in-memory source that can also be asked for the record at a given position."""

    def record_at(self, index):
        if not 0 <= index < len(self._records):
            raise SourceError(f"no record at index {index}, the source holds {len(self._records)}")
        return self._records[index]
