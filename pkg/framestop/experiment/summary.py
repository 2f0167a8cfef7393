from dataclasses import dataclass, field
from typing import Dict, Optional

from ..utils.data import is_dict, is_null


@dataclass
class AnalysisSummary:
    name: str
    frames_by_stream: Dict[str, int] = field(default_factory=dict)
    first_time: Optional[int] = None
    last_time: Optional[int] = None
    custom: dict = field(default_factory=dict)

    @property
    def frames_total(self):
        return sum(self.frames_by_stream.values())

    def items(self):
        """Flat (key, text) pairs in lexicographic key order."""
        flat = {
            "frames_total": self.frames_total,
            "first_time": self.first_time,
            "last_time": self.last_time,
        }
        flat.update(_flatten(self.frames_by_stream, "frames"))
        flat.update(_flatten(self.custom, "custom"))
        return [(key, _to_text(flat[key])) for key in sorted(flat)]

    def to_text(self):
        lines = [f"[{self.name}]"] + [f"{key}={value}" for key, value in self.items()]
        return "\n".join(lines) + "\n"


def _flatten(values, prefix):
    ret = {}
    for key, value in values.items():
        key = f"{prefix}.{key}"
        if is_dict(value):
            ret.update(_flatten(value, key))
        else:
            ret[key] = value
    return ret


def _to_text(value):
    if is_null(value):
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value).replace("\n", "\\n")


def format_summaries(summaries):
    """Summary blocks separated by one empty line."""
    return "\n".join(summary.to_text() for summary in summaries)


def parse_summaries(text):
    """Read formatted summaries back into {name: {key: text}}."""
    ret, current = {}, None
    for line in text.splitlines():
        if len(line) == 0:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = ret.setdefault(line[1:-1], {})
            continue
        if current is None or "=" not in line:
            raise ValueError(f"Malformed summary line {line!r}")
        key, value = line.split("=", 1)
        current[key] = value
    return ret
