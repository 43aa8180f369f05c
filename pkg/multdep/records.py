"""Output records and their JSON-lines / CSV serialization."""

import csv
import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Sequence, TextIO

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class OutputRecord:
    """One line of command output."""

    command: str
    payload: Dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> Dict:
        return {
            'schema_version': self.schema_version,
            'command': self.command,
            'payload': self.payload,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Dict) -> 'OutputRecord':
        if 'schema_version' not in data:
            raise ValueError("record has no schema_version")
        return cls(command=data['command'], payload=data['payload'],
                   schema_version=data['schema_version'])

    @classmethod
    def from_json(cls, line: str) -> 'OutputRecord':
        return cls.from_dict(json.loads(line))


def write_json_lines(records: Iterable[OutputRecord], stream: TextIO) -> None:
    for record in records:
        stream.write(record.to_json() + "\n")


def _cell(value: Any) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    if value is None:
        return ''
    return str(value)


def write_csv(records: Sequence[OutputRecord], columns: List[str], stream: TextIO) -> None:
    """Header plus one row per record; nested payload values are JSON encoded."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for record in records:
        writer.writerow([_cell(record.payload.get(col)) for col in columns])
