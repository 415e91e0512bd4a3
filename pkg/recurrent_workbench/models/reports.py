"""Run reports printed by every command."""
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

import ujson


def input_digest(paths: Iterable[Path]) -> str:
    """
    SHA-256 over the bytes of the input files, in the given order.

    :param paths: input files.
    :return: hex digest.
    """
    digest = hashlib.sha256()
    for path in paths:
        digest.update(path.read_bytes())
    return digest.hexdigest()


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, dict):
        return ", ".join(f"{key}={_text(item)}" for key, item in sorted(value.items()))
    if isinstance(value, (list, tuple)):
        return "; ".join(_text(item) for item in value) or "(none)"
    return str(value)


@dataclass(frozen=True)
class RunReport:
    """
    Outcome of one command.

    ``verdicts`` is plain JSON data; both renderings are produced from it.
    """

    command: str
    passed: bool
    verdicts: dict[str, Any] = field(default_factory=dict)
    input_digest: str = ""
    artifacts: tuple[str, ...] = ()
    max_bit_size: int = 0

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "passed": self.passed,
            "verdicts": self.verdicts,
            "input_digest": self.input_digest,
            "artifacts": list(self.artifacts),
            "max_bit_size": self.max_bit_size,
        }
        return ujson.dumps(payload, sort_keys=True, indent=2)

    def render(self) -> str:
        lines = [f"{self.command}: {'pass' if self.passed else 'fail'}"]
        for key in sorted(self.verdicts):
            lines.append(f"  {key}: {_text(self.verdicts[key])}")
        for artifact in self.artifacts:
            lines.append(f"  wrote {artifact}")
        if self.input_digest:
            lines.append(f"  input sha256 {self.input_digest}")
        if self.max_bit_size:
            lines.append(f"  max coefficient bits {self.max_bit_size}")
        return "\n".join(lines)
