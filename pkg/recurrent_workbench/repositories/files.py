"""JSON documents on disk."""
import logging
from pathlib import Path
from typing import TypeVar

import ujson
from pydantic import BaseModel, ValidationError

from recurrent_workbench.exceptions import FileFormatError

logger = logging.getLogger(__name__)

Document = TypeVar("Document", bound=BaseModel)


def parse_document(text: str, model: type[Document], source: str = "<input>") -> Document:
    """
    Validate JSON text against a DTO.

    :param text: file contents.
    :param model: DTO class.
    :param source: name used in error messages.
    :raises FileFormatError: for malformed JSON or a DTO mismatch, with its dotted location.
    :return: validated document.
    """
    try:
        payload = ujson.loads(text)
    except ValueError as error:
        raise FileFormatError(f"malformed JSON in {source} ({error})") from error
    try:
        return model.model_validate(payload)
    except ValidationError as error:
        first = error.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise FileFormatError(f"{first['msg']} in {source}", location=location) from error


def read_document(path: Path, model: type[Document]) -> Document:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise FileFormatError(f"cannot read {path}: {error.strerror}") from error
    return parse_document(text, model, path.name)


def dump_document(document: BaseModel) -> str:
    """Byte-stable JSON: sorted keys, two-space indent, trailing newline."""
    return ujson.dumps(document.model_dump(exclude_none=True), sort_keys=True, indent=2) + "\n"


def write_document(path: Path, document: BaseModel) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_document(document), encoding="utf-8")
    logger.info("wrote %s", path)
    return path
