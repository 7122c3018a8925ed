from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from werkzeug.datastructures import MultiDict

from levelraising.forms import EigenRecordForm
from levelraising.models import EigenData

logger = logging.getLogger(__name__)

RECORD_FIELDS = ("label", "p", "a1", "a2", "a0")


class EigenFileError(ValueError):
    """Raised when an eigenvalue file cannot be turned into EigenData records."""

    def __init__(self, kind: str, message: str) -> None:
        super().__init__(message)
        self.kind = kind


def _record_formdata(index: int, record: Any) -> MultiDict:
    if not isinstance(record, dict):
        raise EigenFileError("invalid-record", f"record {index}: expected an object, got {type(record).__name__}")
    unknown = sorted(set(record) - set(RECORD_FIELDS))
    if unknown:
        raise EigenFileError("invalid-record", f"record {index}: unknown field(s) {', '.join(unknown)}")
    data: Dict[str, str] = {}
    for key, value in record.items():
        if value is None:
            continue
        if key == "label":
            if not isinstance(value, str):
                raise EigenFileError("invalid-record", f"record {index}: label must be a string")
            data[key] = value
        elif isinstance(value, bool) or not isinstance(value, (int, str)):
            raise EigenFileError(
                "invalid-record", f"record {index}: {key} must be an integer or a decimal string"
            )
        else:
            data[key] = str(value).strip()
    return MultiDict(data)


def load_eigendata(path: Union[str, Path]) -> List[EigenData]:
    """Validated EigenData records from a JSON object or array of objects.

    Needs an application context for the record form.
    """

    path = Path(path)
    if not path.is_file():
        raise EigenFileError("missing-file", f"eigenvalue file {path} does not exist")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError, OSError) as exc:
        raise EigenFileError("malformed-json", f"{path}: {exc}") from exc
    records = [payload] if isinstance(payload, dict) else payload
    if not isinstance(records, list):
        raise EigenFileError("malformed-json", f"{path}: expected an object or an array of objects")
    if not records:
        raise EigenFileError("invalid-record", f"{path}: no records")

    loaded: List[EigenData] = []
    labels = set()
    for index, record in enumerate(records):
        form = EigenRecordForm(formdata=_record_formdata(index, record), meta={"csrf": False})
        if not form.validate():
            problems = "; ".join(
                f"{name}: {' '.join(messages)}" for name, messages in sorted(form.errors.items())
            )
            raise EigenFileError("invalid-record", f"record {index}: {problems}")
        eigen = form.to_eigendata()
        if eigen.label is not None:
            if eigen.label in labels:
                raise EigenFileError("invalid-record", f"record {index}: duplicate label {eigen.label!r}")
            labels.add(eigen.label)
        loaded.append(eigen)
    logger.info("loaded %s eigenvalue records from %s", len(loaded), path)
    return loaded
