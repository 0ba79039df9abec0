import json
from functools import lru_cache
from pathlib import Path

from jsonschema import Draft7Validator
from jsonschema.exceptions import ValidationError

from ossermanCliff.exceptions import DocumentError

SCHEMA_VERSION = 1
SCHEMA_DIR = Path(__file__).parent / "schemas"
KINDS = ("curvature_tensor", "clifford_system", "osserman_report", "recovery_trace")


@lru_cache(maxsize=None)
def load_schema(kind: str) -> dict:
    if kind not in KINDS:
        raise KeyError(f"No schema registered for kind '{kind}'")
    with open(SCHEMA_DIR / f"{kind}.schema.json", "r") as f:
        return json.load(f)


def validate_document(data, kind: str) -> dict:
    """Check ``data`` against the JSON Schema of ``kind``."""
    try:
        Draft7Validator(load_schema(kind)).validate(data)
    except ValidationError as e:
        location = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise DocumentError(f"invalid {kind} document at {location}: {e.message}") from e
    return data


def new_document(kind: str, **payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, **payload}


def read_document(filename, kind: str) -> dict:
    path = Path(filename)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise DocumentError(f"Failed to read '{path}': {e}") from e
    return validate_document(data, kind)


def write_document(filename, document: dict) -> Path:
    validate_document(document, document["kind"])
    path = Path(filename)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(document, f, indent=2)
    return path
