"""Reading monoid, act and symbolic documents from disk."""

from pathlib import Path

from actkit.algebra.act import FiniteAct, validate_act
from actkit.algebra.monoid import FiniteMonoid, load_monoid, parse_builtin
from actkit.algebra.symbolic import SymbolicAct, load_symbolic, symbolize
from actkit.exceptions import MalformedDocument, MonoidTooLarge
from actkit.models.documents import ActDocument, parse_document
from actkit.utils.file_input import load_json_file

BUILTIN_SCHEME = "builtin:"


def detect_document_kind(data: dict) -> str:
    """Detect the document kind from its keys.

    Detection priority:
        1. act : has "action"
        2. monoid : has "table"
        3. symbolic : has "entries" or "families"

    Raises:
        MalformedDocument: If the kind cannot be determined.
    """
    if not isinstance(data, dict):
        raise MalformedDocument("Document must be a JSON object")
    if "action" in data:
        return "act"
    if "table" in data:
        return "monoid"
    if "entries" in data or "families" in data:
        return "symbolic"
    raise MalformedDocument("Cannot detect document kind from JSON structure")


def check_monoid_size(monoid: FiniteMonoid, limit: int | None) -> FiniteMonoid:
    if limit is not None and monoid.size > limit:
        raise MonoidTooLarge(monoid.size, limit)
    return monoid


def resolve_monoid(
    ref: str | dict, base_dir: Path | None = None, limit: int | None = None
) -> FiniteMonoid:
    """A monoid from an inline document, a ``builtin:`` URI or a file path.

    Relative paths are resolved against ``base_dir`` (the referring document's
    directory) when given.
    """
    if isinstance(ref, dict):
        return check_monoid_size(load_monoid(ref), limit)
    if ref.startswith(BUILTIN_SCHEME):
        return check_monoid_size(parse_builtin(ref), limit)
    path = Path(ref)
    if not path.is_absolute() and base_dir is not None:
        path = base_dir / path
    data = load_json_file(path)
    if not isinstance(data, dict):
        raise MalformedDocument(f"Monoid document {ref} must be a JSON object")
    return check_monoid_size(load_monoid(data, name=path.stem), limit)


def act_from_data(data: dict, base_dir: Path | None = None, limit: int | None = None) -> FiniteAct:
    parsed = parse_document(ActDocument, data)
    monoid_ref = parsed.monoid if isinstance(parsed.monoid, str) else parsed.monoid.model_dump()
    monoid = resolve_monoid(monoid_ref, base_dir, limit)
    return validate_act(monoid, parsed)


def load_act_file(path: str, limit: int | None = None) -> FiniteAct:
    data = load_json_file(path)
    if detect_document_kind(data) != "act":
        raise MalformedDocument(f"{path} is not an act document")
    return act_from_data(data, Path(path).parent, limit)


def load_symbolic_or_act_file(path: str, limit: int | None = None) -> tuple[SymbolicAct, str]:
    """A symbolic act from either document kind; finite acts are symbolized.

    Returns the act and the kind of the input document.
    """
    data = load_json_file(path)
    kind = detect_document_kind(data)
    if kind == "symbolic":
        return load_symbolic(data), kind
    if kind == "act":
        return symbolize(act_from_data(data, Path(path).parent, limit)), kind
    raise MalformedDocument(f"{path} is a {kind} document; expected a symbolic or act document")
