"""Model documents: parsing, canonical serialization, and validation findings.

A model document is a JSON object with the fields ``frame`` (list of
labels), ``messages`` (list of labels), ``plaintexts`` (list of subsets,
each a list of labels), ``codes`` (list of ``{name, prob, map}`` records
whose ``prob`` is a rational string and whose ``map`` keys are canonical
subset strings in frame order), and an optional ``observed`` message label.
Rationals travel as strings such as ``"2/3"`` so no value is ever rounded
through a binary float.  Serialization is canonical: keys in the order
above, two-space indentation, trailing newline.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import ModelSyntaxError, UnknownLabel
from .frames import Frame, SubsetMask
from .mass import format_rational, parse_rational
from .evidence import Code, EvidenceModel

_MODEL_FIELDS = ("frame", "messages", "plaintexts", "codes", "observed")
_CODE_FIELDS = ("name", "prob", "map")


def _fail(field: str, detail: str) -> ModelSyntaxError:
    return ModelSyntaxError(f"{field}: {detail}")


def _string_list(value: object, field: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise _fail(field, "expected a list of strings")
    return value


def parse_model(text: str) -> EvidenceModel:
    """Parse a model document; errors carry line or field context."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ModelSyntaxError(
            f"line {err.lineno}, column {err.colno}: {err.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise ModelSyntaxError("document must be a JSON object")
    for key in doc:
        if key not in _MODEL_FIELDS:
            raise ModelSyntaxError(f"unknown field {key!r}")
    for key in ("frame", "messages", "plaintexts", "codes"):
        if key not in doc:
            raise ModelSyntaxError(f"missing field {key!r}")

    try:
        frame = Frame(tuple(_string_list(doc["frame"], "frame")))
    except ValueError as err:
        raise _fail("frame", str(err)) from None

    messages = tuple(_string_list(doc["messages"], "messages"))

    if not isinstance(doc["plaintexts"], list):
        raise _fail("plaintexts", "expected a list of subsets")
    plaintexts = []
    for i, names in enumerate(doc["plaintexts"]):
        field = f"plaintexts[{i}]"
        names = _string_list(names, field)
        if not names:
            raise _fail(field, "the empty set is not a valid plaintext")
        try:
            plaintexts.append(frame.subset(names))
        except UnknownLabel as err:
            raise UnknownLabel(f"{field}: {err}") from None

    if not isinstance(doc["codes"], list):
        raise _fail("codes", "expected a list of code records")
    codes = []
    for i, record in enumerate(doc["codes"]):
        field = f"codes[{i}]"
        if not isinstance(record, dict):
            raise _fail(field, "expected an object with name, prob, map")
        for key in record:
            if key not in _CODE_FIELDS:
                raise _fail(field, f"unknown field {key!r}")
        for key in _CODE_FIELDS:
            if key not in record:
                raise _fail(field, f"missing field {key!r}")
        name = record["name"]
        if not isinstance(name, str) or not name:
            raise _fail(f"{field}.name", "expected a non-empty string")
        if not isinstance(record["prob"], str):
            raise _fail(f"{field}.prob", "expected a rational string such as \"2/3\"")
        try:
            prob = parse_rational(record["prob"])
        except ValueError as err:
            raise _fail(f"{field}.prob", str(err)) from None
        if not isinstance(record["map"], dict):
            raise _fail(f"{field}.map", "expected an object keyed by subset strings")
        codebook: dict[SubsetMask, str] = {}
        for subset_text, label in record["map"].items():
            entry = f"{field}.map[{subset_text!r}]"
            if not isinstance(label, str):
                raise _fail(entry, "expected a message label string")
            try:
                mask = frame.parse_subset(subset_text)
            except ValueError as err:
                raise _fail(entry, str(err)) from None
            except UnknownLabel as err:
                raise UnknownLabel(f"{entry}: {err}") from None
            if len(mask) == 0:
                raise _fail(entry, "the empty set is not a valid plaintext")
            if mask in codebook:
                raise _fail(entry, f"duplicate plaintext {mask}")
            codebook[mask] = label
        codes.append(Code(name, prob, codebook))

    observed = doc.get("observed")
    if observed is not None and not isinstance(observed, str):
        raise _fail("observed", "expected a message label string")

    try:
        return EvidenceModel(frame, messages, tuple(plaintexts), tuple(codes), observed)
    except ValueError as err:
        raise ModelSyntaxError(str(err)) from None


def serialize_model(model: EvidenceModel) -> str:
    """Canonical document for a model; reparses to an equal model."""
    doc: dict[str, object] = {
        "frame": list(model.frame.labels),
        "messages": list(model.messages),
        "plaintexts": [list(mask.members) for mask in model.plaintexts],
        "codes": [
            {
                "name": code.name,
                "prob": format_rational(code.prob),
                "map": {str(mask): code.codebook[mask] for mask in model.plaintexts},
            }
            for code in model.codes
        ],
    }
    if model.observed is not None:
        doc["observed"] = model.observed
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_model(path: str | Path) -> EvidenceModel:
    return parse_model(Path(path).read_text(encoding="utf-8"))


def validate_model(model: EvidenceModel) -> list[str]:
    """Warnings about a structurally valid model; empty means clean."""
    findings = []
    for code in model.codes:
        by_message: dict[str, list[SubsetMask]] = {}
        for mask in model.plaintexts:
            by_message.setdefault(code.codebook[mask], []).append(mask)
        for message in model.messages:
            hits = by_message.get(message, [])
            if len(hits) > 1:
                listed = ", ".join(str(mask) for mask in hits)
                findings.append(
                    f"code {code.name} non-injective on {message}: {listed}"
                )
    emitted = {label for code in model.codes for label in code.codebook.values()}
    for message in model.messages:
        if message not in emitted:
            findings.append(f"message {message} emitted by no code")
    if model.observed is not None and model.observed not in emitted:
        findings.append(
            f"observed message {model.observed} cannot be produced by any code"
        )
    return findings


def parse_belief_table(text: str) -> tuple[Frame, dict[SubsetMask, Fraction]]:
    """Parse a dense belief table document: ``{"frame": [...], "belief": {...}}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ModelSyntaxError(
            f"line {err.lineno}, column {err.colno}: {err.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise ModelSyntaxError("document must be a JSON object")
    for key in doc:
        if key not in ("frame", "belief"):
            raise ModelSyntaxError(f"unknown field {key!r}")
    for key in ("frame", "belief"):
        if key not in doc:
            raise ModelSyntaxError(f"missing field {key!r}")
    try:
        frame = Frame(tuple(_string_list(doc["frame"], "frame")))
    except ValueError as err:
        raise _fail("frame", str(err)) from None
    if not isinstance(doc["belief"], dict):
        raise _fail("belief", "expected an object keyed by subset strings")
    table: dict[SubsetMask, Fraction] = {}
    for subset_text, value in doc["belief"].items():
        entry = f"belief[{subset_text!r}]"
        if not isinstance(value, str):
            raise _fail(entry, "expected a rational string such as \"2/3\"")
        try:
            mask = frame.parse_subset(subset_text)
            table[mask] = parse_rational(value)
        except ValueError as err:
            raise _fail(entry, str(err)) from None
        except UnknownLabel as err:
            raise UnknownLabel(f"{entry}: {err}") from None
    return frame, table


def parse_prior_table(text: str, frame: Frame):
    """Parse a prior weights document: ``{"weights": {"{no}": "1/2", ...}}``."""
    from .bayes import PriorSpec

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ModelSyntaxError(
            f"line {err.lineno}, column {err.colno}: {err.msg}"
        ) from None
    if not isinstance(doc, dict) or set(doc) != {"weights"}:
        raise ModelSyntaxError('document must be a JSON object with a "weights" field')
    if not isinstance(doc["weights"], dict):
        raise _fail("weights", "expected an object keyed by subset strings")
    weights: dict[SubsetMask, Fraction] = {}
    for subset_text, value in doc["weights"].items():
        entry = f"weights[{subset_text!r}]"
        if not isinstance(value, str):
            raise _fail(entry, "expected a rational string such as \"2/3\"")
        try:
            mask = frame.parse_subset(subset_text)
            weights[mask] = parse_rational(value)
        except ValueError as err:
            raise _fail(entry, str(err)) from None
        except UnknownLabel as err:
            raise UnknownLabel(f"{entry}: {err}") from None
    return PriorSpec(weights)


def bundled_model_path(name: str) -> Path:
    """Filesystem path of a bundled model document such as ``example1``."""
    candidate = resources.files("beliefkit.data") / f"{name}.json"
    with resources.as_file(candidate) as path:
        if not path.is_file():
            raise FileNotFoundError(f"no bundled model named {name!r}")
        return path
