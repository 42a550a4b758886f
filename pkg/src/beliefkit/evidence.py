"""Coded-message evidence models over an auxiliary frame of codes.

An :class:`EvidenceModel` packages a hypothesis frame, a message alphabet, a
shared plaintext domain (the nonempty subsets every code must encode), and a
set of codes with an exact probability distribution.  Observing a coded
message induces a constraining relation between codes and plaintexts, from
which a belief function over the hypothesis frame is derived: condition the
code distribution on the codes that could have produced the message, then
pool each code's probability onto the union of plaintexts it may have
encoded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import (
    CodeNotPossible,
    DuplicateCodeName,
    FrameMismatch,
    IncompleteCodebook,
    ProbabilitySumError,
    TotalConflict,
    UnknownMessage,
)
from .frames import Frame, SubsetMask
from .mass import MassFunction, format_rational


@dataclass(frozen=True, eq=True)
class Code:
    """A named encoding of plaintext subsets into message labels."""

    name: str
    prob: Fraction
    codebook: Mapping[SubsetMask, str] = field(hash=False)

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name:
            raise ValueError(f"code name must be a non-empty string, got {self.name!r}")
        if not isinstance(self.prob, Fraction):
            raise TypeError(f"code probability must be a Fraction, got {self.prob!r}")
        object.__setattr__(self, "codebook", dict(self.codebook))

    def decodes_to(self, message: str) -> tuple[SubsetMask, ...]:
        """Plaintexts this code maps to `message`, in codebook order."""
        return tuple(mask for mask, label in self.codebook.items() if label == message)


@dataclass(frozen=True)
class ConstrainingRelation:
    """The (code name, plaintext) pairs consistent with an observed message."""

    pairs: tuple[tuple[str, SubsetMask], ...]

    def possible_codes(self) -> tuple[str, ...]:
        """Names of codes that could have produced the message, model order."""
        seen: dict[str, None] = {}
        for name, _ in self.pairs:
            seen.setdefault(name)
        return tuple(seen)

    def compatibility_set(self, name: str) -> SubsetMask:
        """Union of all plaintexts the relation pairs with code `name`."""
        union: SubsetMask | None = None
        for code_name, mask in self.pairs:
            if code_name == name:
                union = mask if union is None else union | mask
        if union is None:
            raise CodeNotPossible(f"code {name!r} is not in the constraining relation")
        return union


@dataclass(frozen=True)
class EvidenceModel:
    """A hypothesis frame, message alphabet, plaintext domain, and coded sources."""

    frame: Frame
    messages: tuple[str, ...]
    plaintexts: tuple[SubsetMask, ...]
    codes: tuple[Code, ...]
    observed: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "messages", tuple(self.messages))
        object.__setattr__(self, "plaintexts", tuple(self.plaintexts))
        object.__setattr__(self, "codes", tuple(self.codes))
        if not self.messages:
            raise ValueError("a model needs at least one message label")
        if any(not isinstance(m, str) or not m for m in self.messages):
            raise ValueError("message labels must be non-empty strings")
        if len(set(self.messages)) != len(self.messages):
            raise ValueError(f"message labels must be distinct: {self.messages}")
        if not self.plaintexts:
            raise ValueError("the plaintext domain must be non-empty")
        for mask in self.plaintexts:
            if mask.frame != self.frame:
                raise FrameMismatch(f"plaintext {mask} does not belong to the frame")
            if len(mask) == 0:
                raise ValueError("the empty set cannot be a plaintext")
        if len(set(self.plaintexts)) != len(self.plaintexts):
            raise ValueError("plaintext domain entries must be distinct")
        names = [code.name for code in self.codes]
        if len(set(names)) != len(names):
            raise DuplicateCodeName(f"code names must be distinct: {names}")
        domain = set(self.plaintexts)
        for code in self.codes:
            keys = set(code.codebook)
            if keys != domain:
                missing = sorted(str(m) for m in domain - keys)
                extra = sorted(str(m) for m in keys - domain)
                detail = []
                if missing:
                    detail.append(f"missing {', '.join(missing)}")
                if extra:
                    detail.append(f"extra {', '.join(extra)}")
                raise IncompleteCodebook(
                    f"code {code.name!r} must cover exactly the plaintext domain: "
                    + "; ".join(detail)
                )
            for mask, label in code.codebook.items():
                if label not in self.messages:
                    raise UnknownMessage(
                        f"code {code.name!r} maps {mask} to {label!r}, "
                        f"which is not in the message alphabet"
                    )
            if code.prob <= 0:
                raise ProbabilitySumError(
                    f"code {code.name!r} has non-positive probability "
                    f"{format_rational(code.prob)}"
                )
        total = sum((code.prob for code in self.codes), Fraction(0))
        if total != 1:
            raise ProbabilitySumError(
                f"code probabilities sum to {format_rational(total)}, expected 1"
            )
        if self.observed is not None and self.observed not in self.messages:
            raise UnknownMessage(
                f"observed message {self.observed!r} is not in the alphabet"
            )

    def _require_message(self, message: str) -> None:
        if message not in self.messages:
            raise UnknownMessage(
                f"message {message!r} is not in the alphabet "
                f"({', '.join(self.messages)})"
            )

    def constraining_relation(self, message: str) -> ConstrainingRelation:
        """All (code, plaintext) pairs whose encoding equals `message`."""
        self._require_message(message)
        pairs = []
        for code in self.codes:
            for mask in self.plaintexts:
                if code.codebook[mask] == message:
                    pairs.append((code.name, mask))
        return ConstrainingRelation(tuple(pairs))

    def derive_mass(self, message: str) -> MassFunction:
        """Belief function induced by observing `message`.

        Conditions the code distribution on the possible codes, then sums
        the conditional probability of every code whose compatibility set is
        a given subset.  Raises TotalConflict when no code can produce the
        message.
        """
        relation = self.constraining_relation(message)
        possible = relation.possible_codes()
        if not possible:
            raise TotalConflict(f"no code can produce message {message!r}")
        prob_by_name = {code.name: code.prob for code in self.codes}
        normalizer = sum((prob_by_name[name] for name in possible), Fraction(0))
        pooled: dict[SubsetMask, Fraction] = {}
        for name in possible:
            compat = relation.compatibility_set(name)
            pooled[compat] = pooled.get(compat, Fraction(0)) + prob_by_name[name]
        entries = [(mask, value / normalizer) for mask, value in pooled.items()]
        return MassFunction(self.frame, entries)
