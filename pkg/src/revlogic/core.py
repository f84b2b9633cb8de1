"""Width-generic algebra of reversible (bijective) gates.

A gate on n lines is a bijection on the 2^n words of n bits, stored as an
exhaustive output table. Line x1 is the leftmost bit of a word and the most
significant bit of its integer encoding, so a table literal can be
transcribed row by row from the usual truth-table layout.

Words and gates are immutable values; every operation is a pure function.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_WIDTH = 16


class GateError(ValueError):
    """Base class for gate construction and application errors."""


class WidthMismatch(GateError):
    """Widths of two words/gates that must agree do not."""


class WrongLength(GateError):
    """A table or bit tuple has the wrong number of entries."""


class NotBijective(GateError):
    """An output table repeats a word, so the gate would lose information."""


@dataclass(frozen=True, order=True)
class Word:
    """A fixed-width tuple of bits; position 0 is line x1."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.bits) <= MAX_WIDTH:
            raise WrongLength(f"word width must be 1..{MAX_WIDTH}, got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"bits must be 0 or 1, got {self.bits!r}")

    @property
    def width(self) -> int:
        return len(self.bits)

    @property
    def index(self) -> int:
        """Integer encoding with line x1 as the most significant bit."""
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    @classmethod
    def from_index(cls, width: int, index: int) -> "Word":
        if not 0 <= index < (1 << width):
            raise ValueError(f"index {index} out of range for width {width}")
        return cls(tuple((index >> (width - 1 - j)) & 1 for j in range(width)))

    @classmethod
    def from_string(cls, text: str) -> "Word":
        """Parse a bitstring like "011"; character 0 is line x1."""
        return cls(tuple(int(c) for c in text))

    def hamming_weight(self) -> int:
        return sum(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def as_word(value: "Word | str | Sequence[int]") -> Word:
    """Coerce a Word, bitstring, or bit sequence to a Word."""
    if isinstance(value, Word):
        return value
    if isinstance(value, str):
        return Word.from_string(value)
    return Word(tuple(value))


@dataclass(frozen=True)
class GateFlags:
    self_reversible: bool
    conservative: bool


@dataclass(frozen=True)
class Gate:
    """A reversible gate: an exhaustive, validated output table.

    ``table[i]`` is the output for the input word whose encoding is ``i``.
    The name never takes part in equality; two gates are equal when their
    tables are.
    """

    width: int
    table: tuple[Word, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_WIDTH:
            raise WrongLength(f"gate width must be 1..{MAX_WIDTH}, got {self.width}")
        if len(self.table) != 1 << self.width:
            raise WrongLength(
                f"width-{self.width} gate needs {1 << self.width} rows, got {len(self.table)}"
            )
        for out in self.table:
            if out.width != self.width:
                raise WidthMismatch(
                    f"output {out} has width {out.width}, gate has width {self.width}"
                )
        if len({out.bits for out in self.table}) != len(self.table):
            raise NotBijective("output table repeats a word")

    def apply(self, word: Word) -> Word:
        """Map one input word through the gate."""
        if word.width != self.width:
            raise WidthMismatch(f"word width {word.width} != gate width {self.width}")
        return self.table[word.index]

    def words(self) -> Iterator[Word]:
        """All input words, in encoding order."""
        for i in range(1 << self.width):
            yield Word.from_index(self.width, i)

    def then(self, other: "Gate") -> "Gate":
        """Serial cascade: ``self`` first, then ``other``."""
        if other.width != self.width:
            raise WidthMismatch(f"cannot compose widths {self.width} and {other.width}")
        name = f"{self.name}∘{other.name}" if self.name and other.name else ""
        return Gate(self.width, tuple(other.apply(out) for out in self.table), name)

    def inverse(self) -> "Gate":
        """The inverse permutation; for a self-reversible gate, the same table."""
        inv: list[Word | None] = [None] * len(self.table)
        for i, out in enumerate(self.table):
            inv[out.index] = Word.from_index(self.width, i)
        name = f"{self.name}⁻¹" if self.name else ""
        return Gate(self.width, tuple(inv), name)  # type: ignore[arg-type]

    def is_identity(self) -> bool:
        return all(out.index == i for i, out in enumerate(self.table))

    def flags(self) -> GateFlags:
        """Structural predicates, each decided by exhaustive enumeration."""
        self_rev = self.then(self).is_identity()
        conservative = all(
            out.hamming_weight() == Word.from_index(self.width, i).hamming_weight()
            for i, out in enumerate(self.table)
        )
        return GateFlags(self_reversible=self_rev, conservative=conservative)

    def to_json(self) -> dict:
        """JSON form: bitstring position 0 is line x1; round-trips bit-exactly."""
        return {
            "name": self.name,
            "width": self.width,
            "table": [str(out) for out in self.table],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Gate":
        return make_gate(data["width"], data["table"], name=data.get("name", ""))

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "Gate":
        return cls.from_json(json.loads(text))


def make_gate(width: int, outputs: Iterable["Word | str | Sequence[int]"], name: str = "") -> Gate:
    """Build and validate a gate from its output rows in encoding order."""
    return Gate(width, tuple(as_word(out) for out in outputs), name)


def identity_gate(width: int, name: str = "") -> Gate:
    return Gate(width, tuple(Word.from_index(width, i) for i in range(1 << width)), name)


def compose(first: Gate, second: Gate) -> Gate:
    """``compose(g, h)`` applies ``g`` first: the result maps w to h(g(w))."""
    return first.then(second)
