"""Inputs-Ancilla to Garbage-Output derivation of classical connectives.

Fixing some input lines of a reversible gate to constants (ancillae) and
reading one output line yields a Boolean function of the remaining free
inputs. The other output lines are garbage: they are always retained here,
because discarding them is precisely what makes a projected table look
irreversible.

Classification first projects out non-essential inputs, so e.g. the
transition (1, a, b) -> (1, a, not b) is reported as a unary NOT with line 2
listed as ignored.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping

from .core import Gate, Word


class InvalidFixing(ValueError):
    """A fixing names a line outside the gate, or assigns a line twice."""


@dataclass(frozen=True)
class Fixing:
    """A partial assignment of input lines (1-based) to constant bits."""

    width: int
    fixed: tuple[tuple[int, int], ...]  # (line, bit) pairs, sorted by line

    def __post_init__(self) -> None:
        lines = [line for line, _ in self.fixed]
        if len(set(lines)) != len(lines):
            raise InvalidFixing(f"line assigned twice in {self.fixed}")
        for line, bit in self.fixed:
            if not 1 <= line <= self.width:
                raise InvalidFixing(f"line {line} outside 1..{self.width}")
            if bit not in (0, 1):
                raise InvalidFixing(f"fixed value must be a bit, got {bit!r}")
        if len(self.fixed) >= self.width:
            raise InvalidFixing("at least one line must remain free")
        object.__setattr__(self, "fixed", tuple(sorted(self.fixed)))

    @classmethod
    def of(cls, width: int, assignments: Mapping[int, int]) -> "Fixing":
        return cls(width, tuple(assignments.items()))

    @property
    def free(self) -> tuple[int, ...]:
        fixed_lines = {line for line, _ in self.fixed}
        return tuple(line for line in range(1, self.width + 1) if line not in fixed_lines)

    @property
    def assignments(self) -> dict[int, int]:
        return dict(self.fixed)

    def full_word(self, free_bits: tuple[int, ...]) -> Word:
        """Merge the fixed constants with bits for the free lines."""
        bits = [0] * self.width
        for line, bit in self.fixed:
            bits[line - 1] = bit
        for line, bit in zip(self.free, free_bits):
            bits[line - 1] = bit
        return Word(tuple(bits))

    def label(self) -> str:
        if not self.fixed:
            return "(none)"
        return ",".join(f"x{line}={bit}" for line, bit in self.fixed)


def restrict(gate: Gate, fixing: Fixing) -> tuple[tuple[Word, Word], ...]:
    """Rows (free-input word, full output word), in free-input encoding order.

    The full output is kept on purpose: within a restricted table all output
    rows stay distinct, the reversibility evidence inherited from bijectivity.
    """
    if fixing.width != gate.width:
        raise InvalidFixing(f"fixing is for width {fixing.width}, gate has {gate.width}")
    rows = []
    for free_bits in itertools.product((0, 1), repeat=len(fixing.free)):
        rows.append((Word(free_bits), gate.apply(fixing.full_word(free_bits))))
    return tuple(rows)


@dataclass(frozen=True)
class BooleanFunction:
    """A total map from k-bit inputs to one bit.

    ``inputs`` are the original gate lines feeding the function, in order;
    ``truth[i]`` is the value at the free assignment encoding i;
    ``essential`` holds the lines the function actually depends on.
    """

    inputs: tuple[int, ...]
    truth: tuple[int, ...]
    essential: frozenset[int]

    @property
    def arity(self) -> int:
        return len(self.inputs)

    @classmethod
    def from_truth(cls, inputs: tuple[int, ...], truth: tuple[int, ...]) -> "BooleanFunction":
        if len(truth) != 1 << len(inputs):
            raise ValueError(f"{len(inputs)} inputs need {1 << len(inputs)} truth entries")
        essential = set()
        k = len(inputs)
        for pos, line in enumerate(inputs):
            flip = 1 << (k - 1 - pos)
            if any(truth[i] != truth[i ^ flip] for i in range(len(truth))):
                essential.add(line)
        return cls(inputs, truth, frozenset(essential))


def output_function(gate: Gate, fixing: Fixing, line: int) -> BooleanFunction:
    """Output line ``line`` (1-based) as a Boolean function of the free inputs."""
    if not 1 <= line <= gate.width:
        raise InvalidFixing(f"output line {line} outside 1..{gate.width}")
    truth = tuple(out.bits[line - 1] for _, out in restrict(gate, fixing))
    return BooleanFunction.from_truth(fixing.free, truth)


class Connective(str, Enum):
    """Names for the sixteen two-input functions, the unary ones, and wiring."""

    CONST0 = "CONST0"
    CONST1 = "CONST1"
    ID_A = "ID_A"
    ID_B = "ID_B"
    NOT_A = "NOT_A"
    NOT_B = "NOT_B"
    AND = "AND"
    OR = "OR"
    NAND = "NAND"
    NOR = "NOR"
    XOR = "XOR"
    NXOR = "NXOR"
    IMPLIES_AB = "IMPLIES_AB"
    IMPLIES_BA = "IMPLIES_BA"
    NIMPLIES_AB = "NIMPLIES_AB"
    NIMPLIES_BA = "NIMPLIES_BA"
    ID = "ID"
    NOT = "NOT"
    CONST0_1 = "CONST0_1"
    CONST1_1 = "CONST1_1"
    FANOUT = "FANOUT"
    RAW = "RAW"


# Canonical truth vector -> name, a bijection at each arity.
BINARY_NAMES: dict[tuple[int, ...], Connective] = {
    (0, 0, 0, 0): Connective.CONST0,
    (1, 1, 1, 1): Connective.CONST1,
    (0, 0, 1, 1): Connective.ID_A,
    (0, 1, 0, 1): Connective.ID_B,
    (1, 1, 0, 0): Connective.NOT_A,
    (1, 0, 1, 0): Connective.NOT_B,
    (0, 0, 0, 1): Connective.AND,
    (0, 1, 1, 1): Connective.OR,
    (1, 1, 1, 0): Connective.NAND,
    (1, 0, 0, 0): Connective.NOR,
    (0, 1, 1, 0): Connective.XOR,
    (1, 0, 0, 1): Connective.NXOR,
    (1, 1, 0, 1): Connective.IMPLIES_AB,
    (1, 0, 1, 1): Connective.IMPLIES_BA,
    (0, 0, 1, 0): Connective.NIMPLIES_AB,
    (0, 1, 0, 0): Connective.NIMPLIES_BA,
}

UNARY_NAMES: dict[tuple[int, ...], Connective] = {
    (0, 0): Connective.CONST0_1,
    (1, 1): Connective.CONST1_1,
    (0, 1): Connective.ID,
    (1, 0): Connective.NOT,
}


class UnclassifiedArity(ValueError):
    """Essential arity above 2 has no connective name."""


@dataclass(frozen=True)
class Classification:
    """The name of a Boolean function after dropping non-essential inputs."""

    name: Connective
    essential: tuple[int, ...]  # lines the result depends on, ascending
    ignored: tuple[int, ...]  # free lines that turned out irrelevant
    truth: tuple[int, ...]  # truth over the essential lines (full truth for RAW)

    def require_named(self) -> Connective:
        """The connective name, refusing the RAW case."""
        if self.name is Connective.RAW:
            raise UnclassifiedArity(
                f"{len(self.essential)} essential inputs have no connective name"
            )
        return self.name


def classify(bf: BooleanFunction) -> Classification:
    """Name a Boolean function by the connective it computes.

    Functions with more than two essential inputs have no connective name and
    come back as RAW, carrying their full truth vector.
    """
    essential = tuple(sorted(bf.essential))
    ignored = tuple(line for line in bf.inputs if line not in bf.essential)
    if len(essential) > 2:
        return Classification(Connective.RAW, essential, ignored, bf.truth)

    positions = [bf.inputs.index(line) for line in essential]
    projected = []
    for ess_bits in itertools.product((0, 1), repeat=len(essential)):
        bits = [0] * bf.arity
        for pos, bit in zip(positions, ess_bits):
            bits[pos] = bit
        idx = 0
        for b in bits:
            idx = (idx << 1) | b
        projected.append(bf.truth[idx])
    truth = tuple(projected)

    if len(essential) == 0:
        name = Connective.CONST1 if truth[0] else Connective.CONST0
    elif len(essential) == 1:
        name = Connective.ID if truth == (0, 1) else Connective.NOT
    else:
        name = BINARY_NAMES[truth]
    return Classification(name, essential, ignored, truth)


@dataclass(frozen=True)
class Derivation:
    """One realized connective: which fixing, which output line, which name.

    ``connective`` is the reported name; it differs from the functional
    classification only for FANOUT, where the line computes the identity of a
    free input that also passes through unchanged elsewhere.
    """

    fixing: Fixing
    line: int
    connective: Connective
    classification: Classification


@dataclass(frozen=True)
class DerivedConnectives:
    entries: tuple[Derivation, ...]
    names: frozenset[Connective]


def iter_fixings(width: int, max_fixed: int = 2) -> Iterator[Fixing]:
    """All fixings of up to ``max_fixed`` lines, in lexicographic order of
    (fixed-line set, fixed values)."""
    for count in range(0, max_fixed + 1):
        for lines in itertools.combinations(range(1, width + 1), count):
            for values in itertools.product((0, 1), repeat=count):
                yield Fixing(width, tuple(zip(lines, values)))


def _passes_through(classification: Classification, fixing: Fixing, line: int) -> bool:
    """True when output ``line`` merely relays input ``line``: the identity of
    its own free input, or the constant it was fixed to."""
    if line in fixing.free:
        return classification.name is Connective.ID and classification.essential == (line,)
    wanted = Connective.CONST1 if fixing.assignments[line] else Connective.CONST0
    return classification.name is wanted


def derived_connectives(gate: Gate) -> DerivedConnectives:
    """Every named connective obtainable by fixing 0, 1, or 2 input lines.

    Output line 3 is always classified; lines 1 and 2 are reported only when
    they do more than pass their own input through. A line is reported as
    FANOUT when it computes the identity of a free input that another output
    line carries as well (signal duplication, e.g. (a,0,0) -> (a,0,a)).
    Unnameable (RAW) projections are omitted.
    """
    if gate.width != 3:
        raise InvalidFixing(f"connective derivation expects width 3, got {gate.width}")
    entries: list[Derivation] = []
    for fixing in iter_fixings(gate.width):
        per_line = {
            line: classify(output_function(gate, fixing, line))
            for line in range(1, gate.width + 1)
        }
        for line, cls in per_line.items():
            if line != gate.width and _passes_through(cls, fixing, line):
                continue
            if cls.name is Connective.RAW:
                continue
            fans_out = (
                cls.name is Connective.ID
                and cls.essential != (line,)
                and any(
                    other != line and per_line[other].name is Connective.ID
                    and per_line[other].essential == cls.essential
                    for other in per_line
                )
            )
            name = Connective.FANOUT if fans_out else cls.name
            entries.append(Derivation(fixing, line, name, cls))
    return DerivedConnectives(tuple(entries), frozenset(e.connective for e in entries))
