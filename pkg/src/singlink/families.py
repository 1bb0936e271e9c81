"""The two link families everything downstream is indexed by."""
from __future__ import annotations

from dataclasses import dataclass

from .sl2z import CycleWord

__all__ = ["InvalidParameter", "Elliptic", "Cusp", "Family", "family_label", "family_to_json"]


class InvalidParameter(ValueError):
    """A numeric parameter outside the allowed range."""


@dataclass(frozen=True)
class Elliptic:
    """Link of a simple elliptic singularity; minimal resolution weight -n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"elliptic parameter must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Cusp:
    """Link of a cusp singularity, indexed by its cycle word."""

    word: CycleWord

    def __post_init__(self):
        if not isinstance(self.word, CycleWord):
            object.__setattr__(self, "word", CycleWord(tuple(self.word)))


Family = Elliptic | Cusp


def family_label(family: Family) -> str:
    if isinstance(family, Elliptic):
        return f"elliptic({family.n})"
    return "cusp(" + ",".join(str(n) for n in family.word) + ")"


def family_to_json(family: Family) -> dict:
    if isinstance(family, Elliptic):
        return {"kind": "elliptic", "n": family.n}
    return {"kind": "cusp", "word": family.word.to_json_list()}
