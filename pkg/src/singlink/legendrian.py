"""Legendrian realizations of the handle diagrams of the two link families.

Stein 2-handles are attached along Legendrian unknots with smooth framing
tb - 1.  Stabilizing trades tb for rotation number, two units of rot per
pair of zigzags, so a handle whose attaching circle has maximal
Thurston-Bennequin invariant tb_max and prescribed framing f realizes
exactly the rotation numbers {-s, -s+2, ..., s} with s = tb_max - 1 - f.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .families import Cusp, Elliptic, Family, family_to_json
from .linalg import IntMatrix, is_symmetric
from .plumbing import cusp_graph, intersection_matrix

__all__ = [
    "ChainUnknot",
    "EllipticCore",
    "NodalDoublePass",
    "HandleTag",
    "FramingTooLarge",
    "tb_max",
    "rotation_range",
    "TwoHandleSpec",
    "SteinHandleDiagram",
    "PresentationKind",
    "ContactSurgeryComponent",
    "ContactSurgeryDiagram",
    "enumerate_stein_fillings",
    "canonical_filling",
    "to_contact_surgery",
]


class FramingTooLarge(ValueError):
    """No Legendrian realization exists with the requested framing."""


@dataclass(frozen=True)
class ChainUnknot:
    """Unknot at position ``index`` (1-based) in the surgery chain; genus 0."""

    index: int


@dataclass(frozen=True)
class EllipticCore:
    """The 2-handle over both 1-handles of the elliptic diagram; capped genus 1."""


@dataclass(frozen=True)
class NodalDoublePass:
    """The k = 1 unknot running twice over the 1-handle; capped genus 1."""


HandleTag = ChainUnknot | EllipticCore | NodalDoublePass


def tb_max(tag: HandleTag) -> int:
    """Maximal Thurston-Bennequin invariant of the attaching circle.

    -1 for a plain unknot; 1 for the two genus-one attaching circles,
    matching the bound 2*genus - 1.
    """
    return -1 if isinstance(tag, ChainUnknot) else 1


def _surface_genus(tag: HandleTag) -> int:
    return 0 if isinstance(tag, ChainUnknot) else 1


def rotation_range(tag: HandleTag, framing: int) -> tuple[int, ...]:
    """All realizable rotation numbers at the given smooth framing.

    >>> rotation_range(EllipticCore(), -3)
    (-3, -1, 1, 3)
    """
    s = tb_max(tag) - 1 - framing
    if s < 0:
        raise FramingTooLarge(
            f"framing {framing} exceeds tb_max - 1 = {tb_max(tag) - 1} for {tag}"
        )
    return tuple(range(-s, s + 1, 2))


@dataclass(frozen=True)
class TwoHandleSpec:
    """A Stein 2-handle: framing tb - 1, rotation within the realizable set."""

    tag: HandleTag
    smooth_framing: int
    surface_genus: int
    tb: int
    rot: int

    def __post_init__(self):
        if self.smooth_framing != self.tb - 1:
            raise ValueError(
                f"framing {self.smooth_framing} must equal tb - 1 = {self.tb - 1}"
            )
        if self.rot not in rotation_range(self.tag, self.smooth_framing):
            raise ValueError(
                f"rot {self.rot} not realizable at framing {self.smooth_framing} for {self.tag}"
            )

    def to_json_dict(self) -> dict:
        return {
            "framing": self.smooth_framing,
            "tb": self.tb,
            "rot": self.rot,
            "genus": self.surface_genus,
        }


def _handle_slots(family: Family) -> tuple[tuple[HandleTag, int], ...]:
    if isinstance(family, Elliptic):
        return ((EllipticCore(), -family.n),)
    entries = family.word.entries
    if len(entries) == 1:
        return ((NodalDoublePass(), -entries[0] + 2),)
    return tuple((ChainUnknot(i), -n) for i, n in enumerate(entries, start=1))


def _one_handle_count(family: Family) -> int:
    return 2 if isinstance(family, Elliptic) else 1


@dataclass(frozen=True)
class SteinHandleDiagram:
    """A Legendrian handle diagram of a Stein filling of the link."""

    family: Family
    one_handle_count: int
    handles: tuple[TwoHandleSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "handles", tuple(self.handles))
        if self.one_handle_count != _one_handle_count(self.family):
            raise ValueError(
                f"{self.family} requires {_one_handle_count(self.family)} 1-handles"
            )
        slots = _handle_slots(self.family)
        got = tuple((h.tag, h.smooth_framing) for h in self.handles)
        if got != slots:
            raise ValueError(f"handles {got} do not match the {self.family} pattern {slots}")

    @property
    def rot_vector(self) -> tuple[int, ...]:
        return tuple(h.rot for h in self.handles)

    def to_json_dict(self) -> dict:
        return {
            "family": family_to_json(self.family),
            "one_handles": self.one_handle_count,
            "handles": [h.to_json_dict() for h in self.handles],
        }

    def to_text(self) -> str:
        parts = []
        for h in self.handles:
            s = tb_max(h.tag) - h.tb
            left = (s - h.rot) // 2
            right = (s + h.rot) // 2
            parts.append(
                f"framing {h.smooth_framing}, tb {h.tb}, rot {h.rot} "
                f"({left} left / {right} right zigzags)"
            )
        return f"{self.one_handle_count} one-handles; " + "; ".join(parts)


def _diagram(family: Family, rots: tuple[int, ...]) -> SteinHandleDiagram:
    handles = tuple(
        TwoHandleSpec(tag, framing, _surface_genus(tag), framing + 1, rot)
        for (tag, framing), rot in zip(_handle_slots(family), rots)
    )
    return SteinHandleDiagram(family, _one_handle_count(family), handles)


def enumerate_stein_fillings(family: Family) -> tuple[SteinHandleDiagram, ...]:
    """All Stein handle diagrams, ordered lexicographically by rot vector.

    There are n + 1 of them for the elliptic family and prod(n_i - 1) for a
    cusp word.
    """
    ranges = [rotation_range(tag, f) for tag, f in _handle_slots(family)]
    return tuple(_diagram(family, rots) for rots in itertools.product(*ranges))


def canonical_filling(family: Family, sign: str = "min") -> SteinHandleDiagram:
    """The diagram with every rotation number at its minimum (or maximum).

    These are the two adjunction-realizing diagrams; their rot vectors are
    negatives of each other.
    """
    if sign not in ("min", "max"):
        raise ValueError(f"sign must be 'min' or 'max', got {sign!r}")
    pick = min if sign == "min" else max
    rots = tuple(pick(rotation_range(tag, f)) for tag, f in _handle_slots(family))
    return _diagram(family, rots)


class PresentationKind(Enum):
    LITERAL_LINKING = "literal_linking"
    PLUMBING_PRESENTATION = "plumbing_presentation"


@dataclass(frozen=True)
class ContactSurgeryComponent:
    """One surgery curve: contact coefficient +1 or -1 on a Legendrian knot."""

    tb: int
    rot: int
    contact_coefficient: int

    def __post_init__(self):
        if self.contact_coefficient not in (1, -1):
            raise ValueError("contact coefficient must be +1 or -1")
        if self.contact_coefficient == 1 and (self.tb, self.rot) != (-1, 0):
            raise ValueError("+1 components are standard Legendrian unknots (tb -1, rot 0)")

    @property
    def smooth_framing(self) -> int:
        return self.tb + self.contact_coefficient

    def to_json_dict(self) -> dict:
        return {
            "tb": self.tb,
            "rot": self.rot,
            "coefficient": self.contact_coefficient,
            "framing": self.smooth_framing,
        }


@dataclass(frozen=True)
class ContactSurgeryDiagram:
    """Contact surgery presentation with its homology presentation matrix."""

    components: tuple[ContactSurgeryComponent, ...]
    presentation_matrix: IntMatrix
    presentation_kind: PresentationKind
    family: Family | None = None

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(
            self, "presentation_matrix", tuple(tuple(r) for r in self.presentation_matrix)
        )
        if not is_symmetric(self.presentation_matrix):
            raise ValueError("presentation matrix must be symmetric")
        if len(self.presentation_matrix) != len(self.components):
            raise ValueError("presentation matrix size must match component count")

    @property
    def rot_vector(self) -> tuple[int, ...]:
        return tuple(c.rot for c in self.components)

    @property
    def plus_count(self) -> int:
        return sum(1 for c in self.components if c.contact_coefficient == 1)

    def to_json_dict(self) -> dict:
        return {
            "family": None if self.family is None else family_to_json(self.family),
            "components": [c.to_json_dict() for c in self.components],
            "presentation": {
                "kind": self.presentation_kind.value,
                "matrix": [list(r) for r in self.presentation_matrix],
            },
        }


def to_contact_surgery(diagram: SteinHandleDiagram) -> ContactSurgeryDiagram:
    """Trade every 1-handle for a contact (+1)-surgery on a standard unknot.

    The elliptic family keeps its literal Borromean linking matrix
    diag(0, 0, -n); cusp families carry the plumbing intersection matrix
    extended by a zero row and column for the (+1) component, which presents
    the homology but is not the literal linking data.
    """
    plus = tuple(
        ContactSurgeryComponent(-1, 0, 1) for _ in range(diagram.one_handle_count)
    )
    minus = tuple(
        ContactSurgeryComponent(h.tb, h.rot, -1) for h in diagram.handles
    )
    if isinstance(diagram.family, Elliptic):
        n = diagram.family.n
        matrix: IntMatrix = ((0, 0, 0), (0, 0, 0), (0, 0, -n))
        kind = PresentationKind.LITERAL_LINKING
    else:
        q = intersection_matrix(cusp_graph(diagram.family.word))
        k = len(q)
        matrix = tuple(
            tuple(0 for _ in range(k + 1)) if i == 0 else (0,) + q[i - 1]
            for i in range(k + 1)
        )
        kind = PresentationKind.PLUMBING_PRESENTATION
    return ContactSurgeryDiagram(plus + minus, matrix, kind, diagram.family)
