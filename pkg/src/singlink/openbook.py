"""Horizontal genus-one open books of the two link families.

The cusp open book has page a torus with sum(n_i - 2) boundary components,
built from k planar pieces glued in a cycle along curves delta_0, ...,
delta_{k-1}; the boundary-parallel curves between delta_{i-1} and delta_i
are gamma_{i,1}, ..., gamma_{i,n_i-2}.  The monodromy is one right-handed
twist along every delta and every gamma.  The elliptic open book has the
same page genus, n boundary components and one boundary-parallel twist at
each.

Curves are modeled through their classes in the first homology of the page
together with the intersection form; that is enough for the monodromy
action and for the homology of the total space.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .families import Cusp, Elliptic, Family, InvalidParameter
from .linalg import AbelianGroup, IntMatrix, cokernel, identity_matrix, matmul
from .sl2z import CycleWord

__all__ = [
    "BoundaryLabel",
    "DeltaCurve",
    "GammaCurve",
    "CurveClass",
    "OpenBookDescription",
    "PageHomologyData",
    "UnsupportedOpenBook",
    "elliptic_openbook",
    "cusp_openbook",
    "curve_homology_classes",
    "homological_monodromy_action",
    "openbook_homology",
]

BoundaryLabel = int | tuple[int, int]


class UnsupportedOpenBook(ValueError):
    """The description does not come from one of the two constructors."""


@dataclass(frozen=True)
class DeltaCurve:
    """Twist curve where two page pieces were glued; delta_index in text."""

    index: int


@dataclass(frozen=True)
class GammaCurve:
    """Boundary-parallel twist curve at the labeled boundary."""

    label: BoundaryLabel


TwistCurve = DeltaCurve | GammaCurve


def curve_name(curve: TwistCurve) -> str:
    if isinstance(curve, DeltaCurve):
        return f"delta{curve.index}"
    if isinstance(curve.label, tuple):
        return f"gamma{curve.label[0]}_{curve.label[1]}"
    return f"gamma{curve.label}"


def curve_text(curve: TwistCurve) -> str:
    if isinstance(curve, DeltaCurve):
        return f"δ{curve.index}"
    if isinstance(curve.label, tuple):
        return f"γ{curve.label[0]},{curve.label[1]}"
    return f"γ{curve.label}"


@dataclass(frozen=True)
class OpenBookDescription:
    """Page genus, labeled boundaries, ordered right-handed twist word."""

    page_genus: int
    boundary_labels: tuple[BoundaryLabel, ...]
    twist_word: tuple[TwistCurve, ...]
    boundary_twist_multiplicity: dict[BoundaryLabel, int] = field(default_factory=dict)
    family: Family | None = None

    def __post_init__(self):
        object.__setattr__(self, "boundary_labels", tuple(self.boundary_labels))
        object.__setattr__(self, "twist_word", tuple(self.twist_word))
        labels = set(self.boundary_labels)
        gammas = [c for c in self.twist_word if isinstance(c, GammaCurve)]
        for c in gammas:
            if c.label not in labels:
                raise ValueError(f"twist {curve_name(c)} references an unknown boundary")
        if sum(self.boundary_twist_multiplicity.values()) != len(gammas):
            raise ValueError("boundary twist multiplicities do not match the word")
        for label, count in self.boundary_twist_multiplicity.items():
            if label not in labels or count < 0:
                raise ValueError(f"bad multiplicity entry {label!r}: {count}")

    @property
    def boundary_count(self) -> int:
        return len(self.boundary_labels)

    def word_text(self) -> str:
        return "·".join(f"D({curve_text(c)})" for c in self.twist_word)

    def to_json_dict(self) -> dict:
        return {
            "genus": self.page_genus,
            "boundaries": self.boundary_count,
            "word": [curve_name(c) for c in self.twist_word],
        }


def elliptic_openbook(n: int) -> OpenBookDescription:
    """Torus page with n boundaries, one boundary-parallel twist at each."""
    if n < 1:
        raise InvalidParameter(f"elliptic parameter must be >= 1, got {n}")
    labels = tuple(range(1, n + 1))
    return OpenBookDescription(
        page_genus=1,
        boundary_labels=labels,
        twist_word=tuple(GammaCurve(j) for j in labels),
        boundary_twist_multiplicity={j: 1 for j in labels},
        family=Elliptic(n),
    )


def cusp_openbook(word: CycleWord) -> OpenBookDescription:
    """Torus page with sum(n_i - 2) boundaries and the delta/gamma twist word."""
    k = len(word)
    if k == 1:
        labels: tuple[BoundaryLabel, ...] = tuple(range(1, word.entries[0] - 1))
        twists: tuple[TwistCurve, ...] = (DeltaCurve(0),) + tuple(
            GammaCurve(j) for j in labels
        )
    else:
        labels = tuple(
            (i, j) for i, n in enumerate(word, start=1) for j in range(1, n - 1)
        )
        twists = tuple(DeltaCurve(i) for i in range(k)) + tuple(
            GammaCurve(lab) for lab in labels
        )
    return OpenBookDescription(
        page_genus=1,
        boundary_labels=labels,
        twist_word=twists,
        boundary_twist_multiplicity={lab: 1 for lab in labels},
        family=Cusp(word),
    )


@dataclass(frozen=True)
class CurveClass:
    """Integer coefficient vector over the declared page basis."""

    coefficients: tuple[int, ...]


@dataclass(frozen=True)
class PageHomologyData:
    """Basis of H_1(page), intersection form, and the twist-curve classes.

    The basis is (l, d, e_1, ..., e_{b-1}): l is a longitude crossing every
    delta once, d is the class of delta_0 (for the elliptic page, the dual
    torus generator), and the e_s are the first b-1 boundary classes taken
    with their counterclockwise orientation; the last boundary class equals
    minus their sum.  Boundary classes lie in the radical of the form and
    <l, d> = 1.
    """

    basis_names: tuple[str, ...]
    intersection_form: IntMatrix
    curve_classes: dict[TwistCurve, CurveClass]
    boundary_classes: dict[BoundaryLabel, tuple[int, ...]]

    @property
    def rank(self) -> int:
        return len(self.basis_names)


def _expected_openbook(family: Family) -> OpenBookDescription:
    if isinstance(family, Elliptic):
        return elliptic_openbook(family.n)
    return cusp_openbook(family.word)


def _check_supported(ob: OpenBookDescription) -> None:
    if ob.family is None:
        raise UnsupportedOpenBook("description carries no family tag")
    expected = _expected_openbook(ob.family)
    same_word_as_sets = sorted(map(curve_name, ob.twist_word)) == sorted(
        map(curve_name, expected.twist_word)
    )
    if (
        ob.page_genus != expected.page_genus
        or ob.boundary_labels != expected.boundary_labels
        or not same_word_as_sets
        or ob.boundary_twist_multiplicity != expected.boundary_twist_multiplicity
    ):
        raise UnsupportedOpenBook(f"description does not match {ob.family}")


def curve_homology_classes(ob: OpenBookDescription) -> PageHomologyData:
    """Homology classes of the twist curves and the page intersection form."""
    _check_supported(ob)
    b = ob.boundary_count
    rank = 2 * ob.page_genus + max(b - 1, 0)
    names = ("l", "d") + tuple(f"e{s}" for s in range(1, b))

    def unit(i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(rank))

    boundary_classes: dict[BoundaryLabel, tuple[int, ...]] = {}
    for s, label in enumerate(ob.boundary_labels):
        if s < b - 1:
            boundary_classes[label] = unit(2 + s)
        else:
            boundary_classes[label] = tuple(
                -sum(boundary_classes[lab][i] for lab in ob.boundary_labels[: b - 1])
                for i in range(rank)
            )

    form = [[0] * rank for _ in range(rank)]
    form[0][1] = 1
    form[1][0] = -1

    classes: dict[TwistCurve, CurveClass] = {}
    for curve in ob.twist_word:
        if isinstance(curve, GammaCurve):
            classes[curve] = CurveClass(boundary_classes[curve.label])
    deltas = sorted(
        (c for c in ob.twist_word if isinstance(c, DeltaCurve)), key=lambda c: c.index
    )
    if deltas:
        acc = list(unit(1))  # [delta_0] = d
        by_piece: dict[int, list[BoundaryLabel]] = {}
        for label in ob.boundary_labels:
            piece = label[0] if isinstance(label, tuple) else 1
            by_piece.setdefault(piece, []).append(label)
        for curve in deltas:
            if curve.index > 0:
                # planar piece relation: crossing piece i adds its boundary classes
                for label in by_piece.get(curve.index, []):
                    mult = ob.boundary_twist_multiplicity.get(label, 1)
                    cls = boundary_classes[label]
                    acc = [a + mult * x for a, x in zip(acc, cls)]
            classes[curve] = CurveClass(tuple(acc))
    return PageHomologyData(
        basis_names=names,
        intersection_form=tuple(tuple(row) for row in form),
        curve_classes=classes,
        boundary_classes=boundary_classes,
    )


def _transvection(form: IntMatrix, cls: tuple[int, ...]) -> IntMatrix:
    rank = len(cls)
    jc = tuple(sum(form[i][j] * cls[j] for j in range(rank)) for i in range(rank))
    # x -> x + <x, c> c, i.e. column j picks up (J c)_j copies of c
    return tuple(
        tuple((1 if i == j else 0) + cls[i] * jc[j] for j in range(rank))
        for i in range(rank)
    )


def homological_monodromy_action(ob: OpenBookDescription) -> IntMatrix:
    """Ordered product of transvections over the twist word (columns = images).

    Twists along boundary-parallel classes act as the identity, so the
    elliptic open book always returns the identity matrix.
    """
    data = curve_homology_classes(ob)
    phi = identity_matrix(data.rank)
    for curve in ob.twist_word:
        phi = matmul(phi, _transvection(data.intersection_form, data.curve_classes[curve].coefficients))
    return phi


def _section_corrections(ob: OpenBookDescription, data: PageHomologyData):
    """Homology corrections relating boundary sections to the base section.

    An arc from the first boundary to boundary L, pushed once around the
    mapping torus, is dragged by every twist it crosses: it leaves through
    the boundary-parallel twists at the base, crosses the delta curves of
    every piece strictly between the two boundaries, and enters through the
    twists at L.  The correction is the signed sum of the corresponding
    curve classes; the meridian relation at L is t + correction = 0.
    """
    labels = ob.boundary_labels
    base = labels[0]
    base_mult = ob.boundary_twist_multiplicity.get(base, 1)
    base_cls = data.boundary_classes[base]
    delta_cls = {
        c.index: data.curve_classes[c].coefficients
        for c in ob.twist_word
        if isinstance(c, DeltaCurve)
    }

    def piece_of(label: BoundaryLabel) -> int:
        return label[0] if isinstance(label, tuple) else 1

    corrections = {}
    for label in labels[1:]:
        corr = [base_mult * x for x in base_cls]
        for m in range(piece_of(base), piece_of(label)):
            corr = [a + x for a, x in zip(corr, delta_cls[m])]
        mult = ob.boundary_twist_multiplicity.get(label, 1)
        cls = data.boundary_classes[label]
        corr = [a - mult * x for a, x in zip(corr, cls)]
        corrections[label] = tuple(corr)
    return corrections


def openbook_homology(ob: OpenBookDescription) -> AbelianGroup:
    """First homology of the 3-manifold carrying the open book.

    Presented on the page basis plus the section class t of the mapping
    torus, with relations (phi - 1)x for every basis vector x and one
    meridian relation per boundary: t = 0 at the base boundary and
    t + correction(L) = 0 elsewhere (see _section_corrections).
    """
    data = curve_homology_classes(ob)
    phi = homological_monodromy_action(ob)
    rank = data.rank
    relations = []
    for j in range(rank):
        relations.append(tuple(phi[i][j] - (1 if i == j else 0) for i in range(rank)) + (0,))
    relations.append((0,) * rank + (1,))
    corrections = _section_corrections(ob, data)
    for label in ob.boundary_labels[1:]:
        relations.append(corrections[label] + (1,))
    presentation = tuple(zip(*relations))  # columns = relations
    return cokernel(presentation)
