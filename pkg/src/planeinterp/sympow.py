"""Symmetric powers of the indecomposable rank-2, degree-1 bundle on an elliptic curve.

Classes are tracked formally in the generator set ``{O, L1, L2, L3, E}``
twisted by powers of ``A = det E``, using the rules

* ``Li (x) Lj = Lk`` (Klein four-group, ``Li (x) Li = O``),
* ``E (x) Li = E``,
* ``E (x) E = A (x) (O + L1 + L2 + L3)``,
* ``Sym^m E (x) E = Sym^(m+1) E + A (x) Sym^(m-1) E``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

__all__ = [
    "KINDS",
    "BundleClass",
    "BundleDecomp",
    "TRIV",
    "E",
    "A",
    "line",
    "tensor",
    "twist",
    "sym_power",
    "h0",
    "h0_anticanonical_pencil",
]

KINDS = ("Triv", "L1", "L2", "L3", "E")
_TWO_TORSION = {"Triv": 0, "L1": 1, "L2": 2, "L3": 3}
_TWO_TORSION_NAMES = {v: k for k, v in _TWO_TORSION.items()}
_SHORT = {"Triv": "O", "L1": "L1", "L2": "L2", "L3": "L3", "E": "E"}


@dataclass(frozen=True)
class BundleClass:
    kind: str
    a_power: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown bundle kind {self.kind!r}")

    @property
    def rank(self) -> int:
        return 2 if self.kind == "E" else 1

    @property
    def degree(self) -> int:
        return 2 * self.a_power + 1 if self.kind == "E" else self.a_power


def _sort_key(item):
    cls = item[0]
    return cls.a_power, KINDS.index(cls.kind)


class BundleDecomp:
    """Immutable multiset of :class:`BundleClass` with positive multiplicities."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        counts = Counter()
        items = terms.items() if isinstance(terms, (dict, Counter)) else ((t, 1) for t in terms)
        for cls, mult in items:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            counts[cls] += mult
        self._terms = {cls: mult for cls, mult in sorted(counts.items(), key=_sort_key) if mult}

    @property
    def terms(self) -> dict[BundleClass, int]:
        return dict(self._terms)

    def __eq__(self, other):
        return isinstance(other, BundleDecomp) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "BundleDecomp") -> "BundleDecomp":
        return BundleDecomp(Counter(self._terms) + Counter(other._terms))

    def __sub__(self, other: "BundleDecomp") -> "BundleDecomp":
        """Multiset difference; raises ``ArithmeticError`` if ``other`` is not contained."""
        out = Counter(self._terms)
        for cls, mult in other._terms.items():
            if out[cls] < mult:
                raise ArithmeticError(f"cannot remove {mult} x {cls} from {self}")
            out[cls] -= mult
        return BundleDecomp(out)

    @property
    def rank(self) -> int:
        return sum(mult * cls.rank for cls, mult in self._terms.items())

    @property
    def degree(self) -> int:
        return sum(mult * cls.degree for cls, mult in self._terms.items())

    def to_json(self) -> list[dict]:
        return [{"kind": c.kind, "a_power": c.a_power, "mult": m} for c, m in self._terms.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "BundleDecomp":
        return cls({BundleClass(t["kind"], int(t["a_power"])): int(t["mult"]) for t in data})

    def render(self) -> str:
        """Text form grouped by twist, e.g. ``A^2*(O^2 + L1 + L2 + L3)``."""
        if not self._terms:
            return "0"
        groups: dict[int, list[str]] = {}
        for c, m in self._terms.items():
            name = _SHORT[c.kind] + (f"^{m}" if m > 1 else "")
            groups.setdefault(c.a_power, []).append(name)
        parts = []
        for a_power in sorted(groups):
            inner = " + ".join(groups[a_power])
            if a_power == 0:
                parts.append(inner)
                continue
            prefix = "A" if a_power == 1 else f"A^{a_power}"
            parts.append(f"{prefix}*({inner})")
        return " + ".join(parts)

    def __repr__(self):
        return f"BundleDecomp({self.render()})"

    __str__ = render


def line(kind: str, a_power: int = 0) -> BundleDecomp:
    return BundleDecomp([BundleClass(kind, a_power)])


TRIV = line("Triv")
E = line("E")
A = line("Triv", 1)


def _tensor_classes(x: BundleClass, y: BundleClass) -> list[BundleClass]:
    a = x.a_power + y.a_power
    if x.kind == "E" and y.kind == "E":
        return [BundleClass(kind, a + 1) for kind in ("Triv", "L1", "L2", "L3")]
    if x.kind == "E" or y.kind == "E":
        return [BundleClass("E", a)]
    kind = _TWO_TORSION_NAMES[_TWO_TORSION[x.kind] ^ _TWO_TORSION[y.kind]]
    return [BundleClass(kind, a)]


def tensor(x: BundleDecomp, y: BundleDecomp) -> BundleDecomp:
    out = Counter()
    for (cx, mx), (cy, my) in product(x.terms.items(), y.terms.items()):
        for c in _tensor_classes(cx, cy):
            out[c] += mx * my
    return BundleDecomp(out)


def twist(x: BundleDecomp, a_power: int) -> BundleDecomp:
    """``x (x) A^a_power``."""
    return BundleDecomp({BundleClass(c.kind, c.a_power + a_power): m for c, m in x.terms.items()})


@lru_cache(maxsize=None)
def sym_power(m: int) -> BundleDecomp:
    """Decomposition of ``Sym^m E`` via the Clebsch-Gordan recurrence."""
    if m < 0:
        raise ValueError(f"symmetric power must be nonnegative, got {m}")
    if m == 0:
        return TRIV
    if m == 1:
        return E
    return tensor(sym_power(m - 1), E) - twist(sym_power(m - 2), 1)


def _h0_class(c: BundleClass) -> int:
    deg = c.degree
    if deg < 0:
        return 0
    if deg == 0:
        # degree-0 line bundles in this system: only O has sections
        return 1 if c.kind == "Triv" else 0
    # positive degree on an elliptic curve: h1 = 0, so h0 = degree
    return deg


def h0(x: BundleDecomp) -> int:
    return sum(mult * _h0_class(c) for c, mult in x.terms.items())


def h0_anticanonical_pencil() -> int:
    """``h0(-2K_S) = h0(Sym^4 E (x) A^-2)`` on ``S = P(E)``."""
    return h0(twist(sym_power(4), -2))
