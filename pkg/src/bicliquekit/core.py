"""Biclique covers of complete and crown hosts, signatures, cross families.

Vertex ids are 0-based. Biclique indices and ground-set elements are 1-based,
so a signature pair lives inside ``{1, ..., d}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class BicliqueError(ValueError):
    """Raised for malformed covers, families or parameters."""


def _mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def _elements(mask: int) -> frozenset[int]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return frozenset(out)


def _fmt(s) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}" if s else "∅"


# -- types --------------------------------------------------------------------


@dataclass(frozen=True)
class KSet:
    """Admissible per-edge cover counts, stored strictly increasing."""

    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(e) for e in self.elements)
        if not els:
            raise BicliqueError("K must be nonempty")
        if any(e < 1 for e in els):
            raise BicliqueError(f"K elements must be positive integers, got {list(els)}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise BicliqueError(f"K elements must be strictly increasing, got {list(els)}")
        object.__setattr__(self, "elements", els)

    @classmethod
    def of(cls, elements: Iterable[int]) -> "KSet":
        els = list(elements)
        if len(set(els)) != len(els):
            raise BicliqueError(f"duplicate elements in K: {els}")
        return cls(tuple(sorted(els)))

    @classmethod
    def order(cls, k: int) -> "KSet":
        """The order-k set ``{1, ..., k}``."""
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def parse(cls, text: str) -> "KSet":
        try:
            return cls.of(int(t) for t in text.split(",") if t.strip())
        except ValueError as exc:
            if isinstance(exc, BicliqueError):
                raise
            raise BicliqueError(f"cannot parse K from {text!r}") from None

    @property
    def k(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class HostGraph:
    """``complete(n)`` or ``crown(m)``; the crown is K_{m,m} minus a perfect matching."""

    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in ("complete", "crown"):
            raise BicliqueError(f"unknown host kind {self.kind!r}")
        if self.size < 1:
            raise BicliqueError(f"host {self.kind} needs at least one vertex per part, got {self.size}")

    @classmethod
    def complete(cls, n: int) -> "HostGraph":
        return cls("complete", n)

    @classmethod
    def crown(cls, m: int) -> "HostGraph":
        return cls("crown", m)

    @property
    def n_edges(self) -> int:
        n = self.size
        return n * (n - 1) // 2 if self.kind == "complete" else n * (n - 1)

    def edges(self):
        n = self.size
        if self.kind == "complete":
            for i in range(n):
                for j in range(i + 1, n):
                    yield (i, j)
        else:
            for i in range(n):
                for j in range(n):
                    if i != j:
                        yield (i, j)


@dataclass(frozen=True)
class Biclique:
    left: frozenset[int]
    right: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "left", frozenset(self.left))
        object.__setattr__(self, "right", frozenset(self.right))


@dataclass(frozen=True)
class Cover:
    host: HostGraph
    bicliques: tuple[Biclique, ...]

    def __post_init__(self):
        object.__setattr__(self, "bicliques", tuple(self.bicliques))
        if not self.bicliques:
            raise BicliqueError("a cover needs at least one biclique (d >= 1)")
        n = self.host.size
        for t, bq in enumerate(self.bicliques, start=1):
            for side, ids in (("left", bq.left), ("right", bq.right)):
                bad = sorted(v for v in ids if not (0 <= v < n))
                if bad:
                    raise BicliqueError(f"biclique {t}: {side} ids {bad} out of range 0..{n - 1}")
            overlap = bq.left & bq.right
            if overlap:
                what = "vertices" if self.host.kind == "complete" else "matched indices"
                raise BicliqueError(f"biclique {t}: left and right share {what} {sorted(overlap)}")

    @property
    def d(self) -> int:
        return len(self.bicliques)

    @classmethod
    def from_sides(cls, host: HostGraph, sides: Iterable[tuple[Iterable[int], Iterable[int]]]) -> "Cover":
        return cls(host, tuple(Biclique(frozenset(l), frozenset(r)) for l, r in sides))


@dataclass(frozen=True)
class SignaturePair:
    """Which bicliques hold a vertex on the left (``a``) and right (``b``)."""

    a: frozenset[int]
    b: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "a", frozenset(self.a))
        object.__setattr__(self, "b", frozenset(self.b))
        if self.a & self.b:
            raise BicliqueError(f"signature sides overlap: a={_fmt(self.a)} b={_fmt(self.b)}")

    @classmethod
    def from_masks(cls, a: int, b: int) -> "SignaturePair":
        return cls(_elements(a), _elements(b))

    @property
    def masks(self) -> tuple[int, int]:
        return _mask(self.a), _mask(self.b)

    def max_element(self) -> int:
        return max(self.a | self.b, default=0)

    def __str__(self):
        return f"({_fmt(self.a)},{_fmt(self.b)})"


@dataclass(frozen=True)
class CrossFamily:
    ground: int
    pairs: tuple[SignaturePair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if self.ground < 1:
            raise BicliqueError(f"ground size must be >= 1, got {self.ground}")
        for i, p in enumerate(self.pairs):
            bad = sorted(e for e in p.a | p.b if not (1 <= e <= self.ground))
            if bad:
                raise BicliqueError(f"pair {i}: elements {bad} outside 1..{self.ground}")

    @property
    def m(self) -> int:
        return len(self.pairs)


@dataclass
class TypeReport:
    """Per-edge coverage counts realised by a cover.

    ``witnesses`` maps each realised count to the edges attaining it.
    """

    witnesses: dict[int, list[tuple[int, int]]]
    vacuous: bool

    @property
    def types(self) -> frozenset[int]:
        return frozenset(self.witnesses)


@dataclass
class VerifyReport:
    ok: bool
    violations: list[tuple[tuple[int, int], int]]
    vacuous: bool = False


# -- operations -----------------------------------------------------------------


def _require_complete(cover: Cover, op: str):
    if cover.host.kind != "complete":
        raise BicliqueError(f"{op} needs a complete host, got {cover.host.kind}({cover.host.size})")


def _require_crown(cover: Cover, op: str):
    if cover.host.kind != "crown":
        raise BicliqueError(f"{op} needs a crown host, got {cover.host.kind}({cover.host.size})")


def _side_masks(cover: Cover) -> tuple[list[int], list[int]]:
    """Per-vertex bitmasks of biclique indices holding the vertex left / right."""
    n = cover.host.size
    left = [0] * n
    right = [0] * n
    for t, bq in enumerate(cover.bicliques):
        bit = 1 << t
        for v in bq.left:
            left[v] |= bit
        for v in bq.right:
            right[v] |= bit
    return left, right


def signatures_of_cover(cover: Cover) -> list[SignaturePair]:
    _require_complete(cover, "signatures_of_cover")
    left, right = _side_masks(cover)
    return [SignaturePair.from_masks(a, b) for a, b in zip(left, right)]


def cover_of_signatures(pairs: Sequence[SignaturePair], d: int) -> Cover:
    if not pairs:
        raise BicliqueError("no signatures given: the host must have n >= 1 vertices")
    if d < 1:
        raise BicliqueError(f"cover size must be >= 1, got {d}")
    for i, p in enumerate(pairs):
        if p.max_element() > d or min(p.a | p.b, default=1) < 1:
            raise BicliqueError(f"signature {i} = {p} has elements outside 1..{d}")
    sides = []
    for j in range(1, d + 1):
        sides.append(({i for i, p in enumerate(pairs) if j in p.a}, {i for i, p in enumerate(pairs) if j in p.b}))
    return Cover.from_sides(HostGraph.complete(len(pairs)), sides)


def coverage_count(p: SignaturePair, q: SignaturePair) -> int:
    """Number of bicliques covering the edge between vertices with signatures p and q."""
    pa, pb = p.masks
    qa, qb = q.masks
    return (pa & qb).bit_count() + (qa & pb).bit_count()


def achieved_type(cover: Cover) -> TypeReport:
    left, right = _side_masks(cover)
    witnesses: dict[int, list[tuple[int, int]]] = {}
    if cover.host.kind == "complete":
        for i, j in cover.host.edges():
            c = (left[i] & right[j]).bit_count() + (left[j] & right[i]).bit_count()
            witnesses.setdefault(c, []).append((i, j))
    else:
        for i, j in cover.host.edges():
            c = (left[i] & right[j]).bit_count()
            witnesses.setdefault(c, []).append((i, j))
    return TypeReport(dict(sorted(witnesses.items())), vacuous=cover.host.n_edges == 0)


def verify_type(cover: Cover, k_set: KSet) -> VerifyReport:
    report = achieved_type(cover)
    violations = [
        (edge, count)
        for count, edges in report.witnesses.items()
        if count not in k_set
        for edge in edges
    ]
    violations.sort()
    return VerifyReport(ok=not violations, violations=violations, vacuous=report.vacuous)


def is_regular(cover: Cover) -> bool:
    _require_complete(cover, "is_regular")
    everyone = frozenset(range(cover.host.size))
    return all(bq.left | bq.right == everyone for bq in cover.bicliques)


def cover_to_family(cover: Cover) -> CrossFamily:
    _require_crown(cover, "cover_to_family")
    left, right = _side_masks(cover)
    return CrossFamily(cover.d, tuple(SignaturePair.from_masks(a, b) for a, b in zip(left, right)))


def family_to_cover(family: CrossFamily) -> Cover:
    if family.m < 1:
        raise BicliqueError("family needs at least one pair")
    sides = []
    for j in range(1, family.ground + 1):
        sides.append(
            (
                {i for i, p in enumerate(family.pairs) if j in p.a},
                {i for i, p in enumerate(family.pairs) if j in p.b},
            )
        )
    return Cover.from_sides(HostGraph.crown(family.m), sides)


def verify_cross_family(family: CrossFamily, k_set: KSet) -> VerifyReport:
    masks = [p.masks for p in family.pairs]
    violations = []
    for i, (ai, bi) in enumerate(masks):
        if ai & bi:
            violations.append(((i, i), (ai & bi).bit_count()))
        for j, (_, bj) in enumerate(masks):
            if i != j:
                c = (ai & bj).bit_count()
                if c not in k_set:
                    violations.append(((i, j), c))
    return VerifyReport(ok=not violations, violations=violations, vacuous=family.m < 2)


def is_uniform(family: CrossFamily, side: str = "left") -> Optional[int]:
    """Common cardinality of the chosen side's sets, or ``None``.

    With ``max(K) < s`` this is the hypothesis under which ``m <= C(d, k)``
    is known to hold.
    """
    if family.m == 0:
        raise BicliqueError("is_uniform needs a nonempty family")
    if side not in ("left", "right"):
        raise BicliqueError(f"side must be 'left' or 'right', got {side!r}")
    sizes = {len(p.a) if side == "left" else len(p.b) for p in family.pairs}
    return sizes.pop() if len(sizes) == 1 else None


def corollary_bound_applies(family: CrossFamily, k_set: KSet) -> bool:
    """True when one side is s-uniform with ``max(K) < s``."""
    for side in ("left", "right"):
        s = is_uniform(family, side)
        if s is not None and max(k_set.elements) < s:
            return True
    return False
