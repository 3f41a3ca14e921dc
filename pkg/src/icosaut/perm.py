"""Permutations and stabilizer chains (deterministic Schreier-Sims).

Composition follows function notation: ``(a * b)(x) == a(b(x))``.
"""

from __future__ import annotations

from itertools import product
from math import lcm, prod
from typing import Iterable, Iterator, Sequence

ENUMERATION_BOUND = 20_000


class DegreeMismatch(ValueError):
    pass


class TooLarge(ValueError):
    pass


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(n))
        for c in cycles:
            for i, x in enumerate(c):
                img[x] = c[(i + 1) % len(c)]
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        a = self.images
        return Permutation._trusted(tuple(a[x] for x in other.images))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._trusted(tuple(inv))

    def conjugate_by(self, g: Permutation) -> Permutation:
        """g * self * g^-1."""
        return g * self * g.inverse()

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            c = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                c.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(c))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def first_moved(self) -> int | None:
        for i, x in enumerate(self.images):
            if i != x:
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def _transversal(point: int, gens: Sequence[Permutation], n: int) -> dict[int, Permutation]:
    T = {point: Permutation.identity(n)}
    queue = [point]
    for y in queue:
        uy = T[y]
        for s in gens:
            x = s.images[y]
            if x not in T:
                T[x] = s * uy
                queue.append(x)
    return T


class PermGroup:
    """Permutation group given by generators; the stabilizer chain is built on first use."""

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise DegreeMismatch("degree is required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators = gens
        self._base: list[int] | None = None
        self._strong: list[Permutation] = []
        self._transversals: list[dict[int, Permutation]] = []
        self._elements: list[Permutation] | None = None

    # -- chain -------------------------------------------------------------

    def _level_gens(self, i: int) -> list[Permutation]:
        base = self._base[:i]
        return [s for s in self._strong if all(s.images[b] == b for b in base)]

    def _sift(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        for lvl in range(start, len(self._base)):
            x = g.images[self._base[lvl]]
            T = self._transversals[lvl]
            if x not in T:
                return g, lvl
            g = T[x].inverse() * g
        return g, len(self._base)

    def _build(self):
        n = self.degree
        self._strong = [g for g in self.generators if not g.is_identity()]
        self._base = []
        for g in self._strong:
            if all(g.images[b] == b for b in self._base):
                self._base.append(g.first_moved())
        self._transversals = [
            _transversal(b, self._level_gens(i), n) for i, b in enumerate(self._base)
        ]
        i = len(self._base) - 1
        while i >= 0:
            residue_level = self._check_level(i)
            if residue_level is None:
                i -= 1
            else:
                i = residue_level

    def _check_level(self, i: int) -> int | None:
        """Sift every Schreier generator of level i; on the first failure extend the chain."""
        n = self.degree
        gens = self._level_gens(i)
        T = self._transversals[i]
        for y, uy in list(T.items()):
            for s in gens:
                h = T[s.images[y]].inverse() * s * uy
                residue, j = self._sift(h, i + 1)
                if residue.is_identity():
                    continue
                self._strong.append(residue)
                if j == len(self._base):
                    self._base.append(residue.first_moved())
                    self._transversals.append({})
                for lvl in range(j + 1):
                    self._transversals[lvl] = _transversal(self._base[lvl], self._level_gens(lvl), n)
                return j
        return None

    def _ensure_chain(self):
        if self._base is None:
            self._build()

    @property
    def base(self) -> list[int]:
        self._ensure_chain()
        return list(self._base)

    @property
    def strong_generators(self) -> list[Permutation]:
        self._ensure_chain()
        return list(self._strong)

    def orbit_lengths(self) -> list[int]:
        self._ensure_chain()
        return [len(T) for T in self._transversals]

    def order(self) -> int:
        self._ensure_chain()
        return prod(len(T) for T in self._transversals)

    def __len__(self):
        return self.order()

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        self._ensure_chain()
        residue, _ = self._sift(g, 0)
        return residue.is_identity()

    __contains__ = contains

    def elements(self) -> list[Permutation]:
        """All elements, sorted by image tuple; refused above ENUMERATION_BOUND."""
        if self._elements is None:
            if self.order() > ENUMERATION_BOUND:
                raise TooLarge(f"group order {self.order()} exceeds {ENUMERATION_BOUND}")
            out = []
            ident = Permutation.identity(self.degree)
            for reps in product(*(list(T.values()) for T in self._transversals)):
                g = ident
                for u in reps:
                    g = g * u
                out.append(g)
            self._elements = sorted(out)
        return self._elements

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements())

    def orbit(self, point: int) -> list[int]:
        return sorted(_transversal(point, self.generators, self.degree))

    def orbits(self) -> list[list[int]]:
        seen = set()
        out = []
        for p in range(self.degree):
            if p not in seen:
                orb = self.orbit(p)
                seen.update(orb)
                out.append(orb)
        return out

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (self.degree == other.degree and self.order() == other.order()
                and self.is_subgroup_of(other))

    __hash__ = None

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()}, gens={len(self.generators)})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [list(g.images) for g in self.generators],
            "order": self.order(),
        }

    @classmethod
    def from_json(cls, data: dict) -> PermGroup:
        G = cls([Permutation(g) for g in data["generators"]], data["degree"])
        if "order" in data and G.order() != data["order"]:
            raise ValueError(f"claimed order {data['order']} but generators give {G.order()}")
        return G


def schreier_sims(gens: Sequence[Permutation], degree: int | None = None) -> PermGroup:
    G = PermGroup(gens, degree)
    G._ensure_chain()
    return G


def orbit_and_stabilizer(G: PermGroup, point: int) -> tuple[list[int], int]:
    orb = G.orbit(point)
    return orb, G.order() // len(orb)


def closure(gens: Sequence[Permutation], degree: int, bound: int = ENUMERATION_BOUND) -> set[Permutation] | None:
    """Breadth-first closure of the generators; None once more than ``bound`` elements turn up.

    Independent of the chain machinery, which makes it a handy oracle.
    """
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in seen:
                    seen.add(h)
                    if len(seen) > bound:
                        return None
                    nxt.append(h)
        frontier = nxt
    return seen
