"""Structural invariants of small permutation groups and evidence-based naming."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .perm import ENUMERATION_BOUND, PermGroup, Permutation, TooLarge


def _require_small(G: PermGroup):
    if G.order() > ENUMERATION_BOUND:
        raise TooLarge(f"group order {G.order()} exceeds {ENUMERATION_BOUND}")


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


def normal_closure(G: PermGroup, gens: list[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing ``gens``."""
    N = PermGroup([g for g in gens if not g.is_identity()], G.degree)
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            for x in list(N.generators):
                y = x.conjugate_by(g)
                if not N.contains(y):
                    N = PermGroup(N.generators + [y], G.degree)
                    changed = True
    return N


def derived_subgroup(G: PermGroup) -> PermGroup:
    _require_small(G)
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)


def is_abelian(G: PermGroup) -> bool:
    gens = G.generators
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])


def center(G: PermGroup) -> list[Permutation]:
    _require_small(G)
    return [z for z in G.elements() if all(z * g == g * z for g in G.generators)]


def element_order_histogram(G: PermGroup) -> dict[int, int]:
    _require_small(G)
    return dict(sorted(Counter(g.order() for g in G.elements()).items()))


def conjugacy_class_reps(G: PermGroup) -> list[Permutation]:
    _require_small(G)
    seen = set()
    reps = []
    for x in G.elements():
        if x in seen:
            continue
        reps.append(x)
        cls = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in G.generators:
                    z = y.conjugate_by(g)
                    if z not in cls:
                        cls.add(z)
                        nxt.append(z)
            frontier = nxt
        seen |= cls
    return reps


def is_simple(G: PermGroup) -> bool:
    """Nontrivial and every nontrivial conjugacy class normally generates G."""
    _require_small(G)
    order = G.order()
    if order == 1:
        return False
    for x in conjugacy_class_reps(G):
        if x.is_identity():
            continue
        if normal_closure(G, [x]).order() != order:
            return False
    return True


def _dihedral_witness(G: PermGroup, hist: dict[int, int]) -> tuple[Permutation, Permutation] | None:
    order = G.order()
    if order % 2 or order < 4:
        return None
    k = order // 2
    if k not in hist:
        return None
    elements = G.elements()
    rotations = [r for r in elements if r.order() == k]
    involutions = [s for s in elements if s.order() == 2]
    for r in rotations:
        cyclic = {r ** i for i in range(k)}
        rinv = r.inverse()
        for s in involutions:
            if s not in cyclic and s * r * s == rinv:
                return r, s
    return None


@dataclass(frozen=True)
class GroupName:
    tag: str
    k: int | None = None
    evidence: dict = field(default_factory=dict, compare=False, hash=False)

    def __str__(self):
        if self.tag == "Cyclic":
            return f"C{self.k}"
        if self.tag == "Dihedral":
            return f"D{self.k}"
        return self.tag

    @property
    def order(self) -> int | None:
        return {
            "Trivial": 1, "A4": 12, "S4": 24, "A5": 60, "S5": 120, "A5xC2": 120,
            "Cyclic": self.k, "Dihedral": 2 * self.k if self.k else None,
        }.get(self.tag)


_ALIASES = {
    "trivial": ("Trivial", None), "1": ("Trivial", None), "c1": ("Trivial", None),
    "a4": ("A4", None), "s4": ("S4", None), "a5": ("A5", None), "s5": ("S5", None),
    "a5xc2": ("A5xC2", None), "a5xz2": ("A5xC2", None), "s3": ("Dihedral", 3),
    "klein": ("Dihedral", 2), "v4": ("Dihedral", 2), "unknown": ("Unknown", None),
}


def parse_group_name(text: str) -> GroupName:
    """Accepts A5, A5xC2, C3, Cyclic(3), D4, Dihedral(4), S3, Trivial, ..."""
    s = text.strip().replace(" ", "").lower()
    if s in _ALIASES:
        tag, k = _ALIASES[s]
        return GroupName(tag, k)
    m = re.fullmatch(r"(c|z|cyclic|d|dihedral)\(?(\d+)\)?", s)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind in ("c", "z", "cyclic"):
            return GroupName("Trivial") if k == 1 else GroupName("Cyclic", k)
        return GroupName("Dihedral", k)
    raise ValueError(f"unknown group name {text!r}")


def identify_group(G: PermGroup) -> GroupName:
    """Name G from its order, element orders, center and normal structure.

    Anything the decision table cannot pin down comes back as ``Unknown``.
    """
    _require_small(G)
    order = G.order()
    hist = element_order_histogram(G)
    abelian = is_abelian(G)
    evidence = {"order": order, "element_orders": hist, "abelian": abelian}

    def named(tag, k=None):
        return GroupName(tag, k, evidence)

    if order == 1:
        return named("Trivial")
    if abelian:
        if order in hist:
            return named("Cyclic", order)
    witness = _dihedral_witness(G, hist)
    if witness is not None:
        evidence["dihedral_witness"] = [list(witness[0].images), list(witness[1].images)]
        return named("Dihedral", order // 2)
    if order == 12 and set(hist) <= {1, 2, 3}:
        return named("A4")
    if order == 24 and hist == {1: 1, 2: 9, 3: 8, 4: 6}:
        return named("S4")
    if order == 60:
        simple = is_simple(G)
        evidence["simple"] = simple
        if simple:
            return named("A5")
    if order == 120:
        z = len(center(G))
        D = derived_subgroup(G)
        d_simple = D.order() == 60 and is_simple(D)
        evidence.update(center_order=z, derived_order=D.order(), derived_simple=d_simple)
        if d_simple and z == 1:
            return named("S5")
        if d_simple and z == 2:
            return named("A5xC2")
    return named("Unknown")
