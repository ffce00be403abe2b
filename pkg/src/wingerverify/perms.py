"""Permutations of {1..k}, brute-force subgroup machinery and coset actions.

Composition convention is fixed once and for all: (g * h)(x) = g(h(x)),
i.e. the right factor acts first.  Every product of group elements in
this package uses this convention.
"""

from __future__ import annotations

from functools import lru_cache


class Perm:
    """A permutation stored by its image sequence (image of i+1 at index i)."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Perm is immutable")

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(range(1, degree + 1))

    @staticmethod
    def from_cycles(cycles, degree: int) -> "Perm":
        images = list(range(1, degree + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return Perm(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        # right factor acts first
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        si = self.images
        return Perm(si[o - 1] for o in other.images)

    def inverse(self) -> "Perm":
        out = [0] * self.degree
        for i, im in enumerate(self.images):
            out[im - 1] = i + 1
        return Perm(out)

    def order(self) -> int:
        k, p = 1, self
        ident = Perm.identity(self.degree)
        while p != ident:
            p = p * self
            k += 1
        return k

    def is_identity(self) -> bool:
        return all(im == i + 1 for i, im in enumerate(self.images))

    def fixed_points(self):
        return [i + 1 for i, im in enumerate(self.images) if im == i + 1]

    def cycles(self):
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        if self.degree < 10:
            return "".join("(" + "".join(str(x) for x in c) + ")" for c in cycs)
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm[{self.cycle_string()}]"


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation like "(1 2 3 4 5)", "(12)(35)" or "()"."""
    text = text.strip()
    if text in ("()", "", "e", "id"):
        return Perm.identity(degree)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for chunk in text[1:-1].split(")("):
        chunk = chunk.strip()
        if " " in chunk or "," in chunk:
            pts = [int(t) for t in chunk.replace(",", " ").split()]
        else:
            pts = [int(ch) for ch in chunk]
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle: {chunk!r}")
        cycles.append(tuple(pts))
    return Perm.from_cycles(cycles, degree)


class GroupTable:
    """A finite permutation group given by its full element list."""

    def __init__(self, elements):
        elements = sorted(set(elements))
        if not elements:
            raise ValueError("empty element list")
        degree = elements[0].degree
        if any(e.degree != degree for e in elements):
            raise ValueError("mixed degrees")
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        ident = Perm.identity(degree)
        if ident not in self.index:
            raise ValueError("identity missing")
        for g in elements:
            if g.inverse() not in self.index:
                raise ValueError("not closed under inversion")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.elements[0].degree

    def __contains__(self, g: Perm) -> bool:
        return g in self.index

    def __iter__(self):
        return iter(self.elements)

    def is_subgroup_of(self, other: "GroupTable") -> bool:
        return all(g in other for g in self.elements)

    def elements_of_order(self, r: int):
        return [g for g in self.elements if g.order() == r]

    def conjugacy_classes(self):
        """Exact partition into conjugation orbits (list of sorted lists)."""
        remaining = set(self.elements)
        classes = []
        for g in self.elements:
            if g not in remaining:
                continue
            orbit = {x * g * x.inverse() for x in self.elements}
            classes.append(sorted(orbit))
            remaining -= orbit
        return classes

    def class_of(self, g: Perm):
        return sorted({x * g * x.inverse() for x in self.elements})

    def are_conjugate(self, g: Perm, h: Perm) -> bool:
        return any(x * g * x.inverse() == h for x in self.elements)

    def centralizer_order(self, g: Perm) -> int:
        return sum(1 for x in self.elements if x * g == g * x)

    def coset_action(self, sub: "GroupTable"):
        """Left-multiplication action on left cosets of `sub`.

        Returns (cosets, action) where cosets is a list of frozensets and
        action maps each group element to a Perm of degree [G:H].
        """
        if not sub.is_subgroup_of(self):
            raise ValueError("not a subgroup")
        cosets = []
        seen = set()
        for g in self.elements:
            if g in seen:
                continue
            coset = frozenset(g * h for h in sub.elements)
            cosets.append(coset)
            seen |= coset
        pos = {}
        for i, coset in enumerate(cosets):
            for e in coset:
                pos[e] = i
        action = {}
        for g in self.elements:
            images = [0] * len(cosets)
            for i, coset in enumerate(cosets):
                rep = next(iter(coset))
                images[i] = pos[g * rep] + 1
            action[g] = Perm(images)
        return cosets, action


def closure(gens) -> GroupTable:
    """Breadth-first closure of a nonempty generator list."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].degree
    elements = {Perm.identity(degree)}
    frontier = list(elements)
    while frontier:
        new = []
        for g in gens:
            for b in frontier:
                c = g * b
                if c not in elements:
                    elements.add(c)
                    new.append(c)
        frontier = new
    return GroupTable(elements)


@lru_cache(maxsize=None)
def alternating_group_5() -> GroupTable:
    """A5 as degree-5 permutations, generated by (12345) and (12)(34)."""
    g = closure([parse_cycles("(12345)", 5), parse_cycles("(12)(34)", 5)])
    assert g.order == 60
    return g


@lru_cache(maxsize=None)
def symmetric_group_5() -> GroupTable:
    g = closure([parse_cycles("(12345)", 5), parse_cycles("(12)", 5)])
    assert g.order == 120
    return g
