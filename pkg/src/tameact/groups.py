"""Abstract finite groups given by multiplication tables."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """Multiplication table group: table[a][b] = index of a*b."""

    table: tuple  # tuple of row tuples of int
    names: tuple = ()

    def __post_init__(self):
        n = len(self.table)
        if any(len(r) != n for r in self.table):
            raise GroupError("multiplication table must be square")
        if any(not 0 <= x < n for r in self.table for x in r):
            raise GroupError("table entries out of range")
        ident = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise GroupError("no identity element")
        for a in range(n):
            if ident not in self.table[a]:
                raise GroupError(f"element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise GroupError("multiplication table is not associative")
        if self.names and len(self.names) != n:
            raise GroupError("name count mismatch")
        object.__setattr__(self, "_identity", ident)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return self._identity

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def name(self, a: int) -> str:
        return self.names[a] if self.names else f"g{a}"

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(n) for b in range(a + 1, n))

    # -- subgroups and quotients --------------------------------------------

    def subgroup_generated(self, gens) -> tuple:
        """Sorted element tuple of the subgroup generated by gens."""
        elems = {self.identity}
        frontier = list(gens)
        while frontier:
            g = frontier.pop()
            if g in elems:
                continue
            elems.add(g)
            frontier.extend(self.mul(g, h) for h in list(elems))
            frontier.extend(self.mul(h, g) for h in list(elems))
            frontier.append(self.inv(g))
        # close under multiplication until stable
        changed = True
        while changed:
            changed = False
            for a in list(elems):
                for b in list(elems):
                    c = self.mul(a, b)
                    if c not in elems:
                        elems.add(c)
                        changed = True
        return tuple(sorted(elems))

    def is_subgroup(self, elems) -> bool:
        s = set(elems)
        if self.identity not in s:
            return False
        return all(self.mul(a, b) in s for a in s for b in s) and all(self.inv(a) in s for a in s)

    def is_normal(self, elems) -> bool:
        s = set(elems)
        return all(self.mul(self.mul(g, h), self.inv(g)) in s
                   for g in range(self.order) for h in s)

    def left_cosets(self, elems) -> list:
        """Left cosets gH as sorted tuples, identity coset first."""
        s = tuple(sorted(elems))
        seen = set()
        cosets = []
        for g in [self.identity] + list(range(self.order)):
            coset = tuple(sorted(self.mul(g, h) for h in s))
            if coset not in seen:
                seen.add(coset)
                cosets.append(coset)
        return cosets

    def quotient(self, elems) -> tuple["FiniteGroup", list]:
        """Quotient by a normal subgroup; returns (group, coset index per element)."""
        if not self.is_subgroup(elems):
            raise GroupError("not a subgroup")
        if not self.is_normal(elems):
            raise GroupError("subgroup is not normal")
        cosets = self.left_cosets(elems)
        index = {}
        for ci, coset in enumerate(cosets):
            for g in coset:
                index[g] = ci
        table = tuple(tuple(index[self.mul(cosets[a][0], cosets[b][0])]
                            for b in range(len(cosets))) for a in range(len(cosets)))
        return FiniteGroup(table), [index[g] for g in range(self.order)]


def cyclic_group(n: int) -> FiniteGroup:
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    names = tuple("e" if a == 0 else f"r{a}" for a in range(n))
    return FiniteGroup(table, names)


def symmetric_group(n: int) -> FiniteGroup:
    """S_n for small n, elements ordered lexicographically by permutation."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # composition: (p*q)(x) = p(q(x))
    table = tuple(tuple(index[tuple(p[q[x]] for x in range(n))] for q in perms) for p in perms)
    names = tuple("".join(map(str, p)) for p in perms)
    return FiniteGroup(table, names)
