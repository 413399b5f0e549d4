"""
Finite groups given by an explicit list of elements. Elements only need to be hashable and compose with @.
"""
import hashlib
import logging
from dataclasses import dataclass, field
from itertools import zip_longest
from random import Random
from typing import Any

from sympy import factorint

logger = logging.getLogger(__name__)


def power(x, k: int, identity):
    result = identity
    for _ in range(k):
        result = result @ x
    return result


def element_order(x, identity) -> int:
    k, y = 1, x
    while y != identity:
        y = y @ x
        k += 1
    return k


def closure(generators, identity) -> list:
    """Subgroup generated by a finite set, in breadth-first order from the identity"""
    seen = {identity: None}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in generators:
                y = x @ g
                if y not in seen:
                    seen[y] = None
                    next_frontier.append(y)
        frontier = next_frontier
    return list(seen)


def greedy_generators(elements, identity) -> list:
    """Walk the elements in order and keep each one the earlier picks do not already generate"""
    generators, generated = [], {identity}
    for x in elements:
        if x in generated:
            continue
        generators.append(x)
        # generated is closed under the earlier generators, so every new element is reached through x first
        frontier = [y @ x for y in generated]
        while frontier:
            fresh = [y for y in dict.fromkeys(frontier) if y not in generated]
            generated.update(fresh)
            frontier = [y @ g for y in fresh for g in generators]
    return generators


def abelian_invariants(orders: list[int]) -> tuple[int, ...]:
    """
    Invariant factors of a finite abelian group from the orders of its elements. For each prime p, the number
    of elements killed by p^k is p^(sum_j min(a_j, k)) where Z_{p^a_j} are the p-primary summands.
    :param orders: list of int, order of every element
    :return: tuple of invariant factors, ascending
    """
    n = len(orders)
    primary = []
    for p, e in sorted(factorint(n).items()):
        exponents = [factorint(sum(1 for o in orders if p ** k % o == 0)).get(p, 0) for k in range(e + 1)]
        at_least = [exponents[k] - exponents[k - 1] for k in range(1, e + 1)]
        summands = []
        for k in range(e, 0, -1):
            exactly = at_least[k - 1] - (at_least[k] if k < e else 0)
            summands += [p ** k] * exactly
        primary.append(summands)
    factors = []
    for column in zip_longest(*primary, fillvalue=1):
        d = 1
        for q in column:
            d *= q
        factors.append(d)
    return tuple(reversed(factors))


def format_invariants(factors) -> str:
    return ' + '.join(f'Z_{d}' for d in factors) if factors else '0'


@dataclass(frozen=True)
class GroupTable:
    """
    A finite group with a deterministic element order, greedy minimal generators and its isomorphism type:
    invariant factors when abelian, otherwise the order and a hash of the multiplication table of the
    elements against the generators.
    """
    elements: tuple
    identity: Any
    generators: tuple
    is_abelian: bool
    structure: tuple[int, ...] | None
    table_hash: str | None
    gammas: tuple = field(default=())
    source: Any = field(default=None, repr=False, compare=False)

    @classmethod
    def build(cls, elements, identity, gammas=(), source=None) -> 'GroupTable':
        """
        :param elements: iterable of group elements, in the order the table should keep
        :param identity: the identity element, which must be among them
        :param gammas: extra data carried along, e.g. the induced maps on Gamma5
        :param source: the table this one is an image of, if any
        :return: GroupTable
        """
        elements = tuple(elements)
        generators = greedy_generators(elements, identity)
        is_abelian = all(a @ b == b @ a for i, a in enumerate(generators) for b in generators[i + 1:])
        structure, table_hash = None, None
        if is_abelian:
            structure = abelian_invariants([element_order(x, identity) for x in elements])
        else:
            index = {x: i for i, x in enumerate(elements)}
            digest = hashlib.sha256()
            for x in elements:
                for g in generators:
                    digest.update(index.get(x @ g, -1).to_bytes(4, 'big', signed=True))
            table_hash = digest.hexdigest()
        logger.info('group of order %d with %d generators, abelian %s', len(elements), len(generators), is_abelian)
        return cls(elements, identity, tuple(generators), is_abelian, structure, table_hash, tuple(gammas), source)

    @property
    def order(self) -> int:
        return len(self.elements)

    def structure_string(self) -> str:
        if self.is_abelian:
            return format_invariants(self.structure)
        return f'nonabelian of order {self.order} (table sha256 {self.table_hash[:16]})'

    def inverse(self, x):
        return power(x, element_order(x, self.identity) - 1, self.identity)

    def axiom_failures(self, rng: Random | None = None, samples: int = 20) -> list[str]:
        """
        Closure, identity and inverses are checked exactly; associativity on random triples.
        :return: list of str, empty when the table is a group
        """
        failures = []
        members = set(self.elements)
        if len(members) != self.order:
            failures.append('duplicate elements')
        if self.identity not in members:
            failures.append('identity missing')
        # every element is generated and right multiplication by generators stays inside
        if not members <= set(closure(self.generators, self.identity)):
            failures.append('elements outside the span of the generators')
        for x in self.elements:
            for g in self.generators:
                if x @ g not in members:
                    failures.append(f'{x} @ {g} leaves the set')
            if self.inverse(x) not in members:
                failures.append(f'no inverse for {x}')
        rng = rng or Random(0)
        for _ in range(samples if self.elements else 0):
            a, b, c = (rng.choice(self.elements) for _ in range(3))
            if (a @ b) @ c != a @ (b @ c):
                failures.append(f'({a} @ {b}) @ {c} != {a} @ ({b} @ {c})')
        return failures

    def restricted_to(self, names) -> 'GroupTable':
        """
        Image under the projection onto the named components; elements must provide restricted(names).
        The image keeps the gammas and remembers this table as its source.
        :param names: iterable of component names, e.g. ('f6', 'f5')
        :return: GroupTable
        """
        names = tuple(names)
        image = dict.fromkeys(x.restricted(names) for x in self.elements)
        return GroupTable.build(image, self.identity.restricted(names), self.gammas, source=self)

    def to_dict(self) -> dict:
        return {
            'order': self.order,
            'abelian': self.is_abelian,
            'structure': list(self.structure) if self.structure is not None else None,
            'structure_string': self.structure_string(),
            'generators': [g.to_dict() for g in self.generators],
        }
