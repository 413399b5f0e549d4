"""
Ext^1(A, C) over the canonical diagonal resolution of A.

A class is stored as one element e_i of C per torsion invariant factor d_i of A. It is the cocycle sending
the i-th relation d_i g_i of the resolution to e_i, so only e_i mod d_i C matters. Free generators of A
contribute nothing.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

from src.abelian.group import (
    Element, FgAbGroup, Homomorphism, Quotient, quotient_by_relations, solve_preimage
)
from src.abelian.matrix import IntMatrix
from src.errors import NotWellDefinedError, ShapeMismatchError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1024)
def _mod_multiples(group: FgAbGroup, d: int) -> Quotient:
    """C / dC on the generators of C"""
    return quotient_by_relations(group.relations().hstack(IntMatrix.diagonal([d] * group.ngens)))


@lru_cache(maxsize=1024)
def _ext_quotient(a: FgAbGroup, c: FgAbGroup) -> Quotient:
    """Ext(A, C) presented on one copy of C's generators per torsion factor of A"""
    blocks = [c.relations().hstack(IntMatrix.diagonal([d] * c.ngens)) for d in a.torsion]
    return quotient_by_relations(IntMatrix.block_diagonal(*blocks))


def ext_group(a: FgAbGroup, c: FgAbGroup) -> FgAbGroup:
    """
    Ext^1(A, C) = sum over the torsion factors d_i of A of C / d_i C
    :param a: FgAbGroup, quotient end
    :param c: FgAbGroup, kernel end
    :return: FgAbGroup in canonical form
    """
    return _ext_quotient(a, c).group


@dataclass(frozen=True, eq=False)
class ExtClass:
    """
    A class in Ext^1(A, C). Two classes are equal when their coordinates agree modulo d_i C for every i,
    whatever representatives they were built from.
    """
    A: FgAbGroup
    C: FgAbGroup
    coords: tuple[Element, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'coords', tuple(self.coords))
        if len(self.coords) != len(self.A.torsion):
            raise ShapeMismatchError(
                f'{len(self.coords)} coordinates for Ext({self.A}, {self.C}), expected {len(self.A.torsion)}'
            )
        for x in self.coords:
            if x.group != self.C:
                raise ShapeMismatchError(f'coordinate {x} lives in {x.group}, not in {self.C}')

    @classmethod
    def from_vectors(cls, a: FgAbGroup, c: FgAbGroup, vectors) -> 'ExtClass':
        """
        :param vectors: one coordinate vector over C per torsion factor of A
        :return: ExtClass
        """
        return cls(a, c, tuple(c.element(v) for v in vectors))

    @classmethod
    def zero(cls, a: FgAbGroup, c: FgAbGroup) -> 'ExtClass':
        return cls(a, c, tuple(c.zero() for _ in a.torsion))

    @cached_property
    def normalized(self) -> tuple[Element, ...]:
        """Images of the coordinates in C / d_i C"""
        return tuple(_mod_multiples(self.C, d).project(x.coords) for d, x in zip(self.A.torsion, self.coords))

    def ext_coordinates(self) -> Element:
        """The class as an element of ext_group(A, C)"""
        ambient = tuple(v for x in self.coords for v in x.coords)
        return _ext_quotient(self.A, self.C).project(ambient)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.normalized)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtClass):
            return NotImplemented
        return (self.A, self.C) == (other.A, other.C) and self.normalized == other.normalized

    def __hash__(self) -> int:
        return hash((self.A, self.C, self.normalized))

    def to_lists(self) -> list[list[int]]:
        return [list(x.coords) for x in self.coords]

    def __str__(self) -> str:
        return str(self.to_lists())


def ext_pullback(f: Homomorphism, e: ExtClass, lift: IntMatrix | None = None) -> ExtClass:
    """
    f^* e for f: A' -> A. The integer matrix M of f lifts it to the free modules of the resolutions; on the
    relation modules the lift sends d'_j g'_j to sum_i (d'_j M_ij / d_i) d_i g_i, and the cocycle is
    precomposed with that.
    :param f: Homomorphism, A' -> A
    :param e: ExtClass over (A, C)
    :param lift: IntMatrix, another integer matrix reducing to f, defaults to f's own matrix
    :return: ExtClass over (A', C)
    """
    if f.target != e.A:
        raise ShapeMismatchError(f'cannot pull back a class over {e.A} along a map into {f.target}')
    m = f.matrix if lift is None else lift
    if lift is not None and Homomorphism(f.source, f.target, lift) != f:
        raise NotWellDefinedError(f'{lift} is not a lift of {f.matrix}')

    coords = []
    for j, d_new in enumerate(f.source.torsion):
        image = e.C.zero()
        for i, m_i in enumerate(f.target.moduli):
            scaled = d_new * m[i, j]
            if m_i == 0:
                assert scaled == 0, 'a torsion generator cannot reach a free coordinate'
                continue
            assert scaled % m_i == 0, 'a lift to the relation module always exists'
            image = image + (scaled // m_i) * e.coords[i]
        coords.append(image)
    return ExtClass(f.source, e.C, tuple(coords))


def ext_pushforward(g: Homomorphism, e: ExtClass) -> ExtClass:
    """
    g_* e for g: C -> C', applied to each coordinate
    :return: ExtClass over (A, C')
    """
    if g.source != e.C:
        raise ShapeMismatchError(f'cannot push a class over {e.C} along a map from {g.source}')
    return ExtClass(e.A, g.target, tuple(g(x) for x in e.coords))


def extension_group_from_class(e: ExtClass) -> tuple[FgAbGroup, Homomorphism, Homomorphism]:
    """
    The middle group of C >-> G ->> A for the class e, presented on the generators of C plus a lift a_i of
    every generator of A, with relations those of C and d_i a_i = e_i
    :param e: ExtClass over (A, C)
    :return: (G, inj: C -> G, surj: G -> A)
    """
    a, c = e.A, e.C
    n_c, n = c.ngens, c.ngens + a.ngens
    columns = [col + (0,) * a.ngens for col in c.relations().columns()]
    for i, d in enumerate(a.torsion):
        columns.append(tuple(-x for x in e.coords[i].coords) + tuple(d if k == i else 0 for k in range(a.ngens)))
    q = quotient_by_relations(IntMatrix.from_columns(columns, n))

    inj = Homomorphism(c, q.group, q.projection.select_columns(range(n_c)))
    surj = Homomorphism(q.group, a, q.section.select_rows(range(n_c, n)))
    logger.debug('class %s of Ext(%s, %s) has middle group %s', e, a, c, q.group)
    return q.group, inj, surj


def extension_class(inj: Homomorphism, surj: Homomorphism) -> ExtClass:
    """
    Class of an extension C >-> G ->> A: lift each torsion generator of A to G, multiply by its order and
    read the result back in C
    :param inj: Homomorphism, C -> G, injective
    :param surj: Homomorphism, G -> A, surjective with kernel the image of inj
    :return: ExtClass over (A, C)
    """
    if inj.target != surj.source:
        raise ShapeMismatchError(f'{inj.target} is not {surj.source}')
    a, c = surj.target, inj.source
    coords = []
    for i, d in enumerate(a.torsion):
        lifted = solve_preimage(surj, a.generator(i))
        assert lifted is not None, 'surj must be onto'
        back = solve_preimage(inj, d * lifted)
        assert back is not None, 'd_i times a lift lies in the kernel of surj'
        coords.append(back)
    return ExtClass(a, c, tuple(coords))


def ext_classes(a: FgAbGroup, c: FgAbGroup) -> list[ExtClass]:
    """One representative of every class in Ext^1(A, C), in lexicographic order of the C / d_i C coordinates"""
    axes = []
    for d in a.torsion:
        q = _mod_multiples(c, d)
        axes.append([c.element(q.lift(x)) for x in q.group.elements()])
    return [ExtClass(a, c, coords) for coords in product(*axes)]
