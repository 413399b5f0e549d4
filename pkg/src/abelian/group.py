"""
Finitely generated abelian groups in invariant-factor form, their elements and homomorphisms.

Generator order is a frozen contract: torsion generators g_1 .. g_t in the order of the invariant factors
d_1 | d_2 | ... | d_t, then the free generators. Every matrix handed in or out is read against it.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from math import gcd, lcm, prod

from src.abelian.matrix import IntMatrix
from src.abelian.snf import IntegerSolver, snf
from src.errors import InvalidGroupError, NotWellDefinedError, ShapeMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FgAbGroup:
    """Z_{d_1} + ... + Z_{d_t} + Z^rank with d_1 | d_2 | ... | d_t and every d_i >= 2"""
    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, 'torsion', tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise InvalidGroupError(f'negative free rank {self.rank}')
        for d in self.torsion:
            if d < 2:
                raise InvalidGroupError(f'invariant factor {d} is not >= 2')
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise InvalidGroupError(f'invariant factors {list(self.torsion)} break the chain at {d} | {e}')

    @classmethod
    def free(cls, rank: int) -> 'FgAbGroup':
        return cls(rank, ())

    @classmethod
    def cyclic(cls, m: int) -> 'FgAbGroup':
        """Z_m, with Z_0 = Z and Z_1 = 0"""
        if m == 0:
            return cls(1, ())
        return cls(0, (abs(m),)) if abs(m) > 1 else cls()

    @property
    def ngens(self) -> int:
        return len(self.torsion) + self.rank

    @property
    def moduli(self) -> tuple[int, ...]:
        """Order of each canonical generator, 0 for free generators"""
        return self.torsion + (0,) * self.rank

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.torsion) if self.is_finite else None

    def relations(self) -> IntMatrix:
        """Relation matrix of the canonical presentation: one column d_i * g_i per torsion generator"""
        return IntMatrix.diagonal(self.torsion, rows=self.ngens, cols=len(self.torsion))

    def element(self, coords) -> 'Element':
        return Element(self, tuple(coords))

    def zero(self) -> 'Element':
        return Element(self, (0,) * self.ngens)

    def generator(self, i: int) -> 'Element':
        return Element(self, tuple(int(i == k) for k in range(self.ngens)))

    def elements(self):
        """
        Every element of a finite group, in lexicographic coordinate order
        :return: generator of Element
        """
        if not self.is_finite:
            raise InvalidGroupError(f'{self} is infinite')
        for coords in product(*(range(d) for d in self.torsion)):
            yield Element(self, coords)

    def reduce(self, coords) -> tuple[int, ...]:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise ShapeMismatchError(f'{len(coords)} coordinates for {self} with {self.ngens} generators')
        return tuple(c % m if m else c for c, m in zip(coords, self.moduli))

    def __str__(self) -> str:
        parts = [f'Z_{d}' for d in self.torsion]
        if self.rank == 1:
            parts.append('Z')
        elif self.rank > 1:
            parts.append(f'Z^{self.rank}')
        return ' + '.join(parts) if parts else '0'

    def to_dict(self) -> dict:
        return {'rank': self.rank, 'torsion': list(self.torsion)}


@dataclass(frozen=True)
class Element:
    """An element in canonical coordinates, torsion coordinates always stored reduced"""
    group: FgAbGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'coords', self.group.reduce(self.coords))

    def __add__(self, other: 'Element') -> 'Element':
        if other.group != self.group:
            raise ShapeMismatchError(f'cannot add elements of {self.group} and {other.group}')
        return Element(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> 'Element':
        return Element(self.group, tuple(-a for a in self.coords))

    def __sub__(self, other: 'Element') -> 'Element':
        return self + (-other)

    def __rmul__(self, k: int) -> 'Element':
        return Element(self.group, tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self) -> int:
        """Order of the element, 0 when it has infinite order"""
        n = 1
        for c, m in zip(self.coords, self.group.moduli):
            if m == 0 and c:
                return 0
            if m:
                n = lcm(n, m // gcd(c, m))
        return n

    def __str__(self) -> str:
        return str(list(self.coords))


@dataclass(frozen=True)
class Homomorphism:
    """
    A homomorphism given by its matrix: column j is the image of source generator j in target coordinates.
    Construction reduces torsion rows and rejects matrices that do not respect the source relations.
    """
    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self) -> None:
        m = self.matrix
        if m.shape != (self.target.ngens, self.source.ngens):
            raise ShapeMismatchError(
                f'matrix is {m.rows}x{m.cols}, a map {self.source} -> {self.target} needs '
                f'{self.target.ngens}x{self.source.ngens}'
            )
        reduced = IntMatrix.from_rows((self.target.reduce(col) for col in m.columns()), m.rows).transpose() \
            if m.cols else m
        for j, d in enumerate(self.source.torsion):
            image = self.target.reduce(d * x for x in reduced.column(j))
            if any(image):
                raise NotWellDefinedError(
                    f'generator {j} of {self.source} has order {d} but {d} times its image is {list(image)}'
                )
        object.__setattr__(self, 'matrix', reduced)

    @classmethod
    def from_rows(cls, source: FgAbGroup, target: FgAbGroup, rows) -> 'Homomorphism':
        return cls(source, target, IntMatrix.from_rows(rows, source.ngens))

    @classmethod
    def from_images(cls, source: FgAbGroup, target: FgAbGroup, images) -> 'Homomorphism':
        """
        :param images: one coordinate vector (or Element) per source generator
        :return: Homomorphism
        """
        images = [img.coords if isinstance(img, Element) else tuple(img) for img in images]
        return cls(source, target, IntMatrix.from_columns(images, target.ngens))

    def __call__(self, x: Element) -> Element:
        if x.group != self.source:
            raise ShapeMismatchError(f'{x.group} is not the source {self.source}')
        return Element(self.target, self.matrix.apply(x.coords))

    def __matmul__(self, other: 'Homomorphism') -> 'Homomorphism':
        return compose(self, other)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def image_of_generator(self, j: int) -> Element:
        return Element(self.target, self.matrix.column(j))

    def sort_key(self) -> tuple[int, ...]:
        return self.matrix.entries


def identity(group: FgAbGroup) -> Homomorphism:
    return Homomorphism(group, group, IntMatrix.identity(group.ngens))


def zero_map(source: FgAbGroup, target: FgAbGroup) -> Homomorphism:
    return Homomorphism(source, target, IntMatrix.zeros(target.ngens, source.ngens))


def multiplication(group: FgAbGroup, k: int) -> Homomorphism:
    """Multiplication by k on the group"""
    return Homomorphism(group, group, IntMatrix.diagonal([k] * group.ngens))


def compose(g: Homomorphism, f: Homomorphism) -> Homomorphism:
    """
    g after f
    :param g: Homomorphism, B -> C
    :param f: Homomorphism, A -> B
    :return: Homomorphism, A -> C
    """
    if f.target != g.source:
        raise ShapeMismatchError(f'cannot compose: {f.target} is not {g.source}')
    return Homomorphism(f.source, g.target, g.matrix @ f.matrix)


@dataclass(frozen=True)
class Quotient:
    """
    Canonical form of Z^n / column-span(R).
    projection takes ambient coordinates to canonical ones; section gives ambient coordinates of each
    canonical generator, so projection * section is the identity on the quotient.
    """
    group: FgAbGroup
    projection: IntMatrix
    section: IntMatrix
    ambient: int = field(default=0)

    def project(self, vector) -> Element:
        return Element(self.group, self.projection.apply(vector))

    def lift(self, x: Element) -> tuple[int, ...]:
        return self.section.apply(x.coords)

    def projection_map(self) -> Homomorphism:
        return Homomorphism(FgAbGroup.free(self.ambient), self.group, self.projection)


def quotient_by_relations(r: IntMatrix) -> Quotient:
    """
    Canonicalize a presentation
    :param r: IntMatrix, one row per ambient free generator, one column per relation
    :return: Quotient
    """
    result = snf(r)
    diagonal = result.diagonal + (0,) * (r.rows - len(result.diagonal))
    kept = [k for k, d in enumerate(diagonal) if d != 1]
    torsion = tuple(diagonal[k] for k in kept if diagonal[k] != 0)
    rank = sum(1 for k in kept if diagonal[k] == 0)
    group = FgAbGroup(rank, torsion)
    projection = IntMatrix.from_rows(
        ([x % diagonal[k] for x in result.U.row(k)] if diagonal[k] else result.U.row(k) for k in kept),
        r.rows
    )
    section = result.U_inv.select_columns(kept)
    logger.debug('presentation with %d generators and %d relations is %s', r.rows, r.cols, group)
    return Quotient(group, projection, section, r.rows)


def group_from_relations(r: IntMatrix) -> tuple[FgAbGroup, Homomorphism]:
    """
    :param r: IntMatrix, relations as columns over r.rows free generators
    :return: (canonical group, projection from the ambient free group)
    """
    q = quotient_by_relations(r)
    return q.group, q.projection_map()


def cokernel_quotient(f: Homomorphism) -> Quotient:
    """The cokernel presented on the target's generators: target relations next to f's columns"""
    return quotient_by_relations(f.target.relations().hstack(f.matrix))


def cokernel(f: Homomorphism) -> tuple[FgAbGroup, Homomorphism]:
    q = cokernel_quotient(f)
    return q.group, Homomorphism(f.target, q.group, q.projection)


def kernel(f: Homomorphism) -> tuple[FgAbGroup, Homomorphism]:
    """
    Kernel of f with its inclusion into the source
    :param f: Homomorphism, A -> B
    :return: (K, inclusion K -> A)
    """
    a, b = f.source, f.target
    # lattice L of lifts x with f(x) zero in B: kernel of [M | B-relations], first block of coordinates
    stacked = f.matrix.hstack(b.relations())
    lifts = [v[:a.ngens] for v in IntegerSolver(stacked).kernel_basis()]
    spanning = IntMatrix.from_columns(lifts, a.ngens)

    # a basis of L from the SNF of its spanning set
    span = snf(spanning)
    basis = IntMatrix.from_columns(
        ([span.D[k, k] * x for x in span.U_inv.column(k)] for k in range(span.rank)), a.ngens
    )
    solver = IntegerSolver(basis)
    relation_columns = []
    for col in a.relations().columns():
        coefficients = solver.solve(col)
        assert coefficients is not None, 'source relations must lie in the lattice of kernel lifts'
        relation_columns.append(coefficients)
    q = quotient_by_relations(IntMatrix.from_columns(relation_columns, basis.cols))
    inclusion = Homomorphism(q.group, a, basis @ q.section)
    return q.group, inclusion


def solve_preimage(f: Homomorphism, y: Element) -> Element | None:
    """
    Some x with f(x) == y
    :return: Element of the source, or None if y is not in the image
    """
    x = IntegerSolver(f.matrix.hstack(f.target.relations())).solve(y.coords)
    return None if x is None else Element(f.source, x[:f.source.ngens])


def inverse(f: Homomorphism) -> Homomorphism | None:
    """
    Inverse of an endomorphism, found by solving f(x_i) = g_i for every generator
    :param f: Homomorphism, A -> A
    :return: Homomorphism, or None if f is not bijective
    """
    if f.source != f.target:
        raise ShapeMismatchError(f'{f.source} -> {f.target} is not an endomorphism')
    group = f.source
    solver = IntegerSolver(f.matrix.hstack(group.relations()))
    images = []
    for i in range(group.ngens):
        x = solver.solve(group.generator(i).coords)
        if x is None:
            return None
        images.append(x[:group.ngens])
    # surjective endomorphisms of finitely generated abelian groups are bijective
    try:
        g = Homomorphism.from_images(group, group, images)
    except NotWellDefinedError:
        return None
    if compose(g, f) != identity(group):
        return None
    return g


def is_automorphism(f: Homomorphism) -> bool:
    return inverse(f) is not None
