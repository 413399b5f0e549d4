"""
The Whitehead exact sequence of a 2-connected 6-dimensional complex, reduced to algebraic data:

    H6 --b6--> Gamma5 --> pi5 -->> H5,    Gamma5 = H4 (x) Z_2 + Lambda^2 H3

and the test deciding whether a tuple of homology automorphisms is a Gamma-automorphism.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

from src.abelian.group import (
    FgAbGroup, Homomorphism, cokernel, cokernel_quotient, compose, identity, inverse, is_automorphism,
    quotient_by_relations
)
from src.abelian.matrix import IntMatrix
from src.errors import (
    HypothesisViolationError, NotAutomorphismError, NotInducibleError, NotWellDefinedError, ShapeMismatchError,
    WesError
)
from src.homalg.ext import ExtClass, ext_pullback, ext_pushforward
from src.homalg.functors import lambda2, lambda2_map, tensor_z2, tensor_z2_map, tor_z2

logger = logging.getLogger(__name__)

COMPONENTS = ('f6', 'f5', 'f4', 'f3')


@dataclass(frozen=True)
class Gamma5:
    """
    Gamma5 in two coordinate systems. Block coordinates list the H4/2H4 generators, then the Lambda^2 H3
    generators; group is the canonical invariant-factor form of their direct sum. projection takes block
    coordinates to canonical ones and section goes back.
    """
    tensor: FgAbGroup
    wedge: FgAbGroup
    group: FgAbGroup
    projection: IntMatrix
    section: IntMatrix

    @property
    def block_moduli(self) -> tuple[int, ...]:
        return self.tensor.moduli + self.wedge.moduli

    @property
    def block_count(self) -> int:
        return len(self.block_moduli)

    def from_block(self, m: IntMatrix) -> IntMatrix:
        """Rewrite a matrix whose rows are block coordinates in canonical coordinates"""
        if m.rows != self.block_count:
            raise ShapeMismatchError(f'{m.rows} rows given, Gamma5 has {self.block_count} block generators')
        return self.projection @ m

    def to_block(self, m: IntMatrix) -> IntMatrix:
        return self.section @ m


@lru_cache(maxsize=1024)
def gamma5_blocks(h3: FgAbGroup, h4: FgAbGroup) -> Gamma5:
    """
    H4 (x) Z_2 + Lambda^2 H3 with both coordinate systems, without checking the hypothesis on H3
    :return: Gamma5
    """
    tensor, _ = tensor_z2(h4)
    wedge = lambda2(h3)
    moduli = tensor.moduli + wedge.moduli
    relations = IntMatrix.from_columns(
        ([m if k == i else 0 for k in range(len(moduli))] for i, m in enumerate(moduli) if m), len(moduli)
    )
    q = quotient_by_relations(relations)
    return Gamma5(tensor, wedge, q.group, q.projection, q.section)


def gamma5(h3: FgAbGroup, h4: FgAbGroup) -> FgAbGroup:
    """
    Gamma5 = H4 (x) Z_2 + H_2(H3; Z) in canonical form
    :param h3: FgAbGroup, must satisfy H3 (x) Z_2 = 0
    :param h4: FgAbGroup
    :return: FgAbGroup
    """
    if not tensor_z2(h3)[0].is_trivial:
        raise HypothesisViolationError(f'H3 ⊗ Z₂ ≠ 0: H3 = {h3} has free or even torsion part')
    return gamma5_blocks(h3, h4).group


@dataclass(frozen=True)
class WesData:
    """
    H3 .. H6, the boundary map b6: H6 -> Gamma5 and the class of pi5 in Ext(H5, coker b6).
    Construction does not check the standing hypotheses, validate does.
    """
    H3: FgAbGroup
    H4: FgAbGroup
    H5: FgAbGroup
    H6: FgAbGroup
    b6: Homomorphism
    pi5_class: ExtClass

    @classmethod
    def from_blocks(cls, h3: FgAbGroup, h4: FgAbGroup, h5: FgAbGroup, h6: FgAbGroup,
                    b6_rows=None, pi5_vectors=None) -> 'WesData':
        """
        Build the data from b6 in Gamma5 block coordinates and the class as vectors over coker b6
        :param b6_rows: one row per Gamma5 block generator, one column per H6 generator; None means zero
        :param pi5_vectors: one vector over coker b6 per torsion factor of H5; None means the split class
        :return: WesData
        :raises HypothesisViolationError: when H6 has torsion and the rows do not define b6 on it
        """
        g5 = gamma5_blocks(h3, h4)
        block = IntMatrix.zeros(g5.block_count, h6.ngens) if b6_rows is None \
            else IntMatrix.from_rows(b6_rows, h6.ngens)
        try:
            b6 = Homomorphism(h6, g5.group, g5.from_block(block))
        except NotWellDefinedError as exc:
            if h6.torsion:
                raise HypothesisViolationError(f'H6 must be torsion-free, got {h6}') from exc
            raise
        coker, _ = cokernel(b6)
        pi5_class = ExtClass.zero(h5, coker) if pi5_vectors is None else ExtClass.from_vectors(h5, coker, pi5_vectors)
        return cls(h3, h4, h5, h6, b6, pi5_class)

    @property
    def gamma5(self) -> Gamma5:
        return gamma5_blocks(self.H3, self.H4)

    @property
    def coker_b6(self) -> FgAbGroup:
        return cokernel(self.b6)[0]

    def groups(self) -> dict[str, FgAbGroup]:
        return {'H3': self.H3, 'H4': self.H4, 'H5': self.H5, 'H6': self.H6}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    reason: str = ''

    def __str__(self) -> str:
        return f'[pass] {self.name}' if self.passed else f'[FAIL] {self.name}: {self.reason}'


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        return '\n'.join(str(c) for c in self.checks)

    def to_dict(self) -> dict:
        return {
            'passed': self.passed,
            'checks': [{'name': c.name, 'passed': c.passed, 'reason': c.reason} for c in self.checks],
        }


def _check(name: str, condition, reason: str) -> Check:
    try:
        return Check(name, bool(condition()), reason)
    except WesError as exc:
        return Check(name, False, str(exc))


def validate(w: WesData) -> ValidationReport:
    """
    Check every standing hypothesis on the data. Never raises; failures are reported.
    :param w: WesData
    :return: ValidationReport
    """
    checks = [
        _check('H3 ⊗ Z₂ = 0', lambda: tensor_z2(w.H3)[0].is_trivial,
               f'H3 ⊗ Z₂ ≠ 0: H3 = {w.H3} has free or even torsion part'),
        _check('Tor(H3, Z₂) = 0', lambda: tor_z2(w.H3).is_trivial, f'H3 = {w.H3} has 2-torsion'),
        _check('H6 torsion-free', lambda: not w.H6.torsion, f'H6 must be torsion-free, got {w.H6}'),
        _check('b6: H6 -> Gamma5', lambda: w.b6.source == w.H6 and w.b6.target == w.gamma5.group,
               f'b6 is {w.b6.source} -> {w.b6.target}, expected {w.H6} -> {w.gamma5.group}'),
        _check('pi5 class in Ext(H5, coker b6)', lambda: (w.pi5_class.A, w.pi5_class.C) == (w.H5, w.coker_b6),
               f'class lives in Ext({w.pi5_class.A}, {w.pi5_class.C})'),
    ]
    report = ValidationReport(tuple(checks))
    for failure in report.failures:
        logger.info('validation failed: %s', failure)
    return report


@lru_cache(maxsize=256)
def _validation(w: WesData) -> ValidationReport:
    return validate(w)


def require_valid(w: WesData) -> None:
    report = _validation(w)
    if not report.passed:
        raise HypothesisViolationError('; '.join(c.reason for c in report.failures))


@dataclass(frozen=True)
class GammaTuple:
    """Automorphisms f3 .. f6 of H3 .. H6. Composition and inverses are componentwise."""
    f3: Homomorphism
    f4: Homomorphism
    f5: Homomorphism
    f6: Homomorphism

    @classmethod
    def identity(cls, w: WesData) -> 'GammaTuple':
        return cls(identity(w.H3), identity(w.H4), identity(w.H5), identity(w.H6))

    def component(self, name: str) -> Homomorphism:
        return getattr(self, name)

    def __matmul__(self, other: 'GammaTuple') -> 'GammaTuple':
        return GammaTuple(*(compose(self.component(n), other.component(n)) for n in ('f3', 'f4', 'f5', 'f6')))

    def inverse(self) -> 'GammaTuple':
        parts = [inverse(self.component(n)) for n in ('f3', 'f4', 'f5', 'f6')]
        if any(p is None for p in parts):
            raise NotAutomorphismError(f'{self} has a non-invertible component')
        return GammaTuple(*parts)

    def restricted(self, names) -> 'GammaTuple':
        """Keep the named components, replace the others by identities"""
        return GammaTuple(*(
            self.component(n) if n in names else identity(self.component(n).source)
            for n in ('f3', 'f4', 'f5', 'f6')
        ))

    def sort_key(self) -> tuple:
        return tuple(self.component(n).sort_key() for n in COMPONENTS)

    def to_dict(self) -> dict:
        return {n: self.component(n).matrix.to_lists() for n in COMPONENTS}

    def __str__(self) -> str:
        return ' '.join(f'{n}={self.component(n).matrix}' for n in COMPONENTS)


@lru_cache(maxsize=4096)
def _automorphism(f: Homomorphism, name: str) -> Homomorphism:
    if not is_automorphism(f):
        raise NotAutomorphismError(f'{name} = {f.matrix} is not an automorphism of {f.source}')
    return f


@lru_cache(maxsize=4096)
def _gamma_of(h3: FgAbGroup, h4: FgAbGroup, f3: Homomorphism, f4: Homomorphism) -> Homomorphism:
    g5 = gamma5_blocks(h3, h4)
    block = IntMatrix.block_diagonal(tensor_z2_map(f4).matrix, lambda2_map(f3).matrix)
    return Homomorphism(g5.group, g5.group, g5.projection @ block @ g5.section)


def gamma_of(w: WesData, f3: Homomorphism, f4: Homomorphism) -> Homomorphism:
    """
    gamma = f4 (x) id + Lambda^2 f3, in canonical Gamma5 coordinates
    :param w: WesData
    :param f3: Homomorphism, automorphism of H3
    :param f4: Homomorphism, automorphism of H4
    :return: Homomorphism, automorphism of Gamma5
    """
    if f3.source != w.H3 or f4.source != w.H4:
        raise ShapeMismatchError(f'f3, f4 act on {f3.source}, {f4.source}, expected {w.H3}, {w.H4}')
    return _gamma_of(w.H3, w.H4, _automorphism(f3, 'f3'), _automorphism(f4, 'f4'))


@lru_cache(maxsize=4096)
def gamma_tilde(w: WesData, gamma: Homomorphism) -> Homomorphism:
    """
    The automorphism of coker b6 induced by gamma
    :param w: WesData
    :param gamma: Homomorphism, automorphism of Gamma5 preserving the image of b6
    :return: Homomorphism, coker b6 -> coker b6
    """
    q = cokernel_quotient(w.b6)
    for j in range(w.b6.source.ngens):
        moved = q.project(gamma(w.b6.image_of_generator(j)).coords)
        if not moved.is_zero():
            raise NotInducibleError(f'gamma moves b6 generator {j} out of the image of b6')
    return Homomorphism(q.group, q.group, q.projection @ gamma.matrix @ q.section)


@dataclass(frozen=True)
class Verdict:
    """A membership decision with the reason behind it; truthy when accepted"""
    accepted: bool
    reason: str

    def __bool__(self) -> bool:
        return self.accepted


def b6_square_commutes(w: WesData, gamma: Homomorphism, f6: Homomorphism) -> bool:
    return compose(gamma, w.b6) == compose(w.b6, f6)


def is_gamma_automorphism(w: WesData, t: GammaTuple) -> Verdict:
    """
    Decide membership through the b6 square and the Ext criterion f5^*[pi5] = gamma~_*[pi5]
    :param w: WesData, must pass validate, HypothesisViolationError otherwise
    :param t: GammaTuple
    :return: Verdict
    """
    require_valid(w)
    for name, group in (('f5', w.H5), ('f6', w.H6)):
        f = t.component(name)
        if f.source != group or f.target != group:
            raise ShapeMismatchError(f'{name} acts on {f.source}, expected {group}')
        _automorphism(f, name)

    gamma = gamma_of(w, t.f3, t.f4)
    if not b6_square_commutes(w, gamma, t.f6):
        return Verdict(False, 'b6 square does not commute: gamma b6 != b6 f6')
    induced = gamma_tilde(w, gamma)
    pulled = ext_pullback(t.f5, w.pi5_class)
    pushed = ext_pushforward(induced, w.pi5_class)
    if pulled != pushed:
        return Verdict(False, f'f5^* [pi5] = {pulled} differs from gamma~_* [pi5] = {pushed}')
    return Verdict(True, 'b6 square commutes and f5^* [pi5] = gamma~_* [pi5]')
