"""
Brute-force check of Gamma-automorphisms: build pi5 as a concrete group and search aut(pi5) for a middle map
closing the ladder

    H6 --b6--> Gamma5 --i--> pi5 --surj--> H5
    |f6        |gamma        |phi          |f5
    H6 --b6--> Gamma5 --i--> pi5 --surj--> H5

where i is coker b6 >-> pi5 after the projection Gamma5 ->> coker b6.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from src.abelian.automorphisms import aut_group
from src.abelian.group import Homomorphism, cokernel, compose
from src.gamma.enumerate import candidate_tuples
from src.homalg.ext import extension_group_from_class
from src.wes.model import GammaTuple, Verdict, WesData, b6_square_commutes, gamma_of, is_gamma_automorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MiddleMaps:
    """Gamma5 -> pi5 -> H5 and, for every automorphism phi of pi5, the pair (phi i, surj phi)"""
    into: Homomorphism
    surj: Homomorphism
    reachable: frozenset


@lru_cache(maxsize=32)
def middle_maps(w: WesData, budget: int) -> MiddleMaps:
    pi5, inj, surj = extension_group_from_class(w.pi5_class)
    _, projection = cokernel(w.b6)
    into = compose(inj, projection)
    automorphisms = aut_group(pi5, budget, 'pi5')
    reachable = frozenset((compose(phi, into), compose(surj, phi)) for phi in automorphisms)
    logger.debug('pi5 = %s with %d automorphisms, %d distinct boundary pairs', pi5, len(automorphisms), len(reachable))
    return MiddleMaps(into, surj, reachable)


def oracle_membership(w: WesData, t: GammaTuple, budget: int) -> Verdict:
    """
    Decide membership by looking for phi in aut(pi5) with phi i = i gamma and surj phi = f5 surj
    :param w: WesData
    :param t: GammaTuple
    :param budget: int, candidate budget for aut(pi5)
    :return: Verdict
    """
    gamma = gamma_of(w, t.f3, t.f4)
    if not b6_square_commutes(w, gamma, t.f6):
        return Verdict(False, 'b6 square does not commute')
    maps = middle_maps(w, budget)
    wanted = (compose(maps.into, gamma), compose(t.f5, maps.surj))
    if wanted in maps.reachable:
        return Verdict(True, 'some automorphism of pi5 closes the ladder')
    return Verdict(False, 'no automorphism of pi5 closes the ladder')


@dataclass(frozen=True)
class OracleReport:
    tuples: int
    agreements: int
    accepted_by_criterion: int
    accepted_by_oracle: int
    disagreements: tuple = field(default=())

    @property
    def agreed(self) -> bool:
        return not self.disagreements

    def __str__(self) -> str:
        lines = [
            f'oracle: {self.agreements} of {self.tuples} tuples agree '
            f'(criterion accepts {self.accepted_by_criterion}, oracle accepts {self.accepted_by_oracle})'
        ]
        lines += [f'  disagreement: {t} criterion={c} oracle={o}' for t, c, o in self.disagreements]
        return '\n'.join(lines)

    def to_dict(self) -> dict:
        return {
            'tuples': self.tuples,
            'agreements': self.agreements,
            'accepted_by_criterion': self.accepted_by_criterion,
            'accepted_by_oracle': self.accepted_by_oracle,
            'disagreements': [{'tuple': t.to_dict(), 'criterion': c, 'oracle': o} for t, c, o in self.disagreements],
        }


def oracle_compare(w: WesData, budget: int) -> OracleReport:
    """
    Run the Ext criterion and the oracle on every tuple of the automorphism product
    :param w: WesData, valid
    :param budget: int
    :return: OracleReport
    """
    tuples = candidate_tuples(w, budget)
    criterion_count = oracle_count = 0
    disagreements = []
    for t in tuples:
        by_criterion = bool(is_gamma_automorphism(w, t))
        by_oracle = bool(oracle_membership(w, t, budget))
        criterion_count += by_criterion
        oracle_count += by_oracle
        if by_criterion != by_oracle:
            logger.warning('criterion and oracle disagree on %s', t)
            disagreements.append((t, by_criterion, by_oracle))
    return OracleReport(
        tuples=len(tuples),
        agreements=len(tuples) - len(disagreements),
        accepted_by_criterion=criterion_count,
        accepted_by_oracle=oracle_count,
        disagreements=tuple(disagreements),
    )
