import logging
from itertools import product
from math import gcd, prod

from src.abelian.group import FgAbGroup, Homomorphism, is_automorphism
from src.errors import BudgetExceededError, UnsupportedRankError

logger = logging.getLogger(__name__)


def _torsion_images(group: FgAbGroup, d: int) -> list[tuple[int, ...]]:
    """
    Torsion elements x with d * x = 0, the possible images of a generator of order d
    :param group: FgAbGroup
    :param d: int, order of the generator
    :return: list of coordinate tuples
    """
    axes = [range(0, e, e // gcd(e, d)) for e in group.torsion]
    return [coords + (0,) * group.rank for coords in product(*axes)]


def _free_images(group: FgAbGroup) -> list[tuple[int, ...]]:
    """Images of the free generator of a rank one group: plus or minus itself, shifted by torsion"""
    shifts = list(product(*(range(e) for e in group.torsion)))
    return [shift + (sign,) for sign in (-1, 1) for shift in shifts]


def _choices(group: FgAbGroup, name: str) -> list[list[tuple[int, ...]]]:
    if group.rank >= 2:
        raise UnsupportedRankError(f'aut({name}) is infinite: {group} has free rank {group.rank}')
    choices = [_torsion_images(group, d) for d in group.torsion]
    if group.rank == 1:
        choices.append(_free_images(group))
    return choices


def aut_candidates(group: FgAbGroup, name: str | None = None) -> int:
    """Number of candidate matrices aut_group screens for the group"""
    return prod(len(c) for c in _choices(group, name or str(group)))


def aut_group(group: FgAbGroup, budget: int, name: str | None = None) -> list[Homomorphism]:
    """
    Every automorphism of a group of free rank at most one
    :param group: FgAbGroup
    :param budget: int, largest number of candidate matrices allowed
    :param name: str, label used in error messages (H5, pi5, ...)
    :return: list of Homomorphism, sorted lexicographically by matrix entries
    """
    name = name or str(group)
    choices = _choices(group, name)
    candidates = prod(len(c) for c in choices)
    if candidates > budget:
        raise BudgetExceededError(name, candidates, budget)

    automorphisms = []
    for images in product(*choices):
        f = Homomorphism.from_images(group, group, images)
        if is_automorphism(f):
            automorphisms.append(f)
    automorphisms.sort(key=Homomorphism.sort_key)
    logger.info('aut(%s): %d automorphisms of %s from %d candidates', name, len(automorphisms), group, candidates)
    return automorphisms
