import logging
from itertools import product
from multiprocessing import Pool

from src.abelian.automorphisms import aut_group
from src.abelian.group import identity
from src.wes.model import GammaTuple, WesData, gamma_of, is_gamma_automorphism, require_valid
from src.gamma.table import GroupTable, format_invariants

logger = logging.getLogger(__name__)

GAMMA_S_COMPONENTS = ('f6', 'f5')


def candidate_tuples(w: WesData, budget: int) -> list[GammaTuple]:
    """
    The full product aut(H6) x aut(H5) x aut(H4) x aut(H3), lexicographic in that order
    :param w: WesData
    :param budget: int, candidate budget for each automorphism enumeration
    :return: list of GammaTuple
    """
    auts = [aut_group(group, budget, name) for name, group in (('H6', w.H6), ('H5', w.H5), ('H4', w.H4), ('H3', w.H3))]
    return [GammaTuple(f3=f3, f4=f4, f5=f5, f6=f6) for f6, f5, f4, f3 in product(*auts)]


def _screen(job: tuple[WesData, list[GammaTuple]]) -> list[bool]:
    w, tuples = job
    return [bool(is_gamma_automorphism(w, t)) for t in tuples]


def screen_tuples(w: WesData, tuples: list[GammaTuple], workers: int = 1) -> list[bool]:
    """
    Membership of every tuple, in input order. With several workers the list is cut into contiguous chunks
    and the answers are put back in order, so the result does not depend on the worker count.
    """
    if workers <= 1 or len(tuples) < 2 * workers:
        return _screen((w, tuples))
    size = -(-len(tuples) // workers)
    jobs = [(w, tuples[k:k + size]) for k in range(0, len(tuples), size)]
    with Pool(workers) as pool:
        chunks = pool.map(_screen, jobs)
    return [verdict for chunk in chunks for verdict in chunk]


def gamma_tuple_group(w: WesData, budget: int, workers: int = 1) -> GroupTable:
    """
    Every tuple (f3, f4, f5, f6) that is a Gamma-automorphism of the data
    :param w: WesData, valid
    :param budget: int, candidate budget for each automorphism enumeration
    :param workers: int, processes screening the tuples
    :return: GroupTable of GammaTuple, with the distinct induced maps on Gamma5 as gammas
    """
    require_valid(w)
    tuples = candidate_tuples(w, budget)
    verdicts = screen_tuples(w, tuples, workers)
    accepted = [t for t, ok in zip(tuples, verdicts) if ok]
    logger.info('accepted %d of %d tuples', len(accepted), len(tuples))

    gammas = dict.fromkeys(gamma_of(w, t.f3, t.f4) for t in accepted)
    return GroupTable.build(accepted, GammaTuple.identity(w), gammas)


def gamma_s_group(w: WesData, budget: int, workers: int = 1) -> GroupTable:
    """
    The group GammaS(X), also known as GammaG(X): the pairs (f6, f5) that extend to a Gamma-automorphism.
    The tuple group it is the image of stays available as the source of the returned table.
    :param w: WesData, valid
    :param budget: int, candidate budget for each automorphism enumeration
    :param workers: int, processes screening the tuples
    :return: GroupTable of GammaTuple with f3 and f4 set to identities
    """
    return gamma_tuple_group(w, budget, workers).restricted_to(GAMMA_S_COMPONENTS)


def unit_group_notes(w: WesData) -> list[str]:
    """
    One note per cyclic H_i = Z_m whose automorphism group, the units mod m, is not cyclic
    :param w: WesData
    :return: list of str
    """
    notes = []
    for name, group in w.groups().items():
        if group.rank or len(group.torsion) != 1:
            continue
        m = group.torsion[0]
        units = aut_group(group, m, name)
        table = GroupTable.build(units, identity(group))
        if len(table.structure) > 1:
            notes.append(
                f'aut({name}) = aut(Z_{m}) is {format_invariants(table.structure)}, not cyclic: '
                f'the units mod {m} have exponent {max(table.structure)}, so aut({name}) is not Z_{table.order}'
            )
    return notes
