"""
Ready-made WesData: the two families worked out by hand in the literature, the all-zero data and a random
generator of small valid instances.
"""
from math import prod
from random import Random

from src.abelian.automorphisms import aut_candidates
from src.abelian.group import FgAbGroup
from src.homalg.ext import extension_group_from_class
from src.wes.model import WesData, gamma5_blocks

Z = FgAbGroup.free(1)

SMALL_H3 = (
    FgAbGroup(), FgAbGroup.cyclic(3), FgAbGroup.cyclic(5), FgAbGroup.cyclic(9), FgAbGroup.cyclic(15),
    FgAbGroup(0, (3, 3)),
)
SMALL_H4 = (
    FgAbGroup(), FgAbGroup.cyclic(2), FgAbGroup.cyclic(4), FgAbGroup.cyclic(6), FgAbGroup.cyclic(16),
    FgAbGroup(0, (2, 2)), FgAbGroup(0, (2, 4)), FgAbGroup(0, (2, 6)),
)
SMALL_H5 = (
    FgAbGroup(), FgAbGroup.cyclic(2), FgAbGroup.cyclic(3), FgAbGroup.cyclic(4), FgAbGroup.cyclic(6),
    FgAbGroup.cyclic(8), FgAbGroup.cyclic(9), FgAbGroup.cyclic(16),
    FgAbGroup(0, (2, 2)), FgAbGroup(0, (2, 4)), FgAbGroup(0, (2, 6)), FgAbGroup(0, (3, 3)),
)
SMALL_H6 = (FgAbGroup(), Z)


def units_instance(m: int, n: int = 3, p: int = 5) -> WesData:
    """
    H6 = Z, H5 = Z_m, H4 = Z_p, H3 = Z_n with n, p odd. Gamma5 vanishes, so pi5 = H5 and every tuple of
    automorphisms is a Gamma-automorphism.
    """
    return WesData.from_blocks(FgAbGroup.cyclic(n), FgAbGroup.cyclic(p), FgAbGroup.cyclic(m), Z)


def klein_instance(class_value: int, n: int = 3) -> WesData:
    """
    H6 = Z, H5 = Z_8, H4 = Z_2 + Z_2, H3 = Z_n with b6(1) = (1, 0), so coker b6 = Z_2 and the class of pi5 in
    Ext(Z_8, Z_2) = Z_2 is class_value
    """
    return WesData.from_blocks(
        FgAbGroup.cyclic(n), FgAbGroup(0, (2, 2)), FgAbGroup.cyclic(8), Z,
        b6_rows=[[1], [0]], pi5_vectors=[[class_value]],
    )


def zero_instance() -> WesData:
    zero = FgAbGroup()
    return WesData.from_blocks(zero, zero, zero, zero)


def random_instance(rng: Random, max_candidates: int = 2000, max_tuples: int = 6000,
                    split: bool = False) -> WesData:
    """
    A random valid instance over the small groups above, with random b6 and a random class, or the split class
    when split is set. Draws are repeated until the product of the automorphism candidate counts of H3 .. H6 is
    at most max_tuples and pi5 needs at most max_candidates candidates.
    :param rng: Random
    :param max_candidates: int
    :param max_tuples: int
    :param split: bool, draw the split class
    :return: WesData
    """
    while True:
        h3, h4, h5, h6 = (rng.choice(pool) for pool in (SMALL_H3, SMALL_H4, SMALL_H5, SMALL_H6))
        if prod(aut_candidates(group) for group in (h3, h4, h5, h6)) > max_tuples:
            continue
        g5 = gamma5_blocks(h3, h4)
        b6_rows = [[rng.randrange(m) for _ in range(h6.ngens)] for m in g5.block_moduli]
        w = WesData.from_blocks(h3, h4, h5, h6, b6_rows=b6_rows)
        coker = w.coker_b6
        vectors = None if split else [[rng.randrange(m) for m in coker.moduli] for _ in h5.torsion]
        w = WesData.from_blocks(h3, h4, h5, h6, b6_rows=b6_rows, pi5_vectors=vectors)
        pi5, _, _ = extension_group_from_class(w.pi5_class)
        if aut_candidates(pi5, 'pi5') <= max_candidates:
            return w
