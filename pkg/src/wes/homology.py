import logging

from src.abelian.group import FgAbGroup, Homomorphism, group_from_relations, kernel
from src.abelian.matrix import IntMatrix
from src.abelian.snf import IntegerSolver
from src.errors import NotAComplexError, ShapeMismatchError

logger = logging.getLogger(__name__)


def _homology_at(d_out: IntMatrix, d_in: IntMatrix) -> FgAbGroup:
    """
    ker d_out / im d_in at one spot of a complex of free groups
    :param d_out: IntMatrix, C_n -> C_{n-1}
    :param d_in: IntMatrix, C_{n+1} -> C_n
    :return: FgAbGroup
    """
    cycles, inclusion = kernel(Homomorphism(FgAbGroup.free(d_out.cols), FgAbGroup.free(d_out.rows), d_out))
    solver = IntegerSolver(inclusion.matrix)
    boundaries = []
    for column in d_in.columns():
        coefficients = solver.solve(column)
        assert coefficients is not None, 'boundaries are cycles once d d = 0 holds'
        boundaries.append(coefficients)
    group, _ = group_from_relations(IntMatrix.from_columns(boundaries, cycles.ngens))
    return group


def homology_of_complex(d4: IntMatrix, d5: IntMatrix, d6: IntMatrix) -> tuple[FgAbGroup, ...]:
    """
    Integral homology of 0 -> C6 -> C5 -> C4 -> C3 -> 0, the cellular chain complex of a 2-connected
    6-dimensional complex with the cells below dimension 3 dropped
    :param d4: IntMatrix, c3 x c4
    :param d5: IntMatrix, c4 x c5
    :param d6: IntMatrix, c5 x c6
    :return: (H3, H4, H5, H6)
    """
    if d4.cols != d5.rows or d5.cols != d6.rows:
        raise ShapeMismatchError(f'differentials {d4.shape}, {d5.shape}, {d6.shape} do not compose')
    for name, product in (('d4 d5', d4 @ d5), ('d5 d6', d5 @ d6)):
        if not product.is_zero():
            raise NotAComplexError(f'not a chain complex: {name} = {product} is not zero')

    c3, c6 = d4.rows, d6.cols
    groups = (
        _homology_at(IntMatrix.zeros(0, c3), d4),
        _homology_at(d4, d5),
        _homology_at(d5, d6),
        _homology_at(d6, IntMatrix.zeros(c6, 0)),
    )
    logger.info('homology H3..H6 = %s', ', '.join(str(g) for g in groups))
    return groups
