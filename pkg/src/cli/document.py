"""
Reading input documents. A document is a JSON object:

    {
      "H3": {"rank": 0, "torsion": [3]},  "H4": ...,  "H5": ...,  "H6": ...,
      "b6": [[1], [0]],          rows: Gamma5 block generators, columns: H6 generators
      "pi5_class": [[1]],        one vector over coker b6 per torsion factor of H5
      "chain_complex": {"ranks": [c3, c4, c5, c6], "d4": ..., "d5": ..., "d6": ...}
    }

Torsion lists must already be divisibility chains: the coordinates of b6 and pi5_class refer to them.
"""
import json
import logging

from src.abelian.group import FgAbGroup
from src.abelian.matrix import IntMatrix
from src.cli.constants import GROUP_NAMES
from src.errors import DocumentError, HypothesisViolationError, WesError
from src.wes.model import WesData

logger = logging.getLogger(__name__)


def load_document(path: str) -> dict:
    try:
        with open(path, encoding='utf-8') as f:
            document = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f'cannot read {path}: {exc}') from exc
    if not isinstance(document, dict):
        raise DocumentError(f'{path}: the document must be a JSON object')
    return document


def _integers(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise DocumentError(f'{what} must be a list of integers, got {value!r}')
    return value


def _matrix(value, what: str) -> list[list[int]]:
    if not isinstance(value, list):
        raise DocumentError(f'{what} must be a list of rows, got {value!r}')
    return [_integers(row, f'a row of {what}') for row in value]


def parse_group(value, name: str) -> FgAbGroup:
    """
    :param value: {"rank": int, "torsion": [int, ...]}
    :param name: str, used in messages
    :return: FgAbGroup
    """
    if not isinstance(value, dict):
        raise DocumentError(f'{name} must be an object with rank and torsion, got {value!r}')
    rank = value.get('rank', 0)
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise DocumentError(f'{name}.rank must be an integer, got {rank!r}')
    torsion = _integers(value.get('torsion', []), f'{name}.torsion')
    try:
        return FgAbGroup(rank, tuple(torsion))
    except WesError as exc:
        raise DocumentError(f'{name}: {exc}') from exc


def parse_wes(document: dict) -> WesData:
    """
    Build WesData from a parsed document. A missing b6 is the zero map and a missing pi5_class the split class;
    a null in either place is a hole left by the homology template and is rejected.
    :param document: dict
    :return: WesData
    """
    missing = [name for name in GROUP_NAMES if name not in document]
    if missing:
        raise DocumentError(f'missing groups: {", ".join(missing)}')
    h3, h4, h5, h6 = (parse_group(document[name], name) for name in GROUP_NAMES)

    b6 = document.get('b6')
    if b6 is None and 'b6' in document:
        raise DocumentError('b6 is still a hole: fill in the matrix of H6 -> Gamma5')
    b6_rows = None if b6 is None else _matrix(b6, 'b6')
    vectors = document.get('pi5_class')
    if vectors is None and 'pi5_class' in document:
        raise DocumentError('pi5_class is still a hole: fill in one vector per torsion factor of H5')
    pi5_vectors = None if vectors is None else _matrix(vectors, 'pi5_class')

    try:
        w = WesData.from_blocks(h3, h4, h5, h6, b6_rows=b6_rows, pi5_vectors=pi5_vectors)
    except HypothesisViolationError:
        raise
    except WesError as exc:
        raise DocumentError(str(exc)) from exc
    logger.info('parsed data with Gamma5 = %s and coker b6 = %s', w.gamma5.group, w.coker_b6)
    return w


def parse_chain_complex(document: dict) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    :param document: dict with a chain_complex block; a missing or null differential is zero
    :return: (d4, d5, d6)
    """
    block = document.get('chain_complex')
    if not isinstance(block, dict):
        raise DocumentError('the document has no chain_complex object')
    ranks = _integers(block.get('ranks'), 'chain_complex.ranks')
    if len(ranks) != 4 or any(c < 0 for c in ranks):
        raise DocumentError(f'chain_complex.ranks must be four cell counts [c3, c4, c5, c6], got {ranks}')
    matrices = []
    for name, (rows, cols) in (('d4', ranks[0:2]), ('d5', ranks[1:3]), ('d6', ranks[2:4])):
        value = block.get(name)
        if value is None:
            matrices.append(IntMatrix.zeros(rows, cols))
            continue
        try:
            m = IntMatrix.from_rows(_matrix(value, name), cols)
        except WesError as exc:
            raise DocumentError(f'{name}: {exc}') from exc
        if m.shape != (rows, cols):
            raise DocumentError(f'{name} is {m.rows}x{m.cols}, the ranks ask for {rows}x{cols}')
        matrices.append(m)
    return tuple(matrices)


def template(groups: tuple[FgAbGroup, ...]) -> dict:
    """A document for the given H3 .. H6 with b6 and pi5_class left as holes"""
    document = {name: group.to_dict() for name, group in zip(GROUP_NAMES, groups)}
    document['b6'] = None
    document['pi5_class'] = None
    return document
