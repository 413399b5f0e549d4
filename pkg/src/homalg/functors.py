"""
Functors on finitely generated abelian groups: A/2A, the 2-torsion A[2] and the exterior square.

The exterior square is used as the second integral homology H_2(A; Z) of the abelian group A: for abelian
groups the two agree naturally, so lambda2 doubles as h2_integral.

Closed forms work on the canonical decomposition A = Z_{d_1} + ... + Z_{d_t} + Z^r. The *_presentation
functions compute the same groups the long way, from generators and relations, and exist as independent
cross-checks.
"""
from functools import lru_cache
from itertools import combinations

from src.abelian.group import FgAbGroup, Homomorphism, group_from_relations
from src.abelian.matrix import IntMatrix


def _survivors_mod2(group: FgAbGroup) -> list[int]:
    """Generators that survive in A/2A: even torsion and free"""
    return [i for i, m in enumerate(group.moduli) if m % 2 == 0]


@lru_cache(maxsize=1024)
def tensor_z2(group: FgAbGroup) -> tuple[FgAbGroup, Homomorphism]:
    """
    A (x) Z_2 = A/2A with the reduction map
    :param group: FgAbGroup
    :return: (A/2A, projection A -> A/2A)
    """
    survivors = _survivors_mod2(group)
    quotient = FgAbGroup(0, (2,) * len(survivors))
    rows = [[int(i == s) for i in range(group.ngens)] for s in survivors]
    return quotient, Homomorphism.from_rows(group, quotient, rows)


@lru_cache(maxsize=4096)
def tensor_z2_map(f: Homomorphism) -> Homomorphism:
    """
    f (x) id_{Z_2}
    :param f: Homomorphism, A -> B
    :return: Homomorphism, A/2A -> B/2B
    """
    source, _ = tensor_z2(f.source)
    target, _ = tensor_z2(f.target)
    rows = [[f.matrix[i, j] % 2 for j in _survivors_mod2(f.source)] for i in _survivors_mod2(f.target)]
    return Homomorphism.from_rows(source, target, rows)


def tor_z2(group: FgAbGroup) -> FgAbGroup:
    """Tor(A, Z_2) = A[2]: one Z_2 per even invariant factor"""
    return FgAbGroup(0, (2,) * sum(1 for d in group.torsion if d % 2 == 0))


def tor_z2_inclusion(group: FgAbGroup) -> Homomorphism:
    """The inclusion A[2] -> A, generator k going to (d_i / 2) g_i for the k-th even factor d_i"""
    evens = [i for i, d in enumerate(group.torsion) if d % 2 == 0]
    images = [[group.torsion[i] // 2 if k == i else 0 for k in range(group.ngens)] for i in evens]
    return Homomorphism.from_images(tor_z2(group), group, images)


def lambda2_pairs(group: FgAbGroup) -> list[tuple[int, int]]:
    """Canonical generators of the exterior square: pairs (i, j), i < j, lexicographic"""
    return list(combinations(range(group.ngens), 2))


@lru_cache(maxsize=1024)
def lambda2(group: FgAbGroup) -> FgAbGroup:
    """
    Exterior square, which is also H_2(A; Z). The pair (i, j) contributes Z_{gcd(m_i, m_j)} = Z_{m_i},
    where a free generator counts as m = 0.
    :param group: FgAbGroup
    :return: FgAbGroup
    """
    moduli = [group.moduli[i] for i, _ in lambda2_pairs(group)]
    torsion = [m for m in moduli if m]
    rank = len(moduli) - len(torsion)
    assert moduli == torsion + [0] * rank, 'wedge generators must list torsion before free'
    return FgAbGroup(rank, tuple(torsion))


h2_integral = lambda2


@lru_cache(maxsize=4096)
def lambda2_map(f: Homomorphism) -> Homomorphism:
    """
    Lambda^2 f, with f(g_i) ^ f(g_j) expanded bilinearly: the coefficient on h_k ^ h_l is a_k b_l - a_l b_k
    :param f: Homomorphism, A -> B
    :return: Homomorphism, Lambda^2 A -> Lambda^2 B
    """
    target_pairs = lambda2_pairs(f.target)
    columns = []
    for i, j in lambda2_pairs(f.source):
        a, b = f.matrix.column(i), f.matrix.column(j)
        columns.append([a[k] * b[l] - a[l] * b[k] for k, l in target_pairs])
    return Homomorphism.from_images(lambda2(f.source), lambda2(f.target), columns)


def tensor_presentation(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """
    A (x) B from generators g_i (x) h_j and relations m_i (g_i (x) h_j), n_j (g_i (x) h_j)
    :return: FgAbGroup
    """
    pairs = [(i, j) for i in range(a.ngens) for j in range(b.ngens)]
    columns = []
    for position, (i, j) in enumerate(pairs):
        for m in (a.moduli[i], b.moduli[j]):
            if m:
                columns.append([m if k == position else 0 for k in range(len(pairs))])
    group, _ = group_from_relations(IntMatrix.from_columns(columns, len(pairs)))
    return group


def exterior_square_presentation(group: FgAbGroup) -> FgAbGroup:
    """
    A (x) A modulo x (x) x, presented on all g_i (x) g_j with relations m_i (g_i (x) g_j),
    m_j (g_i (x) g_j), g_i (x) g_i and g_i (x) g_j + g_j (x) g_i
    :return: FgAbGroup
    """
    n = group.ngens
    position = {(i, j): i * n + j for i in range(n) for j in range(n)}

    def unit(*entries):
        column = [0] * (n * n)
        for pair, value in entries:
            column[position[pair]] += value
        return column

    columns = []
    for (i, j), _ in position.items():
        for m in (group.moduli[i], group.moduli[j]):
            if m:
                columns.append(unit(((i, j), m)))
        if i == j:
            columns.append(unit(((i, i), 1)))
        elif i < j:
            columns.append(unit(((i, j), 1), ((j, i), 1)))
    result, _ = group_from_relations(IntMatrix.from_columns(columns, n * n))
    return result
