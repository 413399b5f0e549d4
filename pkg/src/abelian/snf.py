"""
Smith normal form over the integers.

The pivot rule is fixed: the nonzero entry of smallest absolute value in the remaining submatrix, ties
broken row-major. The change-of-basis matrices are therefore reproducible run to run, and every canonical
coordinate computed downstream is too.
"""
import logging
from dataclasses import dataclass

from src.abelian.matrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnfResult:
    """
    U * M * V = D with U, V unimodular. U_inv and V_inv are the exact inverses, kept because presenting
    quotients needs them.
    """
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[k, k] for k in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


class _Reduction:
    """Mutable working state of one SNF run"""
    def __init__(self, m: IntMatrix) -> None:
        self.m, self.n = m.rows, m.cols
        self.a = m.to_lists()
        self.u = [[int(i == j) for j in range(self.m)] for i in range(self.m)]
        self.u_inv = [[int(i == j) for j in range(self.m)] for i in range(self.m)]
        self.v = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        self.v_inv = [[int(i == j) for j in range(self.n)] for i in range(self.n)]

    def swap_rows(self, i: int, k: int) -> None:
        if i == k:
            return
        self.a[i], self.a[k] = self.a[k], self.a[i]
        self.u[i], self.u[k] = self.u[k], self.u[i]
        for row in self.u_inv:
            row[i], row[k] = row[k], row[i]

    def swap_cols(self, j: int, l: int) -> None:
        if j == l:
            return
        for row in self.a:
            row[j], row[l] = row[l], row[j]
        for row in self.v:
            row[j], row[l] = row[l], row[j]
        self.v_inv[j], self.v_inv[l] = self.v_inv[l], self.v_inv[j]

    def add_row(self, i: int, k: int, q: int) -> None:
        """row_i += q * row_k"""
        for mat in (self.a, self.u):
            mat[i] = [x + q * y for x, y in zip(mat[i], mat[k])]
        for row in self.u_inv:
            row[k] -= q * row[i]

    def add_col(self, j: int, l: int, q: int) -> None:
        """col_j += q * col_l"""
        for mat in (self.a, self.v):
            for row in mat:
                row[j] += q * row[l]
        self.v_inv[l] = [x - q * y for x, y in zip(self.v_inv[l], self.v_inv[j])]

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]
        for row in self.u_inv:
            row[i] = -row[i]

    def smallest_entry(self, t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                x = self.a[i][j]
                if x and (best is None or abs(x) < abs(self.a[best[0]][best[1]])):
                    best = (i, j)
        return best

    def move_to(self, t: int, position: tuple[int, int]) -> None:
        self.swap_rows(t, position[0])
        self.swap_cols(t, position[1])

    def clear_cross(self, t: int) -> bool:
        """
        Reduce column t and row t by the pivot at (t, t)
        :return: bool, True if every off-pivot entry of the cross became zero
        """
        p = self.a[t][t]
        for i in range(t + 1, self.m):
            if self.a[i][t]:
                self.add_row(i, t, -(self.a[i][t] // p))
        for j in range(t + 1, self.n):
            if self.a[t][j]:
                self.add_col(j, t, -(self.a[t][j] // p))
        return not any(self.a[i][t] for i in range(t + 1, self.m)) and not any(self.a[t][t + 1:])

    def indivisible_row(self, t: int) -> int | None:
        p = self.a[t][t]
        for i in range(t + 1, self.m):
            for j in range(t + 1, self.n):
                if self.a[i][j] % p:
                    return i
        return None

    def run(self) -> SnfResult:
        t = 0
        while t < min(self.m, self.n):
            position = self.smallest_entry(t)
            if position is None:
                break
            self.move_to(t, position)
            while True:
                if not self.clear_cross(t):
                    self.move_to(t, self.smallest_entry(t))
                    continue
                i = self.indivisible_row(t)
                if i is None:
                    break
                self.add_row(t, i, 1)
            if self.a[t][t] < 0:
                self.negate_row(t)
            logger.debug('snf pivot %d settled at %d', t, self.a[t][t])
            t += 1

        return SnfResult(
            U=IntMatrix.from_rows(self.u, self.m),
            D=IntMatrix.from_rows(self.a, self.n),
            V=IntMatrix.from_rows(self.v, self.n),
            U_inv=IntMatrix.from_rows(self.u_inv, self.m),
            V_inv=IntMatrix.from_rows(self.v_inv, self.n),
        )


def snf(m: IntMatrix) -> SnfResult:
    """
    Smith normal form of an integer matrix
    :param m: IntMatrix, any shape (empty allowed)
    :return: SnfResult with U * m * V == D
    """
    return _Reduction(m).run()


class IntegerSolver:
    """Solves M * x = b over the integers, reusing one SNF for every right-hand side"""
    def __init__(self, m: IntMatrix) -> None:
        self.matrix = m
        self.result = snf(m)
        self.diagonal = self.result.diagonal
        self.rank = self.result.rank

    def solve(self, b) -> tuple[int, ...] | None:
        """
        :param b: sequence of ints, length == rows of M
        :return: an integer solution x, or None if there is none
        """
        y = self.result.U.apply(b)
        z = [0] * self.matrix.cols
        for k, yk in enumerate(y):
            d = self.diagonal[k] if k < len(self.diagonal) else 0
            if d == 0:
                if yk != 0:
                    return None
            elif yk % d:
                return None
            else:
                z[k] = yk // d
        return self.result.V.apply(z)

    def kernel_basis(self) -> list[tuple[int, ...]]:
        """Basis of the integer kernel of M, as columns of V past the rank"""
        return [self.result.V.column(k) for k in range(self.rank, self.matrix.cols)]
