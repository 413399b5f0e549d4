import unittest
from math import gcd

from src.abelian.automorphisms import aut_candidates, aut_group
from src.abelian.group import FgAbGroup, compose, identity, inverse
from src.errors import BudgetExceededError, UnsupportedRankError

BUDGET = 10 ** 6


def units(m: int) -> int:
    return sum(1 for k in range(m) if gcd(k, m) == 1)


class TestAutGroup(unittest.TestCase):
    def test_integers(self):
        auts = aut_group(FgAbGroup.free(1), BUDGET)
        self.assertEqual([f.matrix[0, 0] for f in auts], [-1, 1])

    def test_z8(self):
        auts = aut_group(FgAbGroup.cyclic(8), BUDGET)
        self.assertEqual([f.matrix[0, 0] for f in auts], [1, 3, 5, 7])

    def test_klein_four(self):
        self.assertEqual(len(aut_group(FgAbGroup(0, (2, 2)), BUDGET)), 6)

    def test_trivial(self):
        self.assertEqual(aut_group(FgAbGroup(), BUDGET), [identity(FgAbGroup())])

    def test_totient(self):
        for m in range(2, 65):
            self.assertEqual(len(aut_group(FgAbGroup.cyclic(m), BUDGET)), units(m), m)

    def test_mixed(self):
        # Z_2 + Z: f6 = +-1 with a torsion shift, times aut(Z_2)
        self.assertEqual(len(aut_group(FgAbGroup(1, (2,)), BUDGET)), 4)
        self.assertEqual(len(aut_group(FgAbGroup(0, (2, 4)), BUDGET)), 8)

    def test_sorted_and_unique(self):
        auts = aut_group(FgAbGroup(0, (2, 4)), BUDGET)
        keys = [f.sort_key() for f in auts]
        self.assertEqual(keys, sorted(set(keys)))

    def test_group_axioms(self):
        for group in (FgAbGroup(0, (2, 2)), FgAbGroup(0, (2, 4)), FgAbGroup(1, (3,)), FgAbGroup(0, (3, 3))):
            auts = aut_group(group, BUDGET)
            members = set(auts)
            self.assertIn(identity(group), members)
            for f in auts:
                self.assertIn(inverse(f), members)
                for g in auts:
                    self.assertIn(compose(f, g), members)

    def test_rank_two(self):
        with self.assertRaises(UnsupportedRankError):
            aut_group(FgAbGroup.free(2), BUDGET)

    def test_budget(self):
        self.assertEqual(aut_candidates(FgAbGroup(0, (2, 2))), 16)
        with self.assertRaises(BudgetExceededError) as context:
            aut_group(FgAbGroup(0, (2, 2)), 15, 'H4')
        self.assertEqual(context.exception.factor, 'H4')
        self.assertEqual(context.exception.candidates, 16)


if __name__ == '__main__':
    unittest.main()
