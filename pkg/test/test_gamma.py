import unittest
from math import gcd
from random import Random

from src.abelian.automorphisms import aut_group
from src.abelian.group import FgAbGroup, identity
from src.errors import BudgetExceededError, HypothesisViolationError, UnsupportedRankError
from src.gamma.enumerate import candidate_tuples, gamma_s_group, gamma_tuple_group, unit_group_notes
from src.gamma.table import GroupTable, abelian_invariants, element_order
from src.wes.model import WesData
from src.wes.samples import klein_instance, units_instance, zero_instance

BUDGET = 10 ** 6


def units(m: int) -> int:
    return sum(1 for k in range(m) if gcd(k, m) == 1)


def pairs(table: GroupTable) -> set:
    return {(t.f6.matrix[0, 0], t.f5.matrix[0, 0]) for t in table.elements}


class TestGroupTable(unittest.TestCase):
    def test_abelian_invariants(self):
        self.assertEqual(abelian_invariants([1, 2, 2, 2]), (2, 2))
        self.assertEqual(abelian_invariants([1, 2, 4, 4, 2, 2, 4, 4]), (2, 4))
        self.assertEqual(abelian_invariants([1, 6, 3, 2, 3, 6]), (6,))
        self.assertEqual(abelian_invariants([1]), ())

    def test_units_mod_m(self):
        for m, expected in ((5, (4,)), (8, (2, 2)), (9, (6,)), (15, (2, 4)), (16, (2, 4))):
            group = FgAbGroup.cyclic(m)
            table = GroupTable.build(aut_group(group, BUDGET), identity(group))
            self.assertTrue(table.is_abelian)
            self.assertEqual(table.structure, expected, m)

    def test_nonabelian(self):
        klein = FgAbGroup(0, (2, 2))
        table = GroupTable.build(aut_group(klein, BUDGET), identity(klein))
        self.assertFalse(table.is_abelian)
        self.assertEqual(table.order, 6)
        self.assertEqual(len(table.generators), 2)
        self.assertTrue(table.structure_string().startswith('nonabelian of order 6'))
        self.assertEqual(table.axiom_failures(), [])

    def test_order_invariance(self):
        group = FgAbGroup.cyclic(15)
        elements = aut_group(group, BUDGET)
        Random(2).shuffle(elements)
        self.assertEqual(GroupTable.build(elements, identity(group)).structure, (2, 4))

    def test_axiom_failures(self):
        group = FgAbGroup.cyclic(8)
        elements = aut_group(group, BUDGET)[:3]
        table = GroupTable.build(elements, identity(group))
        self.assertNotEqual(table.axiom_failures(), [])

    def test_element_order(self):
        group = FgAbGroup.cyclic(7)
        orders = sorted(element_order(f, identity(group)) for f in aut_group(group, BUDGET))
        self.assertEqual(orders, [1, 2, 3, 3, 6, 6])


class TestUnitsFamily(unittest.TestCase):
    def test_orders(self):
        expected = {3: (2, 2), 5: (2, 4), 7: (2, 6), 9: (2, 6), 15: (2, 2, 4)}
        for m, structure in expected.items():
            table = gamma_s_group(units_instance(m), BUDGET)
            self.assertEqual(table.order, 2 * units(m), m)
            self.assertEqual(table.structure, structure, m)
            self.assertEqual(pairs(table), {(s, u) for s in (-1, 1) for u in range(m) if gcd(u, m) == 1})
            self.assertEqual(table.source.order, 2 * units(m) * 2 * 4, m)

    def test_only_h6_and_h5(self):
        for m in (3, 5, 7, 9, 15):
            table = gamma_s_group(units_instance(m, n=1, p=1), BUDGET)
            self.assertEqual(table.order, 2 * units(m))
            self.assertEqual(table.source.order, table.order)
            self.assertEqual(table.axiom_failures(), [])

    def test_m5_structure(self):
        table = gamma_s_group(units_instance(5), BUDGET)
        self.assertEqual(table.structure_string(), 'Z_2 + Z_4')
        self.assertEqual(unit_group_notes(units_instance(5)), [])


class TestKleinFamily(unittest.TestCase):
    def test_both_classes(self):
        for class_value in (0, 1):
            w = klein_instance(class_value)
            table = gamma_s_group(w, BUDGET)
            self.assertEqual(table.order, 8)
            self.assertEqual(pairs(table), {(s, u) for s in (-1, 1) for u in (1, 3, 5, 7)})
            self.assertEqual(table.structure, (2, 2, 2))
            self.assertEqual(len(table.gammas), 2)
            self.assertEqual(table.axiom_failures(), [])
            self.assertEqual(table.source.order, 32)
            self.assertEqual(table.source.axiom_failures(), [])

    def test_tuple_group(self):
        w = klein_instance(1)
        tuples = gamma_tuple_group(w, BUDGET)
        self.assertEqual(tuples.order, 32)
        self.assertEqual(tuples.restricted_to(('f6', 'f5')).elements, gamma_s_group(w, BUDGET).elements)

    def test_note_on_units_mod_8(self):
        notes = unit_group_notes(klein_instance(1))
        self.assertEqual(len(notes), 1)
        self.assertIn('aut(H5) = aut(Z_8) is Z_2 + Z_2', notes[0])
        self.assertIn('not Z_4', notes[0])


class TestGammaSGroup(unittest.TestCase):
    def test_only_f6(self):
        zero = FgAbGroup()
        table = gamma_s_group(WesData.from_blocks(zero, zero, zero, FgAbGroup.free(1)), BUDGET)
        self.assertEqual(table.order, 2)
        self.assertEqual(table.structure, (2,))

    def test_zero(self):
        self.assertEqual(gamma_s_group(zero_instance(), BUDGET).order, 1)

    def test_candidate_order(self):
        tuples = candidate_tuples(klein_instance(1), BUDGET)
        self.assertEqual(len(tuples), 2 * 4 * 6 * 2)
        self.assertEqual(tuples, sorted(tuples, key=lambda t: t.sort_key()))

    def test_workers(self):
        w = klein_instance(1)
        self.assertEqual(gamma_s_group(w, BUDGET, workers=2).elements, gamma_s_group(w, BUDGET).elements)

    def test_budget(self):
        with self.assertRaises(BudgetExceededError) as context:
            gamma_s_group(klein_instance(1), 10)
        self.assertEqual(context.exception.factor, 'H4')

    def test_rank(self):
        zero = FgAbGroup()
        w = WesData.from_blocks(zero, zero, zero, FgAbGroup.free(2))
        with self.assertRaises(UnsupportedRankError):
            gamma_s_group(w, BUDGET)

    def test_invalid(self):
        zero = FgAbGroup()
        with self.assertRaises(HypothesisViolationError):
            gamma_s_group(WesData.from_blocks(FgAbGroup.cyclic(2), zero, zero, zero), BUDGET)


if __name__ == '__main__':
    unittest.main()
