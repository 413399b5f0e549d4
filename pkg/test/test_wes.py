import json
import unittest

from src.abelian.group import FgAbGroup, Homomorphism, group_from_relations, identity, multiplication
from src.abelian.matrix import IntMatrix
from src.errors import HypothesisViolationError, NotAutomorphismError, NotInducibleError, ShapeMismatchError
from src.gamma.oracle import middle_maps
from src.homalg.functors import (
    exterior_square_presentation, lambda2, lambda2_map, tensor_presentation, tensor_z2, tensor_z2_map
)
from src.wes.model import (
    GammaTuple, WesData, gamma5, gamma5_blocks, gamma_of, gamma_tilde, is_gamma_automorphism, validate
)
from src.wes.report import WesReport, wes_report
from src.wes.samples import klein_instance, units_instance, zero_instance
from test.helpers import chains

Z = FgAbGroup.free(1)
Z2 = FgAbGroup.cyclic(2)
Z3 = FgAbGroup.cyclic(3)
KLEIN = FgAbGroup(0, (2, 2))


def direct_sum(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    return group_from_relations(IntMatrix.block_diagonal(a.relations(), b.relations()))[0]


class TestGamma5(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(gamma5(FgAbGroup.cyclic(3), FgAbGroup.cyclic(5)).is_trivial)
        self.assertEqual(gamma5(FgAbGroup.cyclic(7), KLEIN), KLEIN)
        self.assertEqual(gamma5(FgAbGroup(0, (3, 3)), FgAbGroup()), Z3)

    def test_hypothesis(self):
        with self.assertRaises(HypothesisViolationError):
            gamma5(Z2, FgAbGroup())
        with self.assertRaises(HypothesisViolationError):
            gamma5(Z, FgAbGroup())

    def test_against_presentation(self):
        odd = [g for g in chains(81, 2) if all(d % 2 for d in g.torsion)]
        h4s = chains(16, 4) + [FgAbGroup(r, g.torsion) for r in (1, 2) for g in chains(16, 2)]
        for h3 in odd:
            wedge = exterior_square_presentation(h3)
            for h4 in h4s:
                expected = direct_sum(tensor_presentation(h4, Z2), wedge)
                self.assertEqual(gamma5(h3, h4), expected, (h3, h4))

    def test_blocks(self):
        g5 = gamma5_blocks(FgAbGroup(0, (3, 3)), KLEIN)
        self.assertEqual(g5.block_moduli, (2, 2, 3))
        self.assertEqual(g5.group, FgAbGroup(0, (2, 6)))
        self.assertEqual(Homomorphism(g5.group, g5.group, g5.projection @ g5.section), identity(g5.group))
        chain = gamma5_blocks(Z3, KLEIN)
        self.assertEqual(chain.projection, IntMatrix.identity(2))
        self.assertEqual(chain.to_block(IntMatrix.identity(2)), IntMatrix.identity(2))
        with self.assertRaises(ShapeMismatchError):
            chain.from_block(IntMatrix.identity(3))


class TestValidate(unittest.TestCase):
    def test_valid(self):
        self.assertTrue(validate(units_instance(5)).passed)
        self.assertTrue(validate(klein_instance(1)).passed)
        self.assertTrue(validate(zero_instance()).passed)

    def test_even_h3(self):
        report = validate(WesData.from_blocks(Z2, FgAbGroup(), FgAbGroup(), Z))
        self.assertFalse(report.passed)
        self.assertIn('H3 ⊗ Z₂ ≠ 0', str(report))

    def test_torsion_h6(self):
        report = validate(WesData.from_blocks(Z3, FgAbGroup(), FgAbGroup(), FgAbGroup.cyclic(4)))
        self.assertFalse(report.passed)
        self.assertIn('H6 must be torsion-free', str(report))

    def test_torsion_h6_with_undefined_b6(self):
        with self.assertRaises(HypothesisViolationError) as context:
            WesData.from_blocks(FgAbGroup(0, (3, 3)), FgAbGroup(), FgAbGroup(), FgAbGroup.cyclic(4), b6_rows=[[1]])
        self.assertIn('H6 must be torsion-free', str(context.exception))


class TestGammaMaps(unittest.TestCase):
    def test_identity(self):
        w = klein_instance(1)
        self.assertEqual(gamma_of(w, identity(w.H3), identity(w.H4)), identity(KLEIN))

    def test_swap_sign(self):
        h3 = FgAbGroup(0, (3, 3))
        w = WesData.from_blocks(h3, FgAbGroup(), FgAbGroup(), FgAbGroup())
        swap = Homomorphism.from_rows(h3, h3, [[0, 1], [1, 0]])
        self.assertEqual(gamma_of(w, swap, identity(w.H4)), multiplication(Z3, 2))

    def test_not_automorphism(self):
        w = units_instance(5)
        with self.assertRaises(NotAutomorphismError):
            gamma_of(w, multiplication(w.H3, 0), identity(w.H4))

    def test_gamma_tilde(self):
        w = klein_instance(1)
        self.assertEqual(gamma_tilde(w, identity(KLEIN)), identity(Z2))
        swap = Homomorphism.from_rows(KLEIN, KLEIN, [[0, 1], [1, 0]])
        with self.assertRaises(NotInducibleError):
            gamma_tilde(w, swap)

    def test_gamma_tilde_with_zero_b6(self):
        w = WesData.from_blocks(Z3, KLEIN, FgAbGroup(), Z)
        gamma = Homomorphism.from_rows(KLEIN, KLEIN, [[1, 1], [0, 1]])
        self.assertEqual(gamma_tilde(w, gamma).matrix, gamma.matrix)


class TestMembership(unittest.TestCase):
    def test_identity(self):
        for w in (units_instance(5), klein_instance(0), klein_instance(1), zero_instance()):
            self.assertTrue(is_gamma_automorphism(w, GammaTuple.identity(w)))

    def test_everything_when_gamma5_vanishes(self):
        w = units_instance(7)
        t = GammaTuple(multiplication(w.H3, 2), multiplication(w.H4, 3), multiplication(w.H5, 5),
                       multiplication(w.H6, -1))
        self.assertTrue(is_gamma_automorphism(w, t))

    def test_klein(self):
        w = klein_instance(1)
        t = GammaTuple(identity(w.H3), identity(w.H4), multiplication(w.H5, 3), multiplication(w.H6, -1))
        verdict = is_gamma_automorphism(w, t)
        self.assertTrue(verdict)
        self.assertTrue(verdict.accepted)

    def test_b6_square(self):
        w = klein_instance(0)
        swap = Homomorphism.from_rows(w.H4, w.H4, [[0, 1], [1, 0]])
        verdict = is_gamma_automorphism(w, GammaTuple(identity(w.H3), swap, identity(w.H5), identity(w.H6)))
        self.assertFalse(verdict)
        self.assertIn('b6 square', verdict.reason)

    def test_ext_condition(self):
        # f5 = 3 pulls the class 1 back to 3 = 1 in Ext(Z_4, Z_2)
        w = WesData.from_blocks(Z3, Z2, FgAbGroup.cyclic(4), FgAbGroup(), pi5_vectors=[[1]])
        t = GammaTuple(identity(w.H3), identity(w.H4), multiplication(w.H5, 3), identity(w.H6))
        self.assertTrue(is_gamma_automorphism(w, t))

    def test_not_automorphism(self):
        w = klein_instance(1)
        t = GammaTuple(identity(w.H3), identity(w.H4), multiplication(w.H5, 2), identity(w.H6))
        with self.assertRaises(NotAutomorphismError):
            is_gamma_automorphism(w, t)

    def test_invalid_data(self):
        w = WesData.from_blocks(Z2, FgAbGroup(), FgAbGroup(), Z)
        with self.assertRaises(HypothesisViolationError):
            is_gamma_automorphism(w, GammaTuple.identity(w))

    def test_ext_condition_on_wedge(self):
        h3 = FgAbGroup(0, (3, 3))
        w = WesData.from_blocks(h3, FgAbGroup(), Z3, FgAbGroup(), pi5_vectors=[[1]])
        swap = Homomorphism.from_rows(h3, h3, [[0, 1], [1, 0]])
        doubled = GammaTuple(identity(h3), identity(w.H4), multiplication(Z3, 2), identity(w.H6))
        verdict = is_gamma_automorphism(w, doubled)
        self.assertFalse(verdict)
        self.assertIn('differs', verdict.reason)
        swapped = GammaTuple(swap, identity(w.H4), multiplication(Z3, 2), identity(w.H6))
        self.assertTrue(is_gamma_automorphism(w, swapped))


class TestCaches(unittest.TestCase):
    def test_bounded(self):
        for cached in (tensor_z2, tensor_z2_map, lambda2, lambda2_map, gamma5_blocks, gamma_tilde, middle_maps):
            self.assertIsNotNone(cached.cache_info().maxsize, cached.__name__)


class TestReport(unittest.TestCase):
    def test_units(self):
        w = units_instance(5)
        report = wes_report(w)
        self.assertEqual(report.gamma5, FgAbGroup().to_dict())
        self.assertEqual(report.pi5, w.H5.to_dict())
        self.assertEqual(report.pi5_order, 5)

    def test_klein(self):
        report = wes_report(klein_instance(1))
        self.assertEqual(report.gamma5, KLEIN.to_dict())
        self.assertEqual(report.coker_b6, Z2.to_dict())
        self.assertEqual(report.ext, Z2.to_dict())
        self.assertEqual(report.pi5_order, 16)
        self.assertEqual(report.pi5, FgAbGroup.cyclic(16).to_dict())
        self.assertEqual(wes_report(klein_instance(0)).pi5, FgAbGroup(0, (2, 8)).to_dict())

    def test_zero(self):
        report = wes_report(zero_instance())
        for group in (report.gamma5, report.coker_b6, report.ext, report.pi5):
            self.assertEqual(group, FgAbGroup().to_dict())
        self.assertEqual(report.pi5_order, 1)

    def test_json_round_trip(self):
        report = wes_report(klein_instance(1))
        self.assertEqual(WesReport.from_dict(json.loads(json.dumps(report.to_dict()))), report)

    def test_text(self):
        text = str(wes_report(klein_instance(1)))
        self.assertIn('coker b6        = Z_2', text)
        self.assertIn('pi4 ≅ H4 = Z_2 + Z_2', text)


if __name__ == '__main__':
    unittest.main()
