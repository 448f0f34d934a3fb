import random
import unittest

import arcs.nash as dut
from arcs.algebra import AlgebraError, Arc, DimensionMismatch, PrimeField, Undetermined, parse_arc, parse_germ
from arcs.staircase import EQUAL, GREATER, LESS, Staircase

from corpus import hypersurface_corpus, random_arc, random_polynomial

CUSP = 'x1^2 - x2^3'
UMBRELLA = 'x1^2 - x2*x3^2'


def germ(text):
    return dut.GermIdeal(parse_germ(text))


class TestGermIdeal(unittest.TestCase):

    def test_hypersurface(self):
        self.assertTrue(germ(CUSP).hypersurface)
        self.assertFalse(germ('x1*x2; x1*x3').hypersurface)
        self.assertEqual(1, germ(CUSP).dimension())

    def test_generator_off_origin(self):
        with self.assertRaises(AlgebraError):
            germ('1 + x1')

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            dut.GermIdeal(parse_germ('x1^2 - x2^3'), n=3)
        with self.assertRaises(DimensionMismatch):
            dut.nash_sequences(germ(CUSP), parse_arc('(t, t, t)'))

    def test_arc_off_origin(self):
        with self.assertRaises(AlgebraError):
            dut.nash_sequences(germ(CUSP), parse_arc('(1 + t, t)'))


class TestCusp(unittest.TestCase):

    def setUp(self):
        self.germ = germ(CUSP)
        self.arc = parse_arc('(t^3, t^2)')

    def test_sequences(self):
        report = dut.nash_sequences(self.germ, self.arc)
        self.assertEqual([2, 2, 2, 1], report.multiplicities)
        self.assertEqual([[0, 2, 0]], report.diagrams[0].as_list())
        self.assertEqual([[0, 1, 0]], report.diagrams[3].as_list())
        self.assertTrue(report.arc_on_germ)

    def test_stabilization(self):
        report = dut.nash_sequences(self.germ, self.arc, steps=5)
        self.assertEqual([2, 2, 2, 1, 1, 1], report.multiplicities)
        self.assertEqual(3, report.stabilized_at())
        self.assertEqual(3, report.smooth_from())
        self.assertEqual(3, report.bound)
        self.assertTrue(report.principal())

    def test_report_dict(self):
        result = dut.nash_sequences(self.germ, self.arc, steps=4).as_dict()
        self.assertEqual([2, 2, 2, 1, 1], result['m'])
        self.assertEqual(3, result['stabilized_at'])
        self.assertEqual(3, result['bound_D'])
        self.assertEqual({'values': [1, 4, 9, 16, 25, 36], 'poly': [1, 2, 1], 'dim': 2, 'mult': 2},
                         result['steps'][0]['hilbert'])
        self.assertEqual(['x1^2 - x2^3'], result['steps'][0]['generators'])
        self.assertFalse(result['steps'][2]['smooth'])

    def test_generic_multiplicity(self):
        f = parse_germ(CUSP)[0]
        self.assertEqual((1, 3), dut.generic_multiplicity_along_arc(f, self.arc))
        self.assertEqual(dut.REGULAR, dut.arc_regularity(self.germ, self.arc))

    def test_theorem_bound(self):
        f = parse_germ(CUSP)[0]
        m_generic, bound = dut.generic_multiplicity_along_arc(f, self.arc)
        report = dut.nash_sequences(self.germ, self.arc, steps=bound + 3)
        self.assertTrue(all(m == m_generic for m in report.multiplicities[bound:]))

    def test_arc_leaving_the_germ(self):
        report = dut.nash_sequences(self.germ, parse_arc('(t^2, t^3)'))
        self.assertEqual([2, 2, 0, 0], report.multiplicities)
        self.assertFalse(report.arc_on_germ)
        self.assertTrue(report.diagrams[2].is_full())
        self.assertEqual(2, report.stabilized_at())
        self.assertIsNone(report.smooth_from())
        self.assertFalse(report.principal())

    def test_compare(self):
        special = dut.nash_sequences(self.germ, self.arc)
        other = dut.nash_sequences(self.germ, parse_arc('(t^2, t^3)'))
        same = dut.nash_sequences(self.germ, parse_arc('(t^3, t^2 + t^3)'))
        self.assertEqual(LESS, dut.compare_sequences(other, special))
        self.assertEqual(GREATER, dut.compare_sequences(special, other))
        self.assertEqual(EQUAL, dut.compare_sequences(same, special))
        with self.assertRaises(DimensionMismatch):
            dut.compare_sequences(special, dut.nash_sequences(self.germ, self.arc, steps=5))

    def test_transform_chain(self):
        chain = dut.transform_chain(parse_germ(CUSP)[0], self.arc, 3)
        self.assertEqual([2, 2, 2, 1], [g.order() for g in chain])


class TestUmbrella(unittest.TestCase):

    def setUp(self):
        self.germ = germ(UMBRELLA)
        self.arc = parse_arc('(0, t, 0)')

    def test_sequences(self):
        report = dut.nash_sequences(self.germ, self.arc, steps=5)
        self.assertEqual([2] * 6, report.multiplicities)
        self.assertIsNone(report.stabilized_at())
        self.assertIsNone(report.bound)
        self.assertTrue(report.arc_on_germ)

    def test_generic_multiplicity(self):
        f = parse_germ(UMBRELLA)[0]
        m_generic, bound = dut.generic_multiplicity_along_arc(f, self.arc)
        self.assertEqual(2, m_generic)
        self.assertEqual(0, bound)
        self.assertIsNone(dut.smooth_stabilization_bound(self.germ, self.arc))
        self.assertEqual(dut.UNKNOWN, dut.arc_regularity(self.germ, self.arc))


class TestSmallGerms(unittest.TestCase):

    def test_hyperplane(self):
        report = dut.nash_sequences(dut.GermIdeal(parse_germ('x1', n=2)), parse_arc('(0, t^2)'))
        self.assertEqual([1, 1, 1], report.multiplicities)
        self.assertEqual(0, report.bound)
        self.assertEqual(0, report.stabilized_at())
        f = parse_germ('x1', n=2)[0]
        self.assertEqual((1, 0), dut.generic_multiplicity_along_arc(f, parse_arc('(0, t^2)')))

    def test_zero_polynomial(self):
        f = parse_germ('x1 - x1', n=2)[0]
        with self.assertRaises(Undetermined):
            dut.generic_multiplicity_along_arc(f, parse_arc('(t, t)'))

    def test_ideal(self):
        report = dut.nash_sequences(germ('x1*x2; x1*x3'), parse_arc('(0, t, t^2)'))
        self.assertTrue(report.arc_on_germ)
        self.assertEqual([1, 1, 1], report.multiplicities)
        self.assertEqual(Staircase(4, [(0, 1, 0, 0)]), report.diagrams[-1])

    def test_jacobian_minors(self):
        generators = parse_germ('x1*x2; x1*x3')
        self.assertEqual(4, len(dut.jacobian_minors(generators, 1)))
        self.assertEqual(3, len(dut.jacobian_minors(generators, 2)))
        self.assertIn(parse_germ('x1^2', n=3)[0], dut.jacobian_minors(generators, 2))

    def test_determinant(self):
        x, y = parse_germ('x1; x2')
        self.assertEqual(x * x - y * y, dut.determinant([[x, y], [y, x]]))
        self.assertTrue(dut.determinant([[x, y], [x, y]]).is_zero())

    def test_determinant_three_by_three(self):
        x, y, z = parse_germ('x1; x2; x3')
        circulant = [[x, y, z], [z, x, y], [y, z, x]]
        self.assertEqual(x ** 3 + y ** 3 + z ** 3 - 3 * x * y * z, dut.determinant(circulant))
        field = PrimeField(3)
        u, v = parse_germ('x1; x2', field=field)
        self.assertEqual(u * u - v * v, dut.determinant([[u, v], [v, u]]))

    def test_truncation_invariance(self):
        f = germ('x1^3 - x2^2*x1 + x2^5')
        arc = parse_arc('(t^2 + t^3, t - t^4)')
        for i in range(1, 5):
            expected = dut.nash_sequences(f, arc, steps=i).diagrams
            changed = arc.with_coefficient(i + 1, (7, -3))
            self.assertEqual(expected, dut.nash_sequences(f, changed, steps=i).diagrams)


class TestCorpus(unittest.TestCase):

    def test_monotone(self):
        for f, arc in hypersurface_corpus(seed=1, count=200):
            report = dut.nash_sequences(dut.GermIdeal([f]), arc, with_bound=False)
            m = report.multiplicities
            self.assertTrue(all(a >= b for a, b in zip(m, m[1:])), (f, arc, m))
            for before, after in zip(report.diagrams, report.diagrams[1:]):
                for k in range(8):
                    self.assertGreaterEqual(before.hilbert(k), after.hilbert(k), (f, arc))

    def test_monotone_ideals(self):
        rng = random.Random(3)
        for _ in range(15):
            generators = [random_polynomial(rng, 2, 3, terms=3) for _ in range(2)]
            arc = random_arc(rng, 2, rng.randint(1, 3))
            report = dut.nash_sequences(dut.GermIdeal(generators), arc, with_bound=False)
            for before, after in zip(report.diagrams, report.diagrams[1:]):
                for k in range(8):
                    self.assertGreaterEqual(before.hilbert(k), after.hilbert(k), (generators, arc))

    def test_derivative_orders(self):
        checks = [(parse_germ(CUSP)[0], parse_arc('(t^3, t^2)'))] + hypersurface_corpus(seed=2, count=30)
        for f, arc in checks:
            report = dut.nash_sequences(dut.GermIdeal([f]), arc, with_bound=False)
            m = report.multiplicities
            for k in range(max(m)):
                orders = dut.derivative_ideal_orders(report, k)
                for j in range(len(orders) - 1):
                    if k < m[j]:
                        self.assertGreaterEqual(orders[j], (m[j] - k) + orders[j + 1], (f, arc, j, k))

    def test_theorem_bound(self):
        for f, arc in hypersurface_corpus(seed=4, count=40):
            m_generic, bound = dut.generic_multiplicity_along_arc(f, arc)
            report = dut.nash_sequences(dut.GermIdeal([f]), arc, steps=bound + 2, with_bound=False)
            self.assertTrue(all(m == m_generic for m in report.multiplicities[bound:]), (f, arc))

    def test_liftable_arcs(self):
        rng = random.Random(6)
        for _ in range(40):
            f = parse_germ('x1', n=3)[0] * random_polynomial(rng, 3, 3)
            arc = random_arc(rng, 3, rng.randint(1, 4))
            arc = Arc([[0] + list(vector[1:]) for vector in arc.coefficients], n=3)
            report = dut.nash_sequences(dut.GermIdeal([f]), arc, with_bound=False)
            self.assertTrue(report.arc_on_germ)
            self.assertFalse(any(d.contains_pure_t() for d in report.diagrams), (f, arc))


class TestSemicontinuity(unittest.TestCase):

    def test_line(self):
        base = parse_arc('(t^3, t^2)')
        direction = parse_arc('(t, t^3)')
        self.assertEqual(parse_arc('(2*t + t^3, t^2 + 2*t^3)'), dut.line_arc(base, direction, 2))

    def test_cusp(self):
        for result in dut.sample_semicontinuity(germ(CUSP), parse_arc('(t^3, t^2)'), 20, 5, seed=1):
            self.assertFalse(result.violation, result.as_dict())
            self.assertIn(result.verdict, (LESS, EQUAL))

    def test_umbrella(self):
        for result in dut.sample_semicontinuity(germ(UMBRELLA), parse_arc('(0, t, 0)'), 20, 5, seed=2):
            self.assertFalse(result.violation, result.as_dict())
            self.assertIn(result.verdict, (LESS, EQUAL))

    def test_special_arc_direction(self):
        result = dut.semicontinuity_check(germ(CUSP), parse_arc('(t^3, t^2)'), parse_arc('(t, 0)'), [3, -5])
        self.assertTrue(result.constant)
        self.assertEqual(LESS, result.verdict)
        self.assertEqual([2, 2, 2, 1], result.special.multiplicities)
        self.assertEqual(result.as_dict()['special_m'], [2, 2, 2, 1])


if __name__ == '__main__':
    unittest.main()
