import random
import unittest
from fractions import Fraction

from sympy import nan

import arcs.algebra as dut
from arcs.nash import transform_chain

from corpus import random_arc, random_polynomial


class TestFields(unittest.TestCase):

    def test_from_name(self):
        self.assertEqual(dut.rationals(), dut.Field.from_name('QQ'))
        self.assertEqual(dut.PrimeField(7), dut.Field.from_name('GF(7)'))
        self.assertEqual('GF(7)', dut.Field.from_name('gf ( 7 )').name)

    def test_unknown_field(self):
        with self.assertRaises(dut.AlgebraError):
            dut.Field.from_name('RR')
        with self.assertRaises(dut.AlgebraError):
            dut.Field.from_name('GF(6)')

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            dut.rationals()(1, 0)
        with self.assertRaises(ZeroDivisionError):
            dut.PrimeField(5)(1, 5)

    def test_fraction_conversion(self):
        field = dut.rationals()
        self.assertEqual('3/4', field.render(field(Fraction(3, 4))))
        self.assertEqual(Fraction(-1, 2), field.to_fraction(field(-1, 2)))

    def test_convert_into_prime_field(self):
        source, target = dut.rationals(), dut.PrimeField(5)
        self.assertEqual(3, target.to_int(target.convert(source(1, 2), source)))
        with self.assertRaises(dut.AlgebraError):
            source.convert(target(2), target)

    def test_foreign_values(self):
        field = dut.PrimeField(5)
        self.assertEqual(3, field.to_int(field(dut.rationals()(1, 2))))
        self.assertEqual(3, field.to_int(field(Fraction(-1, 3))))
        self.assertEqual(2, field.to_int(field(Fraction(1, 2), 4)))
        with self.assertRaises(dut.AlgebraError):
            field(0.5)
        with self.assertRaises(ZeroDivisionError):
            field(dut.rationals()(1, 10))

    def test_prime_field_elements(self):
        field = dut.PrimeField(3)
        self.assertEqual([0, 1, 2], [field.to_int(x) for x in field.elements()])
        self.assertEqual(3, field.characteristic())


class TestExponentVector(unittest.TestCase):

    def test_degree_first(self):
        self.assertLess(dut.ExponentVector((0, 0, 3)), dut.ExponentVector((1, 1, 2)))
        self.assertLess(dut.ExponentVector((5, 0)), dut.ExponentVector((0, 6)))

    def test_t_exponent_breaks_ties(self):
        self.assertLess(dut.ExponentVector((0, 1, 1)), dut.ExponentVector((0, 2, 0)))
        self.assertLess(dut.ExponentVector((0, 2, 0)), dut.ExponentVector((1, 1, 0)))

    def test_divides_and_lcm(self):
        a, b = dut.ExponentVector((1, 0, 2)), dut.ExponentVector((0, 3, 1))
        self.assertFalse(a.divides(b))
        self.assertEqual(dut.ExponentVector((1, 3, 2)), a.lcm(b))
        self.assertEqual(dut.ExponentVector((0, 3, 0)), a.lcm(b) / dut.ExponentVector((1, 0, 2)))
        with self.assertRaises(dut.AlgebraError):
            a / b

    def test_pure_t(self):
        self.assertTrue(dut.ExponentVector((4, 0, 0)).is_pure_t())
        self.assertFalse(dut.ExponentVector((4, 0, 1)).is_pure_t())


class TestInfinity(unittest.TestCase):

    def test_comparisons(self):
        self.assertGreater(dut.INFINITY, 10 ** 9)
        self.assertLess(dut.NEG_INFINITY, -5)
        self.assertTrue(dut.INFINITY >= dut.INFINITY)
        self.assertFalse(5 >= dut.INFINITY)
        self.assertEqual(dut.INFINITY, 3 + dut.INFINITY)
        self.assertTrue(dut.is_infinite(-dut.INFINITY))
        self.assertFalse(dut.is_infinite(7))

    def test_opposite_sum(self):
        self.assertIs(nan, dut.INFINITY + dut.NEG_INFINITY)


class TestParser(unittest.TestCase):

    def setUp(self):
        self.names = dut.variable_names(2)

    def test_parse(self):
        f = dut.parse_polynomial('x1^2 - t*x2**3', self.names)
        self.assertEqual(2, f.order())
        self.assertEqual(4, f.degree())
        self.assertEqual(dut.ExponentVector((0, 2, 0)), f.initial_exponent())

    def test_aliases(self):
        self.assertEqual(dut.parse_polynomial('x^2 - y^3', self.names), dut.parse_polynomial('x1^2 - x2^3', self.names))

    def test_constant_division(self):
        f = dut.parse_polynomial('x1/2 + 2/3', self.names)
        field = dut.rationals()
        self.assertEqual(field(1, 2), f.coefficient((0, 1, 0)))
        self.assertEqual(field(2, 3), f.coefficient((0, 0, 0)))

    def test_error_position(self):
        with self.assertRaises(dut.ParseError) as ctx:
            dut.parse_polynomial('x1 + * x2', self.names)
        self.assertEqual(1, ctx.exception.line)
        self.assertEqual(6, ctx.exception.column)

    def test_error_on_second_line(self):
        with self.assertRaises(dut.ParseError) as ctx:
            dut.parse_polynomial('x1 +\n  x2 $', self.names)
        self.assertEqual(2, ctx.exception.line)
        self.assertEqual(6, ctx.exception.column)

    def test_unknown_variable(self):
        with self.assertRaises(dut.ParseError):
            dut.parse_polynomial('x1 + w', self.names)

    def test_division_by_variable(self):
        with self.assertRaises(dut.ParseError):
            dut.parse_polynomial('x1 / x2', self.names)
        with self.assertRaises(dut.ParseError):
            dut.parse_polynomial('x1 / 0', self.names)

    def test_unbalanced(self):
        with self.assertRaises(dut.ParseError):
            dut.parse_polynomial('(x1 + x2', self.names)

    def test_germ(self):
        generators = dut.parse_germ('x1^2; x1*x2 + x3^3')
        self.assertEqual(2, len(generators))
        self.assertEqual(3, generators[0].num_vars)
        generators = dut.parse_germ('x1^2; x1*x2 + t^3;', n=2, with_t=True)
        self.assertEqual(2, len(generators))
        self.assertEqual(3, generators[1].num_vars)

    def test_render_parses_back(self):
        f = dut.parse_polynomial('-3/2*x1^2*x2 + t - 7 + x2^5', self.names)
        self.assertEqual(f, dut.parse_polynomial(f.render(self.names), self.names))

    def test_caret_binds_tighter_than_product(self):
        self.assertEqual(dut.parse_polynomial('x1**2*x2 - 8', self.names), dut.parse_polynomial('x1^2*x2 - 2^3', self.names))
        self.assertEqual(dut.parse_polynomial('-(x1^2)', self.names), dut.parse_polynomial('-x1^2', self.names))

    def test_error_columns(self):
        for text, column in (('x1 + w', 6), ('x1^x2', 4), ('x1^-1', 4), ('x1 / x2', 6), ('x1 + 1.5', 6)):
            with self.assertRaises(dut.ParseError) as ctx:
                dut.parse_polynomial(text, self.names)
            self.assertEqual((1, column), (ctx.exception.line, ctx.exception.column), text)

    def test_error_in_later_generator(self):
        with self.assertRaises(dut.ParseError) as ctx:
            dut.parse_germ('x1^2; x1 + w', n=2)
        self.assertEqual((1, 12), (ctx.exception.line, ctx.exception.column))
        with self.assertRaises(dut.ParseError) as ctx:
            dut.parse_germ('x1^2;\nx1 + w', n=2)
        self.assertEqual((2, 6), (ctx.exception.line, ctx.exception.column))

    def test_empty_text(self):
        with self.assertRaises(dut.ParseError):
            dut.parse_polynomial('  ', self.names)
        with self.assertRaises(dut.ParseError):
            dut.parse_germ('x1; ; x2')
        with self.assertRaises(dut.ParseError):
            dut.parse_arc('()')

    def test_prime_field_coefficients(self):
        f = dut.parse_polynomial('x1/2 + 3*x2', self.names, dut.PrimeField(5))
        self.assertEqual(3, dut.PrimeField(5).to_int(f.coefficient((0, 1, 0))))
        with self.assertRaises(ZeroDivisionError):
            dut.parse_polynomial('x1/5', self.names, dut.PrimeField(5))

    def test_arc_needs_parentheses(self):
        with self.assertRaises(dut.ParseError):
            dut.parse_arc('t^3, t^2')
        self.assertEqual(1, dut.parse_arc('(t^2)').n)

class TestPolynomial(unittest.TestCase):

    def setUp(self):
        self.field = dut.rationals()
        self.names = dut.variable_names(2, with_t=False)

    def parse(self, text):
        return dut.parse_polynomial(text, self.names)

    def test_arithmetic(self):
        x, y = self.parse('x1'), self.parse('x2')
        self.assertEqual(self.parse('x1^2 - x2^2'), (x + y) * (x - y))
        self.assertEqual(self.parse('x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3'), (x + y) ** 3)
        self.assertTrue((x - x).is_zero())
        self.assertEqual(dut.INFINITY, (x - x).order())

    def test_derivative(self):
        f = self.parse('x1^3*x2 + x2^2')
        self.assertEqual(self.parse('3*x1^2*x2'), f.derivative((1, 0)))
        self.assertEqual(self.parse('6*x1'), f.derivative((2, 1)))
        self.assertTrue(f.derivative((0, 3)).is_zero())

    def test_evaluate(self):
        f = self.parse('x1^2 - x2^3')
        self.assertEqual(self.field(-26), f.evaluate((1, 3)))

    def test_embed(self):
        f = self.parse('x1*x2')
        g = f.embed(3, offset=1)
        self.assertEqual(dut.ExponentVector((0, 1, 1)), g.initial_exponent())
        with self.assertRaises(dut.DimensionMismatch):
            f.embed(2, offset=1)

    def test_change_field(self):
        f = self.parse('x1/2 + 5*x2')
        g = f.change_field(dut.PrimeField(5))
        self.assertEqual(1, len(g.terms))
        self.assertEqual(3, dut.PrimeField(5).to_int(g.coefficient((1, 0))))

    def test_mixed_rings(self):
        with self.assertRaises(dut.DimensionMismatch):
            self.parse('x1') + dut.Polynomial.variable(0, 3, self.field)

    def test_derivative_ideal(self):
        f = self.parse('x1^2 - x2^3')
        self.assertEqual(3, len(dut.derivative_ideal(f, 1)))
        self.assertEqual([f], dut.derivative_ideal(f, 0))
        self.assertEqual(6, len(dut.derivative_ideal(f, 3)))

    def test_multi_indices(self):
        indices = list(dut.multi_indices(2, 2))
        self.assertEqual([(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)], indices)


class TestArcs(unittest.TestCase):

    def test_parse_arc(self):
        arc = dut.parse_arc('(t^3, t^2)')
        self.assertEqual(2, arc.n)
        self.assertEqual(3, arc.order)
        self.assertTrue(arc.at_origin())
        field = dut.rationals()
        self.assertEqual((field(0), field(1)), arc.coefficient(2))
        self.assertEqual((field(0), field(0)), arc.coefficient(7))

    def test_base_point(self):
        arc = dut.parse_arc('(1 + t, t)')
        self.assertFalse(arc.at_origin())
        self.assertEqual(1, arc.order)

    def test_dimension_mismatch(self):
        with self.assertRaises(dut.DimensionMismatch):
            dut.Arc([[1, 0], [1]])

    def test_truncate(self):
        arc = dut.parse_arc('(t^3, t^2 + t^4)')
        self.assertEqual(dut.parse_arc('(t^3, t^2)'), arc.truncate(3))
        self.assertEqual(arc, arc.extended(7))
        self.assertEqual(7, arc.extended(7).order)

    def test_with_coefficient(self):
        arc = dut.parse_arc('(t, 0)').with_coefficient(3, (0, 2))
        self.assertEqual(dut.parse_arc('(t, 2*t^3)'), arc)

    def test_lift(self):
        arc = dut.parse_arc('(t^3, t^2)')
        self.assertEqual(dut.Arc([[1, 0, 0], [0, 0, 1], [0, 1, 0]]), arc.lift(0))
        self.assertEqual(dut.Arc([[1, 0, 1], [0, 1, 0]]), arc.lift(1))
        self.assertEqual(dut.Arc([[1, 0, 0]]), arc.lift(3))

    def test_compose(self):
        names = dut.variable_names(2, with_t=False)
        arc = dut.parse_arc('(t^3, t^2)')
        self.assertTrue(dut.compose_arc(dut.parse_polynomial('x1^2 - x2^3', names), arc, 10).is_zero())
        series = dut.compose_arc(dut.parse_polynomial('x1 + x2^2', names), arc, 10)
        self.assertEqual(3, series.order)
        self.assertTrue(series.nonzero)

    def test_compose_truncates(self):
        names = dut.variable_names(1, with_t=False)
        series = dut.compose_arc(dut.parse_polynomial('x1^2', names), dut.parse_arc('(t^2)'), 3)
        self.assertTrue(series.is_zero())
        self.assertFalse(series.nonzero)

    def test_quadratic_substitute(self):
        names = dut.variable_names(1)
        f = dut.parse_polynomial('x1^2 - t^3', names)
        self.assertEqual(dut.parse_polynomial('t^2*(2 + x1)^2 - t^3', names), dut.quadratic_substitute(f, [2]))
        with self.assertRaises(dut.DimensionMismatch):
            dut.quadratic_substitute(f, [1, 2])


class TestRandomProperties(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(7)

    def test_initial_exponent_is_multiplicative(self):
        for _ in range(60):
            n = self.rng.randint(1, 3)
            f, g = random_polynomial(self.rng, n, 4), random_polynomial(self.rng, n, 4)
            self.assertEqual(f.initial_exponent() * g.initial_exponent(), (f * g).initial_exponent())
            self.assertEqual(f.initial_coefficient() * g.initial_coefficient(), (f * g).initial_coefficient())
            self.assertEqual(f.order() + g.order(), (f * g).order())

    def test_order_of_sum(self):
        for _ in range(60):
            n = self.rng.randint(1, 3)
            f, g = random_polynomial(self.rng, n, 4), random_polynomial(self.rng, n, 4)
            self.assertTrue((f + g).order() >= min(f.order(), g.order()))
            self.assertEqual(dut.INFINITY, (f - f).order())

    def test_compose_is_a_ring_homomorphism(self):
        precision = 12
        for _ in range(40):
            n = self.rng.randint(1, 3)
            f, g = random_polynomial(self.rng, n, 3), random_polynomial(self.rng, n, 3)
            arc = random_arc(self.rng, n, self.rng.randint(1, 4))
            left, right = dut.compose_arc(f, arc, precision), dut.compose_arc(g, arc, precision)
            self.assertEqual((left.polynomial * right.polynomial).truncated(precision),
                             dut.compose_arc(f * g, arc, precision).polynomial)
            self.assertEqual(left.polynomial + right.polynomial, dut.compose_arc(f + g, arc, precision).polynomial)

    def test_transform_identity(self):
        # t^(m_0 + ... + m_(i-1)) f_i(t, X) = f(A_1 t + ... + A_i t^i + t^i X)
        for _ in range(25):
            n = self.rng.randint(2, 3)
            f = random_polynomial(self.rng, n, 4)
            arc = random_arc(self.rng, n, 3)
            i = self.rng.randint(0, 3)
            chain = transform_chain(f, arc, i)
            t = dut.Polynomial.variable(0, n + 1, f.field)
            images = []
            for j in range(n):
                image = t ** i * dut.Polynomial.variable(j + 1, n + 1, f.field)
                for k in range(1, i + 1):
                    image = image + t ** k * arc.coefficient(k)[j]
                images.append(image)
            power = sum(g.order() for g in chain[:i])
            self.assertEqual(f.substitute(images), chain[i].mul_term((power,) + (0,) * n, 1))


if __name__ == '__main__':
    unittest.main()
