from fractions import Fraction

from django.test import SimpleTestCase

from utils.rationals import format_rational, is_rational_literal, parse_rational


class ParseRationalTests(SimpleTestCase):

    def test_integer_and_fraction_literals(self):
        self.assertEqual(parse_rational('3'), Fraction(3))
        self.assertEqual(parse_rational('-2/3'), Fraction(-2, 3))
        self.assertEqual(parse_rational(' 1 / 2 '), Fraction(1, 2))
        self.assertEqual(parse_rational('4/6'), Fraction(2, 3))

    def test_passthrough(self):
        self.assertEqual(parse_rational(5), Fraction(5))
        self.assertEqual(parse_rational(Fraction(1, 7)), Fraction(1, 7))

    def test_rejects_inexact_and_malformed(self):
        for value in (0.5, '0.5', '1/0', 'abc', True, None, '1/-2'):
            with self.subTest(value=value):
                with self.assertRaises(ValueError):
                    parse_rational(value)

    def test_is_rational_literal(self):
        self.assertTrue(is_rational_literal('7/9'))
        self.assertFalse(is_rational_literal('7.9'))


class FormatRationalTests(SimpleTestCase):

    def test_formats(self):
        self.assertEqual(format_rational(Fraction(4, 9)), '4/9')
        self.assertEqual(format_rational(Fraction(6, 3)), '2')
        self.assertEqual(format_rational(Fraction(-1, 3)), '-1/3')

    def test_inverse_of_parse(self):
        for value in (Fraction(0), Fraction(2, 3), Fraction(-5, 7), Fraction(11)):
            self.assertEqual(parse_rational(format_rational(value)), value)
