#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''
Exact algebra for germs and arcs

Coefficient fields (rationals and prime fields, backed by sympy domains), exponent vectors with the
degree-then-lexicographic order where the t-exponent comes first, multivariate polynomials carried by
sympy ring elements, truncated arcs, and the substitutions used by the quadratic transforms.
'''

import ast
import logging
import re
from fractions import Fraction
from functools import lru_cache, total_ordering
from itertools import product

from sympy import GF, QQ, Symbol, isprime, oo
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

DEFAULT_FIELD = 'QQ'
DEFAULT_ALIASES = {'x': 'x1', 'y': 'x2', 'z': 'x3'}
T_NAME = 't'
TRANSFORMATIONS = standard_transformations + (convert_xor,)


class AlgebraError(ValueError):
    '''Base class for all input errors'''


class ParseError(AlgebraError):
    '''Error in polynomial or arc text, with 1-based position'''

    def __init__(self, message, line, column):
        super(ParseError, self).__init__('{msg} at line {line}, column {column}'.format(msg=message, line=line, column=column))
        self.message = message
        self.line = line
        self.column = column


class DimensionMismatch(AlgebraError):
    '''Ambient dimensions or truncation orders disagree'''


class Undetermined(AlgebraError):
    '''The answer cannot be decided at the given precision'''


INFINITY = oo
NEG_INFINITY = -oo


def is_infinite(value):
    '''
    Check for one of the infinity sentinels

    Args:
        value: integer or sympy infinity
    Returns:
        bool: True for INFINITY and NEG_INFINITY
    '''
    return value is INFINITY or value is NEG_INFINITY


class Field(object):
    '''Exact coefficient field, wrapping a sympy domain'''

    KIND = None

    def __init__(self, domain):
        '''
        Initializer for a coefficient field

        Args:
            domain: sympy domain providing the element type and arithmetic
        '''
        self.domain = domain

    @classmethod
    def get_subclasses(cls):
        '''
        Get a list of subclasses (recursively)

        Returns:
            The function returns an iterable containing all subclasses, and sub-subclasses of this class.
        '''
        for subclass in cls.__subclasses__():
            for subcls in subclass.get_subclasses():
                yield subcls
            yield subclass

    @classmethod
    def from_name(cls, name):
        '''
        Build a field from its name

        Args:
            name (str): 'QQ' for the rationals, 'GF(p)' or 'GF p' for the prime field with p elements
        Returns:
            Field: the matching field
        '''
        match = re.match(r'^\s*(?P<kind>[A-Za-z]+)\s*(\(\s*(?P<p>\d+)\s*\))?\s*$', name or '')
        if not match:
            raise AlgebraError('Unknown field: {name}'.format(name=name))
        kind = match.group('kind').upper()
        for fieldclass in cls.get_subclasses():
            if fieldclass.KIND == kind:
                if match.group('p') is not None:
                    return fieldclass(int(match.group('p')))
                return fieldclass()
        raise AlgebraError('Unknown field: {name}'.format(name=name))

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __call__(self, value, denominator=1):
        '''
        Convert a number to an element of this field

        Args:
            value: int, Fraction, rational domain element or element of this field
            denominator (int): optional denominator
        Returns:
            element of the underlying sympy domain
        '''
        if self.domain.of_type(value):
            element = value
        else:
            try:
                numerator, extra = int(value.numerator), int(value.denominator)
            except (AttributeError, TypeError):
                raise AlgebraError('cannot convert {value!r} into {field}'.format(value=value, field=self))
            element = self._quotient(numerator, extra)
        if denominator != 1:
            element = element * self._quotient(1, denominator)
        return element

    def _quotient(self, numerator, denominator):
        value = self.domain(int(numerator))
        if denominator == 1:
            return value
        divisor = self.domain(int(denominator))
        if not divisor:
            raise ZeroDivisionError('division by zero in {field}'.format(field=self))
        return value / divisor

    def convert(self, element, source):
        '''
        Map an element of another field into this one

        Args:
            element: element of source
            source (Field): field of the element; rationals map into prime fields by numerator and denominator
        Returns:
            element of this field
        '''
        if source == self:
            return element
        if not isinstance(source, RationalField):
            raise AlgebraError('cannot map {a} into {b}'.format(a=source, b=self))
        return self(source.numerator(element), source.denominator(element))

    def is_zero(self, element):
        return not element

    def characteristic(self):
        return self.domain.characteristic()

    def __eq__(self, other):
        return isinstance(other, Field) and self.domain == other.domain

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.domain)

    def __repr__(self):
        return self.name


class RationalField(Field):
    '''The rational numbers'''

    KIND = 'QQ'

    def __init__(self):
        super(RationalField, self).__init__(QQ)

    @property
    def name(self):
        return 'QQ'

    def numerator(self, element):
        return int(self.domain.numer(element))

    def denominator(self, element):
        return int(self.domain.denom(element))

    def to_fraction(self, element):
        return Fraction(self.numerator(element), self.denominator(element))

    def render(self, element):
        '''
        Exact text for an element: an integer, or p/q

        Args:
            element: field element
        Returns:
            str: exact representation
        '''
        num, den = self.numerator(element), self.denominator(element)
        if den == 1:
            return str(num)
        return '{num}/{den}'.format(num=num, den=den)


class PrimeField(Field):
    '''The field with p elements, p prime'''

    KIND = 'GF'

    def __init__(self, p):
        if not isprime(p):
            raise AlgebraError('Prime fields require a prime, got {p}'.format(p=p))
        super(PrimeField, self).__init__(GF(p, symmetric=False))
        self.p = p

    @property
    def name(self):
        return 'GF({p})'.format(p=self.p)

    def to_int(self, element):
        return int(self.domain.to_int(element)) % self.p

    def render(self, element):
        return str(self.to_int(element))

    def elements(self):
        '''
        All elements in increasing representative order

        Returns:
            list: the p elements of the field
        '''
        return [self.domain(value) for value in range(self.p)]


def rationals():
    return RationalField()


@total_ordering
class ExponentVector(object):
    '''
    Lattice point of N^m

    The order compares (|a|, a_0, a_1, ...) lexicographically, a_0 being the t-exponent in K[t, X].
    '''

    __slots__ = ('entries',)

    def __init__(self, entries):
        self.entries = tuple(entries)

    @classmethod
    def zero(cls, m):
        return cls((0,) * m)

    @classmethod
    def unit(cls, m, index):
        return cls(1 if position == index else 0 for position in range(m))

    @property
    def degree(self):
        return sum(self.entries)

    def key(self):
        return (sum(self.entries),) + self.entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __hash__(self):
        return hash(self.entries)

    def __eq__(self, other):
        return isinstance(other, ExponentVector) and self.entries == other.entries

    def __lt__(self, other):
        return self.key() < other.key()

    def __mul__(self, other):
        return ExponentVector(a + b for a, b in zip(self.entries, other.entries))

    def __truediv__(self, other):
        if not other.divides(self):
            raise AlgebraError('{a} does not divide {b}'.format(a=other, b=self))
        return ExponentVector(a - b for a, b in zip(self.entries, other.entries))

    def divides(self, other):
        '''
        Componentwise comparison: other lies in self + N^m

        Args:
            other (ExponentVector): exponent to test
        Returns:
            bool: True when every entry of self is at most the matching entry of other
        '''
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def lcm(self, other):
        '''Componentwise maximum, the join of two exponents'''
        return ExponentVector(max(a, b) for a, b in zip(self.entries, other.entries))

    def is_pure_t(self):
        return not any(self.entries[1:])

    def as_list(self):
        return list(self.entries)

    def __repr__(self):
        return repr(self.entries)


def variable_names(n, with_t=True):
    '''
    Default variable names

    Args:
        n (int): number of space variables
        with_t (bool): prepend the arc parameter t
    Returns:
        list: names such as ['t', 'x1', 'x2']
    '''
    names = ['x{index}'.format(index=index) for index in range(1, n + 1)]
    if with_t:
        return [T_NAME] + names
    return names


@lru_cache(maxsize=None)
def polynomial_ring(num_vars, field):
    '''
    The sympy ring K[v0, ..., v(m-1)] holding polynomials in num_vars variables

    Args:
        num_vars (int): number of variables
        field (Field): coefficient field
    Returns:
        PolyRing: ring over the field's domain
    '''
    symbols = [Symbol('v{index}'.format(index=index)) for index in range(num_vars)]
    return PolyRing(symbols, field.domain, lex)


def _local_key(monom):
    return (sum(monom),) + tuple(monom)


class Polynomial(object):
    '''
    Multivariate polynomial with exact coefficients

    The arithmetic is carried by a sympy ring element; this class adds the local order on exponents,
    the ambient bookkeeping and the operations used by the transforms.
    '''

    __slots__ = ('element', 'num_vars', 'field')

    def __init__(self, terms, num_vars, field):
        '''
        Initializer for a polynomial

        Args:
            terms (dict): map from exponent (ExponentVector or tuple) to coefficient
            num_vars (int): number of variables
            field (Field): coefficient field
        '''
        merged = {}
        for exponent, coefficient in terms.items():
            exponent = tuple(exponent)
            if len(exponent) != num_vars:
                raise DimensionMismatch('exponent {e} does not have {n} entries'.format(e=exponent, n=num_vars))
            merged[exponent] = merged.get(exponent, field.zero) + field(coefficient)
        self.element = polynomial_ring(num_vars, field).from_dict(merged)
        self.num_vars = num_vars
        self.field = field

    @classmethod
    def from_element(cls, element, num_vars, field):
        '''Wrap an element of polynomial_ring(num_vars, field)'''
        poly = cls.__new__(cls)
        poly.element = element
        poly.num_vars = num_vars
        poly.field = field
        return poly

    def _new(self, element):
        return Polynomial.from_element(element, self.num_vars, self.field)

    def _filtered(self, keep):
        ring = self.element.ring
        return self._new(ring.from_dict({m: c for m, c in self.element.items() if keep(m)}))

    @property
    def ring(self):
        return self.element.ring

    @property
    def terms(self):
        '''Map from ExponentVector to nonzero coefficient'''
        return {ExponentVector(m): c for m, c in self.element.items()}

    @classmethod
    def zero(cls, num_vars, field):
        return cls.from_element(polynomial_ring(num_vars, field).zero, num_vars, field)

    @classmethod
    def constant(cls, value, num_vars, field):
        return cls.from_element(polynomial_ring(num_vars, field).ground_new(field(value)), num_vars, field)

    @classmethod
    def variable(cls, index, num_vars, field):
        return cls.from_element(polynomial_ring(num_vars, field).gens[index], num_vars, field)

    @classmethod
    def monomial(cls, exponent, coefficient, field):
        exponent = ExponentVector(exponent)
        return cls({exponent: coefficient}, len(exponent), field)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.num_vars != self.num_vars:
                raise DimensionMismatch('polynomials in {a} and {b} variables'.format(a=self.num_vars, b=other.num_vars))
            if other.field != self.field:
                raise AlgebraError('polynomials over {a} and {b}'.format(a=self.field, b=other.field))
            return other
        return Polynomial.constant(other, self.num_vars, self.field)

    def __bool__(self):
        return bool(self.element)

    def is_zero(self):
        return not self.element

    def is_constant(self):
        return self.element.is_ground

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return False
        if other.num_vars != self.num_vars or other.field != self.field:
            return False
        return self.element == other.element

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __add__(self, other):
        return self._new(self.element + self._coerce(other).element)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.element)

    def __sub__(self, other):
        return self._new(self.element - self._coerce(other).element)

    def __rsub__(self, other):
        return self._new(self._coerce(other).element - self.element)

    def __mul__(self, other):
        return self._new(self.element * self._coerce(other).element)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            raise AlgebraError('negative power of a polynomial')
        return self._new(self.element ** int(power))

    def scale(self, coefficient):
        return self._new(self.element.mul_ground(self.field(coefficient)))

    def mul_term(self, exponent, coefficient):
        '''
        Multiply by the term coefficient * X^exponent

        Args:
            exponent (ExponentVector): monomial exponent
            coefficient: field element
        Returns:
            Polynomial: the product
        '''
        return self._new(self.element.mul_term((tuple(exponent), self.field(coefficient))))

    def divide_monomial(self, exponent):
        '''Exact division by X^exponent'''
        exponent = ExponentVector(exponent)
        if not all(exponent.divides(ExponentVector(m)) for m in self.element):
            raise AlgebraError('{e} does not divide {f}'.format(e=exponent, f=self))
        return self._new(self.element.quo_term((exponent.entries, self.field.one)))

    def support(self):
        '''Exponents of the nonzero terms, increasing in the local order'''
        return sorted(ExponentVector(m) for m in self.element)

    def coefficient(self, exponent):
        return self.element.get(tuple(exponent), self.field.zero)

    def order(self):
        '''Minimal total degree of the support, INFINITY for zero'''
        if not self.element:
            return INFINITY
        return min(sum(m) for m in self.element)

    def degree(self):
        '''Maximal total degree of the support, NEG_INFINITY for zero'''
        if not self.element:
            return NEG_INFINITY
        return max(sum(m) for m in self.element)

    def initial_exponent(self):
        if not self.element:
            raise AlgebraError('no initial exponent')
        return ExponentVector(min(self.element, key=_local_key))

    def initial_coefficient(self):
        return self.element[min(self.element, key=_local_key)]

    def initial_monomial(self):
        first = min(self.element, key=_local_key) if self.element else None
        return self._filtered(lambda m: m == first)

    def homogeneous_part(self, degree):
        return self._filtered(lambda m: sum(m) == degree)

    def truncated(self, degree):
        '''Drop the terms of total degree above the given degree'''
        return self._filtered(lambda m: sum(m) <= degree)

    def variable_power(self, index=0):
        '''Largest power of the given variable dividing the polynomial (0 for zero)'''
        if not self.element:
            return 0
        return min(m[index] for m in self.element)

    def monic(self):
        '''Scale so that the initial coefficient becomes one'''
        return self._new(self.element.quo_ground(self.initial_coefficient()))

    def embed(self, num_vars, offset=0):
        '''
        View the polynomial in a larger ring

        Args:
            num_vars (int): number of variables of the target ring
            offset (int): index in the target ring of variable 0
        Returns:
            Polynomial: the same polynomial in num_vars variables
        '''
        if offset + self.num_vars > num_vars:
            raise DimensionMismatch('cannot embed {a} variables into {b}'.format(a=self.num_vars, b=num_vars))
        head, tail = (0,) * offset, (0,) * (num_vars - offset - self.num_vars)
        ring = polynomial_ring(num_vars, self.field)
        return Polynomial.from_element(ring.from_dict({head + m + tail: c for m, c in self.element.items()}),
                                       num_vars, self.field)

    def change_field(self, field):
        '''
        Map the coefficients into another field

        Rational coefficients map into a prime field through numerator and denominator.

        Args:
            field (Field): target field
        Returns:
            Polynomial: the image polynomial
        '''
        if field == self.field:
            return self
        return Polynomial({m: field.convert(c, self.field) for m, c in self.element.items()}, self.num_vars, field)

    def evaluate(self, point):
        '''
        Value at a point

        Args:
            point (sequence): one field element (or int) per variable
        Returns:
            field element
        '''
        if len(point) != self.num_vars:
            raise DimensionMismatch('point of length {a} for {b} variables'.format(a=len(point), b=self.num_vars))
        if not self.element:
            return self.field.zero
        return self.element(*[self.field(value) for value in point])

    def derivative(self, alpha):
        '''
        Partial derivative d^alpha

        Args:
            alpha (sequence): number of derivations per variable
        Returns:
            Polynomial: the derivative
        '''
        alpha = tuple(alpha)
        if len(alpha) != self.num_vars:
            raise DimensionMismatch('multi-index of length {a} for {b} variables'.format(a=len(alpha), b=self.num_vars))
        terms = {}
        for monom, coefficient in self.element.items():
            if any(a > e for a, e in zip(alpha, monom)):
                continue
            factor = 1
            for a, e in zip(alpha, monom):
                for step in range(a):
                    factor *= e - step
            terms[tuple(e - a for e, a in zip(monom, alpha))] = coefficient * self.field(factor)
        return self._new(self.ring.from_dict(terms))

    def substitute(self, images, truncate=None):
        '''
        Compose with a polynomial map

        Args:
            images (list): one Polynomial per variable, all in the same target ring
            truncate (int): when given, drop every term of total degree above it (in the target ring)
        Returns:
            Polynomial: f(images[0], images[1], ...)
        '''
        if len(images) != self.num_vars:
            raise DimensionMismatch('{a} images for {b} variables'.format(a=len(images), b=self.num_vars))
        if not images:
            return self
        target = images[0]
        if any(image.field != self.field or image.num_vars != target.num_vars for image in images):
            raise DimensionMismatch('images must share the ring and the field of the polynomial')
        ring = target.ring

        def cut(element):
            if truncate is None:
                return element
            return ring.from_dict({m: c for m, c in element.items() if sum(m) <= truncate})

        powers = [[ring.one] for _ in images]

        def power_of(index, exponent):
            cache = powers[index]
            while len(cache) <= exponent:
                cache.append(cut(cache[-1] * images[index].element))
            return cache[exponent]

        result = ring.zero
        for monom, coefficient in self.element.items():
            term = ring.ground_new(coefficient)
            for index, power in enumerate(monom):
                if power:
                    term = cut(term * power_of(index, power))
                    if not term:
                        break
            result += term
        return Polynomial.from_element(result, target.num_vars, target.field)

    def render(self, names=None):
        '''
        Text form of the polynomial, terms increasing in the local order

        Args:
            names (list): variable names, defaults to x1..xm
        Returns:
            str: polynomial text accepted by parse_polynomial
        '''
        if names is None:
            names = variable_names(self.num_vars, with_t=False)
        if not self.element:
            return '0'
        text = ''
        for exponent in self.support():
            coefficient = self.field.render(self.coefficient(exponent))
            negative = coefficient.startswith('-')
            if negative:
                coefficient = coefficient[1:]
            factors = []
            for name, power in zip(names, exponent.entries):
                if power == 1:
                    factors.append(name)
                elif power > 1:
                    factors.append('{name}^{power}'.format(name=name, power=power))
            if coefficient != '1' or not factors:
                factors.insert(0, coefficient)
            term = '*'.join(factors)
            if not text:
                text = '-' + term if negative else term
            else:
                text += (' - ' if negative else ' + ') + term
        return text

    def __repr__(self):
        return self.render()


class TruncatedSeries(object):
    '''Univariate series in t known modulo t^(precision+1)'''

    def __init__(self, polynomial, precision):
        self.polynomial = polynomial.truncated(precision)
        self.precision = precision

    @property
    def order(self):
        return self.polynomial.order()

    def is_zero(self):
        return self.polynomial.is_zero()

    @property
    def nonzero(self):
        '''Provably nonzero at this precision'''
        return not self.polynomial.is_zero()

    def coefficients(self):
        return [self.polynomial.coefficient((power,)) for power in range(self.precision + 1)]

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.precision == other.precision and self.polynomial == other.polynomial
        return self.polynomial == other

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return '{poly} + O(t^{n})'.format(poly=self.polynomial.render([T_NAME]), n=self.precision + 1)


class Arc(object):
    '''
    Truncated arc t -> A_0 + A_1 t + ... + A_i t^i in K^n

    A_0 is the base point, the origin unless given.
    '''

    def __init__(self, coefficients, field=None, n=None, base=None):
        '''
        Initializer for a truncated arc

        Args:
            coefficients (sequence): vectors A_1..A_i, each of length n
            field (Field): coefficient field, rationals by default
            n (int): ambient dimension, required when there are no coefficients
            base (sequence): base point A_0, None for the origin
        '''
        self.field = field if field is not None else rationals()
        vectors = [tuple(self.field(value) for value in vector) for vector in coefficients]
        if n is None:
            if vectors:
                n = len(vectors[0])
            elif base is not None:
                n = len(base)
            else:
                raise DimensionMismatch('arc dimension unknown')
        for vector in vectors:
            if len(vector) != n:
                raise DimensionMismatch('arc coefficient of length {a}, expected {n}'.format(a=len(vector), n=n))
        if base is not None:
            base = tuple(self.field(value) for value in base)
            if len(base) != n:
                raise DimensionMismatch('base point of length {a}, expected {n}'.format(a=len(base), n=n))
            if not any(base):
                base = None
        self.n = n
        self.coefficients = tuple(vectors)
        self.base = base

    @classmethod
    def from_coordinates(cls, coordinates, field=None):
        '''
        Build an arc from univariate polynomials in t

        Args:
            coordinates (list): one univariate Polynomial per ambient coordinate
            field (Field): coefficient field, taken from the polynomials by default
        Returns:
            Arc: arc whose order is the largest degree among the coordinates
        '''
        if field is None:
            field = coordinates[0].field if coordinates else rationals()
        order = max([0] + [poly.degree() for poly in coordinates if poly])
        vectors = [[poly.coefficient((k,)) for poly in coordinates] for k in range(1, order + 1)]
        base = [poly.coefficient((0,)) for poly in coordinates]
        return cls(vectors, field, n=len(coordinates), base=base)

    @property
    def order(self):
        return len(self.coefficients)

    def at_origin(self):
        return self.base is None

    def base_point(self):
        if self.base is None:
            return (self.field.zero,) * self.n
        return self.base

    def coefficient(self, k):
        '''A_k, with A_0 the base point and zero vectors beyond the truncation'''
        if k == 0:
            return self.base_point()
        if k <= self.order:
            return self.coefficients[k - 1]
        return (self.field.zero,) * self.n

    def coordinate(self, j):
        '''Coordinate j as a univariate Polynomial in t'''
        terms = {(k,): self.coefficient(k)[j] for k in range(self.order + 1)}
        return Polynomial(terms, 1, self.field)

    def coordinates(self):
        return [self.coordinate(j) for j in range(self.n)]

    def truncate(self, i):
        '''The truncation of order i, zero padded when i exceeds the order'''
        vectors = [self.coefficient(k) for k in range(1, i + 1)]
        return Arc(vectors, self.field, n=self.n, base=self.base)

    extended = truncate

    def with_coefficient(self, k, vector):
        '''Copy of the arc with A_k replaced (k >= 1), zero padding as needed'''
        vectors = [self.coefficient(index) for index in range(1, max(k, self.order) + 1)]
        vectors[k - 1] = tuple(vector)
        return Arc(vectors, self.field, n=self.n, base=self.base)

    def lift(self, j):
        '''
        The arc (t, A_{j+1} t + A_{j+2} t^2 + ...) of K^(n+1) traced on the j-th transform

        Args:
            j (int): transform index, 0 <= j
        Returns:
            Arc: arc in n+1 coordinates, t first
        '''
        zero, one = self.field.zero, self.field.one
        vectors = [(one,) + tuple(self.coefficient(j + 1))]
        for k in range(2, self.order - j + 1):
            vectors.append((zero,) + tuple(self.coefficient(j + k)))
        return Arc(vectors, self.field, n=self.n + 1)

    def __sub__(self, other):
        if other.n != self.n or other.field != self.field:
            raise DimensionMismatch('arcs in K^{a} and K^{b}'.format(a=self.n, b=other.n))
        order = max(self.order, other.order)
        vectors = [[a - b for a, b in zip(self.coefficient(k), other.coefficient(k))] for k in range(1, order + 1)]
        base = [a - b for a, b in zip(self.base_point(), other.base_point())]
        return Arc(vectors, self.field, n=self.n, base=base)

    def __eq__(self, other):
        if not isinstance(other, Arc) or other.n != self.n:
            return False
        order = max(self.order, other.order)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(order + 1))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def render(self):
        return '({coords})'.format(coords=', '.join(poly.render([T_NAME]) for poly in self.coordinates()))

    def __repr__(self):
        return self.render()


def order(f):
    '''
    Order of a polynomial at the origin

    Args:
        f (Polynomial): polynomial
    Returns:
        int or INFINITY: minimal total degree of the support
    '''
    return f.order()


def initial_exponent(f):
    '''
    Initial exponent nu(f): the smallest exponent of the support in the local order

    Args:
        f (Polynomial): nonzero polynomial
    Returns:
        ExponentVector: nu(f)
    '''
    return f.initial_exponent()


def initial_monomial(f):
    return f.initial_monomial()


def compose_arc(f, arc, precision):
    '''
    Evaluate a polynomial along an arc, modulo t^(precision+1)

    Args:
        f (Polynomial): polynomial in arc.n variables
        arc (Arc): the arc
        precision (int): highest power of t kept
    Returns:
        TruncatedSeries: f(arc(t)) truncated; its nonzero flag tells whether it is provably nonzero
    '''
    if f.num_vars != arc.n:
        raise DimensionMismatch('polynomial in {a} variables along an arc in K^{b}'.format(a=f.num_vars, b=arc.n))
    if precision < 0:
        raise AlgebraError('negative precision')
    coordinates = [poly.change_field(f.field) for poly in arc.coordinates()] if arc.field != f.field else arc.coordinates()
    return TruncatedSeries(f.substitute(coordinates, truncate=precision), precision)


def quadratic_substitute(f, a):
    '''
    The chart (t, X) -> (t, t(A + X)) of the blowup along direction A

    Args:
        f (Polynomial): polynomial in t, X_1..X_n (t is variable 0)
        a (sequence): direction A in K^n
    Returns:
        Polynomial: f(t, t(A_1 + X_1), ..., t(A_n + X_n))
    '''
    n = f.num_vars - 1
    if len(a) != n:
        raise DimensionMismatch('direction of length {a} for {n} space variables'.format(a=len(a), n=n))
    t = Polynomial.variable(0, f.num_vars, f.field)
    images = [t] + [t * (Polynomial.variable(j + 1, f.num_vars, f.field) + f.field(value)) for j, value in enumerate(a)]
    return f.substitute(images)


def partial_derivative(f, alpha):
    return f.derivative(alpha)


def multi_indices(m, k):
    '''All multi-indices of N^m with total degree at most k, increasing in degree'''
    for degree in range(k + 1):
        for alpha in product(range(degree + 1), repeat=m):
            if sum(alpha) == degree:
                yield alpha


def derivative_ideal(f, k):
    '''
    Generators of the ideal of partial derivatives of order at most k

    Args:
        f (Polynomial): polynomial
        k (int): maximal derivation order
    Returns:
        list: the nonzero derivatives d^alpha f with |alpha| <= k
    '''
    derivatives = [f.derivative(alpha) for alpha in multi_indices(f.num_vars, k)]
    return [g for g in derivatives if g]


class PolynomialParser(object):
    '''
    Polynomial text parser

    Accepted text: integers, variables, + - * / ^ (or **), parentheses. Division is only allowed by
    nonzero constants. The text is first checked against the Python expression grammar so that every
    error carries its line and column, then read by sympy's parse_expr and converted into the ring.
    '''

    ALLOWED_NODES = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Name, ast.Load, ast.Constant, ast.Tuple,
                     ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.UAdd, ast.USub)

    def __init__(self, names, field=None, aliases=None):
        '''
        Initializer for a parser

        Args:
            names (list): variable names, in variable order
            field (Field): coefficient field
            aliases (dict): extra names mapped onto entries of names
        '''
        self.names = list(names)
        self.field = field if field is not None else rationals()
        self.aliases = dict(DEFAULT_ALIASES if aliases is None else aliases)
        self.symbols = {name: Symbol(name) for name in self.names}
        for alias in self.aliases:
            target = self._resolve(alias)
            if target is not None and alias not in self.symbols:
                self.symbols[alias] = Symbol(target)
        self.ring = PolyRing([Symbol(name) for name in self.names], QQ, lex)

    def _resolve(self, name):
        name = self.aliases.get(name, name)
        if name in self.aliases and name not in self.names:
            name = self.aliases[name]
        return name if name in self.names else None

    @staticmethod
    def _source(text):
        '''
        Python form of the text: ^ spelled ** and the whole wrapped in parentheses

        Returns:
            tuple: the source and, per line, the original 0-based column of every source column
        '''
        lines = text.split('\n')
        converted, columns = [], []
        for number, line in enumerate(lines):
            source, origin = ('(', [0]) if number == 0 else ('', [])
            for column, char in enumerate(line):
                if char == '^':
                    source += '**'
                    origin += [column, column]
                else:
                    source += char
                    origin.append(column)
            if number == len(lines) - 1:
                source += ')'
                origin.append(len(line))
            origin.append(len(line))
            converted.append(source)
            columns.append(origin)
        return '\n'.join(converted), columns

    @staticmethod
    def _position(columns, line, offset):
        '''1-based (line, column) in the original text of a 0-based source offset'''
        line = min(max(line or 1, 1), len(columns))
        origin = columns[line - 1]
        return line, origin[min(max(offset or 0, 0), len(origin) - 1)] + 1

    def _error(self, message, columns, node):
        line, column = self._position(columns, getattr(node, 'lineno', 1), getattr(node, 'col_offset', 0))
        return ParseError(message, line, column)

    def _check(self, text, allow_tuple=False):
        '''
        Syntax and vocabulary check of one polynomial (or a tuple when allowed)

        Returns:
            ast.Expression: the checked tree
        '''
        if not text.strip():
            raise ParseError('empty polynomial', 1, 1)
        source, columns = self._source(text)
        try:
            tree = ast.parse(source, mode='eval')
        except SyntaxError as err:
            line, column = self._position(columns, err.lineno, (err.offset or 1) - 1)
            raise ParseError(err.msg or 'invalid syntax', line, column)
        if isinstance(tree.body, ast.Tuple) and not (allow_tuple and tree.body.elts):
            raise self._error('expected a single polynomial', columns, tree.body)
        for node in ast.walk(tree):
            if not isinstance(node, self.ALLOWED_NODES):
                raise self._error('unsupported expression', columns, node)
            if isinstance(node, ast.Tuple) and node is not tree.body:
                raise self._error('unexpected tuple', columns, node)
            if isinstance(node, ast.Name) and self._resolve(node.id) is None:
                raise self._error('unknown variable {name!r}'.format(name=node.id), columns, node)
            if isinstance(node, ast.Constant) and (type(node.value) is not int):
                raise self._error('only integer constants are allowed', columns, node)
            if isinstance(node, (ast.BinOp, ast.UnaryOp)) and not isinstance(node.op, self.ALLOWED_NODES):
                raise self._error('unsupported operator', columns, getattr(node, 'right', node))
            if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
                if not isinstance(node.right, ast.Constant) or type(node.right.value) is not int:
                    raise self._error('exponent must be a non-negative integer', columns, node.right)
            if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Div):
                if any(isinstance(inner, ast.Name) for inner in ast.walk(node.right)):
                    raise self._error('division by a non-constant', columns, node.right)
                if isinstance(node.right, ast.Constant) and node.right.value == 0:
                    raise self._error('division by zero', columns, node.right)
        return tree

    def _convert(self, expression, line=1, column=1):
        try:
            element = self.ring.from_expr(expression)
        except (TypeError, ValueError) as err:
            raise ParseError('not a polynomial ({err})'.format(err=err), line, column)
        return Polynomial({monom: coefficient for monom, coefficient in element.items()}, len(self.names), self.field)

    def _read(self, text, allow_tuple=False):
        self._check(text, allow_tuple)
        try:
            value = parse_expr('(' + text + ')', local_dict=dict(self.symbols), transformations=TRANSFORMATIONS)
        except (SyntaxError, TypeError, ValueError, ZeroDivisionError) as err:
            raise ParseError('not a polynomial ({err})'.format(err=err), 1, 1)
        if isinstance(value, tuple):
            return [self._convert(item) for item in value]
        return self._convert(value)

    def parse(self, text):
        '''Parse a single polynomial'''
        return self._read(text)

    def parse_list(self, text, separator=';'):
        '''Parse polynomials separated by the separator, a trailing separator is allowed'''
        segments = text.split(separator)
        if len(segments) > 1 and not segments[-1].strip():
            segments.pop()
        values = []
        line, column = 1, 1
        for segment in segments:
            try:
                values.append(self._read(segment))
            except ParseError as err:
                if err.line == 1:
                    raise ParseError(err.message, line, column + err.column - 1)
                raise ParseError(err.message, line + err.line - 1, err.column)
            newlines = segment.count('\n')
            if newlines:
                line, column = line + newlines, len(segment) - segment.rfind('\n') + 1
            else:
                column += len(segment) + 1
        return values

    def parse_tuple(self, text):
        '''Parse a parenthesized, comma separated tuple of polynomials'''
        stripped = text.strip()
        if not stripped.startswith('(') or not stripped.endswith(')'):
            raise ParseError('expected a parenthesized tuple', 1, 1)
        values = self._read(text, allow_tuple=True)
        return values if isinstance(values, list) else [values]


def infer_num_vars(text, aliases=None):
    '''
    Number of space variables a text refers to

    Args:
        text (str): polynomial text using x1..xn (or aliases)
        aliases (dict): alias names
    Returns:
        int: largest index used (at least 1)
    '''
    aliases = dict(DEFAULT_ALIASES if aliases is None else aliases)
    largest = 1
    for name in re.findall(r'[A-Za-z_][A-Za-z_0-9]*', text):
        name = aliases.get(name, name)
        match = re.match(r'^x(\d+)$', name)
        if match:
            largest = max(largest, int(match.group(1)))
    return largest


def parse_polynomial(text, names, field=None, aliases=None):
    '''
    Parse a polynomial

    Args:
        text (str): polynomial text
        names (list): variable names in variable order
        field (Field): coefficient field
        aliases (dict): extra names
    Returns:
        Polynomial: the parsed polynomial
    '''
    return PolynomialParser(names, field, aliases).parse(text)


def parse_germ(text, n=None, field=None, with_t=False):
    '''
    Parse a semicolon separated list of polynomials in x1..xn

    Args:
        text (str): generators
        n (int): number of space variables, inferred when None
        field (Field): coefficient field
        with_t (bool): parse in t, x1..xn instead of x1..xn
    Returns:
        list: the generators
    '''
    if n is None:
        n = infer_num_vars(text)
    generators = PolynomialParser(variable_names(n, with_t=with_t), field).parse_list(text)
    logging.debug('Parsed {count} generator(s) in {n} variable(s)'.format(count=len(generators), n=n))
    return generators


def parse_arc(text, field=None):
    '''
    Parse an arc written as a tuple of polynomials in t, for example "(t^3, t^2)"

    Args:
        text (str): arc text
        field (Field): coefficient field
    Returns:
        Arc: the arc; its order is the largest degree in t
    '''
    coordinates = PolynomialParser([T_NAME], field, aliases={}).parse_tuple(text)
    return Arc.from_coordinates(coordinates)
