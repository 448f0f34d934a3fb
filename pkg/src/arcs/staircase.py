#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''
Diagrams of initial exponents

A diagram N of N^m is stable under translation by N^m, and is stored by its vertices: the finite
antichain of minimal elements. Diagrams are totally ordered by comparing their vertex sequences.
'''

import logging
from fractions import Fraction
from math import comb, factorial

from sympy import Poly, Symbol, interpolate

from .algebra import NEG_INFINITY, DimensionMismatch, ExponentVector, AlgebraError

LESS = 'less'
EQUAL = 'equal'
GREATER = 'greater'

K_SYMBOL = Symbol('k')


class Staircase(object):
    '''Diagram N of N^m, given by its sorted vertices'''

    def __init__(self, m, vertices=()):
        '''
        Initializer for a diagram

        Args:
            m (int): ambient lattice dimension
            vertices (iterable): exponents generating the diagram, minimalized on construction
        '''
        self.m = m
        exponents = set()
        for vertex in vertices:
            if not isinstance(vertex, ExponentVector):
                vertex = ExponentVector(vertex)
            if len(vertex) != m:
                raise DimensionMismatch('exponent {e} is not in N^{m}'.format(e=vertex, m=m))
            exponents.add(vertex)
        kept = []
        for vertex in sorted(exponents):
            if not any(other.divides(vertex) for other in kept):
                kept.append(vertex)
        self.vertices = tuple(kept)

    @classmethod
    def full(cls, m):
        '''The diagram N^m itself, diagram of the unit ideal'''
        return cls(m, [ExponentVector.zero(m)])

    def is_empty(self):
        return not self.vertices

    def is_full(self):
        return any(vertex.degree == 0 for vertex in self.vertices)

    def contains(self, exponent):
        '''
        Membership test

        Args:
            exponent (ExponentVector): lattice point
        Returns:
            bool: True when some vertex lies below the point componentwise
        '''
        if not isinstance(exponent, ExponentVector):
            exponent = ExponentVector(exponent)
        return any(vertex.divides(exponent) for vertex in self.vertices)

    __contains__ = contains

    def contains_pure_t(self):
        '''True when some (m, 0, ..., 0) lies in the diagram'''
        return any(vertex.is_pure_t() for vertex in self.vertices)

    def bound(self):
        '''Degree of the join of all vertices; the counting function is polynomial from there on'''
        if not self.vertices:
            return 0
        join = self.vertices[0]
        for vertex in self.vertices[1:]:
            join = join.lcm(vertex)
        return join.degree

    def hilbert(self, k):
        return hilbert(self, k)

    def __eq__(self, other):
        return isinstance(other, Staircase) and self.m == other.m and self.vertices == other.vertices

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.m, self.vertices))

    def as_list(self):
        return [vertex.as_list() for vertex in self.vertices]

    def __repr__(self):
        return 'Staircase({m}, {vertices})'.format(m=self.m, vertices=list(self.vertices))


class HilbertData(object):
    '''Values and polynomial of the counting function of a diagram'''

    def __init__(self, values, coefficients, stabilization, dimension, multiplicity, zero_ideal=False):
        '''
        Initializer for Hilbert-Samuel data

        Args:
            values (list): H(0), ..., H(k_max)
            coefficients (tuple): Fraction coefficients of the Hilbert-Samuel polynomial, constant term first
            stabilization (int): degree from which the values follow the polynomial
            dimension: degree of the polynomial, NEG_INFINITY for the zero polynomial
            multiplicity (int): dimension! times the leading coefficient, 0 for the zero polynomial
            zero_ideal (bool): flags the empty diagram (the full power series ring)
        '''
        self.values = list(values)
        self.coefficients = tuple(coefficients)
        self.stabilization = stabilization
        self.dimension = dimension
        self.multiplicity = multiplicity
        self.zero_ideal = zero_ideal

    def polynomial_value(self, k):
        return sum(c * k ** power for power, c in enumerate(self.coefficients))

    def __call__(self, k):
        if k < len(self.values):
            return self.values[k]
        return int(self.polynomial_value(k))

    def __eq__(self, other):
        if not isinstance(other, HilbertData) or self.coefficients != other.coefficients:
            return False
        limit = max(self.stabilization, other.stabilization)
        return all(self(k) == other(k) for k in range(limit + 1))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def as_dict(self):
        return {
            'values': list(self.values),
            'poly': [_render_fraction(c) for c in self.coefficients],
            'dim': None if self.dimension == NEG_INFINITY else self.dimension,
            'mult': self.multiplicity,
        }

    def __repr__(self):
        return 'HilbertData(dim={d}, mult={e}, values={v})'.format(d=self.dimension, e=self.multiplicity, v=self.values)


def _render_fraction(value):
    if value.denominator == 1:
        return value.numerator
    return '{p}/{q}'.format(p=value.numerator, q=value.denominator)


def minimalize(exponents, m=None):
    '''
    Vertex antichain of the diagram generated by a set of exponents

    Args:
        exponents (iterable): exponents of N^m
        m (int): ambient dimension, needed when the set is empty
    Returns:
        Staircase: the diagram with exactly the minimal elements as vertices
    '''
    exponents = [e if isinstance(e, ExponentVector) else ExponentVector(e) for e in exponents]
    dimensions = set(len(e) for e in exponents)
    if m is not None:
        dimensions.add(m)
    if len(dimensions) > 1:
        raise DimensionMismatch('exponents of mixed dimensions {dims}'.format(dims=sorted(dimensions)))
    if not dimensions:
        raise AlgebraError('ambient dimension of an empty diagram must be given')
    return Staircase(dimensions.pop(), exponents)


def compare(first, second):
    '''
    Total order on diagrams

    Vertex sequences are compared lexicographically, the shorter one padded with infinite entries.

    Args:
        first (Staircase): first diagram
        second (Staircase): second diagram
    Returns:
        str: LESS, EQUAL or GREATER
    '''
    if first.m != second.m:
        raise DimensionMismatch('diagrams of N^{a} and N^{b}'.format(a=first.m, b=second.m))
    for a, b in zip(first.vertices, second.vertices):
        if a < b:
            return LESS
        if b < a:
            return GREATER
    if len(first.vertices) > len(second.vertices):
        return LESS
    if len(first.vertices) < len(second.vertices):
        return GREATER
    return EQUAL


def hilbert(staircase, k):
    '''
    Number of points of N^m outside the diagram with total degree at most k

    Inclusion-exclusion over vertex subsets; a subset whose join exceeds degree k contributes nothing,
    and neither does any larger subset.

    Args:
        staircase (Staircase): the diagram
        k (int): degree, k >= 0
    Returns:
        int: H_N(k)
    '''
    if k < 0:
        raise AlgebraError('negative degree {k}'.format(k=k))
    m = staircase.m
    vertices = staircase.vertices
    total = 0
    stack = [(0, ExponentVector.zero(m), 1)]
    while stack:
        start, join, sign = stack.pop()
        total += sign * comb(k - join.degree + m, m)
        for index in range(start, len(vertices)):
            extended = join.lcm(vertices[index])
            if extended.degree <= k:
                stack.append((index + 1, extended, -sign))
    return total


def hilbert_samuel(staircase, k_max=None):
    '''
    Hilbert-Samuel data of a diagram

    Args:
        staircase (Staircase): the diagram
        k_max (int): last degree for which values are stored, defaults to bound + m
    Returns:
        HilbertData: values, interpolated polynomial, dimension and multiplicity
    '''
    m = staircase.m
    bound = staircase.bound()
    if k_max is None:
        k_max = bound + m
    values = [hilbert(staircase, k) for k in range(max(k_max, bound + m) + 1)]
    points = [(k, values[k]) for k in range(bound, bound + m + 1)]
    polynomial = Poly(interpolate(points, K_SYMBOL), K_SYMBOL)
    coefficients = tuple(Fraction(int(c.p), int(c.q)) for c in reversed(polynomial.all_coeffs()))
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients = coefficients[:-1]
    if coefficients == (0,):
        dimension, multiplicity = NEG_INFINITY, 0
    else:
        dimension = len(coefficients) - 1
        multiplicity = factorial(dimension) * coefficients[-1]
        if multiplicity.denominator != 1 or multiplicity <= 0:
            raise AlgebraError('non-integral multiplicity {e}'.format(e=multiplicity))
        multiplicity = int(multiplicity)
    if staircase.is_empty():
        logging.debug('Empty diagram: the whole power series ring in {m} variables'.format(m=m))
    return HilbertData(values[:max(k_max, bound) + 1], coefficients, bound, dimension, multiplicity,
                       zero_ideal=staircase.is_empty())
