#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''
Standard bases in the local ring

Standard bases for the local degree order, computed by S-pair completion with Mora's ecart-driven
normal form, the diagram N(I) they carry, distinguished bases up to a degree bound, an independent
linear-algebra count of the Hilbert-Samuel function, and strict transforms of ideals.
'''

import logging
from math import comb

from sympy.polys.matrices import DomainMatrix

from .algebra import AlgebraError, ExponentVector, Polynomial, multi_indices, quadratic_substitute
from .staircase import Staircase, hilbert_samuel


def ecart(f):
    '''Gap between the degree of f and the degree of its initial monomial'''
    return f.degree() - f.initial_exponent().degree


def _cancel(h, g):
    '''Cancel the initial term of h with the multiple of g having the same initial exponent'''
    nu_h, nu_g = h.initial_exponent(), g.initial_exponent()
    factor = h.coefficient(nu_h) / g.coefficient(nu_g)
    return h - g.mul_term(nu_h / nu_g, factor)


def s_polynomial(f, g):
    '''
    S-polynomial of two polynomials with respect to their initial terms

    Args:
        f (Polynomial): first polynomial
        g (Polynomial): second polynomial
    Returns:
        Polynomial: the combination cancelling the join of the initial monomials
    '''
    nu_f, nu_g = f.initial_exponent(), g.initial_exponent()
    join = nu_f.lcm(nu_g)
    return f.mul_term(join / nu_f, g.coefficient(nu_g)) - g.mul_term(join / nu_g, f.coefficient(nu_f))


def weak_normal_form(f, generators):
    '''
    Mora's normal form

    The result h satisfies u*f = sum(a_i g_i) + h for some unit u, and either h is zero or its initial
    exponent is not divisible by any initial exponent of the generators.

    Args:
        f (Polynomial): polynomial to reduce
        generators (list): nonzero polynomials
    Returns:
        Polynomial: the weak normal form
    '''
    h = f
    reducers = [(g.initial_exponent(), ecart(g), g) for g in generators]
    while h:
        nu_h = h.initial_exponent()
        candidates = [(e, index) for index, (nu, e, g) in enumerate(reducers) if nu.divides(nu_h)]
        if not candidates:
            break
        _, index = min(candidates)
        nu_g, ecart_g, g = reducers[index]
        ecart_h = ecart(h)
        if ecart_g > ecart_h:
            reducers.append((nu_h, ecart_h, h))
        h = _cancel(h, g)
    return h


def tail_reduce(f, generators, degree_bound):
    '''
    Remove the terms of f lying in the diagram of the generators, up to a degree bound

    Terms of degree above the bound are kept as they are.

    Args:
        f (Polynomial): polynomial
        generators (list): nonzero polynomials
        degree_bound (int): largest degree of the terms to reduce
    Returns:
        Polynomial: f minus an element of the ideal of the generators
    '''
    initials = [(g.initial_exponent(), g) for g in generators]
    h = f
    while True:
        target = None
        for exponent in h.support():
            if exponent.degree > degree_bound:
                continue
            for nu, g in initials:
                if nu.divides(exponent):
                    target = (exponent, nu, g)
                    break
            if target:
                break
        if target is None:
            return h
        exponent, nu, g = target
        h = h - g.mul_term(exponent / nu, h.coefficient(exponent) / g.coefficient(nu))


def normal_form(f, generators, degree_bound=None):
    '''
    Local normal form

    Mora's weak normal form followed by division of the remaining terms up to a degree bound.

    Args:
        f (Polynomial): polynomial to reduce
        generators (list): polynomials (zeros are ignored)
        degree_bound (int): largest degree of the tail terms reduced, defaults to the degree of the weak normal form
    Returns:
        Polynomial: remainder r with f - r in the ideal up to a unit factor and no term of degree
        at most the bound divisible by an initial monomial of the generators
    '''
    generators = [g for g in generators if g]
    h = weak_normal_form(f, generators)
    if not h:
        return h
    if degree_bound is None:
        degree_bound = h.degree()
    return tail_reduce(h, generators, degree_bound)


class StandardBasis(object):
    '''Standard basis of an ideal of the local ring, with its diagram'''

    def __init__(self, generators, num_vars, field, distinguished=False, degree_bound=None):
        '''
        Initializer for a standard basis

        Args:
            generators (list): polynomials whose initial exponents are the vertices of the diagram
            num_vars (int): number of variables
            field (Field): coefficient field
            distinguished (bool): tails avoid the diagram up to degree_bound
            degree_bound (int): degree up to which tails were reduced
        '''
        self.generators = sorted(generators, key=lambda g: g.initial_exponent())
        self.num_vars = num_vars
        self.field = field
        self.diagram = Staircase(num_vars, [g.initial_exponent() for g in self.generators])
        self.distinguished = distinguished
        self.degree_bound = degree_bound

    def is_unit(self):
        return self.diagram.is_full()

    def normal_form(self, f, degree_bound=None):
        return normal_form(f, self.generators, degree_bound)

    def contains(self, f):
        '''Membership of f in the ideal of the local ring'''
        return not weak_normal_form(f, self.generators)

    def hilbert_samuel(self):
        return hilbert_samuel(self.diagram)

    def as_dict(self, names=None):
        return {
            'generators': [g.render(names) for g in self.generators],
            'diagram': self.diagram.as_list(),
            'distinguished': self.distinguished,
            'degree_bound': self.degree_bound,
        }

    def __repr__(self):
        return 'StandardBasis({gens}, diagram={d})'.format(gens=self.generators, d=list(self.diagram.vertices))


def _unit_basis(num_vars, field):
    return StandardBasis([Polynomial.constant(1, num_vars, field)], num_vars, field)


def standard_basis(generators, num_vars=None, field=None):
    '''
    Standard basis of the ideal generated by polynomials, for the local degree order

    S-pairs are processed in increasing degree of the join of their initial exponents, and each
    S-polynomial is reduced with Mora's normal form. The result is minimalized so that the initial
    exponents are exactly the vertices of N(I).

    Args:
        generators (list): polynomials, zeros dropped
        num_vars (int): number of variables, needed when all generators are zero
        field (Field): coefficient field, needed when all generators are zero
    Returns:
        StandardBasis: the basis and its diagram
    '''
    basis = [g for g in generators if g]
    if basis:
        num_vars, field = basis[0].num_vars, basis[0].field
    elif num_vars is None or field is None:
        raise AlgebraError('ring of an empty generator list must be given')
    if any(g.initial_exponent().degree == 0 for g in basis):
        logging.debug('Unit among the generators')
        return _unit_basis(num_vars, field)
    basis = [g.monic() for g in basis]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]

    def pair_key(pair):
        i, j = pair
        return (basis[i].initial_exponent().lcm(basis[j].initial_exponent()).degree, pair[1], pair[0])

    while pairs:
        pairs.sort(key=pair_key)
        i, j = pairs.pop(0)
        h = weak_normal_form(s_polynomial(basis[i], basis[j]), basis)
        if not h:
            continue
        if h.initial_exponent().degree == 0:
            logging.debug('Unit reached while completing the basis')
            return _unit_basis(num_vars, field)
        logging.debug('New element with initial exponent {nu}'.format(nu=h.initial_exponent()))
        basis.append(h.monic())
        pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))

    kept = []
    for g in sorted(basis, key=lambda g: (g.initial_exponent(), len(g.element))):
        if not any(other.initial_exponent().divides(g.initial_exponent()) for other in kept):
            kept.append(g)
    result = StandardBasis(kept, num_vars, field)
    logging.debug('Standard basis with {count} element(s), diagram {d}'.format(count=len(kept), d=list(result.diagram.vertices)))
    return result


def distinguished_basis(basis, degree_bound):
    '''
    Distinguished form of a standard basis, up to a degree bound

    Each element is made monic and its terms of degree at most the bound that lie in the diagram,
    other than the initial one, are reduced away.

    Args:
        basis (StandardBasis): a standard basis
        degree_bound (int): largest degree of the reduced tail terms
    Returns:
        StandardBasis: a basis flagged distinguished, recording the bound
    '''
    reduced = []
    for g in basis.generators:
        head = g.initial_monomial().monic()
        tail = tail_reduce(g.monic() - head, basis.generators, degree_bound)
        reduced.append(head + tail)
    return StandardBasis(reduced, basis.num_vars, basis.field, distinguished=True, degree_bound=degree_bound)


def hilbert_samuel_direct(generators, k, num_vars=None, field=None):
    '''
    Hilbert-Samuel function by linear algebra

    The quotient by I + M^(k+1) is spanned by the monomials of degree at most k; the image of I is
    spanned by the truncated multiples of the generators.

    Args:
        generators (list): polynomials
        k (int): degree, k >= 0
        num_vars (int): number of variables, needed when all generators are zero
        field (Field): coefficient field, needed when all generators are zero
    Returns:
        int: dim of K[[X]] / (I + M^(k+1))
    '''
    if k < 0:
        raise AlgebraError('negative degree {k}'.format(k=k))
    generators = [g for g in generators if g]
    if generators:
        num_vars, field = generators[0].num_vars, generators[0].field
    elif num_vars is None:
        raise AlgebraError('ring of an empty generator list must be given')
    columns = {ExponentVector(alpha): index for index, alpha in enumerate(multi_indices(num_vars, k))}
    rows = {}
    for g in generators:
        for mu in multi_indices(num_vars, k - g.order()):
            product = g.mul_term(ExponentVector(mu), 1).truncated(k)
            if product:
                rows[len(rows)] = {columns[e]: c for e, c in product.terms.items()}
    rank = 0
    if rows:
        rank = DomainMatrix(rows, (len(rows), len(columns)), field.domain).rank()
    return comb(k + num_vars, num_vars) - rank


def strict_transform(f, a):
    '''
    Strict transform of a polynomial along the chart (t, X) -> (t, t(A + X))

    Args:
        f (Polynomial): polynomial in t, X_1..X_n
        a (sequence): direction A in K^n
    Returns:
        Polynomial: the substitution divided by the largest power of t dividing it
    '''
    total = quadratic_substitute(f, a)
    power = total.variable_power(0)
    if not power:
        return total
    return total.divide_monomial(ExponentVector((power,) + (0,) * (f.num_vars - 1)))


def strict_transform_ideal(basis, a):
    '''
    Generators of the strict transform of an ideal

    Args:
        basis (StandardBasis): a standard basis of the ideal
        a (sequence): direction A in K^n
    Returns:
        list: strict transforms of the basis elements, generating the transformed ideal
    '''
    return [strict_transform(g, a) for g in basis.generators]
