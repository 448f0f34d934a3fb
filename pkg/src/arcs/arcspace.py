#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''
Metric utilities on arcs

Distances between truncated arcs, balls around an arc, and the exact minimum of ord(f o theta) over a
ball, read off the orders of the strict transforms of f along the arc.
'''

import logging
import random
from itertools import product

from .algebra import INFINITY, AlgebraError, DimensionMismatch, compose_arc
from .nash import transform_chain

DEFAULT_SPAN = 10


class ArcDistance(object):
    '''
    Distance e^-ord between two arcs, stored as the exact integer ord

    ord 0 stands for arcs at distinct base points (distance 1). INFINITY means the arcs agree on every
    known coefficient; up_to_precision then flags that only truncations were compared.
    '''

    def __init__(self, order, up_to_precision=False):
        self.order = order
        self.up_to_precision = up_to_precision

    def __eq__(self, other):
        if isinstance(other, ArcDistance):
            return self.order == other.order
        return self.order == other

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.order)

    def as_dict(self):
        return {
            'ord': 'oo' if self.order == INFINITY else self.order,
            'up_to_precision': self.up_to_precision,
        }

    def __repr__(self):
        return 'ArcDistance(ord={o})'.format(o=self.order)


def arc_distance(a, b, exact=True):
    '''
    Order of the difference of two arcs

    Args:
        a (Arc): first arc
        b (Arc): second arc
        exact (bool): arcs are polynomial (zero beyond their order); when False only the common
            truncation is compared
    Returns:
        ArcDistance: ord of the difference, the minimum over the coordinates
    '''
    if a.n != b.n:
        raise DimensionMismatch('arcs in K^{a} and K^{b}'.format(a=a.n, b=b.n))
    if a.field != b.field:
        raise AlgebraError('arcs over {a} and {b}'.format(a=a.field, b=b.field))
    if a.base_point() != b.base_point():
        return ArcDistance(0)
    last = max(a.order, b.order) if exact else min(a.order, b.order)
    for k in range(1, last + 1):
        if a.coefficient(k) != b.coefficient(k):
            return ArcDistance(k)
    return ArcDistance(INFINITY, up_to_precision=True)


def in_ball(theta, arc, i):
    '''Membership of theta in the ball B_i(arc): ord(theta - arc) > i'''
    distance = arc_distance(theta, arc)
    return distance.order == INFINITY or distance.order > i


def min_order_on_ball(f, arc, i):
    '''
    Exact minimum of ord(f o theta) over the arcs theta with ord(theta - arc) > i

    The minimum is m_0(f_0) + ... + m_0(f_i), f_j being the strict transforms of f along the arc. It is
    taken over arcs with coefficients in an infinite extension of the field; over a small prime field
    it need not be attained, see generic_ball_tail.

    Args:
        f (Polynomial): nonzero polynomial in arc.n variables
        arc (Arc): the arc, zero beyond its order
        i (int): radius, i >= 0
    Returns:
        int: the minimum, between m_0(f) and m_0(f)(i + 1)
    '''
    if f.is_zero():
        raise AlgebraError('zero polynomial')
    if i < 0:
        raise AlgebraError('negative ball radius {i}'.format(i=i))
    chain = transform_chain(f, arc, i)
    orders = [g.order() for g in chain]
    logging.debug('Transform orders along the arc: {orders}'.format(orders=orders))
    return sum(orders)


def ball_arc(arc, i, tail):
    '''
    The arc arc^i + t^(i+1) * tail

    Args:
        arc (Arc): center
        i (int): truncation order of the center
        tail (sequence): vector of K^n, or a list of such vectors for the coefficients of t^(i+1), t^(i+2), ...
    Returns:
        Arc: an arc of the ball B_i(arc)
    '''
    vectors = list(tail) if tail and isinstance(tail[0], (list, tuple)) else [tail]
    theta = arc.truncate(i)
    for offset, vector in enumerate(vectors):
        theta = theta.with_coefficient(i + 1 + offset, vector)
    return theta


def ball_order(f, arc, i, tail):
    '''
    ord(f o theta) for theta = arc^i + t^(i+1) * tail

    Args:
        f (Polynomial): polynomial in arc.n variables
        arc (Arc): center of the ball
        i (int): radius
        tail (sequence): tail vector or vectors, see ball_arc
    Returns:
        int or INFINITY: the order of the exact composition
    '''
    theta = ball_arc(arc, i, tail)
    precision = max(0, f.degree()) * max(1, theta.order)
    return compose_arc(f, theta, precision).order


def generic_ball_tail(f, arc, i):
    '''
    A tail vector a with In(f_i)(1, a) != 0, or None when the coefficient field has none

    For such a, theta = arc^i + t^(i+1) a attains the minimum of ord(f o theta) over the ball. The
    dehomogenized initial form has degree m, so over the rationals (or GF(p) with p > m) it cannot
    vanish on all of {0..m}^n. Over a prime field with p <= m it may vanish on all of GF(p)^n: every
    arc of the ball over GF(p) then has a larger order, and the minimum is only reached over an
    extension of the field.

    Args:
        f (Polynomial): nonzero polynomial
        arc (Arc): center
        i (int): radius
    Returns:
        tuple: the first suitable integer vector of the grid, None when there is none
    '''
    if f.is_zero():
        raise AlgebraError('zero polynomial')
    last = transform_chain(f, arc, i)[-1]
    m = last.order()
    initial = last.homogeneous_part(m)
    size = m + 1
    if f.field.characteristic():
        size = min(size, f.field.characteristic())
    for point in product(range(size), repeat=f.num_vars):
        if initial.evaluate((1,) + point):
            return point
    logging.warning('The initial form of the last transform vanishes on all of {field}^{n}'.format(field=f.field, n=f.num_vars))
    return None


def sample_ball_orders(f, arc, i, samples, seed, span=DEFAULT_SPAN):
    '''
    Orders of f along random arcs of the ball B_i(arc)

    Args:
        f (Polynomial): polynomial
        arc (Arc): center
        i (int): radius
        samples (int): number of random arcs, at least 1
        seed (int): seed of the random generator
        span (int): range of the random integer tail coefficients
    Returns:
        list: ord(f o theta) per sample (INFINITY when the composition vanishes)
    '''
    if samples < 1:
        raise AlgebraError('at least one sample is needed')
    rng = random.Random(seed)
    orders = []
    for _ in range(samples):
        tail = [[rng.randint(-span, span) for _ in range(arc.n)] for _ in range(rng.randint(1, 3))]
        orders.append(ball_order(f, arc, i, tail))
    logging.debug('Sampled ball orders: {orders}'.format(orders=orders))
    return orders
