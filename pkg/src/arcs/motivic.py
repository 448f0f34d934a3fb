#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''
Grothendieck-ring bookkeeping for the principal strata of X_1^k + ... + X_n^k + Y^2k

Expressions are polynomials in the class symbols [V_{p,k}] (V_{p,k} = {1 + x_1^k + ... + x_p^k = 0}
in A^p) with coefficients rational functions of the Lefschetz class L. Finite-field specialization
sends L to q and [V_{p,k}] to its number of F_q-points, which the census checks by enumeration.
'''

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product

from sympy import ZZ, factorint, isprime
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_pow_mod, gf_strip
from sympy.polys.fields import field

from .algebra import NEG_INFINITY, AlgebraError, Arc, Polynomial, PrimeField
from .nash import GermIdeal, nash_sequences
from .standard_basis import strict_transform

CENSUS_GUARD = 10 ** 9
LEFSCHETZ_FIELD, LEFSCHETZ = field('L', ZZ)


class ClassSym(object):
    '''Class [V_{p,k}] of the affine hypersurface 1 + x_1^k + ... + x_p^k = 0 in A^p'''

    def __init__(self, p, k):
        self.p = p
        self.k = k

    @property
    def dimension(self):
        return self.p - 1

    def key(self):
        return (self.p, self.k)

    def __eq__(self, other):
        return isinstance(other, ClassSym) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash(('V', self.p, self.k))

    def __repr__(self):
        return '[V_{{{p},{k}}}]'.format(p=self.p, k=self.k)


UNIT = ()


def _monomial_name(monomial):
    if monomial == UNIT:
        return '1'
    return '*'.join(repr(symbol) for symbol in monomial)


def _lefschetz_coefficients(poly):
    '''Integer coefficients of a polynomial in L, constant term first'''
    terms = poly.terms()
    if not terms:
        return [0]
    coefficients = [0] * (max(monom[0] for monom, _ in terms) + 1)
    for monom, coefficient in terms:
        coefficients[monom[0]] = int(coefficient)
    return coefficients


def _lefschetz_degree(poly):
    return len(_lefschetz_coefficients(poly)) - 1


def _evaluate(poly, q):
    return sum(c * q ** power for power, c in enumerate(_lefschetz_coefficients(poly)))


class MotivicExpr(object):
    '''
    Polynomial in class symbols over the rational functions in L

    Terms are stored as a map from a monomial (sorted tuple of ClassSym, UNIT for the class of a point)
    to its coefficient in Q(L).
    '''

    def __init__(self, terms=None):
        self.terms = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(sorted(monomial))
            total = self.terms.get(monomial, LEFSCHETZ_FIELD.zero) + LEFSCHETZ_FIELD(coefficient)
            if total:
                self.terms[monomial] = total
            else:
                self.terms.pop(monomial, None)

    @classmethod
    def constant(cls, value):
        '''Expression value * [point], value an int or a rational function of L'''
        return cls({UNIT: value})

    @classmethod
    def symbol(cls, p, k):
        return cls({(ClassSym(p, k),): 1})

    @classmethod
    def lefschetz(cls):
        return cls.constant(LEFSCHETZ)

    def _coerce(self, other):
        if isinstance(other, MotivicExpr):
            return other
        return MotivicExpr.constant(other)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            total = terms.get(monomial, LEFSCHETZ_FIELD.zero) + coefficient
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return MotivicExpr(terms)

    __radd__ = __add__

    def __neg__(self):
        return MotivicExpr({monomial: -coefficient for monomial, coefficient in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        result = MotivicExpr()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                result = result + MotivicExpr({tuple(sorted(m1 + m2)): c1 * c2})
        return result

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            raise AlgebraError('negative power of a class')
        result = MotivicExpr.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return False
        return self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def coefficient(self, monomial=UNIT):
        return self.terms.get(tuple(monomial), LEFSCHETZ_FIELD.zero)

    def specialize(self, q):
        '''
        Counting-measure value over F_q

        Args:
            q (int): prime power
        Returns:
            Fraction: value with L = q and [V_{p,k}] = #V_{p,k}(F_q)
        '''
        total = Fraction(0)
        for monomial, coefficient in self.terms.items():
            count = 1
            for symbol in monomial:
                count *= count_v(symbol.p, symbol.k, q)
            denominator = _evaluate(coefficient.denom, q)
            if not denominator:
                raise AlgebraError('denominator vanishes at L = {q}'.format(q=q))
            total += Fraction(count * _evaluate(coefficient.numer, q), denominator)
        return total

    def virtual_dimension(self):
        '''
        Largest L-degree of a term plus the dimension of its class

        Returns:
            int or NEG_INFINITY: the virtual dimension, NEG_INFINITY for zero
        '''
        if not self.terms:
            return NEG_INFINITY
        return max(_lefschetz_degree(c.numer) - _lefschetz_degree(c.denom) + sum(s.dimension for s in monomial)
                   for monomial, c in self.terms.items())

    def closed_field(self):
        '''Value over an algebraically closed field of characteristic 0, where [V_{1,k}] = k'''
        result = MotivicExpr()
        for monomial, coefficient in self.terms.items():
            factor = 1
            kept = []
            for symbol in monomial:
                if symbol.p == 1:
                    factor *= symbol.k
                else:
                    kept.append(symbol)
            result = result + MotivicExpr({tuple(kept): coefficient * factor})
        return result

    def as_dict(self):
        '''JSON form: monomial name -> numerator and denominator coefficient lists, constant term first'''
        return {_monomial_name(monomial): {'num': _lefschetz_coefficients(c.numer), 'den': _lefschetz_coefficients(c.denom)}
                for monomial, c in sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))}

    def render(self):
        if not self.terms:
            return '0'
        parts = []
        for monomial, c in sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0])):
            parts.append('({c})*{m}'.format(c=c.as_expr(), m=_monomial_name(monomial)))
        return ' + '.join(parts)

    def __repr__(self):
        return self.render()


def prime_power(q):
    '''
    Split a prime power

    Args:
        q (int): field size
    Returns:
        tuple: (p, d) with q = p^d
    '''
    factors = factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise AlgebraError('point counts need a prime power, got {q}'.format(q=q))
    p, d = next(iter(factors.items()))
    return int(p), int(d)


def field_modulus(p, d):
    '''First monic irreducible polynomial of degree d over GF(p), in dense galoistools form'''
    for tail in product(range(p), repeat=d):
        modulus = [1] + list(tail)
        if gf_irreducible_p(modulus, p, ZZ):
            return modulus
    raise AlgebraError('no irreducible polynomial of degree {d} over GF({p})'.format(d=d, p=p))


def count_v(p, k, q):
    '''
    Number of points of 1 + x_1^k + ... + x_p^k = 0 in F_q^p

    F_q is built as GF(r)[z]/(g) for q = r^d and g irreducible of degree d; its elements are the
    residues of degree below d.

    Args:
        p (int): number of variables
        k (int): exponent
        q (int): prime power
    Returns:
        int: the point count
    '''
    r, d = prime_power(q)
    modulus = field_modulus(r, d)
    powers = Counter()
    for coefficients in product(range(r), repeat=d):
        element = gf_strip(list(coefficients))
        powers[tuple(gf_pow_mod(element, k, modulus, r, ZZ))] += 1
    sums = Counter({(1,): 1})
    for _ in range(p):
        following = Counter()
        for value, count in sums.items():
            for power, multiplicity in powers.items():
                following[tuple(gf_add(list(value), list(power), r, ZZ))] += count * multiplicity
        sums = following
    return sums[()]


def cone_class(n, k):
    '''[C_k] = ([V_{n-1,k}] + ... + [V_{1,k}])(L - 1), the nonzero zeros of x_1^k + ... + x_n^k'''
    classes = MotivicExpr()
    for p in range(1, n):
        classes = classes + MotivicExpr.symbol(p, k)
    return classes * (LEFSCHETZ - 1)


def w_class(n, k):
    '''[W_k] = [V_{n,k}](L - 1), the points with x_1^k + ... + x_n^k + y^2k = 0 and y != 0'''
    return MotivicExpr.symbol(n, k) * (LEFSCHETZ - 1)


def geometric_sum(a, start, stop=None):
    '''
    Sum of L^(-a v) for v from start to stop, the infinite series when stop is None

    Args:
        a (int): exponent step, a >= 1 for the infinite series
        start (int): first index
        stop (int): last index, included
    Returns:
        rational function of L
    '''
    if stop is None:
        if a < 1:
            raise AlgebraError('divergent geometric series of step {a}'.format(a=a))
        return LEFSCHETZ ** (-a * start) / (1 - LEFSCHETZ ** (-a))
    if stop < start:
        return LEFSCHETZ_FIELD.zero
    if a == 0:
        return LEFSCHETZ_FIELD(stop - start + 1)
    return (LEFSCHETZ ** (-a * start) - LEFSCHETZ ** (-a * (stop + 1))) / (1 - LEFSCHETZ ** (-a))


def partial_sum(n, k, i):
    '''
    Level-i term T_i = [P^i] L^(-ni) of the principal strata

    T_i = [C_k] L sum_{v<=i} L^-nv
        + [W_k] sum_{v<=i/2} L^-(2n-1)v
        + [C_k](L-1) sum_{2<=v<=i} L^-nv sum_{l<=min(v-1,i-v)} L^-(n-1)l

    Args:
        n (int): number of X variables
        k (int): exponent
        i (int): level, i >= 1
    Returns:
        MotivicExpr: T_i
    '''
    if i < 1:
        raise AlgebraError('level must be at least 1, got {i}'.format(i=i))
    cone = cone_class(n, k)
    inner = LEFSCHETZ_FIELD.zero
    for v in range(2, i + 1):
        inner = inner + LEFSCHETZ ** (-n * v) * geometric_sum(n - 1, 1, min(v - 1, i - v))
    return (cone * (LEFSCHETZ * geometric_sum(n, 1, i))
            + w_class(n, k) * geometric_sum(2 * n - 1, 1, i // 2)
            + cone * ((LEFSCHETZ - 1) * inner))


def limit_of_partial_sums(n, k):
    '''
    Limit of T_i as i grows, summing each series over v first

    Once i is large the bound min(v-1, i-v) is v-1, so the last series is
    sum_{v>=2} L^-nv (L^-(n-1) - L^-(n-1)v) / (1 - L^-(n-1)).

    Args:
        n (int): number of X variables, n >= 2
        k (int): exponent
    Returns:
        MotivicExpr: the limit
    '''
    if n < 2:
        raise AlgebraError('the series diverge for n < 2')
    cone = cone_class(n, k)
    last = (LEFSCHETZ ** (1 - n) * geometric_sum(n, 2) - geometric_sum(2 * n - 1, 2)) / (1 - LEFSCHETZ ** (1 - n))
    return (cone * (LEFSCHETZ * geometric_sum(n, 1))
            + w_class(n, k) * geometric_sum(2 * n - 1, 1)
            + cone * ((LEFSCHETZ - 1) * last))


def volume_terms(n, k):
    '''
    The three terms of the motivic volume

    The last double series is summed over v >= l + 1 first, which factors it into
    sum_l L^-(2n-1)l times L^-n / (1 - L^-n).

    Args:
        n (int): number of X variables, n >= 3
        k (int): exponent, k >= 2
    Returns:
        list: [C_k] L(L-1)/(L^n-1)-type term, the [W_k] term, the mixed term
    '''
    if n < 3 or k < 2:
        raise AlgebraError('the closed form needs n >= 3 and k >= 2, got n={n}, k={k}'.format(n=n, k=k))
    cone = cone_class(n, k)
    return [
        cone * (LEFSCHETZ * geometric_sum(n, 1)),
        w_class(n, k) * geometric_sum(2 * n - 1, 1),
        cone * ((LEFSCHETZ - 1) * geometric_sum(n, 1) * geometric_sum(2 * n - 1, 1)),
    ]


def volume_closed_form(n, k):
    '''Motivic volume of the arcs through the origin of X_1^k + ... + X_n^k + Y^2k = 0'''
    total = MotivicExpr()
    for term in volume_terms(n, k):
        total = total + term
    return total


def render_closed_form(n, k):
    '''Text of the closed form over an algebraically closed field, [V_{1,k}] written k'''
    classes = ' + '.join(['[V_{{{p},{k}}}]'.format(p=p, k=k) for p in range(n - 1, 1, -1)] + [str(k)])
    return ('({c})L(L - 1)/(L^{n} - 1) + [V_{{{n},{k}}}](L - 1)/(L^{m} - 1)'
            ' + ({c})(L - 1)^2/((L^{n} - 1)(L^{m} - 1))').format(c=classes, n=n, k=k, m=2 * n - 1)


def ishii_kollar():
    '''Volume for X_1^3 + X_2^3 + X_3^3 + X_4^3 + Y^6'''
    return volume_closed_form(4, 3)


class CensusResult(object):
    '''Number of principal level-i truncations of X_1^k + ... + X_n^k + Y^2k over F_q'''

    def __init__(self, n, k, level, q, count, visited, elapsed):
        self.n = n
        self.k = k
        self.level = level
        self.q = q
        self.count = count
        self.visited = visited
        self.elapsed = elapsed

    @property
    def total(self):
        return self.q ** ((self.n + 1) * self.level)

    def as_dict(self):
        return {
            'n': self.n,
            'k': self.k,
            'level': self.level,
            'q': self.q,
            'count': self.count,
            'total': self.total,
            'visited': self.visited,
            'elapsed': '{s:.3f}'.format(s=self.elapsed),
        }

    def __repr__(self):
        return 'CensusResult(count={c} of {t})'.format(c=self.count, t=self.total)


def germ_polynomial(n, k, coefficient_field):
    '''X_1^k + ... + X_n^k + Y^2k in K[X_1..X_n, Y]'''
    terms = {}
    for index in range(n):
        terms[tuple(k if position == index else 0 for position in range(n + 1))] = 1
    terms[(0,) * n + (2 * k,)] = 1
    return Polynomial(terms, n + 1, coefficient_field)


def census_polynomial(n, k, coefficient_field):
    '''The same polynomial in K[t, X_1..X_n, Y]'''
    return germ_polynomial(n, k, coefficient_field).embed(n + 2, offset=1)


class _LowestForm(object):
    '''Lowest homogeneous form of f_j with its gradient, evaluated at t = 1'''

    def __init__(self, f):
        self.form = f.homogeneous_part(f.order())
        n = f.num_vars
        self.gradient = [self.form.derivative(tuple(1 if position == index else 0 for position in range(n)))
                         for index in range(1, n)]

    def value(self, point):
        return self.form.evaluate((1,) + point)

    def smooth_zero(self, point):
        return any(partial.evaluate((1,) + point) for partial in self.gradient)


def _count_subtree(f, depth, points):
    '''
    Principal completions of a prefix

    Args:
        f (Polynomial): transform reached by the prefix
        depth (int): number of coefficients still to choose
        points (list): F_q^(n+1)
    Returns:
        tuple: (count, visited nodes)
    '''
    lowest = _LowestForm(f)
    count, visited = 0, 1
    for point in points:
        if lowest.value(point):
            continue
        if depth == 1:
            if lowest.smooth_zero(point):
                count += 1
        else:
            sub_count, sub_visited = _count_subtree(strict_transform(f, point), depth - 1, points)
            count += sub_count
            visited += sub_visited
    return count, visited


def _census_chunk(n, k, level, q, first_points):
    '''Census over the prefixes starting with the given first coefficients (worker entry point)'''
    coefficient_field = PrimeField(q)
    f = census_polynomial(n, k, coefficient_field)
    points = list(product(coefficient_field.elements(), repeat=n + 1))
    lowest = _LowestForm(f)
    count, visited = 0, 0
    for values in first_points:
        point = tuple(coefficient_field(value) for value in values)
        visited += 1
        if lowest.value(point):
            continue
        if level == 1:
            if lowest.smooth_zero(point):
                count += 1
            continue
        sub_count, sub_visited = _count_subtree(strict_transform(f, point), level - 1, points)
        count += sub_count
        visited += sub_visited
    return count, visited


def _census_exhaustive(n, k, level, q):
    coefficient_field = PrimeField(q)
    germ = GermIdeal([germ_polynomial(n, k, coefficient_field)])
    points = list(product(range(q), repeat=n + 1))
    count = 0
    for vectors in product(points, repeat=level):
        report = nash_sequences(germ, Arc(vectors, coefficient_field, n=n + 1), level, with_bound=False)
        if report.principal():
            count += 1
    return count, q ** ((n + 1) * level)


def check_census_parameters(n, k, level, q):
    '''Raise AlgebraError unless the census is defined and within the guard'''
    if n < 1 or k < 1 or level < 1:
        raise AlgebraError('census needs n, k and the level at least 1')
    if not isprime(q):
        raise AlgebraError('census needs a prime q, got {q}'.format(q=q))
    if q == 2 or k % q == 0:
        raise AlgebraError('bad characteristic: q={q} divides 2k={twok}'.format(q=q, twok=2 * k))
    if q ** ((n + 1) * level) > CENSUS_GUARD:
        raise AlgebraError('census guard exceeded: {q}^{e} > {g}'.format(q=q, e=(n + 1) * level, g=CENSUS_GUARD))


def census(n, k, level, q, threads=1, exhaustive=False):
    '''
    Count the level-i truncations whose i-th transform has order 1 and an initial exponent off the t-axis

    A prefix whose transform becomes a unit is pruned; the last coefficient is principal exactly when
    it is a smooth zero of the dehomogenized lowest form of the previous transform.

    Args:
        n (int): number of X variables
        k (int): exponent
        level (int): truncation level i
        q (int): prime, not dividing 2k
        threads (int): worker processes, split over the first coefficient
        exhaustive (bool): run the Nash sequence pipeline on every tuple instead
    Returns:
        CensusResult: the count
    '''
    check_census_parameters(n, k, level, q)
    start = time.perf_counter()
    if exhaustive:
        count, visited = _census_exhaustive(n, k, level, q)
    else:
        first_points = list(product(range(q), repeat=n + 1))
        if threads > 1:
            chunks = [first_points[index::threads] for index in range(threads)]
            with ProcessPoolExecutor(max_workers=threads) as executor:
                results = list(executor.map(_census_chunk, *zip(*[(n, k, level, q, chunk) for chunk in chunks])))
        else:
            results = [_census_chunk(n, k, level, q, first_points)]
        count = sum(result[0] for result in results)
        visited = sum(result[1] for result in results)
    result = CensusResult(n, k, level, q, count, visited, time.perf_counter() - start)
    logging.info('Census n={n} k={k} level={i} q={q}: {c} of {t}'.format(n=n, k=k, i=level, q=q, c=count, t=result.total))
    return result


def census_formula(n, k, level, q):
    '''Value predicted by the partial sum: specialize(T_i, q) * q^(n i)'''
    return partial_sum(n, k, level).specialize(q) * q ** (n * level)
