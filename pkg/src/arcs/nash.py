#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''
Nash sequences of a germ along an arc

The germ X of K^n, given by polynomial generators, is followed along an arc by successive quadratic
transforms (t, X) -> (t, t(A_j + X)). Each step records the diagram of initial exponents of the
transformed ideal, its Hilbert-Samuel function and its multiplicity.
'''

import logging
import random
from fractions import Fraction
from itertools import combinations

from sympy.polys.matrices import DomainMatrix

from .algebra import (INFINITY, AlgebraError, Arc, DimensionMismatch, Polynomial, Undetermined,
                      compose_arc, derivative_ideal, multi_indices)
from .staircase import EQUAL, GREATER, Staircase, compare, hilbert_samuel
from .standard_basis import standard_basis, strict_transform, strict_transform_ideal

DEFAULT_PRECISION = 20
REGULAR = 'regular (witnessed)'
UNKNOWN = 'unknown at precision'


class GermIdeal(object):
    '''Germ at the origin of K^n given by generators vanishing there'''

    def __init__(self, generators, n=None):
        '''
        Initializer for a germ

        Args:
            generators (list): polynomials in x1..xn with zero constant term
            n (int): ambient dimension, taken from the generators by default
        '''
        generators = [g for g in generators if g]
        if n is None:
            if not generators:
                raise AlgebraError('the ambient dimension of a germ without generators must be given')
            n = generators[0].num_vars
        for g in generators:
            if g.num_vars != n:
                raise DimensionMismatch('generator in {a} variables for a germ of K^{n}'.format(a=g.num_vars, n=n))
            if g.order() == 0:
                raise AlgebraError('generator {g} does not vanish at the origin'.format(g=g))
        self.n = n
        self.generators = generators
        self.field = generators[0].field if generators else None

    @property
    def hypersurface(self):
        return len(self.generators) == 1

    def transform_ring_generators(self):
        '''Generators viewed in K[t, X], t free'''
        return [g.embed(self.n + 1, offset=1) for g in self.generators]

    def dimension(self):
        '''Dimension of the germ, read off the Hilbert-Samuel polynomial of its diagram'''
        if not self.generators:
            return self.n
        return standard_basis(self.generators).hilbert_samuel().dimension

    def __repr__(self):
        return 'GermIdeal({gens})'.format(gens=self.generators)


class NashStep(object):
    '''One step of the transform chain'''

    def __init__(self, index, generators, diagram, hilbert):
        '''
        Initializer for a step

        Args:
            index (int): step number j
            generators (list): generators of the transformed ideal, in K[t, X]
            diagram (Staircase): diagram of initial exponents of the ideal
            hilbert (HilbertData): Hilbert-Samuel data of the diagram
        '''
        self.index = index
        self.generators = generators
        self.diagram = diagram
        self.hilbert = hilbert

    @property
    def multiplicity(self):
        return self.hilbert.multiplicity

    @property
    def unit(self):
        return self.diagram.is_full()

    @property
    def smooth(self):
        return bool(self.diagram.vertices) and all(vertex.degree == 1 for vertex in self.diagram.vertices)

    def as_dict(self, names=None):
        return {
            'm': self.multiplicity,
            'hilbert': self.hilbert.as_dict(),
            'diagram': self.diagram.as_list(),
            'smooth': self.smooth,
            'generators': [g.render(names) for g in self.generators],
        }


class NashReport(object):
    '''Nash sequences of a germ along an arc, with stabilization information'''

    def __init__(self, germ, arc, steps, bound=None, arc_on_germ=None):
        self.germ = germ
        self.arc = arc
        self.steps = steps
        self.bound = bound
        self.arc_on_germ = arc_on_germ

    @property
    def multiplicities(self):
        return [step.multiplicity for step in self.steps]

    @property
    def diagrams(self):
        return [step.diagram for step in self.steps]

    @property
    def hilbert_functions(self):
        return [step.hilbert for step in self.steps]

    def stabilized_at(self):
        '''
        First step that is smooth (or a unit) and equal to every later step

        Returns:
            int or None: the step index, None when no such step is followed by another step
        '''
        for j, step in enumerate(self.steps[:-1]):
            if not (step.smooth or step.unit):
                continue
            if all(later.diagram == step.diagram for later in self.steps[j + 1:]):
                return j
        return None

    def smooth_from(self):
        '''First step from which every step is smooth'''
        start = None
        for j, step in enumerate(self.steps):
            if step.smooth:
                if start is None:
                    start = j
            else:
                start = None
        return start

    def principal(self):
        '''Multiplicity 1 at the last step and no pure-t exponent in its diagram'''
        last = self.steps[-1]
        return last.multiplicity == 1 and not last.diagram.contains_pure_t()

    def as_dict(self):
        names = ['t'] + ['x{index}'.format(index=index) for index in range(1, self.germ.n + 1)]
        return {
            'steps': [step.as_dict(names) for step in self.steps],
            'm': self.multiplicities,
            'stabilized_at': self.stabilized_at(),
            'smooth_from': self.smooth_from(),
            'bound_D': self.bound,
            'principal': self.principal(),
            'arc_on_germ': self.arc_on_germ,
        }

    def __repr__(self):
        return 'NashReport(m={m})'.format(m=self.multiplicities)


def _hypersurface_step(index, f):
    diagram = Staircase(f.num_vars, [f.initial_exponent()])
    return NashStep(index, [f], diagram, hilbert_samuel(diagram))


def _ideal_step(index, generators, num_vars, field):
    basis = standard_basis(generators, num_vars, field)
    return NashStep(index, basis.generators, basis.diagram, basis.hilbert_samuel()), basis


def nash_sequences(germ, arc, steps=None, precision=DEFAULT_PRECISION, with_bound=True):
    '''
    Nash sequences of a germ along an arc

    Step 0 is the germ K x X in K^(n+1); step j is the strict transform of step j-1 along A_j.
    Hypersurfaces skip basis completion: their diagram is the single vertex nu(f_j).

    Args:
        germ (GermIdeal): the germ
        arc (Arc): arc at the origin of K^n
        steps (int): last step, defaults to the order of the arc (coefficients beyond it are zero)
        precision (int): precision of the arc compositions for the bound and the liftability flag
        with_bound (bool): compute the smooth stabilization bound
    Returns:
        NashReport: the sequences
    '''
    if arc.n != germ.n:
        raise DimensionMismatch('arc in K^{a} for a germ of K^{n}'.format(a=arc.n, n=germ.n))
    if not arc.at_origin():
        raise AlgebraError('the arc must start at the origin')
    if steps is None:
        steps = arc.order
    num_vars = germ.n + 1
    field = germ.field if germ.field is not None else arc.field
    generators = germ.transform_ring_generators()
    direction = [[field.convert(value, arc.field) for value in arc.coefficient(j)] for j in range(steps + 1)]
    report_steps = []
    if germ.hypersurface:
        f = generators[0]
        for j in range(steps + 1):
            if j:
                f = strict_transform(f, direction[j])
            report_steps.append(_hypersurface_step(j, f))
            logging.debug('Step {j}: m = {m}, f = {f}'.format(j=j, m=report_steps[-1].multiplicity, f=f))
    else:
        for j in range(steps + 1):
            step, basis = _ideal_step(j, generators, num_vars, field)
            report_steps.append(step)
            logging.debug('Step {j}: m = {m}, diagram = {d}'.format(j=j, m=step.multiplicity, d=list(step.diagram.vertices)))
            generators = strict_transform_ideal(basis, direction[j + 1]) if j < steps else generators
    report = NashReport(germ, arc, report_steps)
    if germ.generators:
        report.arc_on_germ = arc_on_germ(germ, arc, precision)
        if with_bound:
            dimension = report_steps[0].hilbert.dimension - 1
            report.bound = smooth_stabilization_bound(germ, arc, precision, dimension)
    if report.stabilized_at() is not None:
        logging.info('Stabilized at step {j}'.format(j=report.stabilized_at()))
    return report


def arc_on_germ(germ, arc, precision=DEFAULT_PRECISION):
    '''True when every generator composes to zero at the given precision'''
    return all(compose_arc(g, arc, precision).is_zero() for g in germ.generators)


def generic_multiplicity_along_arc(f, arc, precision=DEFAULT_PRECISION):
    '''
    Generic multiplicity along the arc: the smallest k such that some partial derivative of f of
    order at most k does not vanish along the arc

    Args:
        f (Polynomial): polynomial in arc.n variables
        arc (Arc): the arc
        precision (int): precision of the compositions
    Returns:
        tuple: (k, D) with D the order along the arc of the ideal of derivatives of order at most k
    '''
    if f.num_vars != arc.n:
        raise DimensionMismatch('polynomial in {a} variables along an arc in K^{b}'.format(a=f.num_vars, b=arc.n))
    if f.is_zero():
        raise Undetermined('undetermined at this precision: the zero polynomial')
    for k in range(f.degree() + 1):
        orders = []
        for alpha in multi_indices(f.num_vars, k):
            if sum(alpha) != k:
                continue
            series = compose_arc(f.derivative(alpha), arc, precision)
            if series.nonzero:
                orders.append(series.order)
        if orders:
            return k, min(orders)
    raise Undetermined('undetermined at this precision {p}'.format(p=precision))


def determinant(matrix):
    '''Determinant of a square matrix of polynomials, computed by sympy over the polynomial ring'''
    first = matrix[0][0]
    rows = [[entry.element for entry in row] for row in matrix]
    value = DomainMatrix(rows, (len(rows), len(rows)), first.ring.to_domain()).det()
    return Polynomial.from_element(value, first.num_vars, first.field)


def jacobian_minors(generators, size):
    '''
    All minors of the given size of the Jacobian matrices of tuples of generators

    Args:
        generators (list): polynomials in the same ring
        size (int): number of rows and columns of the minors
    Returns:
        list: the nonzero minors
    '''
    if not generators or size <= 0:
        return []
    num_vars = generators[0].num_vars
    partials = [[g.derivative(tuple(1 if position == index else 0 for position in range(num_vars)))
                 for index in range(num_vars)] for g in generators]
    minors = []
    for rows in combinations(range(len(generators)), size):
        for columns in combinations(range(num_vars), size):
            minor = determinant([[partials[r][c] for c in columns] for r in rows])
            if minor:
                minors.append(minor)
    return minors


def singular_locus_generators(germ, dimension):
    '''Generators of the ideal of the germ plus the Jacobian minors of order n - d'''
    return list(germ.generators) + jacobian_minors(germ.generators, germ.n - dimension)


def smooth_stabilization_bound(germ, arc, precision=DEFAULT_PRECISION, dimension=None):
    '''
    Order along the arc of the ideal of the germ plus its Jacobian minors of order n - d

    From this step on the transforms along the arc are smooth.

    Args:
        germ (GermIdeal): reduced equidimensional germ
        arc (Arc): the arc
        precision (int): precision of the compositions
        dimension (int): dimension d of the germ, n - 1 for hypersurfaces by default
    Returns:
        int or None: the bound D, None when every composition vanishes at this precision
    '''
    if arc.n != germ.n:
        raise DimensionMismatch('arc in K^{a} for a germ of K^{n}'.format(a=arc.n, n=germ.n))
    if dimension is None:
        dimension = germ.n - 1 if germ.hypersurface else germ.dimension()
    orders = [compose_arc(g, arc, precision).order for g in singular_locus_generators(germ, dimension)]
    bound = min(orders) if orders else INFINITY
    if bound == INFINITY:
        logging.warning('Bound unknown: the arc may lie in the singular locus at precision {p}'.format(p=precision))
        return None
    return bound


def arc_regularity(germ, arc, precision=DEFAULT_PRECISION, dimension=None):
    '''
    Witness that the arc is not contained in the singular locus

    Args:
        germ (GermIdeal): the germ
        arc (Arc): an arc on the germ
        precision (int): precision of the compositions
        dimension (int): dimension of the germ
    Returns:
        str: REGULAR when some Jacobian minor does not vanish along the arc, UNKNOWN otherwise
    '''
    if dimension is None:
        dimension = germ.n - 1 if germ.hypersurface else germ.dimension()
    for minor in jacobian_minors(germ.generators, germ.n - dimension):
        if compose_arc(minor, arc, precision).nonzero:
            return REGULAR
    return UNKNOWN


def compare_sequences(first, second):
    '''
    Lexicographic comparison of the diagram sequences of two reports

    Args:
        first (NashReport): first report
        second (NashReport): second report
    Returns:
        str: LESS, EQUAL or GREATER
    '''
    if first.germ.n != second.germ.n:
        raise DimensionMismatch('reports for germs of K^{a} and K^{b}'.format(a=first.germ.n, b=second.germ.n))
    if len(first.steps) != len(second.steps):
        raise DimensionMismatch('reports with {a} and {b} steps'.format(a=len(first.steps), b=len(second.steps)))
    for a, b in zip(first.diagrams, second.diagrams):
        verdict = compare(a, b)
        if verdict != EQUAL:
            return verdict
    return EQUAL


def derivative_ideal_orders(report, k):
    '''
    Orders along the lifted arcs of the ideals of derivatives of the transforms

    For each step j of a hypersurface report, the order of the ideal generated by the partial
    derivatives of order at most k of f_j along (t, A_{j+1} t + A_{j+2} t^2 + ...).

    Args:
        report (NashReport): report of a hypersurface germ
        k (int): derivation order
    Returns:
        list: one order (int or INFINITY) per step
    '''
    if not report.germ.hypersurface:
        raise AlgebraError('derivative ideals are computed for hypersurfaces')
    arc = report.arc.extended(len(report.steps) - 1)
    orders = []
    for step in report.steps:
        f = step.generators[0]
        lifted = arc.lift(step.index)
        best = INFINITY
        for g in derivative_ideal(f, k):
            precision = max(0, g.degree()) * max(1, lifted.order)
            best = min(best, compose_arc(g, lifted, precision).order)
        orders.append(best)
    return orders


class SemicontinuityResult(object):
    '''Outcome of sampling the Nash sequences along a line of truncated arcs'''

    def __init__(self, generic, special, samples, verdict):
        self.generic = generic
        self.special = special
        self.samples = samples
        self.verdict = verdict

    @property
    def constant(self):
        return all(compare_sequences(self.generic, sample) == EQUAL for sample in self.samples)

    @property
    def violation(self):
        return not self.constant or self.verdict == GREATER

    def as_dict(self):
        return {
            'generic_m': self.generic.multiplicities,
            'special_m': self.special.multiplicities,
            'generic_diagrams': [d.as_list() for d in self.generic.diagrams],
            'special_diagrams': [d.as_list() for d in self.special.diagrams],
            'constant': self.constant,
            'verdict': self.verdict,
        }


def line_arc(base, direction, s):
    '''The arc base + s * direction, coefficientwise'''
    order = max(base.order, direction.order)
    field = base.field
    vectors = [[a + field(s) * b for a, b in zip(base.coefficient(k), direction.coefficient(k))]
               for k in range(1, order + 1)]
    return Arc(vectors, field, n=base.n)


def semicontinuity_check(germ, base, direction, parameters):
    '''
    Nash sequences along the line s -> base + s * direction

    Args:
        germ (GermIdeal): the germ
        base (Arc): the special arc, at s = 0
        direction (Arc): direction of the line
        parameters (list): nonzero parameters, the first one giving the generic value
    Returns:
        SemicontinuityResult: the generic value, the special value and the verdict generic vs special
    '''
    order = max(base.order, direction.order)
    special = nash_sequences(germ, base.extended(order), order, with_bound=False)
    samples = [nash_sequences(germ, line_arc(base, direction, s), order, with_bound=False) for s in parameters]
    generic = samples[0]
    verdict = compare_sequences(generic, special)
    logging.debug('Generic {g} vs special {s}: {v}'.format(g=generic.multiplicities, s=special.multiplicities, v=verdict))
    return SemicontinuityResult(generic, special, samples, verdict)


def random_arc(n, order, rng, span=5, field=None):
    '''Arc of the given order with integer coefficients drawn from [-span, span]'''
    return Arc([[rng.randint(-span, span) for _ in range(n)] for _ in range(order)], field, n=n)


def random_parameter(rng, span=10 ** 6):
    '''Nonzero rational parameter with large numerator and denominator'''
    return Fraction(rng.choice((-1, 1)) * rng.randint(1, span), rng.randint(1, 10 ** 3))


def sample_semicontinuity(germ, special, lines, samples, seed, span=5):
    '''
    Semicontinuity sampling over random lines through a special arc

    Args:
        germ (GermIdeal): the germ
        special (Arc): the arc at parameter 0 of every line
        lines (int): number of random lines
        samples (int): number of random parameters per line
        seed (int): seed of the random generator
        span (int): range of the integer direction coefficients
    Returns:
        list: one SemicontinuityResult per line
    '''
    rng = random.Random(seed)
    results = []
    for line in range(lines):
        direction = random_arc(germ.n, special.order, rng, span, special.field)
        parameters = [random_parameter(rng) for _ in range(samples)]
        result = semicontinuity_check(germ, special, direction, parameters)
        if result.violation:
            logging.warning('Line {line}: semicontinuity violated'.format(line=line))
        results.append(result)
    return results


def transform_chain(f, arc, steps):
    '''
    Strict transforms f_0, ..., f_steps of a hypersurface along an arc

    Args:
        f (Polynomial): polynomial in x1..xn
        arc (Arc): arc at the origin of K^n
        steps (int): last index
    Returns:
        list: the transforms, in K[t, X]
    '''
    if f.num_vars != arc.n:
        raise DimensionMismatch('polynomial in {a} variables along an arc in K^{b}'.format(a=f.num_vars, b=arc.n))
    current = f.embed(f.num_vars + 1, offset=1)
    chain = [current]
    for j in range(1, steps + 1):
        current = strict_transform(current, [f.field.convert(value, arc.field) for value in arc.coefficient(j)])
        chain.append(current)
    return chain
