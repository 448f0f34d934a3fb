#!/usr/bin/env python
# -*- coding: utf-8 -*-

import argparse
from abc import ABC, abstractmethod
from configparser import ConfigParser, NoSectionError, NoOptionError
import json
import logging
import sys
from fractions import Fraction

from .algebra import (DEFAULT_FIELD, AlgebraError, Field, ParseError, Undetermined,
                      is_infinite, parse_arc, parse_germ, parse_polynomial, variable_names)
from .arcspace import arc_distance, generic_ball_tail, ball_order, min_order_on_ball, sample_ball_orders
from .motivic import census, limit_of_partial_sums, partial_sum, render_closed_form, volume_closed_form
from .nash import (DEFAULT_PRECISION, GermIdeal, arc_regularity, generic_multiplicity_along_arc, nash_sequences,
                   sample_semicontinuity, smooth_stabilization_bound)
from .staircase import Staircase, compare, hilbert_samuel
from .standard_basis import distinguished_basis, hilbert_samuel_direct, standard_basis

try:
    from .__nashseq_version__ import version as nashseq_version
except ImportError:
    nashseq_version = 'version not available from scm'

__version__ = nashseq_version

DEFAULT_LOGLEVEL = 'warning'
DEFAULT_SAMPLES = 5
DEFAULT_THREADS = 1
DEFAULT_LINES = 20
CONFIG_SECTION = 'nashseq'

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_UNDETERMINED = 3


def set_logging_level(loglevel):
    '''
    Set the logging level

    Args:
        loglevel String representation of the loglevel
    '''
    numeric_level = getattr(logging, loglevel.upper(), None)
    if not isinstance(numeric_level, int):
        raise ValueError('Invalid log level: %s' % loglevel)
    logging.basicConfig(level=numeric_level, format='%(message)s')


def exact(value):
    '''
    JSON-ready exact number

    Args:
        value: int, Fraction or infinity sentinel
    Returns:
        int, or a string 'p/q', 'oo' or '-oo'
    '''
    if is_infinite(value):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return '{p}/{q}'.format(p=value.numerator, q=value.denominator)
    return value


def read_input(text):
    '''Inline text, or the content of a file when the text starts with @'''
    if text is not None and text.startswith('@'):
        with open(text[1:], 'r') as infile:
            return infile.read()
    return text


def parse_vertices(text):
    '''
    Parse exponent vectors written as '0,2,0; 0,1,1'

    Args:
        text (str): semicolon separated vectors of comma separated integers
    Returns:
        list: tuples of integers
    '''
    vectors = []
    column = 1
    for chunk in text.split(';'):
        if chunk.strip():
            try:
                vectors.append(tuple(int(entry) for entry in chunk.split(',')))
            except ValueError:
                raise ParseError('bad exponent vector {v!r}'.format(v=chunk.strip()), 1, column)
            if any(entry < 0 for entry in vectors[-1]):
                raise ParseError('negative exponent in {v!r}'.format(v=chunk.strip()), 1, column)
        column += len(chunk) + 1
    return vectors


class RunConfig(object):
    '''Validated run options: built-in defaults, overridden by the configuration file, overridden by flags'''

    OPTIONS = {
        'steps': int,
        'precision': int,
        'samples': int,
        'threads': int,
        'field': str,
        'loglevel': str,
    }

    DEFAULTS = {
        'steps': None,
        'precision': DEFAULT_PRECISION,
        'samples': DEFAULT_SAMPLES,
        'threads': DEFAULT_THREADS,
        'field': DEFAULT_FIELD,
        'loglevel': DEFAULT_LOGLEVEL,
    }

    def __init__(self, command, values):
        '''
        Initializer for a run configuration

        Args:
            command (str): sub-command name
            values (dict): option values, missing ones taken from DEFAULTS
        '''
        self.command = command
        self.values = dict(self.DEFAULTS)
        self.values.update({key: value for key, value in values.items() if value is not None})
        self.validate()

    def __getattr__(self, name):
        if name in RunConfig.OPTIONS:
            return self.values[name]
        raise AttributeError(name)

    def validate(self):
        for name in ('steps', 'precision'):
            if self.values[name] is not None and self.values[name] < 0:
                raise AlgebraError('{name} must be non-negative'.format(name=name))
        for name in ('samples', 'threads'):
            if self.values[name] < 1:
                raise AlgebraError('{name} must be at least 1'.format(name=name))
        self.coefficient_field = Field.from_name(self.values['field'])

    @classmethod
    def load(cls, cfgfile):
        '''
        Option values from the [nashseq] section of a configuration file

        Args:
            cfgfile (str): path of the INI file, or None
        Returns:
            tuple: (values found, names of the options falling back to defaults)
        '''
        values, missing = {}, []
        if cfgfile is None:
            return values, missing
        cfgparser = ConfigParser()
        if not cfgparser.read(cfgfile):
            raise AlgebraError('cannot read configuration file {file}'.format(file=cfgfile))
        for name, kind in sorted(cls.OPTIONS.items()):
            try:
                values[name] = kind(cfgparser.get(CONFIG_SECTION, name))
            except (NoSectionError, NoOptionError):
                missing.append(name)
            except ValueError:
                raise AlgebraError('bad value for {name} in {file}'.format(name=name, file=cfgfile))
        return values, missing

    @classmethod
    def from_arguments(cls, args):
        values, missing = cls.load(args.config)
        for name in cls.OPTIONS:
            flag = getattr(args, name, None)
            if flag is not None:
                values[name] = flag
                if name in missing:
                    missing.remove(name)
        config = cls(args.command, values)
        config.missing = missing
        return config


class Command(ABC):
    '''Base class for sub-commands, each subclass sets KIND and HELP and implements run'''

    KIND = None
    HELP = ''

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
    def find(cls, kind):
        for command in cls.get_subclasses():
            if command.KIND == kind:
                return command
        raise AlgebraError('Unknown command: {kind}'.format(kind=kind))

    @classmethod
    def add_arguments(cls, parser):
        pass

    @abstractmethod
    def run(self, args, config):
        '''
        Execute the command

        Args:
            args (argparse.Namespace): parsed command line
            config (RunConfig): merged configuration
        Returns:
            dict: the JSON document written to standard output
        '''


def _add_common(parser, steps=False, precision=False, field=False, samples=False, seed=False):
    if steps:
        parser.add_argument('--steps', type=int, dest='steps', default=None,
                            help='Last transform step (default: order of the arc)')
    if precision:
        parser.add_argument('--precision', type=int, dest='precision', default=None,
                            help='Highest power of t kept in arc compositions')
    if field:
        parser.add_argument('--field', type=str, dest='field', default=None,
                            help='Coefficient field: QQ or GF(p)')
    if samples:
        parser.add_argument('--samples', type=int, dest='samples', default=None,
                            help='Number of random samples')
    if seed:
        parser.add_argument('--seed', type=int, dest='seed', required=True,
                            help='Seed of the random generator')


class SeqCommand(Command):
    KIND = 'seq'
    HELP = 'Nash sequences of a germ along an arc'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--germ', type=str, required=True, help='Generators, separated by ";"')
        parser.add_argument('--arc', type=str, required=True, help='Arc, for example "(t^3, t^2)"')
        _add_common(parser, steps=True, precision=True, field=True)

    def run(self, args, config):
        arc = parse_arc(read_input(args.arc), config.coefficient_field)
        germ = GermIdeal(parse_germ(read_input(args.germ), arc.n, config.coefficient_field), arc.n)
        report = nash_sequences(germ, arc, config.steps, config.precision)
        result = report.as_dict()
        result['arc'] = arc.render()
        return result


class GenericCommand(Command):
    KIND = 'generic'
    HELP = 'Generic multiplicity along an arc and the smooth stabilization bound'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--germ', type=str, required=True, help='Polynomial of the hypersurface')
        parser.add_argument('--arc', type=str, required=True, help='Arc, for example "(0, t, 0)"')
        _add_common(parser, precision=True, field=True)

    def run(self, args, config):
        arc = parse_arc(read_input(args.arc), config.coefficient_field)
        generators = parse_germ(read_input(args.germ), arc.n, config.coefficient_field)
        if len(generators) != 1:
            raise AlgebraError('generic multiplicity needs a single polynomial')
        germ = GermIdeal(generators, arc.n)
        multiplicity, order = generic_multiplicity_along_arc(generators[0], arc, config.precision)
        return {
            'm_generic': multiplicity,
            'order': exact(order),
            'bound_D': smooth_stabilization_bound(germ, arc, config.precision),
            'regularity': arc_regularity(germ, arc, config.precision),
        }


class StaircaseCommand(Command):
    KIND = 'staircase'
    HELP = 'Minimalize a diagram, count its points and compare it with another one'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--vertices', type=str, required=True, help='Exponents, for example "0,2,0; 0,1,1"')
        parser.add_argument('--compare', type=str, dest='other', default=None, help='Second diagram to compare with')
        parser.add_argument('--kmax', type=int, dest='kmax', default=None, help='Last degree of the listed values')

    def run(self, args, config):
        vectors = parse_vertices(args.vertices)
        if not vectors:
            raise AlgebraError('empty diagram: give at least one vertex')
        staircase = Staircase(len(vectors[0]), vectors)
        result = {
            'vertices': staircase.as_list(),
            'hilbert': hilbert_samuel(staircase, args.kmax).as_dict(),
        }
        if args.other is not None:
            other_vectors = parse_vertices(args.other)
            result['compare'] = compare(staircase, Staircase(len(other_vectors[0]) if other_vectors else staircase.m,
                                                             other_vectors))
        return result


class StandardBasisCommand(Command):
    KIND = 'sb'
    HELP = 'Standard basis and diagram of an ideal of K[t, x1..xn]'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--ideal', type=str, required=True, help='Generators in t, x1..xn, separated by ";"')
        parser.add_argument('--n', type=int, dest='n', default=None, help='Number of x variables')
        parser.add_argument('--distinguished', type=int, dest='degree_bound', default=None,
                            help='Reduce tails up to this degree')
        parser.add_argument('--check', type=int, dest='check', default=None,
                            help='Compare with the linear algebra count up to this degree')
        _add_common(parser, field=True)

    def run(self, args, config):
        text = read_input(args.ideal)
        generators = parse_germ(text, args.n, config.coefficient_field, with_t=True)
        num_vars = generators[0].num_vars
        names = variable_names(num_vars - 1)
        basis = standard_basis(generators, num_vars, config.coefficient_field)
        if args.degree_bound is not None:
            basis = distinguished_basis(basis, args.degree_bound)
        result = basis.as_dict(names)
        hilbert = basis.hilbert_samuel()
        result['hilbert'] = hilbert.as_dict()
        if args.check is not None:
            direct = [hilbert_samuel_direct(generators, k, num_vars, config.coefficient_field) for k in range(args.check + 1)]
            result['direct'] = direct
            result['agree'] = direct == [basis.diagram.hilbert(k) for k in range(args.check + 1)]
        return result


class BallMinCommand(Command):
    KIND = 'ball-min'
    HELP = 'Minimum of ord(f o theta) over a ball of arcs'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--f', type=str, dest='f', required=True, help='Polynomial in x1..xn')
        parser.add_argument('--arc', type=str, required=True, help='Center of the ball')
        parser.add_argument('--level', type=int, required=True, help='Radius i of the ball')
        _add_common(parser, field=True, samples=True, seed=True)

    def run(self, args, config):
        arc = parse_arc(read_input(args.arc), config.coefficient_field)
        f = parse_polynomial(read_input(args.f), variable_names(arc.n, with_t=False), config.coefficient_field)
        minimum = min_order_on_ball(f, arc, args.level)
        tail = generic_ball_tail(f, arc, args.level)
        samples = sample_ball_orders(f, arc, args.level, config.samples, args.seed)
        return {
            'min': minimum,
            'attained': tail is not None,
            'bounds': [f.order(), f.order() * (args.level + 1)],
            'generic_tail': None if tail is None else list(tail),
            'generic_order': None if tail is None else exact(ball_order(f, arc, args.level, tail)),
            'samples': [exact(value) for value in samples],
        }


class DistanceCommand(Command):
    KIND = 'distance'
    HELP = 'Order of the difference of two arcs'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--a', type=str, dest='a', required=True, help='First arc')
        parser.add_argument('--b', type=str, dest='b', required=True, help='Second arc')
        parser.add_argument('--truncated', action='store_true', help='Compare only the common truncation')
        _add_common(parser, field=True)

    def run(self, args, config):
        a = parse_arc(read_input(args.a), config.coefficient_field)
        b = parse_arc(read_input(args.b), config.coefficient_field)
        return arc_distance(a, b, exact=not args.truncated).as_dict()


class MotivicCommand(Command):
    KIND = 'motivic'
    HELP = 'Motivic volume, partial sums, limits and finite-field census'

    @classmethod
    def add_arguments(cls, parser):
        subparsers = parser.add_subparsers(dest='motivic_command')
        subparsers.required = True
        volume = subparsers.add_parser('volume', help='Closed form of the volume')
        partial = subparsers.add_parser('partial', help='Level-i partial sum')
        count = subparsers.add_parser('census', help='Count the principal truncations over F_q')
        limit = subparsers.add_parser('limit', help='Limit of the partial sums next to the closed form')
        for sub in (volume, partial, count, limit):
            sub.add_argument('--n', type=int, dest='n', required=True, help='Number of X variables')
            sub.add_argument('--k', type=int, dest='k', required=True, help='Exponent')
        for sub in (partial, count):
            sub.add_argument('--level', type=int, required=True, help='Truncation level i')
        partial.add_argument('--q', type=int, dest='q', default=None, help='Also specialize at L = q, a prime power')
        count.add_argument('--q', type=int, dest='q', required=True, help='Prime field size')
        count.add_argument('--threads', type=int, dest='threads', default=None, help='Worker processes')
        count.add_argument('--exhaustive', action='store_true', help='Run the full pipeline on every tuple')
        volume.add_argument('--closed-field', dest='closed_field', action='store_true',
                            help='Write [V_{1,k}] as k')

    def run(self, args, config):
        if args.motivic_command == 'volume':
            volume = volume_closed_form(args.n, args.k)
            if args.closed_field:
                volume = volume.closed_field()
            return {'volume': volume.as_dict(), 'display': render_closed_form(args.n, args.k),
                    'virtual_dimension': exact(volume.virtual_dimension())}
        if args.motivic_command == 'partial':
            value = partial_sum(args.n, args.k, args.level)
            result = {'partial': value.as_dict(), 'virtual_dimension': exact(value.virtual_dimension())}
            if args.q is not None:
                result['specialized'] = exact(value.specialize(args.q))
            return result
        if args.motivic_command == 'census':
            return census(args.n, args.k, args.level, args.q, config.threads, args.exhaustive).as_dict()
        limit = limit_of_partial_sums(args.n, args.k)
        volume = volume_closed_form(args.n, args.k)
        return {'limit': limit.as_dict(), 'closed_form': volume.as_dict(), 'difference': (limit - volume).as_dict()}


class SemicontinuityCommand(Command):
    KIND = 'semicont'
    HELP = 'Sample the Nash sequences along random lines through a special arc'

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--germ', type=str, required=True, help='Generators, separated by ";"')
        parser.add_argument('--arc', type=str, required=True, help='Special arc, at parameter 0')
        parser.add_argument('--lines', type=int, default=DEFAULT_LINES, help='Number of random lines')
        _add_common(parser, field=True, samples=True, seed=True)

    def run(self, args, config):
        arc = parse_arc(read_input(args.arc), config.coefficient_field)
        germ = GermIdeal(parse_germ(read_input(args.germ), arc.n, config.coefficient_field), arc.n)
        results = sample_semicontinuity(germ, arc, args.lines, config.samples, args.seed)
        return {
            'lines': [result.as_dict() for result in results],
            'violations': sum(1 for result in results if result.violation),
        }


def build_parser():
    '''Argument parser with one sub-command per Command subclass'''
    parser = argparse.ArgumentParser(prog='nashseq')
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('-l', '--loglevel', type=str, dest='loglevel', default=None,
                        action='store', required=False,
                        help='Level for logging (error, warning, debug, info)')
    parser.add_argument('-c', '--config', type=str, dest='config', default=None,
                        help='Configuration file with a [nashseq] section')
    parser.add_argument('-o', '--output', type=str, dest='output', default=None,
                        help='Write the JSON report to this file instead of standard output')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    for command in sorted(Command.get_subclasses(), key=lambda command: command.KIND):
        command.add_arguments(subparsers.add_parser(command.KIND, help=command.HELP))
    return parser


def nashseq_wrapper(args):
    '''
    Main wrapper for the nashseq program

    Args:
        args (list): arguments as passed to program

    Returns:
        0 on success, 2 on input errors, 3 when the answer is undetermined at the given precision
    '''
    args = build_parser().parse_args(args)
    try:
        config = RunConfig.from_arguments(args)
        set_logging_level(config.loglevel)
        for name in config.missing:
            logging.info('Option {name} not in configuration file, using default'.format(name=name))
        result = Command.find(args.command)().run(args, config)
    except Undetermined as err:
        logging.error(str(err))
        return EXIT_UNDETERMINED
    except (AlgebraError, ValueError, ZeroDivisionError) as err:
        logging.error(str(err))
        return EXIT_INPUT_ERROR

    text = json.dumps(result, sort_keys=True, indent=2)
    if args.output:
        with open(args.output, 'w') as outfile:
            outfile.write(text + '\n')
    else:
        print(text)
    return EXIT_OK


def main():
    sys.exit(nashseq_wrapper(sys.argv[1:]))


if __name__ == '__main__':
    main()
