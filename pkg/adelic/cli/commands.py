"""Sub-commands of ``adelic``. Each command registers its arguments and
returns a JSON payload together with the text report."""
from mmcv.utils import Registry

from ..adele import (Adele, BasicOpenSpec, adele_eq, is_in_basic_open,
                     to_localization_form)
from ..apis import run_selfcheck
from ..classgroup import class_group
from ..idele import (map_to_fractional_ideals, preimage_idele,
                     to_add_valuations, try_invert)
from ..local import LocalElement, format_expansion
from ..utils import get_root_logger
from ..utils.errors import ParseError, ShapeMismatch
from ..valuation import absolute_value, uniformizer, valuation, value_to_json
from .formatting import (adele_to_json, exponents_to_json, format_class_group,
                         format_factorization)
from .grammar import parse_adele, parse_element, parse_ideal, parse_place

COMMANDS = Registry('command')


def build_command(name):
    return COMMANDS.get(name)()


class BaseCommand:
    """A sub-command: ``add_arguments`` declares its options and calling it
    runs it on a parsed field."""

    help = ''

    def add_arguments(self, parser):
        pass

    def __call__(self, field, args, cfg):
        """Returns:
            tuple[dict, str]: JSON payload and text report.
        """
        raise NotImplementedError


@COMMANDS.register_module(name='val')
class Valuation(BaseCommand):

    help = 'valuation of an element at a place'

    def add_arguments(self, parser):
        parser.add_argument('--place', required=True)
        parser.add_argument(
            '--absolute', action='store_true', help='also print |x|_v')
        parser.add_argument(
            '--digits',
            type=int,
            default=None,
            help='also print the expansion in K_v with this many terms')
        parser.add_argument('element')

    def __call__(self, field, args, cfg):
        place = parse_place(field, args.place)
        x = parse_element(field, args.element)
        v = valuation(place, x)
        payload = dict(
            place=str(place), element=str(x), valuation=value_to_json(v))
        text = str(v)
        if args.absolute:
            size = absolute_value(place, x)
            payload['absolute_value'] = str(size)
            text = f'{text}\n|x| = {size}'
        if args.digits:
            expansion = format_expansion(LocalElement(place, x), args.digits)
            payload['expansion'] = expansion
            text = f'{text}\nx = {expansion}'
        return payload, text


@COMMANDS.register_module(name='uniformizer')
class Uniformizer(BaseCommand):

    help = 'uniformizer at a place'

    def add_arguments(self, parser):
        parser.add_argument('--place', required=True)

    def __call__(self, field, args, cfg):
        place = parse_place(field, args.place)
        pi = uniformizer(place)
        return dict(place=str(place), uniformizer=str(pi)), str(pi)


@COMMANDS.register_module(name='factor-ideal')
class FactorIdeal(BaseCommand):

    help = 'factor a fractional ideal'

    def add_arguments(self, parser):
        parser.add_argument('ideal')

    def __call__(self, field, args, cfg):
        ideal = parse_ideal(field, args.ideal)
        payload = dict(
            ideal=str(ideal),
            factorization=exponents_to_json(ideal.exponents),
            norm=str(ideal.norm()))
        return payload, format_factorization(field, ideal.exponents)


def _finite_part(x):
    return x.finite if isinstance(x, Adele) else x


@COMMANDS.register_module(name='adele-op')
class AdeleOp(BaseCommand):

    help = 'arithmetic on adele literals'
    unary = ('neg', 'integral', 'to-localization')

    def add_arguments(self, parser):
        parser.add_argument(
            '--op',
            required=True,
            choices=['add', 'sub', 'mul', 'neg', 'eq', 'integral',
                     'to-localization'])
        parser.add_argument('x')
        parser.add_argument('y', nargs='?')

    def __call__(self, field, args, cfg):
        x = parse_adele(field, args.x, args.prec)
        if args.op in self.unary:
            if args.y is not None:
                raise ParseError(f'{args.op} takes one operand')
            return self.unary_op(field, args.op, x)
        if args.y is None:
            raise ParseError(f'{args.op} takes two operands')
        y = parse_adele(field, args.y, args.prec)
        if isinstance(x, Adele) != isinstance(y, Adele):
            raise ShapeMismatch('both operands need an inf part, or neither')
        if args.op == 'eq':
            if isinstance(x, Adele):
                equal = x.equals(y, tol=cfg.tolerance)
            else:
                equal = adele_eq(x, y)
            return dict(op=args.op, result=equal), str(equal).lower()
        result = {'add': x + y, 'sub': x - y, 'mul': x * y}[args.op]
        return dict(op=args.op, result=adele_to_json(result)), str(result)

    @staticmethod
    def unary_op(field, op, x):
        if op == 'neg':
            result = -x
            return dict(op=op, result=adele_to_json(result)), str(result)
        if op == 'integral':
            member = is_in_basic_open(
                _finite_part(x), BasicOpenSpec.integral(field))
            return dict(op=op, result=member), str(member).lower()
        form = to_localization_form(_finite_part(x))
        payload = dict(
            op=op,
            numerator=adele_to_json(form.numerator),
            denominator=str(form.denominator))
        return payload, str(form)


@COMMANDS.register_module(name='idele-to-ideal')
class IdeleToIdeal(BaseCommand):

    help = 'fractional ideal of an idele'

    def add_arguments(self, parser):
        parser.add_argument('idele')

    def __call__(self, field, args, cfg):
        x = parse_adele(field, args.idele, args.prec)
        idele = try_invert(_finite_part(x))
        ideal = map_to_fractional_ideals(idele)
        payload = dict(
            ideal=str(ideal),
            valuations=exponents_to_json(to_add_valuations(idele)))
        return payload, str(ideal)


@COMMANDS.register_module(name='preimage')
class Preimage(BaseCommand):

    help = 'an idele mapping onto an ideal'

    def add_arguments(self, parser):
        parser.add_argument('ideal')

    def __call__(self, field, args, cfg):
        ideal = parse_ideal(field, args.ideal)
        idele = preimage_idele(ideal)
        payload = dict(ideal=str(ideal), idele=adele_to_json(idele.value))
        return payload, str(idele)


@COMMANDS.register_module(name='class-group')
class ShowClassGroup(BaseCommand):

    help = 'class group of an imaginary quadratic field'

    def __call__(self, field, args, cfg):
        group = class_group(field)
        return group.to_dict(), format_class_group(group)


@COMMANDS.register_module(name='ck-quotient-check')
class QuotientCheck(BaseCommand):

    help = 'check the idele class group quotient against the class group'

    def add_arguments(self, parser):
        parser.add_argument('--samples', type=int, default=20)

    def __call__(self, field, args, cfg):
        results = run_selfcheck(
            dict(
                field=field,
                seed=cfg.seed,
                checks=[
                    dict(type='ClassGroupQuotient', samples=args.samples)
                ]), get_root_logger())
        class_number = class_group(
            field).order if field.family == 'quadratic' else 1
        payload = dict(
            seed=cfg.seed,
            class_number=class_number,
            passed=all(r.passed for r in results),
            checks=[r._asdict() for r in results])
        lines = [f'class number: {class_number}']
        for r in results:
            verdict = 'passed' if r.passed else f'FAILED: {r.detail}'
            lines.append(f'{r.name}: {verdict} ({r.samples} samples)')
        return payload, '\n'.join(lines)
