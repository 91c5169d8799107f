import argparse
import pathlib
import sys
from logging import DEBUG, INFO, basicConfig, getLogger
from typing import *

import appdirs
import colorlog
import toml

import hopf_kernels.analyzer.theorems as theorems
import hopf_kernels.corpus.builtins as builtins
import hopf_kernels.report._main as report
import hopf_kernels.report.serialize as serialize
from hopf_kernels.__about__ import __title__
from hopf_kernels.analyzer.central import central_data, n_of_d
from hopf_kernels.analyzer.context import HopfContext
from hopf_kernels.analyzer.kernels import kernel_reports, kernel_subalgebra, ker_set
from hopf_kernels.analyzer.lattice import enumerate_lattice, lattice_members, property_n
from hopf_kernels.corpus.fileformat import DEFAULT_MAX_DIM, parse_algebra, serialize_algebra
from hopf_kernels.hopf.axioms import verify_hopf
from hopf_kernels.hopf.dual import dual, integral
from hopf_kernels.hopf.quotient import quotient_by_subalgebra
from hopf_kernels.rep.characters import combination, regular_character
from hopf_kernels.rep.eigen import DEFAULT_PRECISION
from hopf_kernels.types import *

logger = getLogger(__name__)

default_config_path = pathlib.Path(appdirs.user_config_dir(__title__)) / 'config.toml'

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def get_config(*, config_path: Optional[pathlib.Path] = None) -> Dict[str, Any]:
    config_path = config_path or default_config_path
    logger.debug('config path: %s', str(config_path))
    if config_path.exists():
        return dict(**toml.load(config_path))
    else:
        return {}


def _setting(parsed: argparse.Namespace, config: Dict[str, Any], key: str, default: Any) -> Any:
    value = getattr(parsed, key, None)
    if value is not None:
        return value
    if key not in config:
        logger.debug('setting "%s" is not found in your config; use %s', key, repr(default))
    return config.get(key, default)


def load_algebra(parsed: argparse.Namespace, *, max_dim: int) -> HopfAlgebraData:
    """
    :raises InputError:
    :raises OSError:
    """

    if parsed.builtin is not None and parsed.file is not None:
        raise InputError('give either a file or --builtin, not both')
    if parsed.builtin is not None:
        h = builtins.builtin_algebra(parsed.builtin)
        if h.dim > max_dim:
            raise DimensionLimitError(f"""{h.name}: dim {h.dim} exceeds the limit {max_dim}""")
        return h
    if parsed.file is None:
        raise InputError('give a file or --builtin')
    with open(parsed.file, encoding='utf-8') as fh:
        return parse_algebra(fh.read(), max_dim=max_dim)


def parse_combination(text: str) -> List[int]:
    """
    :raises DecompositionError:
    """

    try:
        return [int(s) for s in text.split(',')]
    except ValueError:
        raise DecompositionError(f"""multiplicities must be comma-separated integers: {repr(text)}""")


def command_verify(h: HopfAlgebraData) -> Tuple[int, Dict[str, Any]]:
    axioms = verify_hopf(h)
    data: Dict[str, Any] = {'algebra': h, 'axioms': axioms}
    if not axioms.passed:
        for check in axioms.failures():
            logger.error('%s: the axiom %s fails at %s', h.name, check.name, check.witness)
        return EXIT_INVALID, data
    data['integral'] = integral(h)
    data['dual_integral'] = integral(dual(h))
    return EXIT_OK, data


def command_irr(ctx: HopfContext, parsed: argparse.Namespace) -> Tuple[int, Dict[str, Any]]:
    regular_character(ctx.algebra, ctx.irr)
    regular_character(ctx.dual.algebra, ctx.coirr)
    return EXIT_OK, {'algebra': ctx.algebra, 'dual': ctx.dual.algebra, 'irr': ctx.irr, 'coirr': ctx.coirr}


def command_kernels(ctx: HopfContext, parsed: argparse.Namespace) -> Tuple[int, Dict[str, Any]]:
    reports = kernel_reports(ctx)
    data: Dict[str, Any] = {'algebra': ctx.algebra, 'reports': reports, 'combination': None}
    if parsed.combination is not None:
        multiplicities = parse_combination(parsed.combination)
        chi = combination(ctx.irr, multiplicities)
        kernel = kernel_subalgebra(ctx, chi)
        data['combination'] = {
            'multiplicities': multiplicities,
            'ker_set': list(ker_set(ctx, chi)),
            'dim': kernel.dim,
            'is_normal': kernel.flags.is_normal,
        }
    return (EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED), data


def command_lattice(ctx: HopfContext, parsed: argparse.Namespace) -> Tuple[int, Dict[str, Any]]:
    return EXIT_OK, {'algebra': ctx.algebra, 'dual': ctx.dual.algebra, 'lattice': enumerate_lattice(ctx)}


def command_central(ctx: HopfContext, parsed: argparse.Namespace) -> Tuple[int, Dict[str, Any]]:
    data = central_data(ctx)
    closures = [n_of_d(ctx, d).dim for d in range(len(ctx.coirr.blocks))]
    return EXIT_OK, {'algebra': ctx.algebra, 'central': data, 'normal_closure_dims': closures}


def command_property_n(ctx: HopfContext, parsed: argparse.Namespace) -> Tuple[int, Dict[str, Any]]:
    result = property_n(ctx)
    dual_result = property_n(ctx.dual)
    self_dual = result.holds == dual_result.holds
    data = {'algebra': ctx.algebra, 'dual': ctx.dual.algebra, 'property_n': result, 'dual_property_n': dual_result, 'self_dual': self_dual}
    return (EXIT_OK if self_dual else EXIT_FAILED), data


def command_theorems(ctx: HopfContext, parsed: argparse.Namespace) -> Tuple[int, Dict[str, Any]]:
    findings = theorems.theorem_harness(ctx)
    passed = theorems.findings_passed(findings)
    return (EXIT_OK if passed else EXIT_FAILED), {'algebra': ctx.algebra, 'findings': findings, 'passed': passed}


def command_corpus(parsed: argparse.Namespace, *, max_dim: int, precision: int) -> Tuple[int, Dict[str, Any]]:
    results = []
    for name in builtins.builtin_names():
        h = builtins.builtin_algebra(name)
        if h.dim > max_dim:
            logger.warning('%s: skipped because dim %d exceeds the limit %d', name, h.dim, max_dim)
            continue
        logger.info('%s: dim %d', name, h.dim)
        ctx = HopfContext(algebra=h, precision=precision)
        findings = theorems.theorem_harness(ctx)
        results.append({'name': name, 'dim': h.dim, 'passed': theorems.findings_passed(findings), 'findings': findings})
    passed = all(result['passed'] for result in results)
    return (EXIT_OK if passed else EXIT_FAILED), {'results': results, 'passed': passed}


def command_export(h: HopfAlgebraData, parsed: argparse.Namespace, *, precision: int) -> str:
    """
    :raises NotNormalError:
    """

    if parsed.quotient is not None:
        ctx = HopfContext(algebra=h, precision=precision)
        members = lattice_members(ctx)
        if not 0 <= parsed.quotient < len(members):
            raise InputError(f"""{h.name}: no Hopf subalgebra with index {parsed.quotient} (there are {len(members)})""")
        h = quotient_by_subalgebra(h, members[parsed.quotient]).quotient
    if parsed.dual:
        h = dual(h)
    return serialize_algebra(h)


def get_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true')
    common.add_argument('--config-file', type=pathlib.Path, help=f"""default: {str(default_config_path)}""")
    common.add_argument('--json', action='store_true', help='print a JSON document instead of text')
    common.add_argument('--max-dim', type=int, help=f"""refuse algebras of larger dimension (default: {DEFAULT_MAX_DIM})""")
    common.add_argument('--precision', type=int, help=f"""bits of precision to locate eigenvalues (default: {DEFAULT_PRECISION})""")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument('file', nargs='?', help='a JSON file of structure constants')
    source.add_argument('--builtin', help=f"""one of {', '.join(builtins.builtin_names())}""")

    parser = argparse.ArgumentParser(prog=__title__)
    subparsers = parser.add_subparsers(dest='command', required=True)
    subparsers.add_parser('verify', parents=[common, source], help='check the Hopf algebra axioms and the integrals')
    subparsers.add_parser('irr', parents=[common, source], help='print the irreducible characters of H and H^*')
    kernels = subparsers.add_parser('kernels', parents=[common, source], help='compute the kernel of each irreducible character in three ways')
    kernels.add_argument('--combination', help='also compute the kernel of a character given by multiplicities, e.g. 1,0,2')
    subparsers.add_parser('lattice', parents=[common, source], help='enumerate the Hopf subalgebras')
    subparsers.add_parser('central', parents=[common, source], help='print the central characters and the partitions')
    subparsers.add_parser('property-n', parents=[common, source], help='check whether every kernel is normal, for H and H^*')
    subparsers.add_parser('theorems', parents=[common, source], help='run all checks')
    subparsers.add_parser('corpus', parents=[common], help='run all checks on every built-in algebra')
    export = subparsers.add_parser('export', parents=[common, source], help='write an algebra as a JSON file')
    export.add_argument('--dual', action='store_true', help='export the dual')
    export.add_argument('--quotient', type=int, help='export the quotient by the normal Hopf subalgebra with this index in the lattice')
    export.add_argument('-o', '--output', type=pathlib.Path)
    return parser


def run(parsed: argparse.Namespace, *, config: Dict[str, Any]) -> int:
    """
    :raises HopfKernelsError:
    :raises OSError:
    """

    max_dim = _setting(parsed, config, 'max_dim', DEFAULT_MAX_DIM)
    precision = _setting(parsed, config, 'precision', DEFAULT_PRECISION)
    template_directory = config.get('template_directory')

    if parsed.command == 'export':
        text = command_export(load_algebra(parsed, max_dim=max_dim), parsed, precision=precision)
        if parsed.output is not None:
            parsed.output.write_text(text, encoding='utf-8')
            logger.info('written to %s', str(parsed.output))
        else:
            sys.stdout.write(text)
        return EXIT_OK

    if parsed.command == 'corpus':
        code, data = command_corpus(parsed, max_dim=max_dim, precision=precision)
    else:
        h = load_algebra(parsed, max_dim=max_dim)
        if parsed.command == 'verify':
            code, data = command_verify(h)
        else:
            ctx = HopfContext(algebra=h, precision=precision)
            commands: Dict[str, Callable[[HopfContext, argparse.Namespace], Tuple[int, Dict[str, Any]]]] = {
                'irr': command_irr,
                'kernels': command_kernels,
                'lattice': command_lattice,
                'central': command_central,
                'property-n': command_property_n,
                'theorems': command_theorems,
            }
            code, data = commands[parsed.command](ctx, parsed)

    if parsed.json:
        document = dict(data)
        document['command'] = parsed.command
        document['exit_code'] = code
        sys.stdout.write(serialize.dumps(document))
    else:
        sys.stdout.write(report.render(parsed.command, data, template_directory=template_directory))
    return code


def main(args: Optional[List[str]] = None) -> int:
    parser = get_parser()
    parsed = parser.parse_args(args=args)

    # configure logging
    handler = colorlog.StreamHandler()
    handler.setFormatter(colorlog.ColoredFormatter('%(log_color)s%(levelname)s%(reset)s:%(name)s:%(message)s'))
    level = INFO
    if parsed.verbose:
        level = DEBUG
    basicConfig(level=level, handlers=[handler])

    config = get_config(config_path=parsed.config_file)
    logger.debug('config: %s', config)

    try:
        return run(parsed, config=config)
    except AxiomError as e:
        logger.error('%s', e)
        if e.report is not None:
            for check in e.report.failures():
                logger.error('the axiom %s fails at %s', check.name, check.witness)
        return EXIT_INVALID
    except CertificationError as e:
        logger.error('internal certification failed: %s', e)
        return EXIT_FAILED
    except (InputError, ExactMathError, FieldTooSmallError, NumericLocationError) as e:
        logger.error('%s', e)
        return EXIT_INVALID
    except OSError as e:
        logger.error('%s', e)
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())
