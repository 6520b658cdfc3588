"""
Module with the steinberg-schur command-line entry point.

Output is line-oriented: machine-readable key=value lines and prose lines starting with #.
Exit codes are 0 for success, 1 for a failed check, 2 for an inconclusive or capped run and 64 for usage errors.
"""
import argparse
import sys
import warnings

from steinberg_schur.abelian.groups import alternating_table, read_group_table
from steinberg_schur.abelian.homology import h2_bruteforce
from steinberg_schur.abelian.smith import abelianization
from steinberg_schur.case_runner import CaseRunner
from steinberg_schur.catalog.catalog import catalog_labels, predict
from steinberg_schur.catalog.tables import TABLE_ROWS, reproduce_tables
from steinberg_schur.common.settings import Settings
from steinberg_schur.enumerator.todd_coxeter import todd_coxeter
from steinberg_schur.extensions.d4_model import build_d4_model, verify_d4_action
from steinberg_schur.extensions.generic import generic_uce
from steinberg_schur.extensions.predicted import predicted_uce
from steinberg_schur.phirings.axioms import STRUCTURES, VARIETIES, check_axioms
from steinberg_schur.phirings.congruence import quotient
from steinberg_schur.phirings.recipes import make_ring
from steinberg_schur.phirings.ring_io import parse_ring, serialize_ring
from steinberg_schur.phirings.tits_rings import TITS_RINGS, tits_ring
from steinberg_schur.presentations.presentation_io import read_presentation, serialize_presentation
from steinberg_schur.presentations.steinberg import steinberg
from steinberg_schur.presentations.words import reduce
from steinberg_schur.rootsys import build, parse_root_system


EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f'{self.prog}: {message}\n{self.format_usage()}')


def _status_code(statuses):
    statuses = list(statuses)
    if 'fail' in statuses:
        return EXIT_FAIL
    if 'inconclusive' in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _read_text(filepath):
    with open(filepath, encoding='utf-8') as file:
        return file.read()


def _ring(args, settings):
    """
    Get the ring of --ring (a file) or --recipe.
    """
    if args.ring is not None:
        return parse_ring(_read_text(args.ring), name=args.ring, settings=settings)
    if args.recipe is not None:
        return make_ring(args.recipe, settings=settings)
    raise UsageError('Give the ring as --ring <file> or --recipe <recipe>')


def _algebra(args, settings):
    k = _ring(args, settings)
    if getattr(args, 'index', None) is not None:
        return tits_ring(args.index, k, args.etale)
    return k


def _emit(text, out):
    if out is None:
        print(text, end='' if text.endswith('\n') else '\n')
    else:
        with open(out, 'w', encoding='utf-8') as file:
            file.write(text)
        print(f'# written to {out}')


def _group(args, settings):
    if args.builtin is not None:
        return alternating_table(5)
    if args.group is not None:
        return read_group_table(args.group)
    raise UsageError('Give the group as --group <file> or --builtin A5')


def cmd_rootsys(args, settings):
    rs = parse_root_system(_read_text(args.file)) if args.file else build(args.family, args.rank)
    print(f'family={rs.family}')
    print(f'rank={rs.rank}')
    print(f'roots={len(rs.roots)}')
    print(f'positive={len(rs.positive_roots)}')
    print(f'simply_laced={rs.is_simply_laced}')
    for root in rs.base:
        print(f'simple={" ".join(str(x) for x in root)}')
    if args.roots:
        print(rs.serialize(), end='')
    return EXIT_OK


def cmd_ring(args, settings):
    if args.action == 'make':
        if args.index is not None:
            algebra = tits_ring(args.index, make_ring(args.recipe, settings=settings), args.etale)
        else:
            algebra = make_ring(args.recipe, settings=settings)
        print(f'# {algebra.name}')
        _emit(serialize_ring(algebra), args.out)
        return EXIT_OK
    algebra = _algebra(args, settings)
    if args.action == 'check':
        report = check_axioms(args.kind, algebra)
        print(f'kind={args.kind}')
        print(f'checked={report.checked}')
        print(f'violations={len(report)}')
        for violation in report:
            print(f'# {violation.axiom} fails at {", ".join(str(x) for x in violation.labels)}')
        return EXIT_OK if report.ok else EXIT_FAIL
    result = quotient(args.variety, algebra, verbose=args.verbose)
    for sort, projection in result.projection.items():
        print(f'size_{sort}={int(projection.max()) + 1 if len(projection) else 0}')
    print(f'identity={result.is_identity()}')
    _emit(serialize_ring(result.algebra), args.out)
    return EXIT_OK


def cmd_present(args, settings):
    presentation = steinberg(build(args.family, args.rank), _algebra(args, settings))
    print(f'generators={presentation.generators}')
    print(f'relators={len(presentation.relators)}')
    _emit(serialize_presentation(presentation), args.out)
    return EXIT_OK


def cmd_tc(args, settings):
    presentation = read_presentation(args.pres)
    subgroup = []
    for word in args.subgroup or []:
        try:
            subgroup.append(reduce(tuple(int(x) for x in word.split(','))))
        except ValueError:
            raise UsageError(f'Subgroup words are comma-separated signed generator indices, got {word!r}')
    table = todd_coxeter(presentation, subgroup, max_cosets=args.max_cosets, strategy=args.strategy,
                         settings=settings, verbose=args.verbose)
    print(f'status={table.status}')
    print(f'index={table.index}')
    print(f'defined={table.stats["defined"]}')
    return EXIT_OK if table.is_complete else EXIT_INCONCLUSIVE


def cmd_abelianize(args, settings):
    invariants = abelianization(read_presentation(args.pres))
    print(f'abelianization={invariants}')
    print(f'# {invariants.describe()}')
    print(f'perfect={invariants.is_trivial}')
    return EXIT_OK


def cmd_h2(args, settings):
    group = _group(args, settings)
    m = args.m if args.m is not None else group.order
    invariants = h2_bruteforce(group, m, settings=settings, verbose=args.verbose)
    print(f'order={group.order}')
    print(f'm={m}')
    print(f'h2={invariants}')
    print(f'# H^2({group.name}, Z/{m}) = {invariants.describe()}')
    return EXIT_OK


def cmd_uce(args, settings):
    if args.group is not None or args.builtin is not None:
        group = _group(args, settings)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            presentation = generic_uce(group, settings=settings, conjugation=args.conjugation, verbose=args.verbose)
        for warning in caught:
            print(f'# warning: {warning.message}')
        print(f'generators={presentation.generators}')
        print(f'relators={len(presentation.relators)}')
        code = EXIT_OK
        if args.enumerate:
            simple, _ = presentation.simplified()
            print(f'simplified_generators={simple.generators}')
            table = todd_coxeter(simple, strategy='felsch', settings=settings, verbose=args.verbose)
            print(f'status={table.status}')
            print(f'uce_order={table.index}')
            code = EXIT_OK if table.is_complete else EXIT_INCONCLUSIVE
        _emit(serialize_presentation(presentation), args.out)
        return code
    rs = build(args.family, args.rank)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        uce = predicted_uce(rs, _algebra(args, settings), verbose=args.verbose)
    for warning in caught:
        print(f'# warning: {warning.message}')
    print(f'generators={uce.presentation.generators}')
    print(f'central={len(uce.central)}')
    print(f'multiplier={uce.family.invariants}')
    print(f'exact={uce.exact}')
    if args.perfect:
        invariants = abelianization(uce.presentation)
        print(f'uce_abelianization={invariants}')
        if not invariants.is_trivial:
            _emit(serialize_presentation(uce.presentation), args.out)
            return EXIT_FAIL
    _emit(serialize_presentation(uce.presentation), args.out)
    return EXIT_OK


def cmd_d4model(args, settings):
    model = build_d4_model()
    report = verify_d4_action(model, verbose=args.verbose)
    print(f'model_order={model.order}')
    for item in report.items:
        print(f'{item.name.replace(" ", "_")}={item.passed}')
        print(f'# {item.detail}')
    print(f'status={"pass" if report.passed else "fail"}')
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_predict(args, settings):
    invariants = predict(args.index, _ring(args, settings), args.etale, verbose=args.verbose)
    print(f'index={args.index}')
    print(f'multiplier={invariants}')
    print(f'# {invariants.describe()}')
    return EXIT_OK


def cmd_verify(args, settings):
    runner = CaseRunner(settings=args.overrides)
    cases = None if args.all else args.case
    if not args.all and not cases:
        raise UsageError('Give at least one --case or --all')
    if cases is not None:
        unknown = [case for case in cases if case not in runner.case_names]
        if unknown:
            raise UsageError(f'Unknown cases {unknown}. Choose from {runner.case_names}')
    results = runner.get_results(cases=cases, jobs=args.jobs, budget=args.budget, verbose=args.verbose)
    for report in runner.reports:
        print('\n'.join(report.lines()))
    if args.out is not None:
        results.to_csv(args.out, index=False)
        print(f'# written to {args.out}')
    return _status_code(results['Status'])


def cmd_tables(args, settings):
    results = None
    if args.verify:
        runner = CaseRunner(settings=args.overrides)
        results = runner.get_results(cases=[name for _, _, name in TABLE_ROWS], jobs=args.jobs,
                                     budget=args.budget, verbose=args.verbose)
    table, text = reproduce_tables(results=results, settings=settings)
    print(text)
    if args.out is not None:
        table.to_csv(args.out, index=False)
        print(f'# written to {args.out}')
    return _status_code(table['Status']) if results is not None else EXIT_OK


def _add_ring_arguments(parser, index=True):
    parser.add_argument('--ring', help='Ring file in the text format of ring make.')
    parser.add_argument('--recipe', help='Ring recipe such as gf(4) or dual_numbers(gf(2)).')
    if index:
        parser.add_argument('--index', choices=TITS_RINGS, help='Build the Phi-ring of this Tits index over the ring.')
    parser.add_argument('--etale', choices=['split', 'field'], help='Quadratic etale algebra for 2A53, 2D43, 2E264.')


def _add_group_arguments(parser):
    parser.add_argument('--group', help='Group table file (order n followed by n rows).')
    parser.add_argument('--builtin', choices=['A5'], help='Built-in group table.')


def build_parser():
    parser = _Parser(prog='steinberg-schur', description='Steinberg groups over finite Phi-rings and their '
                                                         'Schur multipliers.')
    parser.add_argument('--verbose', action='store_true', help='Print progress lines.')
    parser.add_argument('--seed', type=int, help='Seed of the deterministic sampler.')
    parser.add_argument('--budget-mb', type=int, help='Memory budget for enumerations.')
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    rootsys = subparsers.add_parser('rootsys', help='Root system data.')
    rootsys.add_argument('action', choices=['info'])
    rootsys.add_argument('--family', choices=['A', 'B', 'C', 'BC', 'D', 'E', 'F'], default='A')
    rootsys.add_argument('--rank', type=int, default=3)
    rootsys.add_argument('--file', help='Root system file to check against the standard realization.')
    rootsys.add_argument('--roots', action='store_true', help='Also print the roots.')

    ring = subparsers.add_parser('ring', help='Build, check and take quotients of Phi-rings.')
    ring.add_argument('action', choices=['make', 'check', 'quotient'])
    _add_ring_arguments(ring)
    ring.add_argument('--kind', default='ring', choices=list(STRUCTURES) + list(VARIETIES))
    ring.add_argument('--variety', default='r2', choices=list(VARIETIES))
    ring.add_argument('--out', help='Write the ring to this file.')

    present = subparsers.add_parser('present', help='Emit Steinberg presentations.')
    present.add_argument('action', choices=['steinberg'])
    present.add_argument('--family', required=True, choices=['A', 'B', 'D', 'E', 'F'])
    present.add_argument('--rank', required=True, type=int)
    _add_ring_arguments(present)
    present.add_argument('--out')

    tc = subparsers.add_parser('tc', help='Todd-Coxeter coset enumeration.')
    tc.add_argument('--pres', required=True, help='Presentation file.')
    tc.add_argument('--subgroup', action='append', help='Subgroup generator word such as 1,-2,3 (repeatable).')
    tc.add_argument('--max-cosets', type=int)
    tc.add_argument('--strategy', choices=['hlt', 'felsch'], default='hlt')

    abelianize = subparsers.add_parser('abelianize', help='Abelian invariants of a presentation.')
    abelianize.add_argument('--pres', required=True)

    h2 = subparsers.add_parser('h2', help='H^2(G, Z/m) of a small group table.')
    _add_group_arguments(h2)
    h2.add_argument('--m', type=int, help='Modulus, the group order by default.')

    uce = subparsers.add_parser('uce', help='Predicted or generic universal central extension.')
    uce.add_argument('--family', choices=['A', 'B', 'D', 'F'], default='A')
    uce.add_argument('--rank', type=int, default=3)
    _add_ring_arguments(uce)
    _add_group_arguments(uce)
    uce.add_argument('--no-conjugation', dest='conjugation', action='store_false',
                     help='Leave the conjugation identities out of generic UCEs.')
    uce.add_argument('--enumerate', action='store_true', help='Simplify a generic UCE and enumerate it with Felsch.')
    uce.add_argument('--perfect', action='store_true', help='Check the extension is perfect.')
    uce.add_argument('--out')

    d4model = subparsers.add_parser('d4model', help='The D4 model and its Steinberg action.')
    d4model.add_argument('action', choices=['verify'])

    predict_parser = subparsers.add_parser('predict', help='Predicted Schur multiplier of a Tits index.')
    predict_parser.add_argument('--index', required=True, choices=catalog_labels())
    _add_ring_arguments(predict_parser, index=False)

    verify = subparsers.add_parser('verify', help='Run registered verification cases.')
    verify.add_argument('--case', action='append', help='Case id (repeatable).')
    verify.add_argument('--all', action='store_true')
    verify.add_argument('--budget', type=int, help='Coset budget replacing the registered ones.')
    verify.add_argument('--jobs', type=int, default=1)
    verify.add_argument('--out', help='Write the merged results as CSV.')

    tables = subparsers.add_parser('tables', help='Table of predicted multipliers.')
    tables.add_argument('--verify', action='store_true', help='Run the cases behind the rows.')
    tables.add_argument('--budget', type=int)
    tables.add_argument('--jobs', type=int, default=1)
    tables.add_argument('--out', help='Write the table as CSV.')
    return parser


COMMANDS = {
    'rootsys': cmd_rootsys,
    'ring': cmd_ring,
    'present': cmd_present,
    'tc': cmd_tc,
    'abelianize': cmd_abelianize,
    'h2': cmd_h2,
    'uce': cmd_uce,
    'd4model': cmd_d4model,
    'predict': cmd_predict,
    'verify': cmd_verify,
    'tables': cmd_tables,
}


def main(argv=None):
    """
    Run the command line and return the exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.overrides = {}
        if args.seed is not None:
            args.overrides['seed'] = args.seed
        if args.budget_mb is not None:
            args.overrides['budget_mb'] = args.budget_mb
        for key in ('budget', 'jobs', 'max_cosets'):
            value = getattr(args, key, None)
            if value is not None and value < 1:
                raise UsageError(f'--{key.replace("_", "-")} must be positive, got {value}')
        settings = Settings(args.overrides)
        print(f'# relator_order={settings.relator_order_version}')
        return COMMANDS[args.command](args, settings)
    except UsageError as err:
        print(err, file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, TypeError) as err:
        print(f'error: {err}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
