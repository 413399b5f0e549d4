"""
Command line front end: python -m src.main <command> <document> [options]

Reports go to standard output, diagnostics to standard error.
"""
import argparse
import json
import logging
import sys

from src import settings
from src.cli.constants import ERROR_EXITS, EXIT_CODES, GROUP_NAMES
from src.cli.document import load_document, parse_chain_complex, parse_wes, template
from src.errors import DocumentError, WesError
from src.gamma.enumerate import GAMMA_S_COMPONENTS, gamma_s_group, unit_group_notes
from src.gamma.oracle import oracle_compare
from src.wes.homology import homology_of_complex
from src.wes.model import require_valid, validate
from src.wes.report import wes_report

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors are parse errors, with the parse error exit code"""
    def error(self, message: str):
        raise DocumentError(f'usage: {message}')


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='wes-gamma', description='Gamma-automorphisms of the Whitehead exact sequence')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='log INFO, or DEBUG when given twice')
    commands = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)

    for name, text in (
        ('validate', 'check the standing hypotheses on the data'),
        ('invariants', 'report Gamma5, coker b6, Ext(H5, coker b6) and pi5'),
        ('gamma-group', 'enumerate the group of Gamma-automorphisms'),
        ('homology', 'homology of a chain complex, with a document template'),
    ):
        command = commands.add_parser(name, help=text)
        command.add_argument('path', help='input document (JSON)')
        command.add_argument('--json', action='store_true', help='machine-readable output')
        if name == 'gamma-group':
            command.add_argument('--budget', type=int, default=None, help='candidate budget per aut enumeration')
            command.add_argument('--oracle', action='store_true', help='cross-check every tuple by brute force')
            command.add_argument('--workers', type=int, default=None, help='processes screening the tuples')
    return parser


def configure_logging(verbosity: int) -> None:
    match verbosity:
        case 0:
            level = settings.log_level
        case 1:
            level = 'INFO'
        case _:
            level = 'DEBUG'
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger().setLevel(level)


def emit(data, as_json: bool) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False) if as_json else data)


def cmd_validate(path: str, as_json: bool = False) -> int:
    report = validate(parse_wes(load_document(path)))
    emit(report.to_dict() if as_json else report, as_json)
    return EXIT_CODES['ok'] if report.passed else EXIT_CODES['hypothesis']


def cmd_invariants(path: str, as_json: bool = False) -> int:
    w = parse_wes(load_document(path))
    require_valid(w)
    report = wes_report(w)
    emit(report.to_dict() if as_json else report, as_json)
    return EXIT_CODES['ok']


def _pair(t) -> str:
    return '(' + ', '.join(
        str(t.component(n).matrix[0, 0]) if t.component(n).matrix.shape == (1, 1) else str(t.component(n).matrix)
        for n in GAMMA_S_COMPONENTS
    ) + ')'


def cmd_gamma_group(path: str, budget: int | None = None, oracle: bool = False, workers: int | None = None,
                    as_json: bool = False) -> int:
    w = parse_wes(load_document(path))
    budget = settings.budget if budget is None else budget
    workers = settings.workers if workers is None else workers
    table = gamma_s_group(w, budget, workers)
    tuples = table.source
    notes = unit_group_notes(w)
    check = oracle_compare(w, budget) if oracle else None

    if as_json:
        data = table.to_dict() | {
            'components': list(GAMMA_S_COMPONENTS),
            'elements': [{n: t.component(n).matrix.to_lists() for n in GAMMA_S_COMPONENTS} for t in table.elements],
        }
        data['tuples'] = tuples.to_dict()
        data['gammas'] = [g.matrix.to_lists() for g in table.gammas]
        data['notes'] = notes
        data['oracle'] = check.to_dict() if check else None
        emit(data, True)
    else:
        names = ', '.join(GAMMA_S_COMPONENTS)
        lines = [f'GammaS(X) in ({names}): order {table.order}, {table.structure_string()}']
        lines.append('  elements: ' + ' '.join(_pair(t) for t in table.elements))
        lines.append('  generators: ' + ' '.join(_pair(t) for t in table.generators))
        lines.append(f'tuples (f3, f4, f5, f6): order {tuples.order}, {tuples.structure_string()}')
        lines.append(f'induced maps on Gamma5: {len(table.gammas)} distinct')
        lines += [f'  gamma = {g.matrix}' for g in table.gammas]
        lines += [f'note: {note}' for note in notes]
        if check:
            lines.append(str(check))
        emit('\n'.join(lines), False)

    if check and not check.agreed:
        print(f'error: criterion and oracle disagree on {len(check.disagreements)} tuples', file=sys.stderr)
        return EXIT_CODES['oracle']
    return EXIT_CODES['ok']


def cmd_homology(path: str, as_json: bool = False) -> int:
    groups = homology_of_complex(*parse_chain_complex(load_document(path)))
    document = template(groups)
    if as_json:
        emit({'homology': {n: g.to_dict() for n, g in zip(GROUP_NAMES, groups)}, 'template': document}, True)
    else:
        lines = [f'{n} = {g}' for n, g in zip(GROUP_NAMES, groups)]
        lines += ['template:', json.dumps(document, indent=2)]
        emit('\n'.join(lines), False)
    return EXIT_CODES['ok']


def main(argv=None) -> int:
    """
    Main method. Parse the command line, and through a matching pattern decide what command to run
    :return: int, exit code
    """
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        match args.command:
            case 'validate':
                return cmd_validate(args.path, args.json)
            case 'invariants':
                return cmd_invariants(args.path, args.json)
            case 'gamma-group':
                return cmd_gamma_group(args.path, args.budget, args.oracle, args.workers, args.json)
            case 'homology':
                return cmd_homology(args.path, args.json)
    except WesError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return ERROR_EXITS.get(exc.code, EXIT_CODES['parse'])
    return EXIT_CODES['parse']
