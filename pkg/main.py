# main.py - Command-line front end for the quasi-ordinary toolkit

"""
Poincare series of irreducible quasi-ordinary hypersurfaces
Batch commands reading JSON documents from stdin (or --input) and writing one
canonical document to stdout; diagnostics go to stderr
"""

import argparse
import dataclasses
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, TextIO, Tuple

from dotenv import load_dotenv

from config.engine_config import EngineConfig, load_engine_config_from_env, validate_engine_config
from config.settings import CommandName, DocumentKind, EngineSettings, OutputFormat
from engine.qo_engine import QuasiOrdinaryEngine
from models.series_models import RecoveryBranch
from utils.codec import charseq_from_dict, dumps, loads, pair_from_dict, shortform_from_dict
from utils.exceptions import MalformedDocument, QuasiOrdinaryError
from utils.helpers import parse_bound
from utils.logger import setup_logger
from utils.rendering import render_text

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_MALFORMED = 2

COMMANDS = [
    (CommandName.VALIDATE, "Check a charseq document, report d, g, c, n"),
    (CommandName.INVARIANTS, "Generators, characteristic integers, m and the lattice N"),
    (CommandName.ESSENTIAL, "Grouped essential valuations and the essential matrix"),
    (CommandName.POINCARE, "Forward Poincare series (--short cancels common factors)"),
    (CommandName.EXPAND, "Truncated expansion of a series (--bound a1,...,ap)"),
    (CommandName.COUNT, "Brute-force semigroup count in the same box (--bound)"),
    (CommandName.INVERT, "Recover normalized exponents from a shortform document"),
    (CommandName.ZETA, "Monodromy zeta function and the specialization identity"),
    (CommandName.EQUI, "Compare two shortform documents given as a pair"),
    (CommandName.SAMPLE, "Random normalized instance of a branch (--branch, --seed)"),
]


class _ArgumentParser(argparse.ArgumentParser):
    """Argument errors are malformed input, not a process exit"""

    def error(self, message):
        raise MalformedDocument(f"{self.prog}: {message}")


def _parser(command: CommandName) -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog=f"main.py {command.value}", add_help=False)
    parser.add_argument('--format', choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)
    if command != CommandName.SAMPLE:
        parser.add_argument('--input', help="Read the document from this file instead of stdin")
    if command == CommandName.POINCARE:
        parser.add_argument('--short', action='store_true')
    if command in (CommandName.EXPAND, CommandName.COUNT):
        parser.add_argument('--bound', required=True, type=parse_bound)
    if command == CommandName.SAMPLE:
        parser.add_argument('--branch', required=True, choices=[b.value for b in RecoveryBranch])
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--max-dim', type=int)
        parser.add_argument('--max-g', type=int)
    return parser


def _read_document(args, stream: Optional[TextIO]) -> Dict[str, Any]:
    if args.input:
        try:
            text = Path(args.input).read_text(encoding='utf-8')
        except OSError as e:
            raise MalformedDocument(f"Cannot read {args.input}: {e}")
    else:
        text = (stream or sys.stdin).read()
    return loads(text)


def _dispatch(engine: QuasiOrdinaryEngine, command: CommandName, args, stream) -> Dict[str, Any]:
    if command == CommandName.SAMPLE:
        overrides = {}
        if args.max_dim is not None:
            overrides['max_dim'] = args.max_dim
        if args.max_g is not None:
            overrides['max_g'] = args.max_g
        config = dataclasses.replace(engine.config, **overrides)
        validation = validate_engine_config(config)
        if not validation['valid']:
            raise MalformedDocument('; '.join(validation['errors']))
        engine.config = config
        return engine.sample_document(RecoveryBranch(args.branch), args.seed)

    document = _read_document(args, stream)

    if command == CommandName.INVERT:
        return engine.invert_document(shortform_from_dict(document))
    if command == CommandName.EQUI:
        return engine.equi_document(pair_from_dict(document))
    if command == CommandName.EXPAND:
        if document.get('kind') == DocumentKind.SHORTFORM.value:
            cr = shortform_from_dict(document).cr
        else:
            cr = engine.forward(charseq_from_dict(document), short=True)
        return engine.expand_document(cr, args.bound)

    cs = charseq_from_dict(document)
    if command == CommandName.VALIDATE:
        return engine.validate_document(cs)
    if command == CommandName.INVARIANTS:
        return engine.invariants_document(cs)
    if command == CommandName.ESSENTIAL:
        return engine.essential_document(cs)
    if command == CommandName.POINCARE:
        return engine.poincare_document(cs, short=args.short)
    if command == CommandName.COUNT:
        return engine.count_document(cs, args.bound)
    return engine.zeta_document(cs)


def run(
        command: str,
        argv: Sequence[str] = (),
        stream: Optional[TextIO] = None,
        config: Optional[EngineConfig] = None
) -> Tuple[int, str]:
    """
    Execute one command

    Args:
        command: Command name
        argv: Arguments after the command name
        stream: Input stream, stdin when omitted
        config: Engine configuration

    Returns:
        (exit code, output text): 0 with the document, 1 with a domain error
        object, 2 with a malformed-input error object
    """
    try:
        name = CommandName(command)
    except ValueError:
        logger.warning(f"Unknown command {command!r}")
        return EXIT_MALFORMED, dumps({'error': 'MalformedDocument', 'detail': f"Unknown command {command!r}", 'datum': command})

    try:
        args = _parser(name).parse_args(list(argv))
        engine = QuasiOrdinaryEngine(config)
        document = _dispatch(engine, name, args, stream)
    except MalformedDocument as e:
        logger.warning(f"Malformed input: {e}")
        return EXIT_MALFORMED, dumps({'error': 'MalformedDocument', 'detail': str(e), 'datum': None})
    except QuasiOrdinaryError as e:
        logger.warning(f"{e.name}: {e}")
        return EXIT_DOMAIN_ERROR, dumps(e.to_dict())

    if args.format == OutputFormat.TEXT.value:
        return EXIT_OK, render_text(name.value, document)
    return EXIT_OK, dumps(document)


def show_help():
    """Show available commands"""
    print("Usage: python main.py <command> [options] < document.json")
    print("\nAvailable commands:")
    for command, description in COMMANDS:
        print(f"  python main.py {command.value:<12} - {description}")
    print("\nCommon options: --input FILE, --format json|text")
    print("Environment: QOI_THREADS, QOI_MAX_BOX_POINTS, LOG_LEVEL, LOG_TO_FILE")


def main():
    """Entry point"""
    load_dotenv()
    setup_logger('', log_to_file=EngineSettings.LOG_TO_FILE)

    if len(sys.argv) < 2 or sys.argv[1].lower() in ('help', '-h', '--help'):
        show_help()
        return EXIT_OK

    code, output = run(sys.argv[1].lower(), sys.argv[2:], sys.stdin, config=load_engine_config_from_env())
    sys.stdout.write(output + "\n")
    return code


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        sys.exit(EXIT_DOMAIN_ERROR)
    except Exception as e:
        logger.error(f"Fatal error: {e}")
        logger.exception("Full error details:")
        sys.exit(EXIT_DOMAIN_ERROR)
