"""
Command line interface.

    doxa [--format text|json] [--debug] VERB ...

    check FILE
    believe FILE --evidence SETSPEC [--operator hpd|lk] [--question-file FILE]
    principles FILE [--operator hpd|lk] [--only PRINCIPLE,...] [--refine]
    props FILE [--operator hpd|lk] [--refine]
    example NAME [--n N] [--t RATIONAL] [--question VARIANT] [-o FILE]
    search --principle P --operator O [--constraint orthogonality|stability|both] --budget N --seed K
           [--max-states M] [--mode free|coarse|product] [--workers W] [-o FILE]
    shrink FILE --principle P --operator O [-o FILE]

Exit codes: 0 if the property holds or the command succeeded, 1 if a property fails (a witness or
countermodel is reported) and 2 for usage and input errors.
"""

import argparse
import logging
import sys

from pathlib import Path

from . import config
from . import core
from . import corpus
from . import report

from .belief import beliefs
from .dsl import codec
from .dsl import parse
from .dsl import parse_question
from .dsl import serialize
from .principles import check_all
from .principles import check_principle
from .properties import check_orthogonality
from .properties import check_stability
from .properties import check_threshold
from .search import search_countermodel
from .search import shrink
from .structs import BeliefOperator
from .structs import Constraint
from .structs import ConstraintFilter
from .structs import CorpusId
from .structs import Format
from .structs import GeneratorConfig
from .structs import Mode
from .structs import Principle
from .structs import Report
from .errors import ConstraintError
from .errors import ParseError
from .errors import ProbabilityError
from .errors import QuestionTooLarge
from .errors import SearchError
from .errors import StructureError

log = logging.getLogger(__name__)

OK = 0
FAILS = 1
ERROR = 2


class UsageError(Exception):
    """
    Error raised for an invalid command line.
    """


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def run(argv):
    """
    Executes a command line.

        Parameters:
            argv  (list)  Arguments, without the program name.

        Returns:
            Report with the rendered output and exit code. For exit code 2 the payload is a one-line
            diagnostic.
    """
    try:
        args = _parser().parse_args(argv)
    except UsageError as x:
        return Report(Format.TEXT, f"doxa: {x}", ERROR)

    fmt = Format(getattr(args, "format", Format.TEXT.value))

    try:
        return args.handler(args, fmt)
    except ParseError as x:
        return Report(Format.TEXT, f"doxa: {getattr(args, 'file', '<input>')}:{x}", ERROR)
    except (StructureError, ProbabilityError, ConstraintError, SearchError, ValueError) as x:
        return Report(Format.TEXT, f"doxa: {x}", ERROR)
    except OSError as x:
        return Report(Format.TEXT, f"doxa: {x.strerror}: {x.filename}", ERROR)


def main(argv=None):
    """
    Console script entry point.
    """
    argv = sys.argv[1:] if argv is None else argv

    logging.basicConfig(
        level=logging.DEBUG if "--debug" in argv else logging.WARNING,
        format="%(asctime)s %(levelname)-7s %(name)s  %(message)s",
        stream=sys.stderr,
    )

    result = run(argv)

    if result.exit_code == ERROR:
        print(result.payload, file=sys.stderr)
    else:
        print(result.payload)

    return result.exit_code


def check(args, fmt):
    """
    Validates a structure file and summarizes it.
    """
    m = _load(args.file)

    return Report(fmt, report.structure(m, fmt), OK)


def believe(args, fmt):
    """
    Computes the belief set at a body of evidence.
    """
    m = _load(args.file)

    if args.question_file is not None:
        m = core.with_question(m, _question(args.question_file, m))

    e = _setspec(m, args.evidence)
    b = beliefs(m, e, BeliefOperator(args.operator))

    return Report(fmt, report.belief(m, b, fmt), OK)


def principles(args, fmt):
    """
    Checks the belief-revision principles.
    """
    m = _load(args.file)
    op = BeliefOperator(args.operator)

    if args.refine:
        m = core.refine_question(m)

    if args.only:
        verdicts = [check_principle(m, p, op) for p in args.only]
    else:
        verdicts = check_all(m, op)

    exit_code = OK if all(v.holds for v in verdicts) else FAILS

    return Report(fmt, report.verdicts(m, verdicts, fmt), exit_code)


def props(args, fmt):
    """
    Checks ORTHOGONALITY, STABILITY and THRESHOLD.
    """
    m = _load(args.file)
    op = BeliefOperator(args.operator)

    if args.refine:
        m = core.refine_question(m)

    reports = [check_orthogonality(m)]
    skipped = []

    try:
        reports.append(check_stability(m))
    except QuestionTooLarge as x:
        skipped.append((Constraint.STABILITY, f"{x}"))

    reports.append(check_threshold(m, op))

    exit_code = OK if all(r.holds for r in reports) else FAILS

    return Report(fmt, report.constraints(m, reports, skipped, fmt), exit_code)


def example(args, fmt):
    """
    Generates a named structure.
    """
    m = corpus.make(args.name, n=args.n, t=args.t, question=args.question)
    text = serialize(m)

    if args.output is not None:
        _write(args.output, text)

    return Report(fmt, report.example(m, args.name, args.output, text, fmt), OK)


def search(args, fmt):
    """
    Searches for a countermodel.
    """
    principle = args.principle
    op = BeliefOperator(args.operator)
    constraint = ConstraintFilter(args.constraint) if args.constraint else None

    cfg = GeneratorConfig(
        states=(2, args.max_states),
        cells=(1, args.max_states),
        mode=Mode(args.mode),
        seed=args.seed,
    )

    result = search_countermodel(principle, op, constraint, cfg, args.budget, config.workers(args.workers))

    text = None
    if result.found is not None:
        text = serialize(result.found.structure)
        if args.output is not None:
            _write(args.output, text)

    exit_code = OK if result.found is None else FAILS

    return Report(fmt, report.search(result, principle, op, args.output, text, fmt), exit_code)


def shrink_countermodel(args, fmt):
    """
    Shrinks a countermodel.
    """
    m = _load(args.file)
    principle = args.principle
    op = BeliefOperator(args.operator)

    shrunk = shrink(m, principle, op)
    verdict = check_principle(shrunk, principle, op)
    text = serialize(shrunk)

    if args.output is not None:
        _write(args.output, text)

    return Report(fmt, report.shrunk(shrunk, verdict, args.output, text, fmt), FAILS)


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in Format], default=argparse.SUPPRESS, help="output format")
    common.add_argument("--debug", action="store_true", default=argparse.SUPPRESS, help="log debug messages to stderr")

    parser = _Parser(prog="doxa", description="Belief revision with threshold and tracking belief operators", parents=[common])
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    cmd = verbs.add_parser("check", parents=[common], help="validate and summarize a structure file")
    cmd.add_argument("file")
    cmd.set_defaults(handler=check)

    cmd = verbs.add_parser("believe", parents=[common], help="compute a belief set")
    cmd.add_argument("file")
    cmd.add_argument("--evidence", required=True, help="'{a b c}', 'S' or an index into the evidence list")
    _operator(cmd)
    cmd.add_argument("--question-file", default=None, help="file with a replacement 'question:' section")
    cmd.set_defaults(handler=believe)

    cmd = verbs.add_parser("principles", parents=[common], help="check the belief-revision principles")
    cmd.add_argument("file")
    _operator(cmd)
    cmd.add_argument("--only", type=_principles, default=None, help="comma separated principle names")
    cmd.add_argument("--refine", action="store_true", help="refine the question by every body of evidence first")
    cmd.set_defaults(handler=principles)

    cmd = verbs.add_parser("props", parents=[common], help="check orthogonality, stability and threshold")
    cmd.add_argument("file")
    _operator(cmd)
    cmd.add_argument("--refine", action="store_true", help="refine the question by every body of evidence first")
    cmd.set_defaults(handler=props)

    cmd = verbs.add_parser("example", parents=[common], help="generate a named structure")
    cmd.add_argument("name", choices=[c.value for c in CorpusId])
    cmd.add_argument("--n", type=_positive, default=None, help="number of states, flips or cards")
    cmd.add_argument("--t", type=_rational, default=None, help="threshold")
    cmd.add_argument("--question", default=None, help="question variant")
    cmd.add_argument("-o", "--output", default=None, help="output file")
    cmd.set_defaults(handler=example)

    cmd = verbs.add_parser("search", parents=[common], help="search for a countermodel")
    cmd.add_argument("--principle", type=Principle.parse, required=True)
    _operator(cmd, required=True)
    cmd.add_argument("--constraint", choices=[c.value for c in ConstraintFilter], default=None)
    cmd.add_argument("--budget", type=_positive, required=True, help="number of structures to generate")
    cmd.add_argument("--seed", type=_seed, required=True)
    cmd.add_argument("--max-states", type=_positive, default=6)
    cmd.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.FREE.value)
    cmd.add_argument("--workers", type=_positive, default=None, help=f"worker processes (default ${config.WORKERS} or 1)")
    cmd.add_argument("-o", "--output", default=None, help="output file for a countermodel")
    cmd.set_defaults(handler=search)

    cmd = verbs.add_parser("shrink", parents=[common], help="shrink a countermodel")
    cmd.add_argument("file")
    cmd.add_argument("--principle", type=Principle.parse, required=True)
    _operator(cmd, required=True)
    cmd.add_argument("-o", "--output", default=None, help="output file")
    cmd.set_defaults(handler=shrink_countermodel)

    return parser


def _operator(cmd, required=False):
    choices = [op.value for op in BeliefOperator]
    if required:
        cmd.add_argument("--operator", choices=choices, required=True)
    else:
        cmd.add_argument("--operator", choices=choices, default=BeliefOperator.HPD.value)


def _principles(arg):
    return [Principle.parse(name) for name in arg.split(",") if name.strip()]


def _rational(arg):
    try:
        return core.rational(arg)
    except ZeroDivisionError as x:
        raise ValueError(f"invalid rational ({arg})") from x


def _positive(arg):
    v = int(arg)
    if v < 1:
        raise ValueError(f"invalid count ({arg})")

    return v


def _seed(arg):
    v = int(arg, 0)
    if not 0 <= v < 1 << 64:
        raise ValueError(f"invalid seed ({arg})")

    return v


def _load(file):
    text = Path(file).read_text(encoding=codec.ENCODING)

    return parse(text)


def _question(file, m):
    text = Path(file).read_text(encoding=codec.ENCODING)
    try:
        return parse_question(text, m)
    except ParseError as x:
        raise ValueError(f"{file}:{x}") from x


def _write(file, text):
    with open(file, "w", encoding=codec.ENCODING, newline="\n") as f:
        f.write(text)


def _setspec(m, spec):
    spec = spec.strip()

    if spec.isdigit():
        i = int(spec)
        if i >= len(m.evidence):
            raise ValueError(f"evidence index {i} out of range (0..{len(m.evidence) - 1})")
        return m.evidence[i]

    names = spec.removeprefix("{").removesuffix("}").split()
    if names == ["S"]:
        return m.full

    return core.proposition(m, names)
