# cli/commands.py
"""
Shared plumbing of the management commands: input parsing, rendering and
the mapping of outcomes to exit codes (0 NotMDS, 1 Inconclusive, 2 bad input).
"""
import json
import logging
import sys
from fractions import Fraction

from django.core.management.base import BaseCommand, CommandError

from apps.exact_math.services import parse_rational
from apps.mds_checker.reports import CheckReport
from apps.polytopes.shapes import TetraTuple
from common.exceptions import InputError, MdsOracleError
from .rendering import FORMATS, render

logger = logging.getLogger(__name__)

EXIT_INCONCLUSIVE = 1
EXIT_INPUT_ERROR = 2


def parse_rationals(text: str) -> list[Fraction]:
    return [parse_rational(token) for token in text.split(",")]


def parse_point(text: str, dim: int) -> tuple[Fraction, ...]:
    values = parse_rationals(text)
    if len(values) != dim:
        raise InputError(f"expected {dim} coordinates, got {len(values)}", token=text)
    return tuple(values)


def parse_tuple(text: str) -> TetraTuple:
    values = parse_rationals(text)
    if len(values) < 3:
        raise InputError("a tuple needs x_L, x_R and at least one slope", token=text)
    return TetraTuple.of(*values)


def load_document(path: str) -> dict:
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as handle:
                raw = handle.read()
        return json.loads(raw)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", token=path) from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg}", token=path) from exc


def shape_from_options(options: dict, serializer_class, dim: int):
    """The shape from --json-file, or from --left/--right coordinate lists."""
    if options.get("json_file"):
        data = load_document(options["json_file"])
    elif options.get("left") and options.get("right"):
        data = {
            "p_left": list(parse_point(options["left"], dim)),
            "p_right": list(parse_point(options["right"], dim)),
        }
    else:
        raise InputError("give --json-file or both --left and --right", token="")
    serializer = serializer_class(data=data)
    if not serializer.is_valid():
        raise InputError(json.dumps(serializer.errors), token=options.get("json_file") or "")
    return serializer.validated_data["shape"]


class OracleCommand(BaseCommand):
    requires_system_checks = []

    def run_checked(self, build, *args):
        try:
            return build(*args)
        except MdsOracleError as exc:
            logger.debug("command input rejected: %s", exc.as_dict())
            raise CommandError(f"{exc.code}: {exc.message}", returncode=EXIT_INPUT_ERROR) from exc


class ReportCommand(OracleCommand):
    """A command that prints one CheckReport and exits 1 unless it is NotMDS."""

    def add_arguments(self, parser):
        parser.add_argument("--format", choices=FORMATS, default="json")
        parser.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format=json")
        parser.add_argument("--m-factor", dest="m_factor", type=int, default=1)
        self.add_input_arguments(parser)

    def add_input_arguments(self, parser):
        pass

    def build_report(self, options) -> CheckReport:
        raise NotImplementedError

    def handle(self, *args, **options):
        report = self.run_checked(self.build_report, options)
        self.stdout.write(render(report, options["format"]))
        if not report.is_not_mds:
            failing = ", ".join(report.failing()) or "no condition evaluated"
            raise CommandError(f"{report.kind}: Inconclusive ({failing})", returncode=EXIT_INCONCLUSIVE)
        self.stderr.write(self.style.SUCCESS(f"{report.kind}: NotMDS"))


class ShapeReportCommand(ReportCommand):
    def add_input_arguments(self, parser):
        parser.add_argument("--json-file", dest="json_file", help="polytope JSON document, '-' for stdin")
        parser.add_argument("--left", help="coordinates of P_L, comma separated")
        parser.add_argument("--right", help="coordinates of P_R, comma separated")
