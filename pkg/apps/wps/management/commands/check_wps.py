# wps/management/commands/check_wps.py
from apps.cli.commands import ReportCommand
from apps.wps.services import check_wps
from apps.wps.types import WpsWeights


class Command(ReportCommand):
    help = "Check P(a, b, c_1, ...) given as --weights=a,b,c1,c2[,c3]"

    def add_input_arguments(self, parser):
        parser.add_argument("--weights", required=True)

    def build_report(self, options):
        return check_wps(WpsWeights.parse(options["weights"]))
