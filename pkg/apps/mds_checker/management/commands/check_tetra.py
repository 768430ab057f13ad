# mds_checker/management/commands/check_tetra.py
from apps.cli.commands import ReportCommand, parse_tuple
from apps.mds_checker.services import check_tetra, projection_report


class Command(ReportCommand):
    help = "Check a tetrahedron given as --tuple=x_L,x_R,y_0,z_0"

    def add_input_arguments(self, parser):
        parser.add_argument("--tuple", dest="tuple", required=True)
        parser.add_argument(
            "--projections",
            action="store_true",
            help="report the planar checks of the xy and xz projections instead",
        )

    def build_report(self, options):
        t = parse_tuple(options["tuple"])
        if options["projections"]:
            return projection_report(t, options["m_factor"])
        return check_tetra(t, options["m_factor"])
