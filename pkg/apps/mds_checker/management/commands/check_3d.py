# mds_checker/management/commands/check_3d.py
from apps.cli.commands import ShapeReportCommand, shape_from_options
from apps.mds_checker.services import check_3d, check_3d_n1
from apps.polytopes.serializers import Polytope3Serializer


class Command(ShapeReportCommand):
    help = "Check a 3-dimensional polytope given by its vertices P_L and P_R"

    def add_input_arguments(self, parser):
        super().add_input_arguments(parser)
        parser.add_argument(
            "--single-point",
            action="store_true",
            help="use the criterion for a one-point slice next to P_L",
        )

    def build_report(self, options):
        shape = shape_from_options(options, Polytope3Serializer, 3)
        checker = check_3d_n1 if options["single_point"] else check_3d
        return checker(shape, options["m_factor"])
