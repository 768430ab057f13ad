# mds_checker/management/commands/check_2d.py
from apps.cli.commands import ShapeReportCommand, shape_from_options
from apps.mds_checker.services import check_2d
from apps.polytopes.serializers import Polygon4Serializer


class Command(ShapeReportCommand):
    help = "Check a plane 4-gon, e.g. --left=-3/4,1/2 --right=1/4,3/4"

    def build_report(self, options):
        return check_2d(shape_from_options(options, Polygon4Serializer, 2), options["m_factor"])
