# wps/management/commands/search.py
from django.conf import settings

from apps.cli.commands import OracleCommand
from apps.cli.rendering import FORMATS, render
from apps.wps.services import search
from apps.wps.types import SUPPORTED_DIMENSIONS


class Command(OracleCommand):
    help = "Exhaustive search for weighted projective spaces passing the criterion"

    def add_arguments(self, parser):
        parser.add_argument("--dim", type=int, choices=SUPPORTED_DIMENSIONS, required=True)
        parser.add_argument("--bound", type=int, required=True)
        parser.add_argument("--jobs", type=int, default=None, help=f"default {settings.MDS_ORACLE_JOBS}")
        parser.add_argument("--backend", choices=("local", "celery"), default=None)
        parser.add_argument("--format", choices=FORMATS, default="csv")
        parser.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format=json")

    def handle(self, *args, **options):
        rows = self.run_checked(search, options["dim"], options["bound"], options["jobs"], options["backend"])
        self.stdout.write(render(rows, options["format"]))
        self.stderr.write(self.style.SUCCESS(f"{len(rows)} rows (dim {options['dim']}, bound {options['bound']})"))
