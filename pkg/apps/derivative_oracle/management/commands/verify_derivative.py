# derivative_oracle/management/commands/verify_derivative.py
import json

from django.core.management.base import CommandError

from apps.cli.commands import EXIT_INCONCLUSIVE, OracleCommand
from apps.derivative_oracle.services import run_campaign


class Command(OracleCommand):
    help = "Compare the closed-form derivative values with the linear-algebra oracle on random problems"

    def add_arguments(self, parser):
        parser.add_argument("--samples", type=int, default=None)
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument("--dims", default="2,3", help="comma separated subset of 2,3")

    def handle(self, *args, **options):
        try:
            dims = tuple(sorted({int(x) for x in options["dims"].split(",")}))
        except ValueError:
            raise CommandError(f"bad --dims {options['dims']!r}", returncode=2)
        if not dims or not set(dims) <= {2, 3}:
            raise CommandError(f"bad --dims {options['dims']!r}", returncode=2)

        summary = run_campaign(samples=options["samples"], seed=options["seed"], dims=dims)
        self.stdout.write(json.dumps(summary.to_dict(), indent=2))
        if not summary.ok:
            raise CommandError(f"{sum(summary.failed.values())} checks failed", returncode=EXIT_INCONCLUSIVE)
        self.stderr.write(self.style.SUCCESS(f"all {sum(summary.passed.values())} checks agree"))
