# wps/management/commands/rays.py
import json

from apps.cli.commands import OracleCommand, parse_tuple
from apps.wps.services import normalize_weights, tetra_fan


class Command(OracleCommand):
    help = "Rays of the normal fan of a tetrahedron, its weights and lattice index"

    def add_arguments(self, parser):
        parser.add_argument("--tuple", dest="tuple", required=True)

    def handle(self, *args, **options):
        fan = self.run_checked(lambda text: tetra_fan(parse_tuple(text)), options["tuple"])
        payload = fan.to_dict()
        payload["canonical_weights"] = list(normalize_weights(fan.weights)[0].weights)
        self.stdout.write(json.dumps(payload, indent=2))
