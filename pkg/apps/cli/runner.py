# cli/runner.py
"""
`mds-oracle <command> [flags]`: hyphenated front door onto the management
commands. Returns the command's exit code instead of exiting.
"""
import os
import sys
from typing import Sequence

COMMANDS = {
    "check-2d": "check_2d",
    "check-3d": "check_3d",
    "check-tetra": "check_tetra",
    "check-wps": "check_wps",
    "rays": "rays",
    "search": "search",
    "verify-derivative": "verify_derivative",
}

USAGE = "usage: mds-oracle {" + ",".join(COMMANDS) + "} [options]"


def run(argv: Sequence[str]) -> int:
    from django.core.management import get_commands, load_command_class

    if not argv or argv[0] in ("-h", "--help"):
        sys.stderr.write(USAGE + "\n")
        return 0 if argv else 2
    name = COMMANDS.get(argv[0])
    if name is None:
        sys.stderr.write(f"unknown command {argv[0]!r}\n{USAGE}\n")
        return 2

    command = load_command_class(get_commands()[name], name)
    try:
        command.run_from_argv(["mds-oracle", name, *argv[1:]])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main() -> None:
    import django

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
    django.setup()
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
