"""
Main entry point for the harvest command when run as a package.
"""
import sys

COMMANDS = ("sweep", "preset", "selftest", "audit")


def main(argv=None):
    """
    Dispatch to one of the subcommands.

    Usage:
        python -m entanglement_harvest {sweep|preset|selftest|audit} [options]

    Args:
        argv: Arguments after the program name; sys.argv[1:] when omitted

    Returns:
        int: Exit code (0 success, 1 flagged rows or failed checks, 2 usage error)
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        print(f"usage: harvest {{{','.join(COMMANDS)}}} [options]")
        return 0 if argv else 2
    command, rest = argv[0].lower(), argv[1:]

    if command == "sweep":
        from entanglement_harvest.scripts.run_sweep import main as run
    elif command == "preset":
        from entanglement_harvest.scripts.run_preset import main as run
    elif command == "selftest":
        from entanglement_harvest.scripts.run_selftest import main as run
    elif command == "audit":
        from entanglement_harvest.scripts.run_audit import main as run
    else:
        print(f"Unknown command: {argv[0]}", file=sys.stderr)
        print(f"Available commands: {', '.join(COMMANDS)}", file=sys.stderr)
        return 2
    return run(rest)


if __name__ == "__main__":
    sys.exit(main())
