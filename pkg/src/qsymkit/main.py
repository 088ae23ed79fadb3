import argparse
import os
import sys
from typing import List, Optional, TextIO
import bugsnag
from pydantic import ValidationError
from qsymkit.commands import (
    abelianize,
    aut,
    cantor,
    check,
    continuum,
    laplacian,
    present,
    solve01,
    verify_model,
    witness,
)
from qsymkit.commands.common import InputError
from qsymkit.models import RunConfig
from qsymkit.settings import settings
from qsymkit.utils.logging import logger

COMMANDS = {
    command.name: command
    for command in (
        laplacian,
        aut,
        present,
        abelianize,
        solve01,
        verify_model,
        witness,
        cantor,
        continuum,
        check,
    )
}

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_PARSE_ERROR = 2


if settings.bugsnag_api_key:
    bugsnag.configure(
        api_key=settings.bugsnag_api_key,
        project_root=os.path.dirname(os.path.abspath(__file__)),
        release_stage=settings.env or "development",
        notify_release_stages=["development", "staging", "production"],
        auto_capture_sessions=False,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsymkit",
        description="Presentations, classical oracles and matrix models for quantum symmetry groups.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for command in COMMANDS.values():
        command.register(subparsers)
    return parser


def run(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Run one subcommand; results go to out, diagnostics to err."""
    command = COMMANDS[config.subcommand]
    logger.info(f"running {config.subcommand}")

    try:
        result = command.execute(config)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE_ERROR
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN_ERROR
    except Exception as exc:
        if settings.bugsnag_api_key:
            bugsnag.notify(exc, context=config.subcommand)
        raise

    out.write(result.render(config.output_format))
    logger.info(f"{config.subcommand} finished with exit code {result.exit_code}")
    return result.exit_code


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    args = build_parser().parse_args(argv)

    try:
        config = RunConfig(**vars(args))
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE_ERROR

    return run(config, out, err)


if __name__ == "__main__":
    sys.exit(main())
