#!/usr/bin/env python3
"""
Local check runner for adfnlp.

Runs formatting, linting, typing, the pytest suite and the seeded differential
checks in order and prints one summary at the end.

Usage:
    python run_tests.py              # everything
    python run_tests.py --fast       # skip slow tests, verify, audit and build
    python run_tests.py --lint       # formatting, linting and typing only
    python run_tests.py --tests      # pytest only
"""

import argparse
import subprocess
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence

ROOT = Path(__file__).parent

GREEN = "\033[92m"
RED = "\033[91m"
CYAN = "\033[96m"
BOLD = "\033[1m"
END = "\033[0m"


@dataclass(frozen=True)
class Step:
    name: str
    command: Sequence[str]
    group: str
    required: bool = True
    slow: bool = False


def python(*args: str) -> List[str]:
    return [sys.executable, "-m", *args]


def pytest_command(fast: bool, coverage: bool) -> List[str]:
    command = python("pytest", "tests/")
    if fast:
        command += ["-m", "not slow"]
    if coverage:
        command += ["--cov=src/adfnlp", "--cov-report=term-missing"]
    else:
        command += ["--no-cov"]
    return command


def build_steps(fast: bool, coverage: bool) -> List[Step]:
    return [
        Step("black", python("black", "--check", "src/", "tests/"), "lint"),
        Step("isort", python("isort", "--check-only", "src/", "tests/"), "lint"),
        Step(
            "flake8",
            python("flake8", "src", "--select=E9,F63,F7,F82", "--show-source"),
            "lint",
        ),
        Step("mypy", python("mypy", "src/adfnlp"), "lint"),
        Step("pytest", pytest_command(fast, coverage), "tests"),
        Step("verify", python("adfnlp", "verify", "all"), "verify", slow=True),
        Step("pip-audit", python("pip_audit"), "audit", required=False, slow=True),
        Step("build", python("build"), "build", slow=True),
    ]


def run_step(step: Step) -> bool:
    print(f"\n{BOLD}{step.name}{END}")
    print(f"{CYAN}$ {' '.join(step.command)}{END}")
    try:
        result = subprocess.run(list(step.command), cwd=ROOT)
    except FileNotFoundError as e:
        print(f"{RED}command not found: {e}{END}")
        return not step.required
    return result.returncode == 0 or not step.required


def main(argv: Sequence[str] = ()) -> int:
    parser = argparse.ArgumentParser(description="Check runner for adfnlp")
    parser.add_argument("--fast", action="store_true", help="skip slow steps")
    parser.add_argument("--lint", action="store_true", help="lint steps only")
    parser.add_argument("--tests", action="store_true", help="pytest only")
    parser.add_argument(
        "--no-coverage", action="store_true", help="run pytest without coverage"
    )
    args = parser.parse_args(list(argv) or None)

    steps = build_steps(args.fast, not args.no_coverage)
    if args.lint:
        steps = [s for s in steps if s.group == "lint"]
    elif args.tests:
        steps = [s for s in steps if s.group == "tests"]
    elif args.fast:
        steps = [s for s in steps if not s.slow]

    failed = []
    try:
        for step in steps:
            if not run_step(step):
                failed.append(step.name)
    except KeyboardInterrupt:
        print(f"\n{RED}interrupted{END}")
        return 1

    passed = len(steps) - len(failed)
    colour = RED if failed else GREEN
    print(f"\n{colour}{BOLD}{passed}/{len(steps)} steps passed{END}")
    for name in failed:
        print(f"{RED}  failed: {name}{END}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
