"""
Command-line front end.

Subcommands:

- ``solve``: models of an ADF, SETAF or logic program under one semantics
- ``translate``: nlp→adf, adf→nlp and setaf→adf
- ``links``: classify every link of an ADF
- ``verify``: run differential checks

Exit codes: 0 success, 1 empty result or failed check, 2 input error,
3 capacity bound exceeded.
"""

import argparse
import json
import logging
import sys
from enum import Enum
from typing import Dict, List, Optional, Sequence, TextIO

from pydantic import BaseModel, ConfigDict, Field, model_validator

from . import __version__
from .config import Settings, create_settings
from .exceptions import AdfnlpError, CapacityError, ParseError
from .logic import Interpretation3
from .parsers import (
    parse_adf,
    parse_program,
    parse_setaf,
    read_source,
    render_adf,
    render_models_json,
    render_models_text,
    render_program,
)
from .semantics.adf import (
    Adf,
    Link,
    LinkClass,
    Part1Semantics,
    classify_link,
    complete_models,
    grounded_model,
    part1_semantics,
    preferred_models,
    stable_models,
)
from .semantics.adfplus import (
    AdfPlusViolation,
    check_adfplus,
    l_stable_models,
    prune_redundant,
    redundant_links_by_count,
)
from .semantics.nlp import LpSemantics, lp_semantics
from .translate import (
    p_of_xi,
    round_trip_adf,
    round_trip_program,
    setaf_to_adf,
    xi,
    xi2,
)
from .verify import (
    GenConfig,
    check_names,
    resolve_check,
    run_checks,
    search_negatives,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

SEARCH_NEGATIVES = "search-negatives"


class InputFormat(str, Enum):
    NLP = "nlp"
    ADF = "adf"
    SETAF = "setaf"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


ADF_SEMANTICS = ("complete", "grounded", "preferred", "stable", "lstable")

L_STABLE_OUTSIDE_ADFPLUS = (
    "L-stable (complete models with minimal unknown statements; not an ADF+)"
)

PART1_SEMANTICS: Dict[str, Part1Semantics] = {
    "admissible": Part1Semantics.ADMISSIBLE,
    "partialstable": Part1Semantics.PARTIAL_STABLE,
    "regular": Part1Semantics.REGULAR,
    "semistable": Part1Semantics.SEMI_STABLE,
    "stablepart1": Part1Semantics.STABLE_PART1,
    "lstablepart1": Part1Semantics.L_STABLE_PART1,
    "preferredpart1": Part1Semantics.PREFERRED_PART1,
}

LP_SEMANTICS: Dict[str, LpSemantics] = {
    "psm": LpSemantics.PSM,
    "wellfounded": LpSemantics.WELL_FOUNDED,
    "lpregular": LpSemantics.REGULAR,
    "lpstable": LpSemantics.STABLE,
    "lplstable": LpSemantics.L_STABLE,
}

# Framework semantics and their counterpart on programs.
LP_COUNTERPART = {
    "complete": "psm",
    "grounded": "wellfounded",
    "preferred": "lpregular",
    "regular": "lpregular",
    "stable": "lpstable",
    "lstable": "lplstable",
    "partialstable": "psm",
}

SEMANTICS = ADF_SEMANTICS + tuple(PART1_SEMANTICS) + tuple(LP_SEMANTICS)


class SolveRequest(BaseModel):
    """A validated ``solve`` invocation."""

    model_config = ConfigDict(frozen=True)

    path: str
    format: InputFormat
    semantics: str
    output: OutputFormat = OutputFormat.TEXT
    max_statements: Optional[int] = Field(default=None, ge=0)
    max_cset_parents: Optional[int] = Field(default=None, ge=0)
    unicode: bool = False
    assert_adfplus: bool = False

    @model_validator(mode="after")
    def _check_combination(self) -> "SolveRequest":
        name = self.semantics
        if name not in SEMANTICS:
            raise ValueError(
                f"unknown semantics '{name}'; choose from {', '.join(SEMANTICS)}"
            )
        if self.format is InputFormat.NLP and name not in LP_SEMANTICS:
            hint = LP_COUNTERPART.get(name)
            suggestion = f"; did you mean '{hint}'?" if hint else ""
            raise ValueError(
                f"'{name}' is a framework semantics and needs --format adf or "
                f"setaf{suggestion}"
            )
        if self.format is not InputFormat.NLP and name in LP_SEMANTICS:
            raise ValueError(f"'{name}' is a logic-program semantics; use --format nlp")
        return self


def _write(stream: Optional[TextIO], text: str) -> None:
    stream = stream or sys.stdout
    stream.write(text)
    stream.flush()


def _load_framework(fmt: InputFormat, text: str, max_parents: Optional[int]) -> Adf:
    if fmt is InputFormat.SETAF:
        return setaf_to_adf(parse_setaf(text), max_parents).adf
    return parse_adf(text)


def _render(
    models: List[Interpretation3], req: SolveRequest, label: Optional[str] = None
) -> str:
    if req.output is OutputFormat.JSON:
        extra = {} if label is None else {"label": label}
        return render_models_json(models, **extra) + "\n"
    header = "" if label is None else f"% {label}\n"
    return header + render_models_text(models, req.unicode)


def cmd_solve(
    req: SolveRequest, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None
) -> int:
    """
    Compute and print the models requested by ``req``.

    Returns:
        0 with at least one model, 1 when the semantics yields none, 2 when
        ``--assert-adfplus`` fails
    """
    text = read_source(req.path)
    bound = req.max_statements
    label: Optional[str] = None

    if req.format is InputFormat.NLP:
        program = parse_program(text)
        models = lp_semantics(program, LP_SEMANTICS[req.semantics], bound)
    else:
        D = _load_framework(req.format, text, req.max_cset_parents)
        recognized = check_adfplus(D, req.max_cset_parents)
        if req.assert_adfplus and isinstance(recognized, AdfPlusViolation):
            _write(stderr or sys.stderr, f"error: not an ADF+: {recognized}\n")
            return EXIT_INPUT

        name = req.semantics
        if name in PART1_SEMANTICS:
            models = part1_semantics(D, PART1_SEMANTICS[name], bound)
        elif name == "complete":
            models = complete_models(D, bound)
        elif name == "grounded":
            models = [grounded_model(D)]
        elif name == "preferred":
            models = preferred_models(D, bound)
        elif name == "stable":
            models = stable_models(D, bound)
        else:
            if isinstance(recognized, AdfPlusViolation):
                label = L_STABLE_OUTSIDE_ADFPLUS
            models = l_stable_models(D, bound)

    _write(stdout, _render(models, req, label))
    return EXIT_OK if models else EXIT_EMPTY


TRANSLATIONS = {("nlp", "adf"), ("adf", "nlp"), ("setaf", "adf")}


def cmd_translate(
    source: str,
    target: str,
    path: str,
    settings: Settings,
    naive: bool = False,
    round_trip: bool = False,
    stdout: Optional[TextIO] = None,
) -> int:
    """
    Print the translation of the input in the target file format.

    ``naive`` selects Ξ₂ for nlp→adf; ``round_trip`` translates there and
    back, printing a result in the source format.
    """
    if (source, target) not in TRANSLATIONS:
        raise AdfnlpError(
            f"cannot translate {source} to {target}; supported: "
            + ", ".join(f"{a}->{b}" for a, b in sorted(TRANSLATIONS))
        )
    text = read_source(path)
    bound = settings.max_substatements
    max_parents = settings.max_cset_parents

    if source == "nlp":
        program = parse_program(text)
        if round_trip:
            output = render_program(round_trip_program(program, max_parents))
        elif naive:
            output = render_adf(xi2(program))
        else:
            output = render_adf(xi(program, bound, max_parents=max_parents).adf)
    elif source == "adf":
        D = parse_adf(text)
        if round_trip:
            output = render_adf(round_trip_adf(D, max_parents))
        else:
            output = render_program(p_of_xi(D, max_parents))
    else:
        if round_trip:
            raise AdfnlpError("--round-trip is not available for setaf input")
        output = render_adf(setaf_to_adf(parse_setaf(text), max_parents).adf)

    _write(stdout, output)
    return EXIT_OK


def cmd_links(
    path: str,
    settings: Settings,
    prune: bool = False,
    output: OutputFormat = OutputFormat.TEXT,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Classify every link of an ADF.

    On ADF⁺ every link attacks, and the redundant ones are found by
    counting; otherwise each link is classified from its acceptance family.
    With ``prune`` the ADF⁺ is printed with every condition in negative DNF.
    """
    D = parse_adf(read_source(path))
    max_parents = settings.max_cset_parents
    recognized = check_adfplus(D, max_parents)

    if prune:
        if isinstance(recognized, AdfPlusViolation):
            _write(
                stderr or sys.stderr, f"error: pruning needs an ADF+: {recognized}\n"
            )
            return EXIT_INPUT
        _write(stdout, render_adf(prune_redundant(recognized)))
        return EXIT_OK

    classes: Dict[Link, LinkClass] = {}
    if isinstance(recognized, AdfPlusViolation):
        for link in D.links():
            classes[link] = classify_link(D, link, max_parents)
    else:
        redundant = redundant_links_by_count(recognized)
        for link in D.links():
            classes[link] = (
                LinkClass.REDUNDANT if link in redundant else LinkClass.ATTACKING
            )

    if output is OutputFormat.JSON:
        payload = {
            "links": [
                {"link": [r, s], "class": kind.value}
                for (r, s), kind in classes.items()
            ]
        }
        _write(stdout, json.dumps(payload) + "\n")
    else:
        _write(
            stdout,
            "".join(f"({r},{s}): {kind.value}\n" for (r, s), kind in classes.items()),
        )
    return EXIT_OK


def cmd_verify(
    names: Sequence[str],
    settings: Settings,
    output: OutputFormat = OutputFormat.TEXT,
    stdout: Optional[TextIO] = None,
) -> int:
    """
    Run checks and print their reports.

    Returns:
        0 when every check passed, 1 otherwise
    """
    cfg = GenConfig(seed=settings.seed, trials=settings.trials)
    selected = list(names) or ["all"]

    if SEARCH_NEGATIVES in selected:
        report = search_negatives(cfg)
        if output is OutputFormat.JSON:
            _write(stdout, report.model_dump_json() + "\n")
        else:
            lines = [f"search-negatives: {report.trials} trials"]
            for name, witness in report.witnesses.items():
                if witness is None:
                    lines.append(f"  {name}: no witness")
                else:
                    lines.append(f"  {name}:")
                    lines.extend(f"    {line}" for line in witness.splitlines())
            _write(stdout, "\n".join(lines) + "\n")
        selected = [name for name in selected if name != SEARCH_NEGATIVES]
        if not selected:
            return EXIT_OK

    if "all" in selected:
        selected = check_names()
    for name in selected:
        resolve_check(name)
    reports = run_checks(selected, cfg)

    if output is OutputFormat.JSON:
        _write(
            stdout,
            json.dumps([report.model_dump() for report in reports], ensure_ascii=False)
            + "\n",
        )
    else:
        lines = []
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            lines.append(
                f"{report.check}: {status} "
                f"({report.fixed} fixed, {report.trials} trials)"
            )
            for failure in report.failures:
                if failure.seed is None:
                    origin = "worked example"
                else:
                    origin = f"seed {failure.seed}"
                if failure.bound is not None:
                    origin += f", bound {failure.bound}"
                lines.append(f"  {origin}")
                lines.append(f"    expected: {failure.expected}")
                lines.append(f"    actual:   {failure.actual}")
                lines.extend(f"    | {line}" for line in failure.instance.splitlines())
        _write(stdout, "\n".join(lines) + "\n")
    return EXIT_OK if all(report.passed for report in reports) else EXIT_EMPTY


# === ARGUMENT PARSING ===


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-statements",
        type=int,
        metavar="N",
        help="enumeration bound on statements / atoms (default 14)",
    )
    common.add_argument(
        "--output",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="output format (default text)",
    )
    common.add_argument("--seed", type=int, help="verify: random seed")
    common.add_argument("--trials", type=int, help="verify: trials per check")
    common.add_argument(
        "--unicode", action="store_true", default=None, help="render negation as ¬"
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (-vv for debug)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="adfnlp",
        description="Semantics of ADFs, ADF+ and normal logic programs, and "
        "the translations between them",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve = subparsers.add_parser("solve", parents=[common], help="compute models")
    solve.add_argument("path", help="input file, or - for stdin")
    solve.add_argument(
        "--format", choices=[fmt.value for fmt in InputFormat], required=True
    )
    solve.add_argument("--semantics", choices=SEMANTICS, required=True)
    solve.add_argument(
        "--assert-adfplus",
        action="store_true",
        help="fail when the framework has a non-attacking link",
    )

    translate = subparsers.add_parser(
        "translate", parents=[common], help="translate between formalisms"
    )
    translate.add_argument("path", help="input file, or - for stdin")
    translate.add_argument(
        "--from", dest="source", choices=["nlp", "adf", "setaf"], required=True
    )
    translate.add_argument("--to", dest="target", choices=["nlp", "adf"], required=True)
    translate.add_argument(
        "--naive", action="store_true", help="nlp->adf: use the rule-body translation"
    )
    translate.add_argument(
        "--round-trip",
        action="store_true",
        help="translate to the target and back to the source format",
    )

    links = subparsers.add_parser("links", parents=[common], help="classify links")
    links.add_argument("path", help="ADF file, or - for stdin")
    links.add_argument(
        "--prune-redundant",
        action="store_true",
        help="print the ADF+ with redundant links removed",
    )

    verify = subparsers.add_parser(
        "verify", parents=[common], help="run differential checks"
    )
    verify.add_argument(
        "checks",
        nargs="*",
        help=f"check names, 'all' (default) or '{SEARCH_NEGATIVES}'",
    )
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    output = OutputFormat(args.output)

    try:
        settings = create_settings(
            max_statements=args.max_statements,
            seed=args.seed,
            trials=args.trials,
            unicode=args.unicode,
        )
        if args.command == "solve":
            request = SolveRequest(
                path=args.path,
                format=InputFormat(args.format),
                semantics=args.semantics,
                output=output,
                max_statements=settings.max_statements,
                max_cset_parents=settings.max_cset_parents,
                unicode=settings.unicode,
                assert_adfplus=args.assert_adfplus,
            )
            return cmd_solve(request)
        if args.command == "translate":
            return cmd_translate(
                args.source,
                args.target,
                args.path,
                settings,
                naive=args.naive,
                round_trip=args.round_trip,
            )
        if args.command == "links":
            return cmd_links(
                args.path, settings, prune=args.prune_redundant, output=output
            )
        return cmd_verify(args.checks, settings, output)
    except CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        # AdfnlpError, pydantic validation and bad environment values
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
