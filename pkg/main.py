#!/usr/bin/env python3
"""
Compliance Checker Main Entry Point
Check a data graph against norms with a single command:

    python main.py --data data/scenario.ttl --norms data/gdpr.norms --explain

Exit code 0 when the graph conforms, 1 when violations were found, 2 on errors.
"""
import argparse
import logging
import sys

from python_src.main.check import EXIT_ERROR, check
from python_src.main.config import CheckOptions, FORMATS, resolve_log_level

logger = logging.getLogger("main")


def build_parser():
    """Command-line arguments"""
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Infer the consequences of constitutive norms over an RDF graph "
                    "and report which obligations it violates.",
    )
    parser.add_argument("--data", action="append", required=True, metavar="FILE",
                        help="Turtle data file; repeat to merge several graphs")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--norms", metavar="FILE", help="norm file to compile into shapes and rules")
    source.add_argument("--shapes", metavar="FILE", help="SHACL shapes and triple rules in Turtle")
    parser.add_argument("--restrictions", action="append", metavar="FILE",
                        help="extra restriction shapes validated with the norms; repeatable")
    parser.add_argument("--format", choices=FORMATS, default="text", help="report format (default: text)")
    parser.add_argument("--explain", action="store_true",
                        help="list the authorities ruling on each non-transparent processing")
    parser.add_argument("--no-infer", action="store_true", help="validate without running the rules")
    parser.add_argument("--dump-inferred", metavar="FILE", help="write the graph after inference as Turtle")
    parser.add_argument("--emit-shapes", metavar="FILE", help="write the shapes being checked as Turtle")
    parser.add_argument("--trace", action="store_true",
                        help="list every inferred triple with the rule that produced it (text format)")
    parser.add_argument("--log-level", metavar="LEVEL",
                        help="DEBUG, INFO, WARNING or ERROR (default: $NORMCHECK_LOG_LEVEL or WARNING)")
    return parser


def configure_logging(level):
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    """Main function"""
    args = build_parser().parse_args(argv)
    try:
        configure_logging(resolve_log_level(args.log_level))
        options = CheckOptions.from_args(args)
    except ValueError as exc:
        configure_logging("WARNING")
        logger.error("error: %s", exc)
        return EXIT_ERROR

    if options.trace and options.format != "text":
        logger.warning("--trace only applies to the text format")

    report, code = check(options)
    if report is not None:
        output = report.to_json() if options.format == "json" else report.to_text(trace=options.trace)
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
