import argparse
import logging
import sys

from framestop.apis.pipeline import RunConfig, format_trace, run_pipeline, validate_pipeline
from framestop.utils.meta import DictAction, FrameStopError, Timer, add_env_var, colored_print, get_logger, stderr_print


LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


def non_negative_int(value):
    try:
        ret = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value!r}")
    if ret < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value!r}")
    return ret


def build_parser():
    parser = argparse.ArgumentParser(prog="framestop", description="Run frame analyses over time-stamped record files")
    subparsers = parser.add_subparsers(dest="command", metavar="{run,trace,validate}")
    subparsers.required = True
    helps = dict(
        run="Run the pipeline, write the stop trace and the analysis summaries",
        trace="Run the pipeline and print the stop trace to stdout, no file is written",
        validate="Parse the config and every record file without running",
    )
    for command, help in helps.items():
        sub = subparsers.add_parser(command, help=help)
        sub.add_argument("--config", required=True, help="Run configuration file (.py, .yaml or .json)")
        sub.add_argument("--limit", type=non_negative_int, default=None, help="Override record_limit")
        sub.add_argument(
            "--cfg-options",
            "--opt",
            nargs="+",
            action=DictAction,
            help="Override settings of the configuration file, in key=value form with dotted keys, "
            'e.g. record_limit=4 "sources.0.path=events.tsv"',
        )
        sub.add_argument("--log-level", choices=LOG_LEVELS, default=None, help="Logging level, defaults to log_level of the config")
    return parser


def write_stdout(text):
    """Write `text` to stdout as UTF-8 with newline-only line endings on every platform."""
    buffer = getattr(sys.stdout, "buffer", None)
    if buffer is None:
        sys.stdout.write(text)
    else:
        sys.stdout.flush()
        buffer.write(text.encode("utf-8"))
        buffer.flush()
    sys.stdout.flush()


def parse_args(argv=None):
    return build_parser().parse_args(argv)


def execute(args):
    run_config = RunConfig.fromfile(args.config, options=args.cfg_options, record_limit=args.limit)
    logger = get_logger()
    logger.setLevel(getattr(logging, args.log_level or run_config.log_level, logging.INFO))

    if args.command == "validate":
        engine = validate_pipeline(run_config)
        logger.info(f"{args.config} is valid: {len(engine.sources)} streams")
        return
    timer = Timer()
    result = run_pipeline(run_config, write_outputs=args.command == "run")
    logger.info(f"{args.command} took {timer.since_start():.3f}s")
    if args.command == "trace":
        write_stdout(format_trace(result.trace))


def main(argv=None):
    """Exit status: 0 on success, 1 on a runtime error, 2 on a usage error."""
    add_env_var()
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        execute(args)
    except (FrameStopError, OSError) as e:
        message = " ".join(str(e).split("\n"))
        colored_print(f"{type(e).__name__}: {message}", level="error", logger=stderr_print)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
