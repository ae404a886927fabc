"""
specmult - normalized Laplacian spectra and the multiplicity n-3 characterization

Usage:
    python main.py spectrum --family G1 --t 2
    python main.py classify --input graphs.g6
    python main.py verify --n 7 --workers 4
    python main.py ds-check --n 7
    python main.py conjecture --n 6
    python main.py lemmas --family G2 --t 2 --samples 50 --seed 1
    python main.py build --family Gamma3 --p 1 --s 2 --t 3
    python main.py enumerate --n 5
    python main.py config --set tolerance=1e-9

Exit codes: 0 success, 1 mismatch / counterexample / inconsistency, 2 input error.
"""
import argparse
import os
import sys
import time
from typing import Any, Dict, List, Optional, Tuple

from dotenv import load_dotenv
from pydantic import ValidationError

APP_ROOT = getattr(sys, "_MEIPASS", os.path.dirname(os.path.abspath(__file__)))


def load_bundled_env(root: str = APP_ROOT) -> bool:
    """Read the .env next to the app. Must run before core.paths is imported."""
    return load_dotenv(os.path.join(root, ".env"))


load_bundled_env()

from core import cli_output, console  # noqa: E402
from core.paths import ensure_data_dir, get_data_path  # noqa: E402

# User overrides from the data directory
load_dotenv(get_data_path(".env"), override=True)

from core.classifier import classify  # noqa: E402
from core.enumeration import enumerate_connected  # noqa: E402
from core.errors import ConvergenceError, InconsistencyError, SpecMultError  # noqa: E402
from core.family_manager import get_manager  # noqa: E402
from core.graph import Graph  # noqa: E402
from core.graph6 import iter_graph6, to_graph6  # noqa: E402
from core.spectral import spectrum  # noqa: E402
from core.types import CliConfig  # noqa: E402
from core.user_config import DEFAULTS, UserConfig  # noqa: E402
from core.verifier import conjecture_search, ds_check, lemma_suite, verify_corpus, verify_theorem  # noqa: E402

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2

COMMANDS = ("spectrum", "classify", "verify", "ds-check", "conjecture", "lemmas", "build", "enumerate")


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

def _setting(flag_value: Any, env_var: Optional[str], key: str, cast):
    """flag > environment > settings file > built-in default"""
    if flag_value is not None:
        return flag_value
    if env_var and os.getenv(env_var):
        return cast(os.getenv(env_var))
    return cast(UserConfig.get(key, DEFAULTS[key]))


def family_params(args: argparse.Namespace, family_name: str) -> Tuple[int, ...]:
    family = get_manager().get(family_name)
    if family.variadic:
        if not args.parts:
            raise SpecMultError(f"{family.name} needs --parts, e.g. --parts 2,3")
        return tuple(int(p) for p in args.parts.split(","))
    params = []
    for name in family.param_names:
        value = getattr(args, name, None)
        if value is None:
            raise SpecMultError(f"{family.name} needs --{name}")
        params.append(value)
    return tuple(params)


def build_config(args: argparse.Namespace) -> CliConfig:
    family = getattr(args, "family", None)
    params: Dict[str, Any] = {}
    if family is not None:
        params = {"params": family_params(args, family)}
    exact_default = args.command not in ("spectrum",)
    return CliConfig(
        tolerance=_setting(args.tolerance, None, "tolerance", float),
        exact=exact_default if args.exact is None else args.exact,
        format=_setting(args.format, None, "format", str),
        workers=_setting(args.workers, "SPECMULT_WORKERS", "workers", int),
        input_file=getattr(args, "input", None),
        family=family,
        family_params=params,
        timing=args.timing,
        seed=getattr(args, "seed", 0),
    )


# ---------------------------------------------------------------------------
# Input
# ---------------------------------------------------------------------------

def load_graphs(config: CliConfig) -> Tuple[List[Graph], int]:
    """Graphs from the configured source, plus the number of unreadable lines."""
    if config.source == "family":
        return [get_manager().build(config.family, *config.family_params["params"])], 0

    errors = 0
    graphs = []

    def consume(stream):
        nonlocal errors
        for lineno, _, parsed in iter_graph6(stream):
            if isinstance(parsed, Exception):
                console.err(f"line {lineno}: {parsed}")
                errors += 1
            else:
                graphs.append(parsed)

    if config.source == "file":
        with open(config.input_file, "rb") as f:
            consume(f)
    else:
        consume(sys.stdin.buffer)
    return graphs, errors


def _g6(g: Graph) -> str:
    return to_graph6(g).decode("ascii")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_spectrum(args, config: CliConfig) -> int:
    graphs, errors = load_graphs(config)
    records = []
    for g in graphs:
        try:
            records.append((_g6(g), spectrum(g, config.tolerance, exact=config.exact, allow_disconnected=True)))
        except SpecMultError as e:
            console.err(f"{_g6(g)}: {e}")
            errors += 1
    sys.stdout.write(cli_output.render_spectra(records, config.format))
    return EXIT_INPUT if errors else EXIT_OK


def cmd_classify(args, config: CliConfig) -> int:
    graphs, errors = load_graphs(config)
    reports = []
    for g in graphs:
        try:
            reports.append(classify(g, config.tolerance))
        except SpecMultError as e:
            console.err(f"{_g6(g)}: {e}")
            errors += 1
    reports.sort(key=lambda r: r.graph6)
    sys.stdout.write(cli_output.render_classifications(reports, config.format))
    if errors:
        return EXIT_INPUT
    return EXIT_MISMATCH if any(r.inconsistency for r in reports) else EXIT_OK


def _corpus_or_none(args, config: CliConfig) -> Tuple[Optional[List[Graph]], int]:
    if config.input_file is None and config.family is None:
        if args.n is None:
            raise SpecMultError(f"{args.command} needs --n or --input")
        return None, 0
    return load_graphs(config)


def cmd_verify(args, config: CliConfig) -> int:
    corpus, errors = _corpus_or_none(args, config)
    if corpus is None:
        report = verify_theorem(args.n, workers=config.workers, progress=True)
    else:
        report = verify_corpus(corpus, n=args.n, workers=config.workers, progress=True)
    sys.stdout.write(cli_output.render_verification(report, config.format, config.timing))
    if errors:
        return EXIT_INPUT
    if report.passed:
        console.ok("zero mismatches")
        return EXIT_OK
    console.warn(f"{len(report.mismatches)} mismatch(es)")
    return EXIT_MISMATCH


def cmd_ds_check(args, config: CliConfig) -> int:
    corpus, errors = _corpus_or_none(args, config)
    n = args.n if args.n is not None else (corpus[0].n if corpus else 0)
    report = ds_check(n, workers=config.workers, graphs=corpus, progress=True)
    sys.stdout.write(cli_output.render_ds(report, config.format))
    if errors:
        return EXIT_INPUT
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_conjecture(args, config: CliConfig) -> int:
    corpus, errors = _corpus_or_none(args, config)
    candidates = conjecture_search(args.n or 0, workers=config.workers, graphs=corpus, progress=True)
    sys.stdout.write(cli_output.render_conjecture(candidates, config.format))
    console.info(f"{len(candidates)} candidate(s) with nu = 2 and second least eigenvalue != 1")
    return EXIT_INPUT if errors else EXIT_OK


def cmd_lemmas(args, config: CliConfig) -> int:
    graphs, errors = load_graphs(config)
    reports = []
    for g in graphs:
        try:
            reports.extend(lemma_suite([g], seed=config.seed, samples=args.samples))
        except SpecMultError as e:
            console.err(f"{_g6(g)}: {e}")
            errors += 1
    sys.stdout.write(cli_output.render_lemmas(reports, config.format))
    if errors:
        return EXIT_INPUT
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def cmd_build(args, config: CliConfig) -> int:
    if config.family is None:
        raise SpecMultError("build needs --family")
    graphs, _ = load_graphs(config)
    sys.stdout.write(cli_output.render_graph6([_g6(g) for g in graphs]))
    return EXIT_OK


def cmd_enumerate(args, config: CliConfig) -> int:
    if args.n is None:
        raise SpecMultError("enumerate needs --n")
    sys.stdout.write(cli_output.render_graph6([_g6(g) for g in enumerate_connected(args.n, progress=True)]))
    return EXIT_OK


def cmd_config(args) -> int:
    if args.set:
        key, _, value = args.set.partition("=")
        cast = type(DEFAULTS.get(key, ""))
        UserConfig.save(key, cast(value))
        console.ok(f"saved {key} = {value} to {get_data_path('user_settings.json')}")
    for key in DEFAULTS:
        print(f"{key} = {UserConfig.get(key)}")
    return EXIT_OK


HANDLERS = {
    "spectrum": cmd_spectrum,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "ds-check": cmd_ds_check,
    "conjecture": cmd_conjecture,
    "lemmas": cmd_lemmas,
    "build": cmd_build,
    "enumerate": cmd_enumerate,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="vertex count (enumeration order, or K_n / K_n - e size)")
    common.add_argument("--t", type=int, help="family parameter t")
    common.add_argument("--s", type=int, help="family parameter s")
    common.add_argument("--p", type=int, help="family parameter p")
    common.add_argument("--parts", help="comma-separated part sizes for CompleteMultipartite")
    common.add_argument("--family", help="family name (G1, G2, G3, Gamma1-3, Kn-e, K, multipartite)")
    common.add_argument("--input", help="graph6 file ('-' for stdin)")
    common.add_argument("--tolerance", type=float, help="clustering tolerance (default 1e-8)")
    exact = common.add_mutually_exclusive_group()
    exact.add_argument("--exact", dest="exact", action="store_true", default=None,
                       help="include the exact characteristic-polynomial path")
    exact.add_argument("--float", dest="exact", action="store_false", help="float path only")
    common.add_argument("--format", choices=("json", "csv", "text"))
    common.add_argument("--workers", type=int, help="worker processes (default SPECMULT_WORKERS or 1)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled interlacing subsets")
    common.add_argument("--samples", type=int, default=20, help="interlacing subsets per graph")
    common.add_argument("--timing", action="store_true", help="include elapsed time in reports")

    parser = argparse.ArgumentParser(prog="specmult", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    cfg = sub.add_parser("config", help="show or change saved defaults")
    cfg.add_argument("--set", metavar="KEY=VALUE")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    ensure_data_dir()
    try:
        if args.command == "config":
            return cmd_config(args)
        config = build_config(args)
        started = time.perf_counter()
        code = HANDLERS[args.command](args, config)
        if config.timing:
            console.info(f"{args.command} finished in {time.perf_counter() - started:.2f}s")
        return code
    except (InconsistencyError, ConvergenceError) as e:
        console.err(str(e))
        return EXIT_MISMATCH
    except (SpecMultError, ValidationError, KeyError, ValueError, OSError) as e:
        console.err(str(e))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
