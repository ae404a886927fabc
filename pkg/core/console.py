"""
Tagged diagnostics for the CLI and library.
stdout is reserved for reports, so everything here goes to stderr.
"""
import datetime
import os
import sys


def _emit(tag: str, msg: str) -> None:
    print(f"[{tag}] {msg}", file=sys.stderr)


def ok(msg: str) -> None:
    _emit("OK", msg)


def info(msg: str) -> None:
    _emit("INFO", msg)


def scan(msg: str) -> None:
    _emit("SCAN", msg)


def warn(msg: str) -> None:
    _emit("WARN", msg)


def err(msg: str) -> None:
    _emit("ERR", msg)


def debug(msg: str) -> None:
    """Append to ~/.specmult/debug.log when SPECMULT_DEBUG is set; silent otherwise."""
    if not os.getenv("SPECMULT_DEBUG"):
        return
    # Imported here to keep paths -> console free of cycles
    from .paths import ensure_data_dir, get_data_path

    if not ensure_data_dir():
        return
    stamp = datetime.datetime.now().isoformat(timespec="seconds")
    try:
        with open(get_data_path("debug.log"), "a", encoding="utf-8") as f:
            f.write(f"{stamp} {msg}\n")
    except OSError:
        pass
