import os
from pathlib import Path
import sys

# Define the user data directory
# This will be ~/.specmult unless SPECMULT_HOME points elsewhere
USER_DATA_DIR = Path(os.getenv("SPECMULT_HOME") or (Path.home() / ".specmult"))


def get_data_path(filename: str) -> str:
    """Get absolute path for a file in the user data directory."""
    return str(USER_DATA_DIR / filename)


def ensure_data_dir() -> bool:
    """Ensure the user data directory exists. Returns False when it cannot be created."""
    if USER_DATA_DIR.exists():
        return True
    try:
        USER_DATA_DIR.mkdir(parents=True, exist_ok=True)
        return True
    except OSError as e:
        print(f"[ERR] Failed to create data directory {USER_DATA_DIR}: {e}", file=sys.stderr)
        return False


def resolve_resource_path(relative_path: str) -> str:
    """
    Get absolute path to a read-only resource (plugins, docs).
    Works for dev environment and PyInstaller bundle (_MEIPASS).
    """
    try:
        # PyInstaller creates a temp folder and stores path in _MEIPASS
        base_path = sys._MEIPASS
    except AttributeError:
        # core/paths.py -> parent -> project root
        base_path = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))

    return os.path.join(base_path, relative_path)
