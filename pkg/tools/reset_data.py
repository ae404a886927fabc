import shutil
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.paths import USER_DATA_DIR  # noqa: E402


def reset():
    data_dir = USER_DATA_DIR

    print("\n[RESET TOOL]")
    print(f"Target Directory: {data_dir}")

    if not data_dir.exists():
        print("[INFO] Directory does not exist. Clean state confirmed.")
        return

    print("[WARN] This will delete saved settings, the .env override and the debug log!")
    response = input(f"Are you sure you want to delete {data_dir}? [y/N] ")

    if response.lower() == "y":
        try:
            shutil.rmtree(data_dir)
            print(f"[OK] Successfully deleted {data_dir}")
        except OSError as e:
            print(f"[ERR] Failed to delete: {e}")
    else:
        print("[INFO] Aborted.")


if __name__ == "__main__":
    reset()
