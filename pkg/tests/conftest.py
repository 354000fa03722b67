import sys
from pathlib import Path

# allow running the suite from a fresh checkout without installing
try:
    import xmems  # noqa: F401
except ModuleNotFoundError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
