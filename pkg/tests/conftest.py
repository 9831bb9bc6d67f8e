import sys
from pathlib import Path

# Make the suite runnable from a plain checkout, without installing.
SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))
