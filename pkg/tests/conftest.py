import sys
from pathlib import Path

# make the sibling oracle helpers importable regardless of how pytest is run
sys.path.insert(0, str(Path(__file__).parent))
