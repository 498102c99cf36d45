import sys
from pathlib import Path

TESTS_DIR = Path(__file__).resolve().parent
GRAMMARS_DIR = TESTS_DIR.parent / "grammars"

# make sibling helper modules (grammar_gen, fixtures) importable
if str(TESTS_DIR) not in sys.path:
    sys.path.insert(0, str(TESTS_DIR))
