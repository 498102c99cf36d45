"""Shared access to the grammar documents shipped with the repository."""

from pathlib import Path

from wcfg import load_grammar

GRAMMARS_DIR = Path(__file__).resolve().parent.parent / "grammars"


def fixture_path(name):
    return str(GRAMMARS_DIR / name)


def load_fixture(name):
    return load_grammar(fixture_path(name))
