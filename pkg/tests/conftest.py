import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
# the parser raises this on demand; do it up front so hypothesis sees a stable limit
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

from predred import SignatureModel, bundled_grammar, bundled_model  # noqa: E402
from predred.harness import builtin_corpus_dir  # noqa: E402

DUBBO_MAIN = (builtin_corpus_dir() / "main_00.java").read_text()
SMALL = "void f ( String args ) { int x = 0 ; }"


class AlwaysPass:
    fallback_label = "unknown"

    def label(self, text):
        return "yes"


@pytest.fixture(scope="session")
def grammar():
    return bundled_grammar()


@pytest.fixture(scope="session")
def model():
    return bundled_model()


@pytest.fixture
def main_model():
    return SignatureModel({"main": frozenset({"void", "String", "args"})})


@pytest.fixture
def always_pass():
    return AlwaysPass()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
