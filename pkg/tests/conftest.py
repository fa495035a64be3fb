import pytest
from hypothesis import settings, strategies as st

from belts.core import GENERATORS, BraidWord, FramedBraid, TwistWord

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

generators = st.sampled_from(GENERATORS)
words = st.lists(generators, max_size=24).map(lambda xs: BraidWord(tuple(xs)))
twists = st.tuples(*[st.integers(-12, 12)] * 3).map(TwistWord)
framed = st.builds(FramedBraid, twists, words)

_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion():
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""

    def record(number: int, text: str, ok: bool):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {text}"
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, text

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
