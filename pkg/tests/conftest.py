import pytest

from cliffchar.chartab import class_sizes_from_columns, dixon_character_table
from cliffchar.classes import conjugacy_classes
from cliffchar.matgroup import clifford_group
from cliffchar.reference import anchor_columns, load_table, match_tables

_CRITERIA: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA[num] = (title, rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_CRITERIA):
        title, ok = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {title}")


class Pipe:
    def __init__(self, n):
        self.group = clifford_group(n)
        self.classes = conjugacy_classes(self.group)
        self.table = dixon_character_table(self.group, self.classes)
        if n == 1:
            self.reference = load_table("s4_chartab").payload
            words = self.reference.meta["words"]
        else:
            self.reference = load_table("c2_chartab").payload
            words = [c.word for c in load_table("c2_classes").payload]
        self.anchors = anchor_columns(words, self.group, self.classes)
        self.match = match_tables(self.table, self.reference, self.anchors)


@pytest.fixture(scope="session")
def c1():
    return Pipe(1)


@pytest.fixture(scope="session")
def c2():
    return Pipe(2)


@pytest.fixture()
def c3_table():
    t = load_table("c3_chartab").payload
    t.class_sizes = class_sizes_from_columns(t.values, t.group_order)
    return t
