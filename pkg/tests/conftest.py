import pytest

from netdiversity import fig1

FIG1_CSV = "A,C,1\nA,D,1\nC,B,1\nD,B,1\nB,E,1"


@pytest.fixture
def fig1_graph():
    return fig1()


@pytest.fixture
def fig1_cd():
    return fig1(with_cd_link=True)


@pytest.fixture
def fig1_csv(tmp_path):
    path = tmp_path / "fig1.csv"
    path.write_text(FIG1_CSV + "\n")
    return path


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
