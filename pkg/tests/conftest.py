import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from k7knots import configfile
from k7knots.geometry import Configuration, GeneralPositionError
from k7knots.search import derive_seed, random_configuration

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"
ROOT = Path(__file__).parent.parent
WITNESS = ROOT / "witnesses" / "k7_three_figure8.txt"


def read_pd(name):
    rows = []
    for line in (FIXTURES / name).read_text().splitlines():
        line = line.split("#", 1)[0].split()
        if line:
            assert line[0] == "X"
            rows.append(tuple(int(v) for v in line[1:]))
    return rows


def sample_configs(count, seed=7, n=7, bound=100):
    return [random_configuration(derive_seed(seed, 3, i), bound, n=n) for i in range(count)]


@pytest.fixture(scope="session")
def witness():
    return configfile.load(WITNESS)


@pytest.fixture(scope="session")
def type_fixtures():
    return {name: configfile.load(FIXTURES / f"type_{name.lower()}.txt") for name in ("I", "II", "III")}


@pytest.fixture(scope="session")
def configs7():
    return sample_configs(12)


coords = st.integers(min_value=-50, max_value=50)
points3 = st.tuples(coords, coords, coords)


@st.composite
def configurations(draw, n=7):
    pts = draw(st.lists(points3, min_size=n, max_size=n, unique=True))
    try:
        return Configuration(pts)
    except GeneralPositionError:
        from hypothesis import assume
        assume(False)
