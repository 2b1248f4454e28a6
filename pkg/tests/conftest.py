import pytest

from src.core.graph import build_graph
from src.toolkit.families import family


@pytest.fixture
def k2():
    return build_graph([(0, 1)])


@pytest.fixture
def triangle():
    return family("cycle", 3)


@pytest.fixture
def c5():
    return family("cycle", 5)


@pytest.fixture
def star():
    """K1,3 with center 0."""
    return family("star", 4)


@pytest.fixture
def fan5():
    return family("fan", 5)


@pytest.fixture
def k4():
    return family("complete4")


@pytest.fixture
def k23():
    return family("k23")


@pytest.fixture
def bowtie_subdivision():
    """Triangles {1, 2, 3} and {4, 5, 6} joined through vertex 0."""
    return build_graph([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (0, 1), (0, 4)])


@pytest.fixture
def config_file(tmp_path):
    """Config file pointing logs and metrics into the test directory."""
    path = tmp_path / "config.toml"
    path.write_text(
        "[system]\n"
        "log_level = \"WARNING\"\n"
        "\n"
        "[generator]\n"
        "seed = 7\n"
    )
    return path
