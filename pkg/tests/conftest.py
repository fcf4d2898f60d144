import pytest

from posdec import worked_example
from posdec.cli import parse_scenario


@pytest.fixture(scope="session")
def example_scenario():
    """The bundled four-prize worked example, fully parsed."""
    return parse_scenario(worked_example.SCENARIO)


@pytest.fixture(scope="session")
def anomaly_scenario():
    return parse_scenario(worked_example.ANOMALY_SCENARIO)
