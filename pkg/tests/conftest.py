import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--regold", action="store_true", default=False,
        help="rewrite golden files from the current output instead of comparing")


@pytest.fixture
def regold(request):
    return request.config.getoption("--regold")
