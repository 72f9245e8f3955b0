import importlib.resources
import json
from pathlib import Path

import pytest

from destfinder import link_atlas, parse_geometry, parse_region_dataset

DATA_DIR = Path(str(importlib.resources.files("destfinder") / "data"))

_acceptance_results: dict[str, str] = {}


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def regions_path(data_dir) -> Path:
    return data_dir / "regions.json"


@pytest.fixture(scope="session")
def geometry_path(data_dir) -> Path:
    return data_dir / "geometry.json"


@pytest.fixture(scope="session")
def fixture_atlas(regions_path, geometry_path):
    dataset = parse_region_dataset(regions_path.read_bytes())
    geometry = parse_geometry(geometry_path.read_bytes())
    return link_atlas(dataset, geometry)


@pytest.fixture(scope="session")
def neutral_prefs_doc(data_dir) -> dict:
    return json.loads((data_dir / "prefs-neutral.json").read_text())


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call":
        _acceptance_results[report.nodeid] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and not report.passed:
        _acceptance_results[report.nodeid] = "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_acceptance_results):
        name = nodeid.split("::")[-1]
        label = name.removeprefix("test_criterion_").replace("_", " ")
        terminalreporter.write_line(f"criterion {label}: {_acceptance_results[nodeid]}")
