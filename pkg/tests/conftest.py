from pathlib import Path

import pytest

from semorient.catalog import CATALOG_FAMILIES, GROUP_FAMILIES, make_family

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def s3():
    return make_family("symmetric:3")


@pytest.fixture(scope="session")
def z4():
    return make_family("cyclic:4")


@pytest.fixture(params=GROUP_FAMILIES, scope="session")
def group_family(request):
    return request.param, make_family(request.param)


@pytest.fixture(params=CATALOG_FAMILIES, scope="session")
def catalog_family(request):
    return request.param, make_family(request.param)
