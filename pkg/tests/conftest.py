import pytest

from mci import corpus


@pytest.fixture(scope="session")
def heis3():
    return corpus.heis3()


@pytest.fixture(scope="session")
def sol2():
    return corpus.sol2()


@pytest.fixture(scope="session")
def ab2():
    return corpus.ab2()


@pytest.fixture(scope="session")
def leib2():
    return corpus.leib2()


@pytest.fixture(scope="session")
def dial1():
    return corpus.dial1()


@pytest.fixture(scope="session")
def s3():
    return corpus.s3()


@pytest.fixture(scope="session")
def z4():
    return corpus.z4()


@pytest.fixture(scope="session")
def xm_inc():
    return corpus.xm_inc()


@pytest.fixture(scope="session")
def xm_id():
    return corpus.xm_id()


@pytest.fixture(scope="session")
def s3_cat1():
    return corpus.s3_cat1()


@pytest.fixture(scope="session")
def s3_cat1_ret():
    return corpus.s3_cat1_ret()


@pytest.fixture(scope="session")
def z4_cat1():
    return corpus.z4_cat1()
