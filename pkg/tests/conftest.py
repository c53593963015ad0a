import json

import pytest

from fields import rationals, prime_field
from classify2d_module import builtin_algebra


@pytest.fixture
def Q():
    return rationals()


@pytest.fixture
def F3():
    return prime_field(3)


@pytest.fixture
def F5():
    return prime_field(5)


@pytest.fixture
def A1(Q):
    return builtin_algebra("A1", Q)


@pytest.fixture
def A2(Q):
    return builtin_algebra("A2", Q)


@pytest.fixture
def write_json(tmp_path):
    """write an object to tmp_path/name and return the path as a string"""
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)
    return write
