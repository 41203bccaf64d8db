import math

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def rel():
    def _rel(a, b):
        return abs(a - b) / abs(b)

    return _rel


SQRT_PI = math.sqrt(math.pi)
