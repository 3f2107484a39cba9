import random

import pytest

from diagcomp import RATIONALS, PrimeField

SMALL_PRIMES = (2, 3, 5, 7, 101)

ALL_FIELDS = [RATIONALS] + [PrimeField(p) for p in SMALL_PRIMES]
FIELD_IDS = ["Q"] + [f"GF{p}" for p in SMALL_PRIMES]


@pytest.fixture(params=ALL_FIELDS, ids=FIELD_IDS)
def field(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(0xD1A6)
