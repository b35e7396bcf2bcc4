import os
import random

import pytest

from eqbreaks import SortedSeries

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def toy_csv():
    return os.path.join(DATA_DIR, "toy6.csv")


@pytest.fixture
def toy_geojson():
    return os.path.join(DATA_DIR, "toy6.geojson")


@pytest.fixture
def uniform8_csv():
    return os.path.join(DATA_DIR, "uniform8.csv")


@pytest.fixture
def uniform8_geojson():
    return os.path.join(DATA_DIR, "uniform8.geojson")


def random_series(rng: random.Random, n: int) -> SortedSeries:
    """Lognormal or uniform weights, the shapes real area data takes."""
    if rng.random() < 0.5:
        weights = [rng.lognormvariate(0.0, 1.5) for _ in range(n)]
    else:
        weights = [rng.uniform(0.0, 10.0) for _ in range(n)]
    return SortedSeries.from_weights(weights)
