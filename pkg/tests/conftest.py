"""
Shared fixtures: named curves and seeded pseudorandom curve corpora.
"""
import random
from typing import List

import pytest

from formale.config.settings import reset_config
from formale.curves.weierstrass import WeierstrassCurve
from formale.utils.exceptions import SingularCurveError

CORPUS_SEED = 20240611


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-size sweeps")


def random_family1_curves(count: int, seed: int = CORPUS_SEED, bound: int = 5) -> List[WeierstrassCurve]:
    """Nonsingular y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x with |a_i| <= bound."""
    rng = random.Random(seed)
    curves: List[WeierstrassCurve] = []
    while len(curves) < count:
        a1, a2, a3, a4 = (rng.randint(-bound, bound) for _ in range(4))
        try:
            curves.append(WeierstrassCurve(a1, a2, a3, a4, 0))
        except SingularCurveError:
            continue
    return curves


def random_family2_curves(count: int, seed: int = CORPUS_SEED, bound: int = 5) -> List[WeierstrassCurve]:
    """Nonsingular y^2 + a3 y = x^3 + a6 with |a3|, |a6| <= bound."""
    rng = random.Random(seed + 1)
    curves: List[WeierstrassCurve] = []
    while len(curves) < count:
        a3, a6 = rng.randint(-bound, bound), rng.randint(-bound, bound)
        try:
            curves.append(WeierstrassCurve(0, 0, a3, 0, a6))
        except SingularCurveError:
            continue
    return curves


def random_general_curves(count: int, seed: int = CORPUS_SEED, bound: int = 3) -> List[WeierstrassCurve]:
    rng = random.Random(seed + 2)
    curves: List[WeierstrassCurve] = []
    while len(curves) < count:
        try:
            curves.append(WeierstrassCurve(*(rng.randint(-bound, bound) for _ in range(5))))
        except SingularCurveError:
            continue
    return curves


@pytest.fixture
def rng() -> random.Random:
    """A seeded generator so failures reproduce."""
    return random.Random(CORPUS_SEED)


@pytest.fixture
def x3_plus_x() -> WeierstrassCurve:
    """y^2 = x^3 + x."""
    return WeierstrassCurve(0, 0, 0, 1, 0)


@pytest.fixture
def y2_plus_y() -> WeierstrassCurve:
    """y^2 + y = x^3."""
    return WeierstrassCurve(0, 0, 1, 0, 0)


@pytest.fixture
def level11() -> WeierstrassCurve:
    """y^2 - y = x^3 - x^2."""
    return WeierstrassCurve(0, -1, -1, 0, 0)


@pytest.fixture
def general_curve() -> WeierstrassCurve:
    """A model with every coefficient nonzero."""
    return WeierstrassCurve(1, -1, 1, -2, 3)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings and no cache path in the environment."""
    for name in ("FORMALE_CACHE", "FORMALE_ORDER", "FORMALE_WORKERS", "FORMALE_ASSOC_CAP"):
        monkeypatch.delenv(name, raising=False)
    reset_config()
    yield
    reset_config()
