import os
import random

import pytest
from hypothesis import settings
from sympy import primerange

from cyclolib.ternary import triple_params

settings.register_profile('cyclo', deadline=None, max_examples=50)
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'cyclo'))

# Largest pqr whose dense expansion stays quick
DESK_LIMIT = 15015


def desk_triples(limit=DESK_LIMIT):
    """Every odd prime triple p < q < r with pqr <= limit."""
    primes = list(primerange(3, limit // 15 + 1))
    triples = []
    for a, p in enumerate(primes):
        for b in range(a + 1, len(primes)):
            q = primes[b]
            if p * q * q > limit:
                break
            for r in primes[b + 1:]:
                if p * q * r > limit:
                    break
                triples.append((p, q, r))
    return triples


def random_triples(count, seed, q_max=500, r_max=500, ps=(3, 5, 7)):
    """Seeded odd prime triples with a small smallest prime."""
    rng = random.Random(seed)
    triples = []
    while len(triples) < count:
        p = rng.choice(ps)
        qs = list(primerange(p + 1, q_max + 1))
        q = rng.choice(qs)
        rs = list(primerange(q + 1, r_max + 1))
        if not rs:
            continue
        triples.append((p, q, rng.choice(rs)))
    return triples


DESK_TRIPLES = desk_triples()


@pytest.fixture(scope='session')
def desk_corpus():
    return [triple_params(*x) for x in DESK_TRIPLES]


@pytest.fixture(scope='session')
def random_corpus():
    return [triple_params(*x) for x in random_triples(200, seed=20240101)]


@pytest.fixture
def checkpoint_dir(tmp_path, monkeypatch):
    monkeypatch.setenv('CYCLO_CHECKPOINT_DIR', str(tmp_path))
    return tmp_path


def extended_enabled():
    return os.environ.get('CYCLO_EXTENDED') == '1'
