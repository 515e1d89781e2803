import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qhalg import GF, QQ, paper_example, random_bound_quiver_algebra  # noqa: E402

FUZZ_SEEDS = range(120)


@pytest.fixture(scope="session")
def paper():
    return paper_example(QQ)


@pytest.fixture(scope="session")
def paper_mod_p():
    return paper_example(GF(32003))


@pytest.fixture(scope="session")
def random_algebras():
    # shared so that module caches survive across test files
    return [random_bound_quiver_algebra(seed) for seed in FUZZ_SEEDS]


@pytest.fixture(scope="session")
def random_qh(random_algebras):
    """Each random algebra with its quasi-hereditary orders."""
    from qhalg.explorer import enumerate_qh

    return [(alg, enumerate_qh(alg, threads=1)) for alg in random_algebras]
