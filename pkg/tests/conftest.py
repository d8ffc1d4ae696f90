import hypothesis
import pytest

from pils import random_instance

hypothesis.settings.register_profile("suite", deadline=None, max_examples=60)
hypothesis.settings.load_profile("suite")


@pytest.fixture
def toy():
    """2 jobs, 2 machines, p=[[3,2],[1,4]]: small enough to trace by hand."""
    from pils import Instance

    return Instance(n=2, m=2, p=((3, 2), (1, 4)), d=(10, 10), name="toy")


@pytest.fixture
def small_instance():
    return random_instance(6, 3, seed=7, tau=0.6)
