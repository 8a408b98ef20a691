import random

import pytest

from quiverdeg.windows import Window, WindowMultiset


def random_multiset(rng: random.Random, n: int, max_entries: int = 3,
                    max_length: int = 5) -> WindowMultiset:
    entries = []
    for _ in range(rng.randint(0, max_entries)):
        i = rng.randint(-n, 2 * n)
        length = rng.randint(1, max_length)
        entries.append(Window(n, i, i + length - 1))
    return WindowMultiset(n, entries)


@pytest.fixture
def rng():
    return random.Random(99)
