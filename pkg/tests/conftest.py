import random

import pytest
from hypothesis import strategies as st

from fermatiq.frey import FreyError, FreyInput
from fermatiq.okarith import CLASS_NUMBER_ONE, TWO_INERT, make_field, split_prime

FIELDS = [make_field(d) for d in CLASS_NUMBER_ONE]

fields = st.sampled_from(FIELDS)
inert_fields = st.sampled_from([make_field(d) for d in TWO_INERT])
coords = st.integers(min_value=-10**6, max_value=10**6)


@st.composite
def elements(draw, fld=None, coord=coords):
    K = fld if fld is not None else draw(fields)
    return K(draw(coord), draw(coord))


def random_coprime_triple(rng: random.Random, K, p: int, even_entry: int | None = None, size: int = 30):
    """Random pairwise coprime (a, b, c); if even_entry is 0 or 1, q^k divides that entry (k in {1, 2})
    and the other two entries are prime to 2."""
    q = split_prime(K, 2)[0]
    while True:
        t = [K(rng.randint(-size, size), rng.randint(-size, size)) for _ in range(3)]
        if even_entry is not None:
            if any(q.divides(e) for e in t):
                continue
            t[even_entry] = t[even_entry] * (2 ** rng.choice((1, 2)))
        try:
            return FreyInput(t[0], t[1], t[2], p)
        except FreyError:
            continue


@pytest.fixture
def rng():
    return random.Random(20240917)


ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[k])
