from hypothesis import settings, strategies as st

from ueq import classes as C
from ueq import relations as R

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def relations(draw, n=None, max_n=5):
    if n is None:
        n = draw(st.integers(1, max_n))
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return R.canonical(labels)


@st.composite
def spaces(draw, n=None, max_n=5, max_generators=4):
    if n is None:
        n = draw(st.integers(1, max_n))
    gens = draw(st.lists(relations(n=n), min_size=1, max_size=max_generators))
    return C.generate(n, gens)


@st.composite
def functions(draw, n, m):
    return tuple(draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n)))


def blocks(u):
    return sorted(sorted(b) for b in u.blocks())
