import functools

import pytest

from hclab.corpus import realize, standard_corpus


@functools.lru_cache(maxsize=None)
def grp(spec: str):
    return realize(spec)


def el(G, label: str) -> int:
    return G.element_labels.index(label)


def sub(G, *labels):
    from hclab.group import generated_subgroup

    return generated_subgroup(G, [el(G, x) for x in labels])


@pytest.fixture(scope="session")
def corpus():
    return [G for _, G in standard_corpus()]
