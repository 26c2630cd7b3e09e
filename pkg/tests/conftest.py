import json
from importlib import resources

import pytest

from edgeideal.embedding import PlaneEmbedding
from edgeideal.graphs import parse_graph


def load_fixture(name):
    return json.loads(resources.files("edgeideal.data").joinpath(name).read_text())


@pytest.fixture
def cm7():
    """Cohen-Macaulay graph on 7 matched pairs with a known generator set."""
    return parse_graph(load_fixture("cm7.json"))


@pytest.fixture
def cm7_embedding():
    return PlaneEmbedding.from_json(load_fixture("cm7_embedding.json"), 7)


@pytest.fixture
def k22():
    return parse_graph(load_fixture("k22.json"))


@pytest.fixture
def s3():
    """Crown poset graph; its incomparability graph has no transitive
    orientation, so the plane-embedding search must fail."""
    return parse_graph(load_fixture("s3.json"))


@pytest.fixture
def cycle8():
    """8-cycle: perfectly matched but not unmixed; oracle regularity 3
    exceeds the induced-matching bound 2."""
    return parse_graph(load_fixture("cycle8.json"))
