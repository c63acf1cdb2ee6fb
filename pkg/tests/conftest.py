import json

import pytest

from splitgraph import io
from splitgraph.cli import fixture_path
from splitgraph.cover import GaloisCover
from splitgraph.fingroup import make_cyclic
from splitgraph.multigraph import identity_map


def load_fixture(name):
    return json.loads(fixture_path(name).read_text())


def trivial_cover(g):
    """The identity cover of ``g`` by the trivial group."""
    return GaloisCover(make_cyclic(1), g, g, identity_map(g), (identity_map(g),))


@pytest.fixture
def s3_cover():
    return io.cover_from_json(load_fixture("s3_cover.json"))


@pytest.fixture
def s3_doc():
    return load_fixture("s3_cover.json")
