import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_ksets
from rwise.constructions import build_G
from rwise.family import Family
from rwise.io import FamilyFileError, dumps, loads, read_family, write_family


def test_format():
    assert dumps(build_G(5, 2, 2, 1), 2, 1) == '{"n":5,"k":2,"r":2,"t":1,"sets":[[1,2],[1,3],[2,3]]}\n'


@st.composite
def families(draw):
    n = draw(st.integers(1, 9))
    k = draw(st.integers(0, n))
    pool = all_ksets(n, k)
    members = draw(st.lists(st.sampled_from(pool), unique=True, max_size=min(len(pool), 12)))
    return Family(n, k, tuple(members))


@given(families())
def test_round_trip(fam):
    text = dumps(fam)
    back, meta = loads(text)
    assert back == fam and meta == {}
    assert dumps(back) == text


def test_file_round_trip(tmp_path):
    fam = build_G(7, 4, 2, 1)
    path = tmp_path / "g.json"
    write_family(path, fam, 2, 1)
    assert read_family(path) == (fam, {"r": 2, "t": 1})


@pytest.mark.parametrize("text", [
    "nope",
    "[]",
    '{"n":4,"k":2}',
    '{"n":4,"k":2,"sets":[[1,5]]}',
    '{"n":4,"k":2,"sets":[[2,1]]}',
    '{"n":4,"k":2,"sets":[[1,2,3]]}',
    '{"n":4,"k":2,"sets":[[1,2],[1,2]]}',
    '{"n":4,"k":2,"sets":[["a","b"]]}',
    '{"n":"4","k":2,"sets":[]}',
    '{"n":4,"k":2,"t":true,"sets":[]}',
])
def test_malformed(text):
    with pytest.raises(FamilyFileError):
        loads(text)
