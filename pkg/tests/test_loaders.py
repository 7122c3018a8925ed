import pytest

from commands.loaders import EigenFileError, load_eigendata
from levelraising import EigenData


def test_single_object_and_array(app_context, eigen_file):
    single = load_eigendata(eigen_file({"p": 2, "a1": 47, "a2": 19}))
    assert single == [EigenData(p=2, a1=47, a2=19)]

    records = load_eigendata(eigen_file([
        {"label": "golden", "p": 2, "a1": "47", "a2": "19", "a0": 1},
        {"label": "ordinary", "p": 2, "a1": 30, "a2": 15},
    ], name="both.json"))
    assert [e.label for e in records] == ["golden", "ordinary"]
    assert records[0].a1 == 47


def test_large_integers_survive_as_strings(app_context, eigen_file):
    big = 10 ** 40 + 7
    (record,) = load_eigendata(eigen_file([{"p": 3, "a1": str(big), "a2": "-5"}]))
    assert record.a1 == big
    assert record.a2 == -5


def test_missing_file(app_context, tmp_path):
    with pytest.raises(EigenFileError) as info:
        load_eigendata(tmp_path / "absent.json")
    assert info.value.kind == "missing-file"


@pytest.mark.parametrize("payload", ["{not json", "42"])
def test_malformed_json(app_context, eigen_file, payload):
    with pytest.raises(EigenFileError) as info:
        load_eigendata(eigen_file(payload))
    assert info.value.kind == "malformed-json"


@pytest.mark.parametrize(
    "records, fragment",
    [
        ([], "no records"),
        ([{"p": 4, "a1": 1, "a2": 1}], "p: p=4 is not prime."),
        ([{"p": 2, "a1": 1}], "a2:"),
        ([{"p": 2, "a1": 1, "a2": 1, "a0": 3}], "trivial central character required"),
        ([{"p": 2, "a1": 1.5, "a2": 1}], "a1 must be an integer"),
        ([{"p": 2, "a1": "x", "a2": 1}], "a1:"),
        ([{"p": 2, "a1": 1, "a2": 1, "weight": 3}], "unknown field(s) weight"),
        (["p=2"], "expected an object"),
        ([{"label": 5, "p": 2, "a1": 1, "a2": 1}], "label must be a string"),
        (
            [{"label": "x", "p": 2, "a1": 1, "a2": 1}, {"label": "x", "p": 3, "a1": 1, "a2": 1}],
            "duplicate label 'x'",
        ),
    ],
)
def test_invalid_records(app_context, eigen_file, records, fragment):
    with pytest.raises(EigenFileError) as info:
        load_eigendata(eigen_file(records))
    assert info.value.kind == "invalid-record"
    assert fragment in str(info.value)


def test_error_names_the_record_index(app_context, eigen_file):
    with pytest.raises(EigenFileError, match=r"record 1: "):
        load_eigendata(eigen_file([{"p": 2, "a1": 1, "a2": 1}, {"p": 9, "a1": 1, "a2": 1}]))


def test_undecodable_bytes_are_malformed(app_context, tmp_path):
    path = tmp_path / "binary.json"
    path.write_bytes(b"\xff\xfe[")
    with pytest.raises(EigenFileError) as info:
        load_eigendata(path)
    assert info.value.kind == "malformed-json"
