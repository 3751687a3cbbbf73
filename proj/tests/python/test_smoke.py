"""End-to-end smoke tests for the compiled extension."""

import math

import pytest

import hdv

SEED = 0x5EED5EED5EED5EED
DIM = 10000


def test_generate_is_deterministic_and_quasi_orthogonal():
    a = hdv.generate("OpenFile", SEED, DIM)
    b = hdv.generate("OpenFile", SEED, DIM)
    c = hdv.generate("Commit", SEED, DIM)
    assert a == b
    assert len(a) == DIM
    assert all(v in (-1, 1) for v in a.components())
    assert hdv.similarity(a, a) == 1.0
    assert abs(hdv.similarity(a, c)) < 0.05


def test_bind_is_self_inverse_and_permute_rotates():
    a = hdv.generate("a", SEED, 64)
    b = hdv.generate("b", SEED, 64)
    assert hdv.bind(a, hdv.bind(a, b)) == b
    assert hdv.permute(hdv.permute(a, 3), -3) == a
    assert hdv.dot(a, a) == 64


def test_accumulator_normalize_matches_majority():
    a = hdv.generate("a", SEED, DIM)
    b = hdv.generate("b", SEED, DIM)
    acc = hdv.Accumulator(DIM)
    acc.add(a)
    acc.add(a)
    acc.add(b)
    assert acc.count == 3
    bundle = hdv.normalize(acc, SEED)
    assert bundle == a  # two votes out of three at every component


def test_train_predict_and_model_persistence(tmp_path):
    events = [
        hdv.ActionEvent(1, "s1", "OpenFile"),
        hdv.ActionEvent(2, "s1", "RunTests"),
        hdv.ActionEvent(3, "s1", "Commit"),
    ]
    actions = hdv.Codebook("action", SEED, DIM)
    model, report = hdv.train(events, 3, actions)
    assert report.windows == 1
    assert model.windows_trained == 1

    result = hdv.predict(model, ["OpenFile", "RunTests"], 0.04)
    assert result.name == "Commit"
    assert result.score == 1.0
    assert result.confident

    path = tmp_path / "model.json"
    hdv.save_model(model, str(path))
    loaded = hdv.load_model(str(path))
    again = hdv.predict(loaded, ["OpenFile", "RunTests"], 0.04)
    assert again.name == result.name
    assert again.score == result.score


def test_action_log_roundtrip(tmp_path):
    events = [
        hdv.ActionEvent(1700000000000, "s1", "OpenFile"),
        hdv.ActionEvent(1700000000100, "s1", "Commit"),
    ]
    path = tmp_path / "log.jsonl"
    hdv.write_action_log(events, str(path))
    back = hdv.read_action_log(str(path))
    assert [(e.timestamp_ms, e.session, e.action) for e in back] == [
        (1700000000000, "s1", "OpenFile"),
        (1700000000100, "s1", "Commit"),
    ]


def test_style_mapping_translates_values():
    src = hdv.build_style_profile(
        [("NameFormat", "SnakeCase"), ("Indentation", "Tabs")], SEED, DIM
    )
    dst = hdv.build_style_profile(
        [("NameFormat", "CamelCase"), ("Indentation", "Spaces4")], SEED, DIM
    )
    mapping = hdv.build_mapping(src, dst)

    values = hdv.Codebook("style-value", SEED, DIM)
    for name in ("CamelCase", "PascalCase", "SnakeCase", "Tabs", "Spaces4"):
        values.register(name)
    result = hdv.translate_value("SnakeCase", mapping, values, 0.04)
    assert result.name == "CamelCase"
    assert result.confident

    restyled = hdv.restyle("\tuser_name = 1\n", mapping, values, 0.04)
    assert restyled.text == "    userName = 1\n"
    assert all(a.applied for a in restyled.attributes)


def test_infer_style_reads_the_dominant_conventions():
    profile = hdv.infer_style("def load_items():\n\titem_name = 1\n", SEED, DIM)
    assert profile.pairs == [("NameFormat", "SnakeCase"), ("Indentation", "Tabs")]


def test_context_roundtrip(tmp_path):
    ctx = hdv.encode_context(
        [("LANG", "Python"), ("BUILD", "Bazel"), ("VCS", "Git")], SEED, DIM
    )
    result = hdv.query_role(ctx, "LANG", 0.04)
    assert result.name == "Python"
    assert result.confident
    assert 0.3 < result.score < 0.7

    path = tmp_path / "context.json"
    hdv.save_profile(ctx, str(path))
    loaded = hdv.load_context_profile(str(path))
    assert loaded.pairs == ctx.pairs
    assert hdv.context_similarity(ctx, loaded) == 1.0

    other = hdv.encode_context([("LANG", "Go")], SEED, DIM)
    assert abs(hdv.context_similarity(ctx, other)) < 0.05


def test_default_tau_and_parse_seed():
    assert hdv.default_tau(DIM) == pytest.approx(4.0 / math.sqrt(DIM))
    assert hdv.parse_seed("0x5EED5EED5EED5EED") == SEED
    assert hdv.parse_seed("42") == 42
    with pytest.raises(Exception):
        hdv.parse_seed("not-a-seed")
