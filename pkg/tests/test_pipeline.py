import random

import pytest

from numhilbert import nht, ntt, pipeline
from numhilbert.errors import (
    AlphabetOverflow,
    InvalidStage,
    LengthNotMultiple,
    ModulusOrderViolation,
    ParseError,
)
from numhilbert.pipeline import DataStream, PipelineSpec

from oracles import dense_circulant, dense_matvec

TWO_STAGE = """\
block_length=6
stage nht family=six_ap a=2 modulus=13
stage ntt p=31 n=6
"""
INV13 = nht.reduce_by_gcd(nht.six_point_ap(2)[1])


def test_parse_two_stage():
    spec = pipeline.parse_spec(TWO_STAGE)
    assert spec.block_length == 6
    assert [s.modulus for s in spec.stages] == [13, 31]
    assert spec.stages[0].matrix.first_row == (0, 2, 0, 4, 0, 6)
    assert spec.stages[1].g == 6


def test_parse_errors():
    with pytest.raises(ParseError):
        pipeline.parse_spec("block_length=6\n# nothing\n")
    with pytest.raises(InvalidStage):
        pipeline.parse_spec("stage nht family=eight a=3 b=-3 c=9 d=5\n")
    with pytest.raises(ParseError) as e:
        pipeline.parse_spec("block_length=6\nstage nht family=six_ap a=2 modulus=13 colour=red\n")
    assert e.value.line == 2
    with pytest.raises(ParseError):
        pipeline.parse_spec("block_length=8\nstage nht family=six_ap a=2 modulus=13\n")
    with pytest.raises(ParseError):
        pipeline.parse_spec("stage fft n=4\n")
    with pytest.raises(ModulusOrderViolation):
        pipeline.parse_spec("stage ntt p=31 n=6\nstage nht family=six_ap a=2 modulus=13\n")
    with pytest.raises(ModulusOrderViolation):
        pipeline.parse_spec(TWO_STAGE + "braid rounds=2\n")


def test_format_round_trip():
    text = ("block_length=6\nstage nht family=six_ap a=2 modulus=13\n"
            "stage nht family=six_ap a=1 normalize=transpose\nstage ntt p=31 n=6\n"
            "stage nht family=six_gen a=1 k=4 l=6 normalize=transpose root=34\nbraid rounds=1 offset=2\n")
    spec = pipeline.parse_spec(text)
    again = pipeline.parse_spec(pipeline.format_spec(spec))
    assert again == spec


def test_apply_single_stage_matches_table():
    spec = PipelineSpec(6, (INV13,))
    assert pipeline.apply(spec, DataStream((1, 1, 1, 0, 0, 0), 13)).values == (2, 8, 6, 10, 4, 6)


def test_apply_two_stage_against_dense_oracle():
    spec = pipeline.parse_spec(TWO_STAGE)
    out = pipeline.apply(spec, DataStream((1, 0, 0, 0, 0, 0), 13))
    stage1 = dense_matvec(dense_circulant([0, 2, 0, 4, 0, 6]), [1, 0, 0, 0, 0, 0], 13)
    assert stage1 == [0, 6, 0, 4, 0, 2]
    L = [[pow(6, i * j, 31) for j in range(6)] for i in range(6)]
    assert out.values == tuple(dense_matvec(L, stage1, 31)) == (12, 22, 22, 19, 9, 9)
    assert out.modulus == 31


def test_zero_rounds_is_identity():
    spec = PipelineSpec(6, (INV13,), rounds=0)
    data = DataStream((5, 1, 2, 0, 12, 3), 13)
    assert pipeline.apply(spec, data).values == data.values
    assert pipeline.invert(spec, data).values == data.values


def test_invert_examples():
    spec = PipelineSpec(6, (INV13,))
    assert pipeline.invert(spec, DataStream((0, 6, 0, 4, 0, 2), 13)).values == (1, 0, 0, 0, 0, 0)


def test_single_stage_equals_direct_transforms():
    rng = random.Random(3)
    t = ntt.make(31, 6)
    for stage, fwd in ((INV13, nht.forward), (t, ntt.forward)):
        spec = PipelineSpec(6, (stage,))
        for _ in range(100):
            f = tuple(rng.randrange(stage.modulus) for _ in range(6))
            assert pipeline.apply(spec, DataStream(f, stage.modulus)).values == fwd(stage, f).values


@pytest.mark.parametrize("rounds, offset", [(1, None), (2, None), (3, 1), (4, 5)])
def test_braided_round_trip(rounds, offset):
    spec = PipelineSpec(6, (INV13, nht.normalize(nht.reduce_by_gcd(nht.six_point_ap(2)[1]), nht.Kind.INVOLUTION)),
                        rounds, offset)
    rng = random.Random(rounds)
    for _ in range(1000):
        x = tuple(rng.randrange(13) for _ in range(6 * rng.randint(1, 5)))
        y = pipeline.apply(spec, DataStream(x, 13))
        assert all(0 <= v < 13 for v in y.values)
        assert pipeline.invert(spec, y).values == x


def test_deterministic():
    spec = pipeline.parse_spec(TWO_STAGE)
    x = DataStream(tuple(range(12)), 13)
    assert pipeline.apply(spec, x) == pipeline.apply(spec, x)


def test_intermediate_alphabet():
    spec = pipeline.parse_spec(TWO_STAGE)
    rng = random.Random(11)
    for _ in range(200):
        x = tuple(rng.randrange(13) for _ in range(6))
        mid = nht.forward(spec.stages[0], x)
        assert all(v < 13 for v in mid.values)
        assert all(v < 31 for v in pipeline.apply(spec, DataStream(x, 13)).values)


def test_padding_and_errors():
    spec = PipelineSpec(6, (INV13,))
    with pytest.raises(LengthNotMultiple):
        pipeline.apply(spec, DataStream((1, 2, 3), 13))
    out = pipeline.apply(spec, DataStream((1, 2, 3), 13), pad=True)
    assert out.original_length == 3 and len(out.values) == 6
    assert pipeline.invert(spec, out).values == (1, 2, 3)
    with pytest.raises(AlphabetOverflow):
        pipeline.apply(spec, DataStream((1,) * 6, 31))
    with pytest.raises(AlphabetOverflow):
        DataStream((13,), 13)


def test_invert_rejects_values_outside_image():
    spec = pipeline.parse_spec(TWO_STAGE)
    # inverse NTT of a delta is the constant 26, outside stage 1's alphabet
    with pytest.raises(AlphabetOverflow):
        pipeline.invert(spec, DataStream((1, 0, 0, 0, 0, 0), 31))


def test_diffusion_identity():
    spec = PipelineSpec(6, (INV13,), rounds=0)
    rep = pipeline.diffusion_report(spec, 50)
    assert rep.fractions[0] == pytest.approx(1 / 6)


def test_diffusion_single_stage():
    rep = pipeline.diffusion_report(PipelineSpec(6, (INV13,)), 100)
    assert rep.fractions[1] == 0.5


def test_diffusion_hilbert_only_rounds_stay_in_one_parity_class():
    # every Hilbert stage moves a change to the opposite parity and blocks have
    # even length, so NHT-only chains never touch more than half the positions
    rep = pipeline.diffusion_report(PipelineSpec(6, (INV13,), rounds=3), 300, blocks=2)
    assert rep.fractions[1] == pytest.approx(0.25)
    assert all(f <= 0.5 + 1e-12 for f in rep.fractions.values())
    assert rep.fractions[2] == pytest.approx(0.5)


def test_diffusion_braided_with_ntt_exceeds_half():
    spec = PipelineSpec(6, (INV13, ntt.make(13, 6)), rounds=2)
    rep = pipeline.diffusion_report(spec, 300, blocks=2)
    assert rep.fractions[2] > 0.5
    assert rep.fractions[2] > rep.fractions[1]
