"""Blockwise scrambling by chains of invertible NHT/NTT stages.

A round cuts the stream into consecutive blocks of length ``n`` and runs
every block through the stage chain.  Braiding repeats the round with the
block boundaries moved: round ``r`` starts its first block at position
``(r * offset) % n`` of the cyclically viewed stream, so later rounds mix
values that earlier rounds kept in separate blocks.
"""

import random
from dataclasses import dataclass, replace
from typing import Dict, Optional, Sequence, Tuple, Union

from . import nht, ntt
from .circulant import ResidueVector
from .errors import (
    AlphabetOverflow,
    InvalidStage,
    LengthNotMultiple,
    ModulusOrderViolation,
    ParseError,
)
from .formats import format_options, parse_pairs, transform_from_options, transform_to_options
from .nht import NhtTransform
from .ntt import NttTransform

Stage = Union[NhtTransform, NttTransform]


@dataclass(frozen=True)
class PipelineSpec:
    block_length: int
    stages: Tuple[Stage, ...]
    rounds: int = 1
    offset: Optional[int] = None

    def __post_init__(self):
        if not self.stages:
            raise ValueError("pipeline needs at least one stage")
        if self.offset is None:
            object.__setattr__(self, "offset", self.block_length // 2)
        validate(self)

    @property
    def input_modulus(self) -> int:
        return self.stages[0].modulus

    @property
    def output_modulus(self) -> int:
        return self.stages[-1].modulus


@dataclass(frozen=True)
class DataStream:
    values: Tuple[int, ...]
    modulus: int
    original_length: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        bad = [v for v in self.values if not 0 <= v < self.modulus]
        if bad:
            raise AlphabetOverflow(f"value {bad[0]} outside alphabet [0, {self.modulus})")


def _stage_forward(stage: Stage, block: ResidueVector) -> ResidueVector:
    if isinstance(stage, NttTransform):
        return ntt.forward(stage, block)
    return nht.forward(stage, block)


def _stage_inverse(stage: Stage, block: ResidueVector) -> ResidueVector:
    if isinstance(stage, NttTransform):
        return ntt.inverse(stage, block)
    return nht.inverse(stage, block)


def validate(spec: PipelineSpec) -> None:
    n = spec.block_length
    for i, stage in enumerate(spec.stages, 1):
        if stage.n != n:
            raise InvalidStage(f"stage {i} has block length {stage.n}, pipeline uses {n}")
        if isinstance(stage, NhtTransform):
            report = nht.verify(stage)
            if not report.invertible:
                raise InvalidStage(f"stage {i} is not invertible: {'; '.join(report.notes)}")
    moduli = [s.modulus for s in spec.stages]
    for i in range(1, len(moduli)):
        if moduli[i] < moduli[i - 1]:
            raise ModulusOrderViolation(f"stage moduli must be non-decreasing, got {moduli}")
    if spec.rounds < 0:
        raise ValueError(f"rounds must be >= 0, got {spec.rounds}")
    if spec.rounds > 1:
        # later rounds feed the last stage's alphabet back into the first stage
        if moduli[0] != moduli[-1]:
            raise ModulusOrderViolation(f"braided rounds need equal first/last stage moduli, got {moduli}")
        if not 1 <= spec.offset < n:
            raise ValueError(f"braid offset must be in [1, {n - 1}], got {spec.offset}")


def _round(values, spec, shift, step):
    n = spec.block_length
    k = len(values)
    rotated = values[shift:] + values[:shift]
    out = []
    for i in range(0, k, n):
        out.extend(step(rotated[i:i + n]))
    return out[k - shift:] + out[:k - shift] if shift else out


def _forward_block(spec, block):
    vec = ResidueVector(block, spec.input_modulus)
    for stage in spec.stages:
        vec = _stage_forward(stage, ResidueVector(vec.values, stage.modulus))
    return vec.values


def _inverse_block(spec, block):
    vec = ResidueVector(block, spec.output_modulus)
    for i in range(len(spec.stages) - 1, -1, -1):
        stage = spec.stages[i]
        if any(v >= stage.modulus for v in vec.values):
            raise AlphabetOverflow(f"block {vec.values} is not in the image of stage {i + 2}")
        vec = _stage_inverse(stage, ResidueVector(vec.values, stage.modulus))
    return vec.values


def _shifts(spec):
    return [(r * spec.offset) % spec.block_length for r in range(spec.rounds)]


def apply(spec: PipelineSpec, data: DataStream, pad: bool = False) -> DataStream:
    if data.modulus > spec.input_modulus:
        raise AlphabetOverflow(f"alphabet {data.modulus} exceeds first stage modulus {spec.input_modulus}")
    values = list(data.values)
    n = spec.block_length
    length = None
    if len(values) % n:
        if not pad:
            raise LengthNotMultiple(f"stream length {len(values)} is not a multiple of {n}")
        length = len(values)
        values += [0] * (-len(values) % n)
    if spec.rounds == 0:
        return DataStream(tuple(values), data.modulus, length)
    for shift in _shifts(spec):
        values = _round(values, spec, shift, lambda b: _forward_block(spec, b))
    return DataStream(tuple(values), spec.output_modulus, length)


def invert(spec: PipelineSpec, data: DataStream) -> DataStream:
    values = list(data.values)
    if len(values) % spec.block_length:
        raise LengthNotMultiple(f"stream length {len(values)} is not a multiple of {spec.block_length}")
    if spec.rounds and data.modulus > spec.output_modulus:
        raise AlphabetOverflow(f"alphabet {data.modulus} exceeds last stage modulus {spec.output_modulus}")
    for shift in reversed(_shifts(spec)):
        values = _round(values, spec, shift, lambda b: _inverse_block(spec, b))
    if data.original_length is not None:
        values = values[:data.original_length]
    modulus = spec.input_modulus if spec.rounds else data.modulus
    return DataStream(tuple(values), modulus)


@dataclass(frozen=True)
class DiffusionReport:
    """Mean fraction of output positions changed by a one-position input change,
    keyed by number of rounds."""

    fractions: Dict[int, float]
    trials: int
    stream_length: int


def diffusion_report(spec: PipelineSpec, trials: int, blocks: int = 1, seed: int = 0) -> DiffusionReport:
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = random.Random(seed)
    m0 = spec.input_modulus
    length = blocks * spec.block_length
    fractions = {}
    for rounds in range(spec.rounds + 1):
        sub = replace(spec, rounds=rounds)
        total = 0.0
        for _ in range(trials):
            x = [rng.randrange(m0) for _ in range(length)]
            y = list(x)
            pos = rng.randrange(length)
            y[pos] = (y[pos] + rng.randrange(1, m0)) % m0
            gx = apply(sub, DataStream(x, m0)).values
            gy = apply(sub, DataStream(y, m0)).values
            total += sum(a != b for a, b in zip(gx, gy)) / length
        fractions[rounds] = total / trials
    return DiffusionReport(fractions, trials, length)


def parse_stage(tokens: Sequence[str], line: Optional[int] = None) -> Stage:
    if not tokens:
        raise ParseError("stage needs a type (nht|ntt)", line)
    kind, rest = tokens[0], parse_pairs(tokens[1:], line)
    if kind == "ntt":
        unknown = sorted(set(rest) - {"p", "n", "g"})
        if unknown:
            raise ParseError(f"unknown keys for ntt stage: {', '.join(unknown)}", line)
        try:
            p, n = int(rest["p"]), int(rest["n"])
            g = int(rest["g"]) if "g" in rest else None
        except KeyError as e:
            raise ParseError(f"ntt stage missing {e.args[0]}=", line) from None
        except ValueError:
            raise ParseError("ntt stage parameters must be integers", line) from None
        return ntt.make(p, n, g)
    if kind == "nht":
        return transform_from_options(rest, line)
    raise ParseError(f"unknown stage type {kind!r}", line)


def parse_spec(text: str) -> PipelineSpec:
    """Parse a pipeline declaration::

        block_length=6
        braid rounds=2 offset=3
        stage nht family=six_ap a=2 modulus=13
        stage ntt p=31 n=6
    """
    block_length = None
    rounds, offset = 1, None
    stages = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head = tokens[0]
        if head.startswith("block_length="):
            opts = parse_pairs(tokens, lineno)
            if set(opts) != {"block_length"}:
                raise ParseError("block_length line takes no other keys", lineno)
            try:
                block_length = int(opts["block_length"])
            except ValueError:
                raise ParseError("block_length must be an integer", lineno) from None
        elif head == "braid":
            opts = parse_pairs(tokens[1:], lineno)
            unknown = sorted(set(opts) - {"rounds", "offset"})
            if unknown:
                raise ParseError(f"unknown keys for braid: {', '.join(unknown)}", lineno)
            try:
                rounds = int(opts.get("rounds", 1))
                offset = int(opts["offset"]) if "offset" in opts else None
            except ValueError:
                raise ParseError("braid parameters must be integers", lineno) from None
        elif head == "stage":
            try:
                stage = parse_stage(tokens[1:], lineno)
            except ParseError:
                raise
            except ValueError as e:
                raise InvalidStage(f"line {lineno}: {e}") from e
            if block_length is None:
                block_length = stage.n
            elif stage.n != block_length:
                raise ParseError(f"stage block length {stage.n} != block_length {block_length}", lineno)
            if isinstance(stage, NhtTransform):
                report = nht.verify(stage)
                if not report.invertible:
                    raise InvalidStage(f"line {lineno}: stage is not invertible: {'; '.join(report.notes)}")
            stages.append(stage)
        else:
            raise ParseError(f"unrecognized declaration {head!r}", lineno)
    if not stages:
        raise ParseError("pipeline declares no stages")
    return PipelineSpec(block_length, tuple(stages), rounds, offset)


def format_spec(spec: PipelineSpec) -> str:
    lines = [f"block_length={spec.block_length}"]
    if spec.rounds != 1 or spec.offset != spec.block_length // 2:
        lines.append(f"braid rounds={spec.rounds} offset={spec.offset}")
    for stage in spec.stages:
        if isinstance(stage, NttTransform):
            lines.append(f"stage ntt p={stage.p} n={stage.n} g={stage.g}")
        else:
            lines.append("stage nht " + format_options(transform_to_options(stage)))
    return "\n".join(lines) + "\n"
