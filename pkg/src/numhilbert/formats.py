"""Line-oriented text formats.

Transform/stage declarations are whitespace-separated ``key=value`` tokens::

    stage nht family=six_ap a=2 modulus=13 normalize=none
    stage ntt p=31 n=6 g=6

Vector streams hold one block per line, decimal integers separated by
spaces; ``#`` starts a comment line, and ``#len=<L> m=<M>`` is a header.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import nht
from .errors import NotReducible, ParseError
from .nht import Kind, NhtTransform

FAMILY_KEYS = {
    "four": ("a", "b"),
    "six_ap": ("a",),
    "six_gen": ("a", "k", "l"),
    "eight": ("a", "b", "c", "d"),
    "row": ("row",),
}
COMMON_KEYS = ("modulus", "normalize", "root")
NORMALIZE = {"none": Kind.UNNORMALIZED, "transpose": Kind.TRANSPOSE_INVERSE, "involution": Kind.INVOLUTION}

_HEADER = re.compile(r"#len=(\d+) m=(\d+)\s*$")


def parse_pairs(tokens: Sequence[str], line: Optional[int] = None) -> Dict[str, str]:
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or not key or not value:
            raise ParseError(f"expected key=value, got {tok!r}", line)
        if key in out:
            raise ParseError(f"duplicate key {key!r}", line)
        out[key] = value
    return out


def _int(value: str, key: str, line=None) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{key}: expected an integer, got {value!r}", line) from None


def _rational(value: str, key: str, line=None) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{key}: expected a rational, got {value!r}", line) from None


def _candidates(family: str, args: dict, kind: Kind) -> List[NhtTransform]:
    if family == "four":
        pair = nht.four_point(args["a"], args["b"])
    elif family == "six_ap":
        pair = nht.six_point_ap(args["a"])
    elif family == "six_gen":
        return [nht.six_point_general(args["a"], args["k"], args["l"])]
    elif family == "eight":
        return [nht.eight_point(args["a"], args["b"], args["c"], args["d"])]
    else:
        return [nht.general_row(args["row"])]
    if kind is Kind.TRANSPOSE_INVERSE:
        return [pair[0]]
    if kind is Kind.INVOLUTION:
        return [pair[1]]
    return list(pair)


def _parse_family(options, line):
    family = options.get("family")
    if family not in FAMILY_KEYS:
        raise ParseError(f"unknown or missing family {family!r}", line)
    allowed = set(FAMILY_KEYS[family]) | set(COMMON_KEYS) | {"family"}
    unknown = sorted(set(options) - allowed)
    if unknown:
        raise ParseError(f"unknown keys for family {family}: {', '.join(unknown)}", line)
    missing = [k for k in FAMILY_KEYS[family] if k not in options]
    if missing:
        raise ParseError(f"missing keys for family {family}: {', '.join(missing)}", line)
    args = {}
    for key in FAMILY_KEYS[family]:
        value = options[key]
        if key == "row":
            args[key] = tuple(_int(v, key, line) for v in value.split(","))
        elif family == "four":
            args[key] = _rational(value, key, line)
        else:
            args[key] = _int(value, key, line)
    norm = options.get("normalize", "none")
    if norm not in NORMALIZE:
        raise ParseError(f"normalize must be one of none|transpose|involution, got {norm!r}", line)
    kind = NORMALIZE[norm]
    modulus = _int(options["modulus"], "modulus", line) if "modulus" in options else None
    root = _int(options["root"], "root", line) if "root" in options else None
    return family, args, kind, modulus, root


def family_transforms(options: Dict[str, str], line: Optional[int] = None) -> List[NhtTransform]:
    """Every unnormalized form a family declaration describes (two for ``four``/``six_ap``)."""
    family, args, _, _, _ = _parse_family(options, line)
    return _candidates(family, args, Kind.UNNORMALIZED)


def transform_from_options(options: Dict[str, str], line: Optional[int] = None) -> NhtTransform:
    """Build an NHT from ``family=... <params> [modulus=] [normalize=] [root=]``.

    Two-form families (``four``, ``six_ap``) pick the Gram form for
    ``normalize=transpose``, the square form for ``normalize=involution``,
    and otherwise the first form whose modulus is a multiple of ``modulus``.
    """
    family, args, kind, modulus, root = _parse_family(options, line)
    if family == "row" and modulus is not None:
        t = nht.general_row(args["row"], modulus)
    else:
        cands = _candidates(family, args, kind)
        if modulus is None:
            t = cands[0]
        else:
            fitting = [c for c in cands if c.modulus % modulus == 0]
            if not fitting:
                raise NotReducible(
                    f"modulus {modulus} divides none of {', '.join(str(c.modulus) for c in cands)}"
                )
            t = fitting[0] if fitting[0].modulus == modulus else nht.with_modulus(fitting[0], modulus)
    if kind is not Kind.UNNORMALIZED:
        t = nht.normalize(t, kind, root)
    elif root is not None:
        raise ParseError("root= requires normalize=transpose|involution", line)
    return t


def transform_to_options(t: NhtTransform) -> Dict[str, str]:
    """Inverse of ``transform_from_options`` for transforms built by it."""
    if t.params is None:
        raise ValueError("transform has no parameter provenance")
    out = {"family": t.params.family}
    for key, value in t.params.args:
        out[key] = ",".join(map(str, value)) if key == "row" else str(value)
    out["modulus"] = str(t.modulus)
    out["normalize"] = t.kind.value
    if t.scale is not None:
        out["root"] = str(t.scale)
    return out


def format_options(options: Dict[str, str]) -> str:
    return " ".join(f"{k}={v}" for k, v in options.items())


@dataclass
class StreamText:
    blocks: List[List[int]]
    length: Optional[int] = None
    modulus: Optional[int] = None

    @property
    def values(self) -> List[int]:
        return [v for block in self.blocks for v in block]


def read_stream(text: str) -> StreamText:
    blocks, length, modulus = [], None, None
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s:
            continue
        if s.startswith("#"):
            h = _HEADER.match(s)
            if h:
                length, modulus = int(h.group(1)), int(h.group(2))
            continue
        try:
            blocks.append([int(tok) for tok in s.split()])
        except ValueError:
            raise ParseError(f"non-integer value in {s!r}", lineno) from None
    return StreamText(blocks, length, modulus)


def write_stream(values: Sequence[int], n: int, length: Optional[int] = None, modulus: Optional[int] = None) -> str:
    lines = []
    if length is not None:
        lines.append(f"#len={length} m={modulus}")
    for i in range(0, len(values), n):
        lines.append(" ".join(str(v) for v in values[i:i + n]))
    return "\n".join(lines) + "\n"
