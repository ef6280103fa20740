"""Command-line front end.

Exit codes: 0 success, 1 a verification FAIL line was printed, 2 usage or
input error.
"""

import argparse
import sys
from fractions import Fraction

from . import nht, ntt, pipeline, tables
from .errors import NhtError
from .formats import family_transforms, read_stream, transform_from_options, write_stream
from .nht import NhtTransform, Relation


class _Fail(Exception):
    pass


def _render_claim(t: NhtTransform) -> str:
    """The defining constant reduced mod m; negative constants take the residue
    of least absolute value, so -12 mod 31 stays -12 but -12 mod 13 is 1."""
    c, m = Fraction(t.claim), t.modulus
    if c.denominator != 1:
        return str(t.diag_const)
    r = int(c) % m
    if c < 0 and m - r < r:
        r -= m
    return str(r)


def _verify_lines(t: NhtTransform):
    report = nht.verify(t)
    m = t.modulus
    rel = t.relation.value
    lines = []
    if not report.structural_ok:
        lines.append(f"FAIL pattern row {' '.join(map(str, t.matrix.first_row))} mod {m}")
    if t.claim is None:
        lines.append(f"FAIL {rel} not scalar mod {m}")
    elif report.claim_ok:
        lines.append(f"PASS {rel}={_render_claim(t)}I mod {m}")
    else:
        got = report.gram_scalar if t.relation is Relation.GRAM else report.square_scalar
        lines.append(f"FAIL {rel}={_render_claim(t)}I mod {m} (got {'non-scalar' if got is None else got})")
    if report.gcd_c_m not in (None, 1):
        c = report.gram_scalar if t.relation is Relation.GRAM else report.square_scalar
        lines.append(f"WARN non-invertible gcd({c},{m})={report.gcd_c_m}")
    return lines


def _family_options(args) -> dict:
    opts = {"family": args.family}
    for key in ("a", "b", "c", "d", "k", "l", "row", "modulus", "root"):
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    if args.normalize != "none":
        opts["normalize"] = args.normalize
    return opts


def _transforms_for_verify(args):
    opts = _family_options(args)
    if "modulus" not in opts and "normalize" not in opts:
        return family_transforms(opts)
    return [transform_from_options(opts)]


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_build(args):
    t = transform_from_options(_family_options(args))
    out = [
        f"family={t.params.family} modulus={t.modulus} kind={t.kind.value}"
        + (f" root={t.scale}" if t.scale is not None else ""),
        f"first_row={' '.join(map(str, t.matrix.first_row))}",
        f"{t.relation.value}={_render_claim(t)}I" if t.claim is not None else f"{t.relation.value}=non-scalar",
    ]
    out += [" ".join(f"{v:>{len(str(t.modulus - 1))}}" for v in row) for row in t.matrix.rows()]
    _write(args.out, "\n".join(out) + "\n")


def cmd_verify(args):
    lines = []
    for t in _transforms_for_verify(args):
        lines += _verify_lines(t)
    print("\n".join(lines))
    if any(line.startswith("FAIL") for line in lines):
        raise _Fail


def _load_spec(path):
    return pipeline.parse_spec(_read(path))


def _stream_for(spec, text, modulus):
    st = read_stream(text)
    n = spec.block_length
    for i, block in enumerate(st.blocks):
        if len(block) != n and i != len(st.blocks) - 1:
            raise NhtError(f"block {i + 1} has length {len(block)}, pipeline block length is {n}")
    m = st.modulus or modulus
    return st, [v % m for v in st.values], m


def cmd_apply(args):
    spec = _load_spec(args.spec)
    st, values, m = _stream_for(spec, _read(args.inp), spec.input_modulus)
    if st.blocks and len(st.blocks[-1]) != spec.block_length and not args.pad:
        raise NhtError(f"last block has length {len(st.blocks[-1])}, block length is {spec.block_length} (use --pad)")
    out = pipeline.apply(spec, pipeline.DataStream(values, m), pad=args.pad)
    _write(args.out, write_stream(out.values, spec.block_length, out.original_length,
                                  out.modulus if out.original_length is not None else None))


def cmd_invert(args):
    spec = _load_spec(args.spec)
    st = read_stream(_read(args.inp))
    m = spec.output_modulus
    values = [v % m for v in st.values]
    out = pipeline.invert(spec, pipeline.DataStream(values, m, st.length))
    _write(args.out, write_stream(out.values, spec.block_length))


def cmd_search(args):
    lines = []
    for p in nht.search_eight_point(args.bound, args.require_invertible):
        a, b, c, d = p.as_tuple()
        m = abs(a * b + b * c + c * d + d * a)
        lines.append(f"a={a} b={b} c={c} d={d} m={m} diag={(a * a + b * b + c * c + d * d) % m}")
    _write(args.out, "\n".join(lines) + ("\n" if lines else ""))


def cmd_ntt(args):
    t = ntt.make(args.p, args.n, args.g)
    if args.inp is not None:
        vec = read_stream(_read(args.inp)).values
        res = []
        for i in range(0, len(vec), t.n):
            block = vec[i:i + t.n]
            if len(block) != t.n:
                raise NhtError(f"block length {len(block)} != {t.n}")
            res += (ntt.inverse if args.inverse else ntt.forward)(t, block).values
        _write(args.out, write_stream(res, t.n))
        return
    out = [f"p={t.p} n={t.n} g={t.g}", "L ="]
    out += [" ".join(map(str, row)) for row in ntt.build_matrix(t)]
    out.append(f"L^-1 = {ntt.inverse_scale(t)} *")
    out += [" ".join(map(str, row)) for row in ntt.inverse_matrix_unscaled(t)]
    _write(args.out, "\n".join(out) + "\n")


def cmd_pipeline(args):
    spec = _load_spec(args.spec)
    out = [pipeline.format_spec(spec).rstrip("\n")]
    failed = False
    for i, stage in enumerate(spec.stages, 1):
        if isinstance(stage, NhtTransform):
            for line in _verify_lines(stage):
                out.append(f"stage {i}: {line}")
                failed |= line.startswith("FAIL")
        else:
            out.append(f"stage {i}: ntt order({stage.g} mod {stage.p})={stage.n}")
    rep = pipeline.diffusion_report(spec, args.trials, args.blocks, args.seed)
    for rounds, frac in rep.fractions.items():
        out.append(f"diffusion rounds={rounds} length={rep.stream_length} mean_changed={frac:.6f}")
    _write(args.out, "\n".join(out) + "\n")
    if failed:
        raise _Fail


def _fmt_row(row):
    return " ".join(map(str, row))


def cmd_table1(args):
    out, failed = [], False
    for r in tables.reproduce_table1():
        out.append(f"row {r.label}: f={_fmt_row(r.f)} g={_fmt_row(r.computed)} {r.status}")
        if r.status == "FAIL":
            failed = True
            out.append(f"  published={_fmt_row(r.published)}")
    _write(args.out, "\n".join(out) + "\n")
    if failed:
        raise _Fail


def cmd_table2(args):
    out, failed = [], False
    for r in tables.reproduce_table2(args.convention):
        out.append(f"row {r.label}: f={_fmt_row(r.f)} g={_fmt_row(r.computed)} {r.status}")
        if r.status != "MATCH":
            out.append(f"  published={_fmt_row(r.published)} differs at {_fmt_row(r.differing)}"
                       + (f" ({r.note})" if r.note else ""))
        failed |= r.status == "FAIL"
    _write(args.out, "\n".join(out) + "\n")
    if failed:
        raise _Fail


def _add_family(p):
    p.add_argument("--family", required=True, choices=["four", "six_ap", "six_gen", "eight", "row"])
    for key in ("a", "b", "c", "d", "k", "l"):
        p.add_argument(f"--{key}")
    p.add_argument("--row", help="comma-separated first row, e.g. 0,1,0,2,0,3")
    p.add_argument("--modulus")
    p.add_argument("--normalize", choices=["none", "transpose", "involution"], default="none")
    p.add_argument("--root", help="explicit normalization square root")


def build_parser():
    parser = argparse.ArgumentParser(prog="numhilbert", description="Number-theoretic Hilbert transforms")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="construct a transform and print its matrix")
    _add_family(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="recheck a transform's defining identity")
    _add_family(p)
    p.set_defaults(func=cmd_verify)

    for verb, func in (("apply", cmd_apply), ("invert", cmd_invert)):
        p = sub.add_parser(verb, help=f"{verb} a pipeline to a vector stream")
        p.add_argument("--spec", required=True)
        p.add_argument("--in", dest="inp")
        p.add_argument("--out")
        if verb == "apply":
            p.add_argument("--pad", action="store_true", help="zero-pad the last block")
        p.set_defaults(func=func)

    p = sub.add_parser("search", help="enumerate 8-point parameter sets")
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--require-invertible", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("ntt", help="print or apply the number-theoretic Fourier transform")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int)
    p.add_argument("--in", dest="inp")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ntt)

    p = sub.add_parser("pipeline", help="validate a pipeline spec and report diffusion")
    p.add_argument("--spec", required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--blocks", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("table1", help="reproduce the 6-point table mod 13")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="reproduce the 8-point table mod 24")
    p.add_argument("--convention", choices=["canonical", "paper_row7"], default="canonical")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table2)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        args.func(args)
    except _Fail:
        return 1
    except (NhtError, ValueError, ZeroDivisionError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


def run():
    sys.exit(main())
