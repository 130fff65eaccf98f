"""Command-line interface: ``fouriermds {build,certify,encode,decode,search,demo}``.

Row indices given on the command line are 1-based (``--start 2`` is the
second row of the Fourier matrix); they are converted to the library's
0-based indices before use.

Exit codes: 0 success or MDS verdict, 1 counterexample or decoding
failure, 2 usage, parse or budget errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bounds import max_length_dim3
from .codec import Word, encode, erasure_decode, error_decode
from .codes import (
    LinearCode,
    Sampled,
    certify_mds,
    certify_mds_standard,
    code_from_rows,
    dual_code,
    extend_identity_columns_dim3,
    extend_two_columns,
    standard_form,
)
from .errors import (
    CombinationOverflow,
    DecodingFailure,
    FourierMdsError,
    SearchTooLarge,
    Singular,
    TooManyErasures,
)
from .fourier import RowSelection
from .galois import field_build, field_of_order
from .linalg import DEFAULT_BUDGET
from .matrix_file import MatrixFile, format_matrix_file, read_matrix_file, write_matrix_file

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def build_code(p: int, m: int, kind: str, start: int = 1, count: Optional[int] = None, step: int = 1) -> LinearCode:
    """Construct a generator from CLI-style (1-based) parameters."""
    ctx = field_build(p, m)
    if start < 1:
        raise UsageError("--start is 1-based and must be >= 1")
    start0 = (start - 1) % ctx.order
    if kind == "even3":
        if count not in (None, 3):
            raise UsageError("--kind even3 always uses three rows")
        return extend_identity_columns_dim3(ctx, start0, step)
    if count is None:
        raise UsageError(f"--kind {kind} needs --count")
    code = code_from_rows(ctx, RowSelection(start0, count, step))
    if kind == "extended":
        return extend_two_columns(code)
    return code


def _parse_mode(text: str):
    if text == "full":
        return "full"
    parts = text.split(":")
    if len(parts) == 3 and parts[0] == "sampled":
        try:
            return Sampled(int(parts[1]), int(parts[2]))
        except ValueError:
            pass
    raise UsageError(f"bad --mode {text!r}; expected full or sampled:N:SEED")


def _read_symbols(tokens: Sequence[str]) -> list[str]:
    if tokens:
        return list(tokens)
    return sys.stdin.read().split()


def _ints(tokens: Sequence[str], q: int) -> list[int]:
    try:
        vals = [int(t) for t in tokens]
    except ValueError as exc:
        raise UsageError(f"symbols must be integers: {exc}") from exc
    if any(not 0 <= v < q for v in vals):
        raise UsageError(f"symbols must lie in [0, {q})")
    return vals


# ------------------------------------------------------------------ commands
def cmd_build(args: argparse.Namespace) -> int:
    code = build_code(args.p, args.m, args.kind, args.start, args.count, args.step)
    text = format_matrix_file(MatrixFile.from_code(code))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    mode = _parse_mode(args.mode)
    M = read_matrix_file(args.file).matrix()
    budget = None if args.no_budget else args.budget
    try:
        cert = certify_mds(M, mode, budget)
    except CombinationOverflow as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"[{M.cols},{M.rows}] over GF({M.field.q}): {cert.summary()}")
    return EXIT_OK if cert.verdict else EXIT_FAIL


def cmd_encode(args: argparse.Namespace) -> int:
    code = read_matrix_file(args.file).code()
    msg = _ints(_read_symbols(args.symbols), code.field.q)
    if len(msg) != code.k:
        raise UsageError(f"expected {code.k} message symbols, got {len(msg)}")
    print(" ".join(str(v) for v in encode(msg, code).values()))
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    code = read_matrix_file(args.file).code()
    tokens = _read_symbols(args.symbols)
    if len(tokens) != code.n:
        raise UsageError(f"expected {code.n} received symbols, got {len(tokens)}")
    mask = [t == "?" for t in tokens]
    values = _ints(["0" if e else t for t, e in zip(tokens, mask)], code.field.q)
    try:
        if any(mask):
            result = erasure_decode(Word.of(code.field, values, mask), code)
        else:
            result = error_decode(Word.of(code.field, values), code)
    except (DecodingFailure, TooManyErasures, Singular) as exc:
        print(f"decoding failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out = result.codeword.values() if args.codeword else [s.value for s in result.message]
    print(" ".join(str(v) for v in out))
    print(f"corrections: {result.corrections}", file=sys.stderr)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    ctx = field_of_order(args.q)
    try:
        report = max_length_dim3(ctx)
    except SearchTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"q={report.q} max_n={report.max_n}")
    for n, count in sorted(report.examined_by_length.items(), reverse=True):
        verdict = "found" if n == report.max_n else "none"
        print(f"  n={n}: {count} canonical candidates examined, {verdict}")
    print(f"candidates_examined={report.candidates_examined}")
    if report.witness is not None and not args.no_witness:
        path = Path(args.witness or f"witness_q{report.q}_n{report.max_n}.txt")
        write_matrix_file(path, MatrixFile.from_code(report.witness))
        print(f"witness: {path}")
    return EXIT_OK


def demo_samples():
    """The worked examples: (label, code, certification route)."""
    gf9, gf27, gf257, gf8 = field_build(3, 2), field_build(3, 3), field_build(257), field_build(2, 3)
    b9 = extend_two_columns(code_from_rows(gf9, RowSelection(0, 4, 1)))
    b27 = extend_two_columns(code_from_rows(gf27, RowSelection(0, 4, 1)))
    b8 = extend_identity_columns_dim3(gf8)
    return [
        ("gf9_10_4", b9, "full"),
        ("gf9_10_3_step3", extend_two_columns(code_from_rows(gf9, RowSelection(1, 3, 3))), "full"),
        ("gf9_10_4_wrap", extend_two_columns(code_from_rows(gf9, RowSelection(1, 4, 3))), "full"),
        ("gf27_28_4", b27, "full"),
        ("gf27_28_24_dual", dual_code(b27), "standard"),
        ("gf257_258_4", extend_two_columns(code_from_rows(gf257, RowSelection(0, 4, 1))), "sampled"),
        ("gf8_10_3", b8, "full"),
        ("gf8_10_7_dual", dual_code(b8), "standard"),
    ]


def cmd_demo(args: argparse.Namespace) -> int:
    header = f"{'sample':<18} {'field':<8} {'code':<10} {'kind':<9} {'mode':<20} {'minors':>8}  verdict"
    print(header)
    print("-" * len(header))
    all_ok = True
    for label, code, route in demo_samples():
        if route == "standard":
            cert = certify_mds_standard(standard_form(code)[0])
            mode = "standard form"
        elif route == "sampled":
            cert = certify_mds(code, Sampled(args.samples, args.seed))
            mode = str(cert.mode)
        else:
            cert = certify_mds(code)
            mode = "full"
        all_ok &= cert.verdict
        kind = str(code.provenance.get("kind", ""))
        if code.provenance.get("dual"):
            kind += "*"
        print(
            f"{label:<18} {'GF(%d)' % code.field.q:<8} {'[%d,%d]' % (code.n, code.k):<10} "
            f"{kind:<9} {mode:<20} {cert.minors_checked:>8}  {'MDS' if cert.verdict else 'NOT MDS'}"
        )
        if args.write_dir:
            out = Path(args.write_dir)
            out.mkdir(parents=True, exist_ok=True)
            write_matrix_file(out / f"{label}.txt", MatrixFile.from_code(code))
    print("(* = dual code; certified through its standard form)")
    return EXIT_OK if all_ok else EXIT_FAIL


# -------------------------------------------------------------------- parser
def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fouriermds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a generator matrix file")
    b.add_argument("-p", type=int, required=True, help="field characteristic")
    b.add_argument("-m", type=int, default=1, help="extension degree")
    b.add_argument("--kind", choices=("fourier", "extended", "even3"), required=True)
    b.add_argument("--start", type=int, default=1, help="first Fourier row, 1-based")
    b.add_argument("--count", type=int, help="number of Fourier rows")
    b.add_argument("--step", type=int, default=1, help="row step, coprime to q-1")
    b.add_argument("-o", "--output", help="output file (default stdout)")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("certify", help="check every maximal minor of a generator")
    c.add_argument("file")
    c.add_argument("--mode", default="full", help="full or sampled:N:SEED")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.add_argument("--no-budget", action="store_true", help="allow any number of minors")
    c.set_defaults(func=cmd_certify)

    e = sub.add_parser("encode", help="encode k symbols (args or stdin)")
    e.add_argument("file")
    e.add_argument("symbols", nargs="*")
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="decode n symbols; '?' marks an erasure")
    d.add_argument("file")
    d.add_argument("symbols", nargs="*")
    d.add_argument("--codeword", action="store_true", help="print the corrected codeword")
    d.set_defaults(func=cmd_decode)

    s = sub.add_parser("search", help="longest [n,3] MDS code over GF(q), q <= 9")
    s.add_argument("q", type=int)
    s.add_argument("--witness", help="witness file path")
    s.add_argument("--no-witness", action="store_true")
    s.set_defaults(func=cmd_search)

    m = sub.add_parser("demo", help="rebuild and certify the worked examples")
    m.add_argument("--samples", type=int, default=100_000)
    m.add_argument("--seed", type=int, default=42)
    m.add_argument("--write-dir", help="also write every sample matrix here")
    m.set_defaults(func=cmd_demo)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FourierMdsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
