"""``gcq`` command line.

    gcq mp     --q 3 --in "1,2,0"            minimal period of one block
    gcq mult   --q 2 --in "1,1,1,1"          multiplicity of x - 1
    gcq verify --q 3 --n 2 --mode exhaustive compare against the gcd oracle
    gcq bench  --q 2 --n 20                  timing table
    gcq field  --q 9                         p, e and modulus encoding

Input is read from ``--in``, else ``--file``, else stdin.  Exit status is 0
on success, 1 on usage or input errors and 2 when verification finds a
mismatch.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass

import numpy as np

from .errors import BadElement, EmptyInput, GCQError
from .field import DTYPE, field_make
from .fold import PeriodicSequence
from .gameschan import (
    min_period,
    min_period_binary,
    multiplicity,
    multiplicity_binary,
    pack_bits,
    paper_literal_min_period,
)
from .oracle import (
    DEFAULT_SEED,
    ORACLE_CAP,
    discrepancy_search,
    make_rng,
    mp_oracle,
    multiplicity_oracle,
    planted_instance,
)
from .poly import DensePoly, parse_elements

COMMANDS = ("mp", "mult", "verify", "bench", "field")


@dataclass
class RunConfig:
    command: str
    q: int
    text: str | None = None
    path: str | None = None
    json: bool = False
    paper_literal: bool = False
    no_shortcut: bool = False
    seed: int = DEFAULT_SEED
    count: int = 1000
    n: int | None = None
    mode: str = "exhaustive"
    algorithm: str = "corrected"
    max_m: int = 50


def parse_values(text, q):
    """Element encodings from text; for q = 2 also a little-endian ``0x`` hex string."""
    t = text.strip()
    if not t:
        raise EmptyInput("no elements given")
    if t.lower().startswith("0x"):
        if q != 2:
            raise BadElement("hex input is only accepted for q = 2")
        digits = t[2:].replace("_", "")
        if not digits:
            raise EmptyInput("empty hex literal")
        try:
            value = int(digits, 16)
        except ValueError:
            raise BadElement(f"bad hex literal {t!r}") from None
        nbits = 4 * len(digits)
        return [(value >> i) & 1 for i in range(nbits)]
    return parse_elements(t, q)


def parse_sequence_input(text, field):
    return PeriodicSequence(field, parse_values(text, field.q))


def _read_input(cfg):
    if cfg.text is not None:
        return cfg.text
    if cfg.path is not None:
        with open(cfg.path, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _dumps(obj):
    return json.dumps(obj, separators=(", ", ": "))


def _cmd_mp(cfg, field):
    s = parse_sequence_input(_read_input(cfg), field)
    if cfg.paper_literal:
        mp = paper_literal_min_period(s)
        if cfg.json:
            return _dumps({"q": field.q, "n": s.n, "algorithm": "paper-literal",
                           "levels": [], "base": mp, "result": mp})
        return str(mp)
    mp, trace = min_period(s, shortcut=not cfg.no_shortcut)
    return _dumps(trace.to_dict()) if cfg.json else str(mp)


def _cmd_mult(cfg, field):
    f = DensePoly(field, parse_values(_read_input(cfg), field.q))
    pi, trace = multiplicity(f, shortcut=not cfg.no_shortcut)
    return _dumps(trace.to_dict()) if cfg.json else str(pi)


def _planted_checks(field, count, max_m, seed):
    rng = make_rng(seed)
    failures = []
    for i in range(count):
        m = int(rng.integers(0, max_m + 1))
        f = planted_instance(field, m, m + 2 * field.q, seed + i)
        got = multiplicity(f)[0]
        want = multiplicity_oracle(f)
        if got != m or want != m:
            failures.append({"m": m, "poly": f.coeffs.tolist(), "multiplicity": got, "oracle": want})
    return {"count": count, "max_m": max_m, "seed": seed, "failures": failures}


def _cmd_verify(cfg, field):
    n = 1 if cfg.n is None else cfg.n
    report = discrepancy_search(field.q, n, cfg.mode, cfg.algorithm, seed=cfg.seed,
                                count=cfg.count, shortcut=not cfg.no_shortcut)
    planted = _planted_checks(field, min(cfg.count, 200), cfg.max_m, cfg.seed)
    out = {"discrepancy": report.to_dict(), "planted": planted}
    ok = report.passed and not planted["failures"]
    return _dumps(out), (0 if ok else 2)


def _best_time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def _cmd_bench(cfg, field):
    q = field.q
    n = 10 if cfg.n is None else cfg.n
    N = q**n
    block = make_rng(cfg.seed).integers(0, q, size=N, dtype=DTYPE)
    # zero coefficient sum, so the timing covers the recursion and not the early exit
    block[-1] = field.sneg(int(field.total(block[:-1]))) if N > 1 else block[-1]
    s = PeriodicSequence(field, block)
    shortcut = not cfg.no_shortcut
    rows = [("generic", _best_time(lambda: min_period(s, shortcut=shortcut)))]
    if q == 2:
        words = pack_bits(block)
        rows.append(("binary", _best_time(lambda: min_period_binary(words, N, shortcut=shortcut))))
    if N <= ORACLE_CAP:
        rows.append(("oracle", _best_time(lambda: mp_oracle(s), repeat=2)))  # first call loads the kernels
    lines = [f"q={q} n={n} N={N} seed={cfg.seed}", f"{'method':<10}{'seconds':>14}"]
    lines += [f"{name:<10}{t:>14.6f}" for name, t in rows]
    return "\n".join(lines)


def _cmd_field(cfg, field):
    mod = field.modulus_encoding
    return f"p={field.p} e={field.e} modulus={'none' if mod is None else mod}"


def run(cfg):
    """Execute one command; returns ``(exit_code, stdout_text)``."""
    field = field_make(cfg.q)
    handler = {
        "mp": _cmd_mp,
        "mult": _cmd_mult,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
        "field": _cmd_field,
    }[cfg.command]
    out = handler(cfg, field)
    if isinstance(out, tuple):
        text, code = out
    else:
        text, code = out, 0
    return code, text + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, required=True, help="field order (prime power)")
    src = common.add_mutually_exclusive_group()
    src.add_argument("--in", dest="text", help="inline input")
    src.add_argument("--file", dest="path", help="input file")
    common.add_argument("--json", action="store_true", help="emit the recursion trace as JSON")
    common.add_argument("--paper-literal", action="store_true",
                        help="use the uncorrected max-over-chunks recursion (mp only)")
    common.add_argument("--no-shortcut", action="store_true",
                        help="disable the coefficient-sum test")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--count", type=int, default=1000)
    common.add_argument("--n", type=int, default=None, help="exponent, N = q**n")
    common.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    common.add_argument("--algorithm", choices=("corrected", "paper-literal"), default="corrected")
    common.add_argument("--max-m", type=int, default=50, help="largest planted multiplicity (verify)")

    parser = _Parser(prog="gcq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command, q=args.q, text=args.text, path=args.path, json=args.json,
        paper_literal=args.paper_literal, no_shortcut=args.no_shortcut, seed=args.seed,
        count=args.count, n=args.n, mode=args.mode, algorithm=args.algorithm, max_m=args.max_m,
    )
    try:
        code, text = run(cfg)
    except (GCQError, OSError) as exc:
        print(f"gcq: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
