"""Command line front end: JSON documents in, JSON documents out.

Input documents carry exactly one representation key:

    {"so4_coeffs": {"f12": ..., "f13": ..., "f14": ..., "f23": ..., "f24": ..., "f34": ...}}
    {"so4_matrix": [[...4 rows of 4 numbers...]]}       antisymmetric, checked at 1e-12
    {"so3_coeffs": {"a": ..., "b": ..., "c": ...}}
    {"mat4": [[...4 rows of 4 numbers...]]}             arbitrary real matrix

check and log additionally accept the output of exp (any object with a
"result" key) so commands can be piped.  All output is canonical JSON:
alphabetically ordered keys, floats rendered with %.17g so that parsing and
re-printing a document reproduces it byte for byte.

Exit codes: 0 success, 1 failed mathematical check, 2 malformed input or
usage error, 3 internal numeric error (imaginary residue, embedding leak).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from .errors import EmbeddingLeak, NonRealResult, NotAKroneckerProduct, NotSpecialOrthogonal
from .expm import SkewSo3, exp_so3, exp_so4_closed, exp_so4_via_kron, exp_su2, log_so4
from .magic import SkewSo4, is_special_orthogonal, su2_pair_from_so4
from .oracle import taylor_exp

__all__ = ["DocumentError", "Xorshift64Star", "dumps_canonical", "main"]

_MASK64 = (1 << 64) - 1

_SO4_COEFF_KEYS = ("f12", "f13", "f14", "f23", "f24", "f34")
_SO3_COEFF_KEYS = ("a", "b", "c")
_REPRESENTATIONS = ("mat4", "so3_coeffs", "so4_coeffs", "so4_matrix")

_DEVIATION_BOUND = 1e-10


class DocumentError(ValueError):
    """Malformed or out-of-contract input; maps to exit code 2."""


# ---------------------------------------------------------------------------
# canonical JSON


def dumps_canonical(value) -> str:
    """Serialise with alphabetically sorted keys and %.17g floats.

    %.17g is the shortest fixed format that round-trips every double, so
    parse followed by re-print is the identity on canonical documents.
    """
    out: list[str] = []
    _emit(value, out)
    return "".join(out)


def _emit(v, out: list[str]) -> None:
    if isinstance(v, dict):
        out.append("{")
        for i, k in enumerate(sorted(v)):
            if i:
                out.append(", ")
            out.append(json.dumps(k))
            out.append(": ")
            _emit(v[k], out)
        out.append("}")
    elif isinstance(v, np.ndarray):
        _emit(v.tolist(), out)
    elif isinstance(v, (list, tuple)):
        out.append("[")
        for i, x in enumerate(v):
            if i:
                out.append(", ")
            _emit(x, out)
        out.append("]")
    elif isinstance(v, (bool, np.bool_)):
        out.append("true" if v else "false")
    elif isinstance(v, (int, np.integer)):
        out.append(str(int(v)))
    elif isinstance(v, (float, np.floating)):
        f = float(v)
        if not math.isfinite(f):
            raise ValueError("refusing to serialise a non-finite number")
        out.append("%.17g" % f)
    elif isinstance(v, str):
        out.append(json.dumps(v))
    else:
        raise TypeError(f"cannot serialise {type(v).__name__}")


def _complex_matrix_doc(u: np.ndarray) -> list:
    """Complex matrix as nested [re, im] pairs."""
    return [[[z.real, z.imag] for z in row] for row in u.tolist()]


# ---------------------------------------------------------------------------
# input parsing


def _reject_constant(s: str):
    raise DocumentError(f"non-finite literal {s} is not allowed")


def _loads(text: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise DocumentError(f"line {e.lineno} column {e.colno}: {e.msg}") from None


def _as_number(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise DocumentError(f"{where}: expected a number, got {json.dumps(x) if x is None or isinstance(x, (str, bool)) else type(x).__name__}")
    return float(x)


def _as_square_matrix(x, n: int, where: str) -> np.ndarray:
    if not isinstance(x, list) or len(x) != n:
        raise DocumentError(f"{where}: expected {n} rows")
    rows = []
    for i, row in enumerate(x):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"{where}: row {i} must hold exactly {n} numbers")
        rows.append([_as_number(v, f"{where}[{i}][{j}]") for j, v in enumerate(row)])
    return np.array(rows, dtype=float)


def _as_coeff_object(x, keys: tuple[str, ...], where: str) -> dict[str, float]:
    if not isinstance(x, dict):
        raise DocumentError(f"{where}: expected an object with keys {list(keys)}")
    missing = [k for k in keys if k not in x]
    unknown = [k for k in sorted(x) if k not in keys]
    if missing or unknown:
        raise DocumentError(
            f"{where}: coefficient keys must be exactly {list(keys)}"
            + (f"; missing {missing}" if missing else "")
            + (f"; unknown {unknown}" if unknown else "")
        )
    return {k: _as_number(x[k], f"{where}.{k}") for k in keys}


def parse_matrix_document(text: str, allowed: tuple[str, ...]):
    """Parse one input document, returning (kind, value).

    value is a SkewSo4, a SkewSo3 or a plain 4x4 ndarray depending on the
    representation key.  Unknown keys and multi-key documents are rejected.
    """
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise DocumentError("top-level value must be a JSON object")
    keys = sorted(doc)
    unknown = [k for k in keys if k not in _REPRESENTATIONS]
    if unknown:
        raise DocumentError(
            f"unknown key(s) {unknown}; a matrix document holds exactly one of {list(_REPRESENTATIONS)}"
        )
    if len(keys) != 1:
        raise DocumentError(
            f"expected exactly one of {list(_REPRESENTATIONS)}, got {keys or 'an empty object'}"
        )
    kind = keys[0]
    if kind not in allowed:
        raise DocumentError(f"representation {kind!r} is not accepted by this command (allowed: {sorted(allowed)})")
    value = doc[kind]
    if kind == "so4_coeffs":
        c = _as_coeff_object(value, _SO4_COEFF_KEYS, "so4_coeffs")
        return kind, SkewSo4(**c)
    if kind == "so4_matrix":
        m = _as_square_matrix(value, 4, "so4_matrix")
        try:
            return kind, SkewSo4.from_matrix(m, tol=1e-12)
        except ValueError as e:
            raise DocumentError(f"so4_matrix: {e}") from None
    if kind == "so3_coeffs":
        c = _as_coeff_object(value, _SO3_COEFF_KEYS, "so3_coeffs")
        return kind, SkewSo3(**c)
    return kind, _as_square_matrix(value, 4, "mat4")


def load_square_input(text: str, sizes: tuple[int, ...]) -> np.ndarray:
    """Read a matrix for check/log: a mat4 document or a piped result document."""
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise DocumentError("top-level value must be a JSON object")
    if "result" in doc:
        payload, where = doc["result"], "result"
    elif "mat4" in doc:
        unknown = [k for k in sorted(doc) if k != "mat4"]
        if unknown:
            raise DocumentError(f"unknown key(s) {unknown} next to mat4")
        payload, where = doc["mat4"], "mat4"
    else:
        raise DocumentError('expected a document with a "mat4" or "result" key')
    if not isinstance(payload, list) or len(payload) not in sizes:
        raise DocumentError(f"{where}: expected a square matrix of size {' or '.join(map(str, sizes))}")
    return _as_square_matrix(payload, len(payload), where)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror or e}") from None


# ---------------------------------------------------------------------------
# deterministic sampling


class Xorshift64Star:
    """xorshift64* generator; deterministic across platforms and runs.

    Uniform doubles take the top 53 bits of each 64-bit output.  A zero seed
    would freeze the xorshift recurrence, so it maps to a fixed nonzero
    constant instead.
    """

    _MULT = 0x2545F4914F6CDD1D
    _ZERO_SEED = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self._state = (seed & _MASK64) or self._ZERO_SEED

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * self._MULT) & _MASK64

    def uniform(self, lo: float, hi: float) -> float:
        u = (self.next_u64() >> 11) * 2.0 ** -53
        return lo + (hi - lo) * u

    def skew_so4(self, half_range: float) -> SkewSo4:
        """Coefficients drawn uniformly from [-half_range, half_range], f12 first."""
        return SkewSo4(*(self.uniform(-half_range, half_range) for _ in range(6)))


# ---------------------------------------------------------------------------
# subcommands


def _residuals_doc(X: np.ndarray) -> dict:
    chk = is_special_orthogonal(X)
    return {
        "orthogonality": max(chk.left_residual, chk.right_residual),
        "determinant": chk.det_residual,
    }


def _extract_embedded_block(X4: np.ndarray) -> np.ndarray:
    leak = max(
        float(np.max(np.abs(X4[3, :3]))),
        float(np.max(np.abs(X4[:3, 3]))),
        abs(float(X4[3, 3]) - 1.0),
    )
    if leak > 1e-10:
        raise EmbeddingLeak(f"embedded exponential leaked {leak:.3e} outside the 3x3 block")
    return X4[:3, :3].copy()


def cmd_exp(args) -> int:
    kind, value = parse_matrix_document(
        _read_input(args.input), allowed=("so4_coeffs", "so4_matrix", "so3_coeffs")
    )
    t0 = time.perf_counter_ns()
    if isinstance(value, SkewSo3):
        if args.method == "closed":
            X = exp_so3(value)
        elif args.method == "kron":
            A = SkewSo4(f12=value.a, f13=value.c, f23=value.b)
            X = _extract_embedded_block(exp_so4_via_kron(A))
        else:
            X = taylor_exp(value.matrix())
    else:
        if args.method == "closed":
            X = exp_so4_closed(value)
        elif args.method == "kron":
            X = exp_so4_via_kron(value)
        else:
            X = taylor_exp(value.matrix())
    elapsed = time.perf_counter_ns() - t0
    doc = {
        "result": X,
        "residuals": _residuals_doc(X),
        "method": args.method,
        "elapsed_ns": elapsed,
    }
    print(dumps_canonical(doc))
    return 0


def cmd_decompose(args) -> int:
    _, A = parse_matrix_document(
        _read_input(args.input), allowed=("so4_coeffs", "so4_matrix")
    )
    t0 = time.perf_counter_ns()
    pair = su2_pair_from_so4(A)
    decomposition = {
        "a": list(pair.a),
        "b": list(pair.b),
        "norm_a": pair.a.norm(),
        "norm_b": pair.b.norm(),
    }
    if args.with_factors:
        decomposition["exp_ia"] = _complex_matrix_doc(exp_su2(pair.a))
        decomposition["exp_ib"] = _complex_matrix_doc(exp_su2(pair.b))
    elapsed = time.perf_counter_ns() - t0
    doc = {"decomposition": decomposition, "method": "split", "elapsed_ns": elapsed}
    print(dumps_canonical(doc))
    return 0


def cmd_check(args) -> int:
    M = load_square_input(_read_input(args.input), sizes=(3, 4))
    chk = is_special_orthogonal(M, tol=args.tol)
    doc = {
        "ok": chk.ok,
        "residuals": {
            "orthogonality": max(chk.left_residual, chk.right_residual),
            "determinant": chk.det_residual,
        },
        "tol": args.tol,
    }
    print(dumps_canonical(doc))
    return 0 if chk.ok else 1


def cmd_log(args) -> int:
    M = load_square_input(_read_input(args.input), sizes=(4,))
    t0 = time.perf_counter_ns()
    A = log_so4(M)
    roundtrip = float(np.max(np.abs(exp_so4_closed(A) - M)))
    elapsed = time.perf_counter_ns() - t0
    doc = {
        "so4_coeffs": dict(zip(_SO4_COEFF_KEYS, A.coeffs())),
        "roundtrip_residual": roundtrip,
        "method": "log",
        "elapsed_ns": elapsed,
    }
    print(dumps_canonical(doc))
    return 0


def cmd_bench(args) -> int:
    if args.n < 1:
        print("so4exp: --n must be at least 1", file=sys.stderr)
        return 2
    if args.range <= 0.0:
        print("so4exp: --range must be positive", file=sys.stderr)
        return 2
    rng = Xorshift64Star(args.seed)
    samples = [rng.skew_so4(args.range) for _ in range(args.n)]

    methods = (
        ("closed", exp_so4_closed),
        ("kron", exp_so4_via_kron),
        ("series", lambda A: taylor_exp(A.matrix())),
    )
    results = {}
    ns_per_op = {}
    for name, fn in methods:
        t0 = time.perf_counter_ns()
        out = [fn(A) for A in samples]
        ns_per_op[name] = (time.perf_counter_ns() - t0) // args.n
        results[name] = np.stack(out)

    deviation = 0.0
    names = [name for name, _ in methods]
    for i, x in enumerate(names):
        for y in names[i + 1:]:
            deviation = max(deviation, float(np.max(np.abs(results[x] - results[y]))))
    ok = deviation <= _DEVIATION_BOUND

    if args.json:
        doc = {
            "prng": "xorshift64star",
            "seed": args.seed,
            "n": args.n,
            "range": args.range,
            "ns_per_op": ns_per_op,
            "max_deviation": deviation,
            "ok": ok,
        }
        print(dumps_canonical(doc))
    else:
        print(f"prng: xorshift64star, seed {args.seed}")
        print(f"samples: {args.n}, coefficients uniform in [{-args.range:g}, {args.range:g}]")
        for name in names:
            print(f"{name}: {ns_per_op[name]} ns/op")
        if ns_per_op["closed"] > 0:
            print(f"series/closed speedup: {ns_per_op['series'] / ns_per_op['closed']:.1f}x")
        print(f"max cross-method deviation: {deviation:.3e} (bound {_DEVIATION_BOUND:g})")
    if not ok:
        print(
            f"so4exp: cross-method deviation {deviation:.3e} exceeds {_DEVIATION_BOUND:g}",
            file=sys.stderr,
        )
        return 1
    return 0


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="so4exp",
        description="Closed-form exponentials on so(4) and friends, over JSON documents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument(
            "--input",
            default="-",
            metavar="PATH",
            help="input document path, or - for stdin (default)",
        )

    p = sub.add_parser("exp", help="matrix exponential of an so(4) or so(3) element")
    p.add_argument(
        "--method",
        choices=("closed", "kron", "series"),
        default="closed",
        help="closed form (default), explicit Kronecker route, or Taylor series",
    )
    add_input(p)
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("decompose", help="split an so(4) element into its two su(2) halves")
    p.add_argument(
        "--with-factors",
        action="store_true",
        help="also emit the exponentials of both halves as complex 2x2 matrices",
    )
    add_input(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", help="test a matrix against the special orthogonality predicate")
    p.add_argument("--tol", type=float, default=1e-12, help="residual tolerance (default 1e-12)")
    add_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("log", help="principal logarithm of an SO(4) matrix")
    add_input(p)
    p.set_defaults(func=cmd_log)

    p = sub.add_parser("bench", help="time all exponential methods on a deterministic ensemble")
    p.add_argument("--n", type=int, default=1000, help="number of sample matrices (default 1000)")
    p.add_argument("--seed", type=int, default=42, help="PRNG seed (default 42)")
    p.add_argument(
        "--range",
        type=float,
        default=5.0,
        help="coefficients drawn uniformly from [-range, range] (default 5)",
    )
    p.add_argument("--json", action="store_true", help="emit the report as canonical JSON")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as e:
        print(f"so4exp: {e}", file=sys.stderr)
        return 2
    except (NotSpecialOrthogonal, NotAKroneckerProduct) as e:
        print(f"so4exp: {e}", file=sys.stderr)
        return 1
    except (NonRealResult, EmbeddingLeak) as e:
        print(f"so4exp: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
