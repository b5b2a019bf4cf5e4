"""dvdbinom command line.

Exit status: 0 on success or a passing verification, 1 when a verification
fails, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import __version__
from .basis import class_triangle, fn_eval_exact, fn_residue, verify_lucas
from .dvd_core import DvdModel, digits_of, make_model, verify_vwdwo
from .errors import DvdError
from .genpoly import (
    digit_stats,
    eps_counts,
    gen_poly,
    theorem_rhs,
    verify_counts_range,
    verify_homomorphism_random,
    verify_main_theorem_range,
)
from .report import VerificationReport
from .words import verify_bijection_random


def _int_list(s: str) -> list[int]:
    return [int(c) for c in s.split(",") if c.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dvdbinom",
        description="Generalized binomial coefficients in discrete valuation domains.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--model", choices=["zp", "fqt"], default="zp",
                    help="zp: Z localized at p; fqt: F_q[t] localized at t")
    ap.add_argument("--p", type=int, default=3, help="residue characteristic")
    ap.add_argument("--d", type=int, default=1, help="residue field degree (fqt only)")
    ap.add_argument("--modulus", type=_int_list, default=None,
                    help="monic modulus for F_{p^d}, low coefficient first, e.g. 1,1,1")
    reps = ap.add_mutually_exclusive_group()
    reps.add_argument("--reps", default=None,
                      help="explicit comma-separated representatives, r_0 = 0 first")
    reps.add_argument("--reps-seed", type=int, default=None,
                      help="randomize representatives with this 64-bit seed")
    ap.add_argument("--root", type=int, default=None, help="primitive root override (code)")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("-o", "--output", default=None, help="write output to a file")

    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("info", help="describe the field and model")
    p = sub.add_parser("un", help="the element u_n")
    p.add_argument("n", type=int)
    p = sub.add_parser("coeff", help="F_n(u_m) mod m, and its exact value")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--oracle", action="store_true",
                   help="check the digit product against the exact value")
    p = sub.add_parser("expand", help="pi-adic digit labels of an element")
    p.add_argument("elem")
    p.add_argument("--depth", type=int, required=True)
    p = sub.add_parser("triangle", help="residue classes of F_m(u_n), 0 <= m <= n <= N")
    p.add_argument("N", type=int)
    p.add_argument("--format", choices=["csv", "pgm", "text"], default="csv")
    p = sub.add_parser("dist", help="residue-class counts eps_j(n)")
    p.add_argument("n", type=int)
    p = sub.add_parser("genpoly", help="generating polynomial G_n and its product form")
    p.add_argument("n", type=int)

    v = sub.add_parser("verify", help="batch verification").add_subparsers(
        dest="check", required=True)
    p = v.add_parser("lucas", help="digit product vs exact oracle")
    p.add_argument("--max", type=int, default=100)
    p = v.add_parser("gw", help="product formula for G_n")
    p.add_argument("--max", type=int, default=500)
    p = v.add_parser("bijection", help="psi bijection on random word pairs")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-deg", type=int, default=3)
    p = v.add_parser("vwdwo", help="v(u_n - u_m) against q-adic divisibility")
    p.add_argument("--max", type=int, default=200)
    p.add_argument("--depth", type=int, default=3)
    p = v.add_parser("homomorphism", help="Gamma(a b) = Gamma(a) Gamma(b) on random words")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-deg", type=int, default=3)
    p = v.add_parser("counts", help="count conservation and convolution agreement")
    p.add_argument("--max", type=int, default=1000)
    return ap


def model_from_args(args) -> DvdModel:
    if args.model == "zp" and args.d != 1:
        raise DvdError("the zp model requires --d 1")
    reps = None
    if args.reps is not None:
        items = [s.strip() for s in args.reps.split(",")]
        reps = [int(s) for s in items] if args.model == "zp" else items
    return make_model(args.model, args.p, args.d, args.modulus, reps=reps,
                      seed=args.reps_seed, primitive_root=args.root)


def pgm_bytes(tri, q: int) -> bytes:
    """Binary P5 image: zero residues black, class j grey, above-diagonal white."""
    n = tri.shape[0]
    buf = bytearray(f"P5\n{n} {n}\n255\n".encode())
    shade = [(510 * (j + 1) + q) // (2 * q) for j in range(q - 1)]
    for row in range(n):
        for col in range(n):
            c = tri[row, col]
            if col > row:
                buf.append(255)
            elif c < 0:
                buf.append(0)
            else:
                buf.append(shade[c])
    return bytes(buf)


class _Out:
    def __init__(self, args):
        self.args = args
        self.text = io.StringIO()

    def emit(self, obj, text: str):
        if self.args.json:
            self.text.write(json.dumps(obj) + "\n")
        else:
            self.text.write(text.rstrip("\n") + "\n")

    def flush(self):
        data = self.text.getvalue()
        if self.args.output:
            with open(self.args.output, "w") as fh:
                fh.write(data)
        else:
            sys.stdout.write(data)


def _report(out: _Out, rep: VerificationReport) -> int:
    status = "PASS" if rep.ok else "FAIL"
    line = f"verify {rep.name}: {status} ({rep.checked} checks)"
    if not rep.ok:
        line += f"\ncounterexample: {json.dumps(rep.counterexample)}"
    out.emit(rep.to_dict(), line)
    return 0 if rep.ok else 1


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        M = model_from_args(args)
        return _dispatch(args, M)
    except (DvdError, ValueError) as exc:
        print(f"dvdbinom: error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, M: DvdModel) -> int:
    out = _Out(args)
    F = M.field
    cmd = args.command
    code = 0
    if cmd == "info":
        info = M.to_dict()
        out.emit(info, "\n".join([
            f"model: {M.kind}",
            f"field: F_{F.q} (p={F.p}, d={F.d}, modulus={list(F.modulus)})",
            f"primitive root: {F.primitive_root}",
            f"representatives: {', '.join(info['reps'])}"]))
    elif cmd == "un":
        u = M.u(args.n)
        digits = digits_of(args.n, M.q)
        out.emit({"n": args.n, "u": str(u), "digits": digits},
                 f"u_{args.n} = {u}  (digits {digits})")
    elif cmd == "coeff":
        res = fn_residue(args.n, args.m, M)
        exact = fn_eval_exact(args.n, M.u(args.m), M)
        cls = None if res == 0 else F.dlog(res)
        obj = {"n": args.n, "m": args.m, "residue": res, "class": cls, "exact": str(exact)}
        lines = [f"F_{args.n}(u_{args.m}) = {exact}",
                 f"residue: {res}" + ("" if cls is None else f" = root^{cls}")]
        if args.oracle:
            agree = exact.residue() == res
            obj["oracle_agrees"] = agree
            lines.append(f"oracle: {'agrees' if agree else 'DISAGREES'}")
            code = 0 if agree else 1
        out.emit(obj, "\n".join(lines))
    elif cmd == "expand":
        x = M.parse(args.elem)
        labels = M.expand(x, args.depth)
        out.emit({"elem": str(x), "depth": args.depth, "digits": labels},
                 ",".join(map(str, labels)))
    elif cmd == "triangle":
        tri = class_triangle(args.N, M)
        if args.format == "pgm":
            data = pgm_bytes(tri, M.q)
            if args.output:
                with open(args.output, "wb") as fh:
                    fh.write(data)
            else:
                sys.stdout.buffer.write(data)
            return 0
        if args.json:
            rows = [tri[n, : n + 1].tolist() for n in range(args.N + 1)]
            out.emit({"N": args.N, "q": M.q, "rows": rows}, "")
        elif args.format == "csv":
            lines = ["n,m,class"]
            for n in range(args.N + 1):
                lines.extend(f"{n},{m},{tri[n, m]}" for m in range(n + 1))
            out.emit(None, "\n".join(lines))
        else:
            out.emit(None, "\n".join(
                " ".join("." if c < 0 else str(c) for c in tri[n, : n + 1])
                for n in range(args.N + 1)))
    elif cmd == "dist":
        bf = eps_counts(args.n, M, "bruteforce")
        cv = eps_counts(args.n, M, "convolution")
        obj = bf.to_dict()
        obj["methods_agree"] = bf == cv
        out.emit(obj, f"n={args.n} eps={list(bf.eps)} zero={bf.zero_count}"
                 + ("" if bf == cv else "  (convolution DISAGREES)"))
        code = 0 if bf == cv else 1
    elif cmd == "genpoly":
        g, rhs = gen_poly(args.n, M), theorem_rhs(args.n, M)
        obj = {"n": args.n, "genpoly": g.to_dict(), "product": rhs.to_dict(),
               "digit_stats": list(digit_stats(args.n, M.q).e), "equal": g == rhs}
        out.emit(obj, f"G_{args.n}(x) = {g}\nproduct form: {rhs}")
        code = 0 if g == rhs else 1
    elif cmd == "verify":
        check = args.check
        if check == "lucas":
            rep = verify_lucas(M, args.max)
        elif check == "gw":
            rep = verify_main_theorem_range(args.max, M)
        elif check == "bijection":
            rep = verify_bijection_random(M, args.trials, args.seed, args.max_deg)
        elif check == "vwdwo":
            rep = verify_vwdwo(M, args.max, args.depth)
        elif check == "homomorphism":
            rep = verify_homomorphism_random(M, args.trials, args.seed, args.max_deg)
        else:
            rep = verify_counts_range(args.max, M)
        code = _report(out, rep)
    out.flush()
    return code


def main(argv=None):
    sys.exit(run(argv))
