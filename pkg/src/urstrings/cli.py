"""Command-line front end: ``urstrings <verb> ...``.

Exit status is 0 on success, 2 when an argument does not parse and 3 when
the input parses but the operation is undefined on it (for example a
non-Euclidean division). ``--json`` switches every verb to structured
records, one JSON object per line.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import axiomlab as lab
from . import beta as bt
from . import dyadic as dy
from . import markov as mk
from . import tcstrings as tcs
from .errors import DomainError, ParseError
from .rings import ModelId, coerce, parse_matrix, parse_poly, render_poly

MODEL_ENV = "URSTRINGS_MODEL"


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, record: dict):
        print(json.dumps(record, ensure_ascii=False, default=str) if self.as_json else text)


def _nat(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise ParseError(0, "natural number", text) from None
    if n < 0:
        raise ParseError(0, "natural number", text)
    return n


def _word(text: str, letters: str = "ab") -> str:
    for i, ch in enumerate(text):
        if ch not in letters:
            raise ParseError(i, "one of " + ", ".join(letters), text)
    return text


def _model(args) -> ModelId:
    return ModelId.parse(args.model)


def _mat(args, text: str) -> mk.Mat2:
    return mk.Mat2(_model(args), *parse_matrix(text))


def _value(args, text: str):
    return coerce(_model(args), parse_poly(text))


def _show(v) -> str:
    return render_poly(v)


# -- dyadic and its ur-strings ---------------------------------------------------

def cmd_dyadic(args, out: _Out):
    op = args.op
    if op == "encode":
        n = dy.sm_encode(_word(args.word))
        out.emit(str(n), {"word": args.word, "code": n})
    elif op == "decode":
        w = dy.sm_decode(_nat(args.n))
        out.emit(w, {"code": int(args.n), "word": w})
    elif op == "concat":
        m, n = _nat(args.m), _nat(args.n)
        r = dy.dyad_concat(m, n)
        out.emit(str(r), {"m": m, "n": n, "concat": r})
    elif op == "ell":
        n = _nat(args.n)
        out.emit(str(dy.ell(n)), {"n": n, "ell": dy.ell(n), "tally": dy.lambda_tally(n)})
    elif op == "pair":
        x, y = _nat(args.x), _nat(args.y)
        p = dy.dyad_pair(x, y)
        out.emit(str(p), {"x": x, "y": y, "pair": p})
    elif op == "unpair":
        x, y = dy.dyad_unpair(_nat(args.p))
        out.emit(f"{x} {y}", {"p": int(args.p), "x": x, "y": y})


def cmd_urs_sm(args, out: _Out):
    if args.op == "encode":
        alpha = dy.urs_from_list(_nat(t) for t in args.values)
        out.emit(f"{alpha.mask} {alpha.payload}", {"mask": alpha.mask, "payload": alpha.payload})
        return
    alpha = dy.SmUrString(_nat(args.mask), _nat(args.payload))
    if args.op == "decode":
        xs = dy.urs_decode(alpha)
        out.emit(" ".join(map(str, xs)), {"values": xs})
    elif args.op == "pop":
        rest, x = dy.urs_pop(alpha)
        out.emit(f"{rest.mask} {rest.payload} {x}", {"rest": [rest.mask, rest.payload], "last": x})
    elif args.op == "frege":
        f = dy.urs_frege(alpha)
        out.emit(str(f), {"frege": f})


# -- beta -------------------------------------------------------------------------

def cmd_beta(args, out: _Out):
    op = args.op
    if op == "encode":
        s = bt.beta_encode([_nat(t) for t in args.values], args.modulus)
        out.emit(str(s.code), {"code": s.code, "length": len(args.values)})
    elif op == "decode":
        xs = bt.beta_decode(bt.BetaSeq(_nat(args.code)))
        out.emit(" ".join(map(str, xs)), {"values": xs})
    elif op == "get":
        x = bt.beta_get(_nat(args.w), _nat(args.i))
        out.emit(str(x), {"w": int(args.w), "i": int(args.i), "value": x})
    elif op == "append":
        s = bt.beta_append(bt.BetaSeq(_nat(args.code)), _nat(args.x), args.modulus)
        out.emit(str(s.code), {"code": s.code})
    elif op == "length":
        n = bt.beta_length(bt.BetaSeq(_nat(args.code)))
        out.emit(str(n), {"length": n})


# -- markov -----------------------------------------------------------------------

def cmd_markov(args, out: _Out):
    op = args.op
    model = _model(args)
    if op == "encode":
        m = mk.encode_string(model, _word(args.word))
        out.emit(str(m), {"model": model.cli_id, "matrix": str(m)})
    elif op == "decode":
        w = mk.decode_string(_mat(args, args.matrix), args.budget)
        out.emit(w, {"model": model.cli_id, "word": w})
    elif op == "nf":
        nf = mk.normal_form(_mat(args, args.matrix))
        out.emit(str(nf), {"model": model.cli_id, "normal_form": str(nf), "runs": nf.to_json()})
    elif op == "profile":
        prof = mk.profile(mk.normal_form(_mat(args, args.matrix)))
        text = " ".join(map(str, prof))
        out.emit(text, {"model": model.cli_id, "profile": [str(p) for p in prof]})
    elif op == "cut":
        nf = mk.normal_form(_mat(args, args.matrix).with_model(ModelId.M2))
        cut = mk.Cut(int(args.run), parse_poly(args.offset))
        prefix = mk.prefix_at_cut(nf, cut)
        target = ModelId.parse(args.within)
        inside = mk.cut_in_model(nf, cut, target)
        out.emit(
            f"{prefix} {'in' if inside else 'not in'} {target.cli_id}",
            {"prefix": str(prefix), "model": target.cli_id, "member": inside},
        )
    elif op == "norm":
        n = mk.ord_norm(_mat(args, args.matrix))
        out.emit(str(n), {"degree_part": n.degree_part, "finite_part": n.finite_part})
    elif op == "urs-encode":
        m = mk.urs_encode(model, [_value(args, t) for t in args.values])
        out.emit(str(m), {"model": model.cli_id, "matrix": str(m)})
    elif op == "urs-decode":
        xs = mk.urs_decode(_mat(args, args.matrix), args.budget)
        out.emit(" ".join(_show(x) for x in xs), {"model": model.cli_id, "values": [_show(x) for x in xs]})
    elif op == "bez":
        a, b, c, d = (coerce(model, v) for v in parse_matrix(args.matrix))
        rep = mk.bez_euc_check(model, a, b, c, d)
        text = (f"bezout={'yes' if rep.bezout else 'no'} euclidean(a,b)={'yes' if rep.euclidean_ab else 'no'} "
                f"euclidean(c,d)={'yes' if rep.euclidean_cd else 'no'}")
        out.emit(text, {"model": model.cli_id, **rep.to_json()})
    elif op == "editors":
        x, y, u, v = (_mat(args, t) for t in args.matrices)
        side, w = mk.editors_split(x, y, u, v)
        out.emit(f"{side.value} {w}", {"side": side.value, "witness": str(w)})


# -- partitions and the rewriting model ---------------------------------------------

def cmd_tc(args, out: _Out):
    base = _word(args.word, "abcdefghijklmnopqrstuvwxyz")
    alpha, beta = tcs.Partition.parse(args.parts1), tcs.Partition.parse(args.parts2)
    for p in (alpha, beta):
        if p.base != base:
            raise ParseError(0, f"a partition of {base!r}", str(p))
    if args.op == "refine":
        gamma, f, g = tcs.common_refinement(alpha, beta)
        out.emit(
            f"{gamma}\nf: {' '.join(map(str, f))}\ng: {' '.join(map(str, g))}",
            {"gamma": list(gamma.parts), "f": f, "g": g},
        )
    else:
        f = tcs.embed(alpha, beta)
        out.emit(" ".join(map(str, f)), {"map": f})


def cmd_srs(args, out: _Out):
    if args.op == "nf":
        w = tcs.srs_normalize(_word(args.word, "abc"))
        out.emit(w, {"word": args.word, "normal_form": w})
    elif args.op == "concat":
        w = tcs.srs_concat(_word(args.w1, "abc"), _word(args.w2, "abc"))
        out.emit(w, {"concat": w})
    elif args.op == "editors":
        x, y, u, v = (_word(t, "abc") for t in args.words)
        side, w = tcs.srs_editors_witness(x, y, u, v)
        out.emit(f"{side.value} {w}", {"side": side.value, "witness": w})


# -- axioms -------------------------------------------------------------------------

def cmd_axioms(args, out: _Out) -> int:
    cfg = lab.SampleConfig(seed=args.seed, count=args.count)
    if args.op == "check":
        rep = lab.check_axiom(args.target, lab.AxiomId.parse(args.axiom), cfg)
        out.emit(str(rep), rep.to_json())
        return 0
    summary = lab.run_suite(cfg)
    if out.as_json:
        for e in summary.entries:
            rec = e.report.to_json()
            rec["expected"] = None if e.expected is None else e.expected.value
            rec["agrees"] = e.agrees
            print(json.dumps(rec, ensure_ascii=False))
        for name, good in summary.registry:
            print(json.dumps({"registry": name, "verified": good}))
        print(json.dumps({"summary": summary.counts(), "mismatches": len(summary.mismatches)}))
    else:
        print("\n".join(summary.lines()))
    return summary.exit_code


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")

    p = argparse.ArgumentParser(prog="urstrings", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="verb", required=True)

    d = sub.add_parser("dyadic", parents=[common], help="length-first word codes")
    dsub = d.add_subparsers(dest="op", required=True)
    dsub.add_parser("encode", parents=[common]).add_argument("word")
    dsub.add_parser("decode", parents=[common]).add_argument("n")
    c = dsub.add_parser("concat", parents=[common])
    c.add_argument("m")
    c.add_argument("n")
    dsub.add_parser("ell", parents=[common]).add_argument("n")
    c = dsub.add_parser("pair", parents=[common])
    c.add_argument("x")
    c.add_argument("y")
    dsub.add_parser("unpair", parents=[common]).add_argument("p")
    d.set_defaults(func=cmd_dyadic)

    u = sub.add_parser("urs", parents=[common], help="ur-strings")
    usub = u.add_subparsers(dest="codec", required=True)
    sm = usub.add_parser("sm", parents=[common], help="dyadic ur-strings (mask, payload)")
    smsub = sm.add_subparsers(dest="op", required=True)
    smsub.add_parser("encode", parents=[common]).add_argument("values", nargs="*")
    for name in ("decode", "pop", "frege"):
        c = smsub.add_parser(name, parents=[common])
        c.add_argument("mask")
        c.add_argument("payload")
    sm.set_defaults(func=cmd_urs_sm)

    b = sub.add_parser("beta", parents=[common], help="beta-function sequence codes")
    bsub = b.add_subparsers(dest="op", required=True)
    c = bsub.add_parser("encode", parents=[common])
    c.add_argument("values", nargs="*")
    c.add_argument("--modulus", choices=("compact", "naive"), default="compact")
    bsub.add_parser("decode", parents=[common]).add_argument("code")
    bsub.add_parser("length", parents=[common]).add_argument("code")
    c = bsub.add_parser("get", parents=[common])
    c.add_argument("w")
    c.add_argument("i")
    c = bsub.add_parser("append", parents=[common])
    c.add_argument("code")
    c.add_argument("x")
    c.add_argument("--modulus", choices=("compact", "naive"), default="compact")
    b.set_defaults(func=cmd_beta)

    model_default = os.environ.get(MODEL_ENV, "nat")
    mparent = argparse.ArgumentParser(add_help=False, parents=[common])
    mparent.add_argument("--model", default=model_default,
                         help=f"nat, M0, M1, M2 or Qnn (default from ${MODEL_ENV}, else nat)")
    mparent.add_argument("--budget", type=int, default=100_000, help="decode step limit")
    m = sub.add_parser("markov", parents=[mparent], help="Markov matrix coding")
    msub = m.add_subparsers(dest="op", required=True)
    msub.add_parser("encode", parents=[mparent]).add_argument("word")
    for name in ("decode", "nf", "profile", "norm", "urs-decode", "bez"):
        msub.add_parser(name, parents=[mparent]).add_argument("matrix")
    c = msub.add_parser("cut", parents=[mparent], help="prefix of the M2 normal form at a run and offset")
    c.add_argument("matrix")
    c.add_argument("run")
    c.add_argument("offset")
    c.add_argument("--in", dest="within", default="M0", help="model to test the prefix against")
    msub.add_parser("urs-encode", parents=[mparent]).add_argument("values", nargs="*")
    msub.add_parser("editors", parents=[mparent]).add_argument("matrices", nargs=4)
    m.set_defaults(func=cmd_markov)

    t = sub.add_parser("tc", parents=[common], help="partitions of words")
    tsub = t.add_subparsers(dest="op", required=True)
    for name in ("refine", "embed"):
        c = tsub.add_parser(name, parents=[common])
        c.add_argument("word")
        c.add_argument("parts1")
        c.add_argument("parts2")
    t.set_defaults(func=cmd_tc)

    s = sub.add_parser("srs", parents=[common], help="the abc -> b rewriting model")
    ssub = s.add_subparsers(dest="op", required=True)
    ssub.add_parser("nf", parents=[common]).add_argument("word")
    c = ssub.add_parser("concat", parents=[common])
    c.add_argument("w1")
    c.add_argument("w2")
    ssub.add_parser("editors", parents=[common]).add_argument("words", nargs=4)
    s.set_defaults(func=cmd_srs)

    a = sub.add_parser("axioms", parents=[common], help="axiom harness")
    asub = a.add_subparsers(dest="op", required=True)
    c = asub.add_parser("check", parents=[common])
    c.add_argument("--target", required=True)
    c.add_argument("--axiom", required=True)
    for q in (c, asub.add_parser("suite", parents=[common])):
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--count", type=int, default=lab.SampleConfig().count)
    a.set_defaults(func=cmd_axioms)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(getattr(args, "json", False))
    func: Callable = args.func
    try:
        code = func(args, out)
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
