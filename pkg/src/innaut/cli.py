"""Command line: ``innaut <command> ...``.  Exit 0 on success, 1 when a checked
property fails, 2 on usage or input errors."""
from __future__ import annotations

import argparse
import os
import sys

from . import gset as G
from . import io, tx, verify
from .conjugacy import centralizer, conjugacy_classes, conjugators
from .constructors import (
    catalog_lookup,
    full_transformation_monoid,
    rees_matrix,
    z2_rees_example,
)
from .inner import inn, inn_generators
from .partial_map import LimitExceeded, abstract_cayley, sorted_maps
from .semigroup import SemigroupError, adjoin_identity, green, idempotents, is_commutative, is_group


class UsageError(Exception):
    pass


# inputs ---------------------------------------------------------------------


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def load_semigroup(src: str):
    """A table file, or a catalog name (``clifford8``, ``leftzero:3``, ``rees:<file>``, ...)."""
    if os.path.isfile(src):
        text = _read(src)
        return io.parse_table(text), io.digest(text)
    if src.startswith("rees:"):
        spec = load_rees(src[5:])
        return rees_matrix(spec), io.digest(io.format_rees(spec))
    try:
        S = catalog_lookup(src)
    except KeyError:
        raise UsageError(f"{src!r} is neither a file nor a catalog name") from None
    return S, io.digest(io.format_table(S))


def load_rees(src: str):
    if os.path.isfile(src):
        return io.parse_rees(_read(src))
    if src == "z2":
        return z2_rees_example()
    raise UsageError(f"{src!r} is neither a rees spec file nor 'z2'")


def load_gset(src: str):
    if os.path.isfile(src):
        return io.parse_gset(_read(src))
    if src == "z2":
        return G.z2_example()
    base, _, arg = src.partition(":")
    if base == "trivial" and arg.isdigit() and int(arg) >= 1:
        return G.trivial_gset(int(arg))
    raise UsageError(f"{src!r} is neither a G-set file nor one of 'z2', 'trivial:k'")


def _labels(S):
    return adjoin_identity(S).label


def _plabel(P, lab):
    return " | ".join(" ".join(lab(x) for x in b) for b in P.blocks)


# commands -----------------------------------------------------------------


def cmd_validate(args):
    S, dig = load_semigroup(args.source)
    lab = _labels(S)
    return {
        "input": {"source": args.source, "digest": dig},
        "order": S.n,
        "identity": None if S.identity is None else lab(S.identity),
        "idempotents": [lab(e) for e in idempotents(S)],
        "commutative": is_commutative(S),
        "group": is_group(S),
    }, True


def cmd_green(args):
    S, dig = load_semigroup(args.source)
    lab = _labels(S)
    gd = green(S)
    return {
        "input": {"source": args.source, "digest": dig},
        "L": _plabel(gd.L, lab),
        "R": _plabel(gd.R, lab),
        "H": _plabel(gd.H, lab),
        "D": _plabel(gd.D, lab),
        "J": _plabel(gd.J, lab),
        "group_h_classes": [" ".join(lab(x) for x in b)
                            for b, f in zip(gd.H.blocks, gd.group_h_flags) if f],
    }, True


def cmd_conj(args):
    S, dig = load_semigroup(args.source)
    lab = _labels(S)
    classes = conjugacy_classes(S)
    witnesses = []
    for b in classes.blocks:
        a = b[0]
        for x in b[1:]:
            w = conjugators(S, a, x)
            witnesses.append(f"{lab(a)} ~ {lab(x)} via ({lab(w.g)}, {lab(w.h)})")
    return {
        "input": {"source": args.source, "digest": dig},
        "classes": [" ".join(lab(x) for x in b) for b in classes.blocks],
        "witnesses": witnesses,
        "idempotents": [lab(e) for e in idempotents(S)],
        "centralizers": {lab(a): " ".join(lab(x) for x in centralizer(S, a)) for a in range(S.n)},
    }, True


def cmd_inn(args):
    S, dig = load_semigroup(args.source)
    lab = _labels(S)
    gens = inn_generators(S)
    try:
        maps = sorted_maps(inn(S, limit=args.limit))
    except LimitExceeded as e:
        return {"input": {"source": args.source, "digest": dig}, "error": str(e)}, False
    report = {
        "input": {"source": args.source, "digest": dig},
        "generators": len(gens),
        "size": len(maps),
        "elements": [f.render(lab) for f in maps],
    }
    if args.export_cayley:
        T, els = abstract_cayley(maps)
        text = "".join(f"# {i}: {f.render(lab)}\n" for i, f in enumerate(els))
        text += io.format_table(T, labels=False)
        with open(args.export_cayley, "w") as fh:
            fh.write(text)
        report["exported"] = io.digest(text)
    return report, True


def cmd_tx_classify(args):
    n = _tx_size(args.n)
    S, codec = full_transformation_monoid(n)
    descs = {}
    for f, prov in inn_generators(S).items():
        g, h = prov[0]
        d = tx.descriptor(tx.tmul(codec.decode(g), codec.decode(h)))
        descs.setdefault((d.p.blocks, tuple(sorted(d.i))), d)
    ws = tx.enumerate_w(n)
    return {
        "n": n,
        "generators": len(inn_generators(S)),
        "descriptors": [str(d) for _, d in sorted(descs.items())],
        "w_elements": len(ws),
        "members": sum(1 for w in ws if tx.finite_membership(w, n)),
    }, True


def _tx_size(n):
    if not 1 <= n <= 4:
        raise UsageError("-n must be between 1 and 4")
    return n


def _suite(res: verify.SuiteResult, extra=None, timing=False):
    d = res.as_dict()
    if not timing:
        d.pop("seconds")
    if extra:
        d.update(extra)
    return d


def cmd_tx_verify(args):
    n = _tx_size(args.n)
    res = verify.verify_tx(n, full=args.full)
    return _suite(res, {"n": n, "full": args.full}, args.timing), res.ok


def cmd_gset_inn(args):
    gs = load_gset(args.source)
    E = G.end_g(gs)
    S = E.semigroup
    gens = inn_generators(S)
    emb = verify.gset_embedding(gs, E, keep=True)
    return {
        "input": {"source": args.source, "digest": io.digest(io.format_gset(gs))},
        "end_g": len(E.maps),
        "generators": len(gens),
        "inn_size": len(inn(S)),
        "valid_standard_pairs": [str(sp) for sp in G.valid_standard_pairs(gs)],
        "embedded": sorted(str(w) for w in emb.info["elements"]),
    }, True


def cmd_gset_verify(args):
    gs = load_gset(args.source)
    res = verify.verify_gset(gs)
    return _suite(res, {"input": {"source": args.source, "digest": io.digest(io.format_gset(gs))}},
                  args.timing), res.ok


def cmd_rees_verify(args):
    spec = load_rees(args.source)
    res = verify.verify_rees(spec)
    return _suite(res, {"input": {"source": args.source, "digest": io.digest(io.format_rees(spec))}},
                  args.timing), res.ok


def cmd_verify_all(args):
    from .corpus import corpus

    suites = {}
    sem = corpus(max_order=args.max_order, with_order5=args.max_order >= 5)
    suites["corpus"] = verify.verify_corpus(sem)
    suites["rees"] = verify.verify_rees(z2_rees_example())
    for n in range(1, 4):
        suites[f"tx{n}"] = verify.verify_tx(n)
        suites[f"trivial_collapse{n}"] = verify.verify_trivial_collapse(n)
    suites["gset_z2"] = verify.verify_gset(G.z2_example())
    ok = all(s.ok for s in suites.values())
    return {
        "max_order": args.max_order,
        "ok": ok,
        "suites": {k: _suite(v, timing=args.timing) for k, v in suites.items()},
    }, ok


# parser -------------------------------------------------------------------


def build_parser():
    # --format/--timing are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include wall-clock seconds (not reproducible)")
    p = argparse.ArgumentParser(prog="innaut", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(group, name, fn=None):
        q = group.add_parser(name, parents=[common])
        if fn is not None:
            q.set_defaults(fn=fn)
        return q

    def group(name):
        return sub.add_parser(name).add_subparsers(dest=f"{name}_command", required=True)

    for name, fn in (("validate", cmd_validate), ("green", cmd_green), ("conj", cmd_conj)):
        cmd(sub, name, fn).add_argument("source")

    q = cmd(sub, "inn", cmd_inn)
    q.add_argument("source")
    q.add_argument("--limit", type=int, default=1_000_000)
    q.add_argument("--export-cayley", metavar="FILE")

    t = group("tx")
    cmd(t, "classify", cmd_tx_classify).add_argument("-n", type=int, required=True)
    q = cmd(t, "verify", cmd_tx_verify)
    q.add_argument("-n", type=int, required=True)
    q.add_argument("--full", action="store_true", help="n = 4: also close Inn(T(4)) and test membership")

    g = group("gset")
    cmd(g, "inn", cmd_gset_inn).add_argument("source")
    cmd(g, "verify", cmd_gset_verify).add_argument("source")

    cmd(group("rees"), "verify", cmd_rees_verify).add_argument("source")

    cmd(group("verify"), "all", cmd_verify_all).add_argument("--max-order", type=int, default=4)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout.buffer
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args.format = getattr(args, "format", "text")
    args.timing = getattr(args, "timing", False)
    echo = " ".join(argv if argv is not None else sys.argv[1:])
    try:
        report, ok = args.fn(args)
    except (UsageError, io.ParseError, SemigroupError, G.GSetError, ValueError) as e:
        sys.stderr.write(f"innaut: error: {e}\n")
        return 2
    report = {"command": echo, **report}
    out.write(io.emit(report, args.format))
    out.flush()
    return 0 if ok else 1


def main():
    sys.exit(run())
