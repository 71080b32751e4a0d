"""Command line front end: ``expanso axioms|check|decide|construct|sft|suite``.

Exit codes: 0 for *yes* (or success), 1 for *no* (or suite failures),
2 for malformed input, violated preconditions and scale caps.
"""
import argparse
import json
import os
import sys
import time

from . import dynamics as dy
from . import sft as sh
from .constructions import duplicate, duplicated_cover
from .decision import decision_doc
from .errors import ExpansoError, InstanceError
from .instance import FiniteInstance, SftInstance, dumps, finite_doc, load_instance
from .pointset import mask, members
from .suite import run_suite
from .topology import closure, separation_axioms, t0_quotient


class Report(dict):
    """Ordered report; ``exit`` is the process exit code."""

    def __init__(self, command, exit=0, **fields):
        super().__init__(command=command, **fields)
        self.exit = exit


def parse_set(text):
    text = text.strip()
    if text.startswith("["):
        return mask(json.loads(text))
    if not text:
        return 0
    return mask(int(t) for t in text.split(","))


def _finite(path):
    inst = load_instance(path)
    if not isinstance(inst, FiniteInstance):
        raise InstanceError("expected a finite instance")
    return inst


def _shift(path):
    inst = load_instance(path)
    if not isinstance(inst, SftInstance):
        raise InstanceError("expected an sft instance")
    return inst


def _named(covers, name):
    if name not in covers:
        raise InstanceError(f"no cover named {name!r}; have {sorted(covers)}")
    return covers[name]


def cmd_axioms(args):
    inst = _finite(args.file)
    sp = inst.space
    ax = separation_axioms(sp)
    return Report("axioms", t0=ax.t0, t1=ax.t1, hausdorff=ax.hausdorff,
                  discrete=sp.is_discrete,
                  points=[{"point": p, "min_nbhd": members(m),
                           "closure": members(closure(sp, 1 << p))}
                          for p, m in enumerate(sp.min_nbhd)])


def cmd_check(args):
    inst = _finite(args.file)
    f = inst.homeo
    cover = _named(inst.covers, args.cover)
    target = None
    if args.mode == "orbit":
        d = dy.is_o_expansive_cover(f, cover)
    elif args.mode == "refinement":
        d = dy.is_r_expansive_cover(f, cover)
    else:
        if not args.target:
            raise InstanceError("--mode uniform needs --target")
        target = _named(inst.covers, args.target)
        d = dy.uniform_refinement_N(f, cover, target)
    rep = Report("check", exit=0 if d else 1, cover=args.cover, mode=args.mode,
                 **decision_doc(d))
    if target is not None:
        rep["target"] = args.target
    if d.verdict and args.mode != "orbit":
        rep["N"] = d.radius
    rep["certificate_verified"] = dy.verify(d, f, cover, target)
    return rep


def cmd_decide(args):
    inst = _finite(args.file)
    modes = ["orbit", "refinement"] if args.mode == "both" else [args.mode]
    out = {}
    ok = True
    for m in modes:
        d = (dy.decide_orbit_expansive if m == "orbit"
             else dy.decide_refinement_expansive)(inst.homeo)
        out[m] = decision_doc(d)
        ok &= d.verdict
    return Report("decide", exit=0 if ok else 1, decisions=out)


def cmd_construct(args):
    inst = _finite(args.file)
    sp, f = inst.space, inst.homeo
    if args.construction == "duplicate":
        dup = duplicate(sp, f, parse_set(args.k))
        doc = finite_doc(dup.space, dup.homeo,
                         {n: duplicated_cover(dup, c) for n, c in inst.covers.items()})
    elif args.construction == "quotient-t0":
        q = t0_quotient(sp, f)
        doc = finite_doc(q.space, q.homeo, {
            n: dy.Cover(q.space, tuple(q.image(u) for u in c))
            for n, c in inst.covers.items()})
    elif args.construction == "power":
        if args.r == 0:
            raise ExpansoError("power needs r != 0")
        doc = finite_doc(sp, f.power(args.r),
                         {n: dy.power_cover(f, c, args.r) for n, c in inst.covers.items()})
    else:
        res = dy.restrict(f, parse_set(args.carrier))
        doc = finite_doc(res.space, res.homeo,
                         {n: res.cover(c) for n, c in inst.covers.items()})
    rep = Report("construct", construction=args.construction, instance=doc)
    path = getattr(args, "output", None)
    if path:
        with open(path, "w") as fh:
            fh.write(dumps(doc) + "\n")
        rep["output"] = path
    return rep


def cmd_sft(args):
    inst = _shift(args.file)
    s = inst.sft
    if args.action == "check-cover":
        cover = _named(inst.covers, args.name)
        d = sh.is_o_expansive_symbol_cover(s, cover)
        rep = Report("sft", exit=0 if d else 1, action="check-cover", cover=args.name,
                     **decision_doc(d))
        if not d:
            rep["certificate_verified"] = sh.check_pair_witness(s, cover, d.certificate)
        return rep
    if args.action == "periodic":
        rep = Report("sft", action="periodic", n=args.n,
                     count=sh.periodic_count(s, args.n))
        if args.cover:
            cover = _named(inst.covers, args.cover)
            ok = sh.check_periodic_bound(s, cover, args.n)
            rep["bound"] = len(cover) ** args.n
            rep["within_bound"] = ok
            rep.exit = 0 if ok else 1
        return rep
    cover = _named(inst.covers, args.cover)
    fixed = args.fixed if args.fixed is not None else inst.fixed_symbol
    if fixed is None:
        raise InstanceError("no fixed symbol: pass --fixed or set fixed_symbol")
    d = sh.check_duplicated_shift_cover(s, fixed, cover, args.element)
    rep = Report("sft", exit=0 if d else 1, action="duplicated", cover=args.cover,
                 fixed_symbol=fixed, **decision_doc(d))
    if not d:
        c = d.certificate
        rep["certificate_verified"] = (
            sh.check_copy_pair_witness(s, fixed, cover, args.element, c)
            if isinstance(c, sh.CopyPairWitness) else sh.check_pair_witness(s, cover, c))
    return rep


def cmd_suite(args):
    jobs = args.jobs or int(os.environ.get("EXPANSO_JOBS", "1"))
    r = run_suite(args.max_points, args.seed, jobs)
    doc = r.as_dict()
    doc.pop("command")
    return Report("suite", exit=0 if r.ok else 1, **doc)


def _text(rep):
    lines = []
    for key, val in rep.items():
        if key == "instance":
            lines.append(f"instance: {dumps(val)}")
        elif key == "properties":
            lines.append("properties:")
            for name, t in val.items():
                mark = "ok  " if not t["failures"] else "FAIL"
                lines.append(f"  {mark} {name}: {t['checked']} checked, "
                             f"{t['failures']} failures")
        elif key in ("failures", "findings"):
            lines.append(f"{key}: {len(val)}")
            for f in val:
                lines.append(f"  {f['property']}: {f['detail']}")
                lines.append(f"    reproducer: {dumps(f['reproducer'])}")
        elif isinstance(val, (dict, list)):
            lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets the flag appear at any nesting level without being reset
    common.add_argument("--format", choices=["text", "machine"], default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="expanso", parents=[common],
                                description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("axioms", parents=[common], help="separation axioms and closures")
    a.add_argument("file")
    a.set_defaults(func=cmd_axioms)

    c = sub.add_parser("check", parents=[common], help="decide one cover")
    c.add_argument("file")
    c.add_argument("--cover", required=True)
    c.add_argument("--mode", choices=["orbit", "refinement", "uniform"], default="orbit")
    c.add_argument("--target")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("decide", parents=[common], help="existence of an expansive cover")
    d.add_argument("file")
    d.add_argument("--mode", choices=["orbit", "refinement", "both"], default="both")
    d.set_defaults(func=cmd_decide)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", default=argparse.SUPPRESS)
    k = sub.add_parser("construct", parents=[common, out], help="build a derived instance")
    k.add_argument("file")
    ks = k.add_subparsers(dest="construction", required=True)
    kd = ks.add_parser("duplicate", parents=[common, out])
    kd.add_argument("--k", required=True, help="closed invariant set, e.g. 0,1")
    ks.add_parser("quotient-t0", parents=[common, out])
    kp = ks.add_parser("power", parents=[common, out])
    kp.add_argument("--r", type=int, required=True)
    kc = ks.add_parser("subspace", parents=[common, out])
    kc.add_argument("--carrier", required=True)
    k.set_defaults(func=cmd_construct)

    s = sub.add_parser("sft", parents=[common], help="shift of finite type checks")
    s.add_argument("file")
    ss = s.add_subparsers(dest="action", required=True)
    sc = ss.add_parser("check-cover", parents=[common])
    sc.add_argument("name")
    sp = ss.add_parser("periodic", parents=[common])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cover")
    sd = ss.add_parser("duplicated", parents=[common])
    sd.add_argument("--cover", required=True)
    sd.add_argument("--fixed", type=int)
    sd.add_argument("--element", type=int)
    s.set_defaults(func=cmd_sft)

    u = sub.add_parser("suite", parents=[common], help="exhaustive property suite")
    u.add_argument("--max-points", type=int, default=3)
    u.add_argument("--seed", type=int, default=0)
    u.add_argument("--jobs", type=int, default=0)
    u.set_defaults(func=cmd_suite)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        rep = args.func(args)
    except (ExpansoError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    if getattr(args, "format", "text") == "machine":
        print(json.dumps(rep, sort_keys=True))
    else:
        print(_text(rep))
        print(f"time: {time.perf_counter() - start:.3f}s")
    return rep.exit


if __name__ == "__main__":
    sys.exit(main())
