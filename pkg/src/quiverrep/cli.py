"""Command-line front end.

JSON-first reporting: every command assembles a plain dict (seed and
budget always echoed), renders it as text by default or as canonical
JSON with --json.  Exit codes: 0 success, 1 input error, 2 a verified
property was violated by the computation.
"""

import argparse
import json
import sys

from . import __version__
from .quiver import (Budget, Quiver, QuiverError, classify, invariant,
                     is_rooted, root_filtration, template)
from .basecat import BaseCatError, FgAbBase, NestedBase, VectBase
from .repcat import RepError, rep_from_json, rep_to_json
from .canonical import (InternalVerificationError, canonical_copresentation,
                        canonical_presentation)
from .homology import AtLeast, ext_rep, gldim_experiment, pd_rep
from .cotorsion import (CotorsionError, GroundPair, special_phi_precover,
                        special_psi_preenvelope, verify_pair_identities)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VIOLATION = 2

INVARIANTS = ("lmcn", "rmcn", "mcn", "lccn", "rccn", "ccn",
              "ltccn", "rtccn", "tccn", "lscn", "rscn", "alpha")


class InputError(Exception):
    pass


def parse_base_spec(spec):
    """q | fp:P | fgab | nested:<template>:<base>"""
    if spec == "q":
        return VectBase()
    if spec.startswith("fp:"):
        try:
            return VectBase(int(spec[3:]))
        except ValueError:
            raise InputError("bad prime in base spec %r" % spec)
    if spec == "fgab":
        return FgAbBase()
    if spec.startswith("nested:"):
        rest = spec[len("nested:"):]
        tname, _, inner = rest.partition(":")
        if not inner:
            raise InputError("nested base spec needs nested:<template>:<base>")
        try:
            return NestedBase(template(tname), parse_base_spec(inner))
        except (QuiverError, BaseCatError) as exc:
            raise InputError(str(exc))
    raise InputError("unknown base spec %r" % spec)


def load_quiver(args):
    if args.template:
        try:
            return template(args.template)
        except QuiverError as exc:
            raise InputError(str(exc))
    if args.quiver:
        try:
            with open(args.quiver) as fh:
                return Quiver.from_json(json.load(fh))
        except (OSError, ValueError, KeyError, QuiverError) as exc:
            raise InputError("cannot load quiver: %s" % exc)
    raise InputError("one of --template/--quiver is required")


def load_rep(path, quiver, base):
    try:
        with open(path) as fh:
            doc = json.load(fh)
        return rep_from_json(quiver, base, doc)
    except (OSError, ValueError, KeyError, RepError, BaseCatError) as exc:
        raise InputError("cannot load representation %r: %s" % (path, exc))


def _stamp(report, args):
    report["seed"] = args.seed
    report["budget"] = args.budget
    report["version"] = __version__
    return report


def _render(report, as_json, out):
    if as_json:
        out.write(json.dumps(report, sort_keys=True, indent=2,
                             default=str) + "\n")
        return
    for key in sorted(report):
        out.write("%s: %s\n" % (key, json.dumps(report[key], sort_keys=True,
                                                default=str)))


# ---------------------------------------------------------------------
# commands


def cmd_classify(args, out):
    q = load_quiver(args)
    flags = {k: v.to_json() for k, v in classify(q, args.budget).items()}
    invs = {}
    for name in INVARIANTS:
        invs[name] = invariant(q, name, args.budget).to_json()
    report = _stamp({"quiver": q.name, "flags": flags,
                     "invariants": invs}, args)
    if q.is_explicit:
        report["root_filtration"] = {
            side: {
                "strata": [sorted(map(str, s)) for s in
                           root_filtration(q, side).strata],
                "covers_all": root_filtration(q, side).covers_all,
            }
            for side in ("left", "right")
        }
    else:
        report["rooted"] = {side: is_rooted(q, side, args.budget).to_json()
                            for side in ("left", "right")}
    _render(report, args.json, out)
    return EXIT_OK


def _seq_dims(rep):
    base = rep.base
    return {str(v): base.obj_to_json(rep.obj_at(v))
            for v in sorted(rep.support(), key=str)}


def cmd_present(args, out):
    q = load_quiver(args)
    base = parse_base_spec(args.base)
    f = load_rep(args.rep, q, base)
    pres = canonical_presentation(f, args.budget)
    copres = canonical_copresentation(f, args.budget)
    report = _stamp({
        "presentation": {"P1": _seq_dims(pres.p1), "P0": _seq_dims(pres.p0),
                         "verified": True},
        "copresentation": {"I0": _seq_dims(copres.i0),
                           "I1": _seq_dims(copres.i1), "verified": True},
    }, args)
    _render(report, args.json, out)
    return EXIT_OK


def cmd_ext(args, out):
    q = load_quiver(args)
    base = parse_base_spec(args.base)
    f = load_rep(args.F, q, base)
    g = load_rep(args.G, q, base)
    ext = ext_rep(f, g, args.n, args.budget)
    report = _stamp({"n": args.n, "ext": ext.summary()}, args)
    _render(report, args.json, out)
    if not args.json:
        s = ext.summary()
        if s["kind"] == "vector-space":
            out.write("dim = %d\n" % s["dim"])
    return EXIT_OK


def cmd_pd(args, out):
    q = load_quiver(args)
    base = parse_base_spec(args.base)
    f = load_rep(args.rep, q, base)
    pd = pd_rep(f, budget=args.budget)
    val = {"at_least": pd.n} if isinstance(pd, AtLeast) else pd
    report = _stamp({"pd": val}, args)
    _render(report, args.json, out)
    return EXIT_OK


def cmd_gldim(args, out):
    q = load_quiver(args)
    base = parse_base_spec(args.base)
    rep = gldim_experiment(q, base, args.samples, args.dims, args.seed,
                           args.budget)
    report = _stamp(rep, args)
    _render(report, args.json, out)
    if not args.json:
        out.write("bound %d, witness pd %d, max observed %d\n"
                  % (rep["bound"], rep["witness"]["pd"],
                     rep["max_pd_observed"]))
    return EXIT_OK


def cmd_cotorsion(args, out):
    q = load_quiver(args)
    base = parse_base_spec(args.base)
    try:
        ground = {"proj-all": GroundPair.proj_all,
                  "all-inj": GroundPair.all_inj}[args.ground](base)
    except KeyError:
        raise InputError("unknown ground pair %r" % args.ground)
    except CotorsionError as exc:
        raise InputError(str(exc))
    rep = verify_pair_identities(q, ground,
                                 {"samples": args.samples,
                                  "max_dim": args.dims},
                                 args.seed, args.budget)
    report = _stamp(rep, args)
    _render(report, args.json, out)
    if rep["violations"]:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_approx(args, out):
    q = load_quiver(args)
    base = parse_base_spec(args.base)
    f = load_rep(args.rep, q, base)
    if args.side == "phi":
        ap = special_phi_precover(f, args.budget)
        terms = {"K": _seq_dims(ap.seq.mors[0].src),
                 "P0": _seq_dims(ap.seq.mors[0].tgt)}
    elif args.side == "psi":
        ap = special_psi_preenvelope(f, args.budget)
        terms = {"I0": _seq_dims(ap.seq.mors[1].src),
                 "C": _seq_dims(ap.seq.mors[1].tgt)}
    else:
        raise InputError("side must be phi or psi")
    report = _stamp({"form": ap.form, "terms": terms, "exact": True,
                     "certificates": ap.certificates}, args)
    _render(report, args.json, out)
    return EXIT_OK


# ---------------------------------------------------------------------
# argument parsing


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quiverrep",
        description="Computations in categories of quiver representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--quiver", help="path to a quiver JSON file")
        p.add_argument("--template", help="built-in quiver template name")
        p.add_argument("--base", default="q",
                       help="q | fp:P | fgab | nested:<template>:<base>")
        p.add_argument("--budget", type=int, default=10000)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=100)
        p.add_argument("--dims", type=int, default=3,
                       help="dimension bound for sampling")
        p.add_argument("--json", action="store_true",
                       help="emit a JSON report")

    p = sub.add_parser("classify", help="structural flags and invariants")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("present", help="canonical (co)presentations")
    common(p)
    p.add_argument("--rep", required=True)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("ext", help="Ext^n(F, G)")
    common(p)
    p.add_argument("--F", required=True)
    p.add_argument("--G", required=True)
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("pd", help="projective dimension")
    common(p)
    p.add_argument("--rep", required=True)
    p.set_defaults(func=cmd_pd)

    p = sub.add_parser("gldim", help="global dimension experiment")
    common(p)
    p.set_defaults(func=cmd_gldim)

    p = sub.add_parser("cotorsion", help="cotorsion pair identity checks")
    common(p)
    p.add_argument("--ground", default="proj-all",
                   choices=["proj-all", "all-inj"])
    p.set_defaults(func=cmd_cotorsion)

    p = sub.add_parser("approx", help="special approximation sequences")
    common(p)
    p.add_argument("--rep", required=True)
    p.add_argument("--side", default="phi", choices=["phi", "psi"])
    p.set_defaults(func=cmd_approx)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT_ERROR
    except (QuiverError, BaseCatError, RepError, CotorsionError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT_ERROR
    except InternalVerificationError as exc:
        sys.stderr.write("verified-property violation: %s\n" % exc)
        return EXIT_VIOLATION


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
