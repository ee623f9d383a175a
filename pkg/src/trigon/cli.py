"""Command-line front end: ``trigon {eval,equal,index,verify,theorem,nielsen}``.

Exit codes: 0 success, 1 a negative answer (``equal``), 2 usage or parse
error, 3 a search or enumeration bound was hit, 4 a check or internal
invariant failed.
"""

import argparse
import json
import sys

from .catalog import CASE_IDS, CaseParams, default_params, verify_case, verify_theorem
from .coset import (EnumLimits, SubgroupSpec, free_product_presentation,
                    todd_coxeter, triangle_presentation)
from .errors import (CapExceeded, InternalInvariantError, InvalidParams,
                     NotFoundWithinBounds, ReportedFailure, TrigonError)
from .nielsen import (DEFAULT_MAX_STATES, DEFAULT_MAX_WORD_LEN, GenPair,
                      search_equivalence)
from .orbifold import reconstruct_cover, verify_riemann_hurwitz
from .tits import INFINITE, TriangleSignature, eval_word, group_new, order
from .words import parse_word, parse_word_list

OK, FALSE, USAGE, BOUNDS, FAILED = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _sig(text):
    try:
        return TriangleSignature.parse(text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError("bad signature %r (expected p1,p2,p3)" % text)


def _pair(text):
    words = parse_word_list(text)
    if len(words) != 2:
        raise argparse.ArgumentTypeError("expected two words separated by ';', got %r" % text)
    return tuple(words)


def build_parser():
    p = _Parser(prog="trigon", description="Exact computations in triangle groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, limits=False):
        sp.add_argument("--sig", required=True, type=_sig, help="signature p1,p2,p3")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if limits:
            sp.add_argument("--strategy", choices=("hlt", "felsch"), default="hlt")
            sp.add_argument("--max-cosets", type=int, default=None,
                            help="coset cap (default: $TRIGON_MAX_COSETS or 1000000)")

    sp = sub.add_parser("eval", help="order of a word and whether it is trivial")
    common(sp)
    sp.add_argument("word")

    sp = sub.add_parser("equal", help="do two words give the same element")
    common(sp)
    sp.add_argument("w1")
    sp.add_argument("w2")

    sp = sub.add_parser("index", help="index and cycle data of a subgroup")
    common(sp, limits=True)
    sp.add_argument("--base", choices=("full", "disk"), default="full",
                    help="full triangle group or <S1,S2 | S1^p1, S2^p2>")
    sp.add_argument("--sub", default="", help="subgroup generators separated by ';'")

    sp = sub.add_parser("verify", help="verify one catalog case")
    common(sp, limits=True)
    sp.add_argument("--case", required=True, choices=CASE_IDS)
    sp.add_argument("--nu", type=int)
    sp.add_argument("--nu-prime", type=int)
    sp.add_argument("--i1", type=int, default=1)
    sp.add_argument("--i2", type=int, default=2)
    sp.add_argument("--nu1", type=int, default=1)
    sp.add_argument("--nu2", type=int, default=1)
    sp.add_argument("--timing", action="store_true")

    sp = sub.add_parser("theorem", help="verify every case admissible for the signature")
    common(sp, limits=True)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--timing", action="store_true")

    sp = sub.add_parser("nielsen", help="search for a Nielsen certificate between two pairs")
    common(sp)
    sp.add_argument("pair1", type=_pair, help='"w1; w2"')
    sp.add_argument("pair2", type=_pair, help='"w1; w2"')
    sp.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    sp.add_argument("--max-word-len", type=int, default=DEFAULT_MAX_WORD_LEN)
    return p


def _limits(args):
    lim = EnumLimits.from_env(args.strategy)
    if args.max_cosets is not None:
        lim = EnumLimits(args.max_cosets, args.strategy)
    return lim


def _emit(args, data, text):
    if args.json:
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def cmd_eval(args):
    ctx = group_new(args.sig)
    w = parse_word(args.word)
    a = eval_word(ctx, w)
    k = order(ctx, a)
    data = {"command": "eval", "sig": list(args.sig), "word": str(w),
            "order": "infinite" if k == INFINITE else k, "identity": a.is_identity()}
    _emit(args, data, "word      %s\norder     %s\nidentity  %s"
          % (str(w) or "(empty)", data["order"], str(data["identity"]).lower()))
    return OK


def cmd_equal(args):
    ctx = group_new(args.sig)
    u, v = parse_word(args.w1), parse_word(args.w2)
    same = eval_word(ctx, u) == eval_word(ctx, v)
    data = {"command": "equal", "sig": list(args.sig), "words": [str(u), str(v)], "equal": same}
    _emit(args, data, "equal" if same else "not equal")
    return OK if same else FALSE


def cmd_index(args):
    sig = args.sig
    subgroup = parse_word_list(args.sub) if args.sub.strip() else []
    if args.base == "disk":
        pres, names = free_product_presentation(sig.p1, sig.p2), ("S1", "S2", "S1 S2")
    else:
        pres, names = triangle_presentation(sig), ("s1", "s2", "s3")
    symbol = "S" if args.base == "disk" else "s"
    table = todd_coxeter(pres, SubgroupSpec(subgroup), _limits(args))
    cycles = {n: sorted(len(c) for c in table.cycles(n)) for n in names}
    data = {"command": "index", "sig": list(sig), "base": args.base,
            "subgroup": [w.format(symbol) for w in subgroup], "index": table.size, "cycles": cycles}
    lines = ["index  %d" % table.size]
    lines += ["%-6s %s" % (n, " ".join(map(str, c))) for n, c in cycles.items()]
    if args.base == "disk":
        recon = reconstruct_cover(sig, table)
        data["cover"] = str(recon.cover)
        data["riemann_hurwitz"] = verify_riemann_hurwitz(recon)
        lines.append("cover  %s  (Riemann-Hurwitz %s)"
                     % (recon.cover, "ok" if data["riemann_hurwitz"] else "FAILS"))
    _emit(args, data, "\n".join(lines))
    return OK


def _report_text(r):
    c = r.computed
    lines = ["case %s  sig %s  pair (%s, %s)" % (r.case, r.params.sig, *r.pair)]
    if c["degree"] is not None:
        lines.append("  degree %d, cover %s, boundary degrees %s, exceptional %s, %s"
                     % (c["degree"], c["cover"], c["boundary_cycles"], c["exceptional_degrees"],
                        "special" if c["special"] else "NOT special"))
    if r.nielsen:
        lines.append("  reduces to (%s) by %s" % ("; ".join(r.nielsen["target"] or ["?"]),
                                                  r.nielsen["certificate"] or "nothing found"))
    lines.append("  checks: " + ", ".join("%s=%s" % (k, "ok" if v else "FAIL")
                                          for k, v in r.checks.items()))
    lines += ["  discrepancy: " + d for d in r.discrepancies]
    lines += ["  note: " + n for n in r.notes]
    if r.elapsed_ms is not None:
        lines.append("  %.1f ms" % r.elapsed_ms)
    return "\n".join(lines)


def cmd_verify(args):
    if args.case == "1":
        params = CaseParams(args.sig, i1=args.i1, i2=args.i2, nu1=args.nu1, nu2=args.nu2)
    else:
        d = default_params(args.case, args.sig)
        nu = args.nu if args.nu is not None else d.nu
        nup = args.nu_prime if args.nu_prime is not None else d.nu_prime
        params = CaseParams(args.sig, nu=nu, nu_prime=nup)
    r = verify_case(args.case, params, _limits(args), raise_on_failure=False, timing=args.timing)
    _emit(args, {"command": "verify", "ok": r.ok, "report": r.to_dict()}, _report_text(r))
    return OK if r.ok else FAILED


def _theorem_table(sig, reports):
    head = "%-4s %-6s %-18s %-10s %-8s %-6s %s" % (
        "case", "degree", "cover", "exc.deg", "special", "checks", "flags")
    rows = [head, "-" * len(head)]
    for r in reports:
        c = r.computed
        exc = ",".join(map(str, c["exceptional_degrees"])) if c["exceptional_degrees"] else "-"
        flags = len(r.discrepancies)
        rows.append("%-4s %-6s %-18s %-10s %-8s %-6s %s" % (
            r.case, c["degree"] if c["degree"] is not None else "-",
            c["cover"] or ("Nielsen %d" % r.nielsen["length"] if r.nielsen and r.nielsen["length"] is not None else "-"),
            exc, {True: "yes", False: "NO", None: "-"}[c["special"]],
            "ok" if r.ok else "FAIL", "; ".join(r.discrepancies) if flags else ""))
    return "signature %s\n" % (sig,) + "\n".join(rows)


def cmd_theorem(args):
    reports = verify_theorem(args.sig, _limits(args), threads=max(1, args.threads), timing=args.timing)
    ok = all(r.ok for r in reports)
    data = {"command": "theorem", "sig": list(args.sig), "cases": [r.case for r in reports],
            "ok": ok, "reports": [r.to_dict() for r in reports]}
    _emit(args, data, _theorem_table(args.sig, reports))
    return OK if ok else FAILED


def cmd_nielsen(args):
    ctx = group_new(args.sig)
    a = GenPair.from_words(ctx, *args.pair1)
    b = GenPair.from_words(ctx, *args.pair2)
    data = {"command": "nielsen", "sig": list(args.sig),
            "start": [str(w) for w in a.witnesses], "target": [str(w) for w in b.witnesses]}
    try:
        cert = search_equivalence(a, b, args.max_states, args.max_word_len)
    except NotFoundWithinBounds as exc:
        data.update(found=False, certificate=None, length=None, states_explored=exc.states_explored)
        _emit(args, data, "not found: %s (%d states)" % (exc, exc.states_explored))
        return BOUNDS
    if not cert.is_valid():
        raise InternalInvariantError("certificate does not replay")
    data.update(found=True, certificate=str(cert), length=len(cert))
    _emit(args, data, "certificate (%d moves): %s" % (len(cert), str(cert) or "(empty)"))
    return OK


COMMANDS = {"eval": cmd_eval, "equal": cmd_equal, "index": cmd_index,
            "verify": cmd_verify, "theorem": cmd_theorem, "nielsen": cmd_nielsen}


def _fail(args_json, command, message, code):
    if args_json:
        sys.stdout.write(json.dumps({"command": command or "", "error": message,
                                     "exit_code": code}, indent=2) + "\n")
    sys.stderr.write("trigon: %s\n" % message)
    return code


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        return _fail(want_json, argv[0] if argv else "", str(exc), USAGE)
    except SystemExit as exc:      # --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (InternalInvariantError, ReportedFailure) as exc:
        return _fail(args.json, args.command, str(exc), FAILED)
    except (CapExceeded, NotFoundWithinBounds) as exc:
        return _fail(args.json, args.command, str(exc), BOUNDS)
    except (InvalidParams, ValueError) as exc:
        return _fail(args.json, args.command, str(exc), USAGE)
    except TrigonError as exc:
        return _fail(args.json, args.command, str(exc), FAILED)

if __name__ == "__main__":
    sys.exit(main())
