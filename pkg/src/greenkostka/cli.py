"""Command-line front end.

Exit codes: 0 ok, 2 usage error, 3 instance guard exceeded, 4 algorithm
breakdown, 5 internal invariant violation.
"""

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile
from dataclasses import asdict, dataclass, field

from .algebra import MultiRationalFunction, RationalFunction
from .combinatorics import multipartition_to_str
from .green import InvalidPrime, congruence_check, green_gl, green_sp
from .hall_littlewood import (
    DegenerateGramBlock,
    construct_hl,
    kostka_via_transition,
    modified_kostka,
    q_functions,
    verify_characterization,
)
from .lusztig_shoji import (
    DEFAULT_GUARDS,
    AlgorithmBreakdown,
    GuardError,
    OmegaIntegrityError,
    check_guard,
    kostka_multi_param,
    kostka_one_param,
)
from .symbols import SymbolConfig, all_defects, build_table, canonical_defect, symplectic_defects
from .symfunc import ParamRing, sym_space
from .wreath import character_table

SCHEMA_VERSION = 1
CACHE_ENV = "GREENKOSTKA_CACHE_DIR"

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_BREAKDOWN, EXIT_INVARIANT = 0, 2, 3, 4, 5


class UsageError(ValueError):
    pass


class InvariantViolation(RuntimeError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    n: int = 0
    r: int = 1
    e: int = 0
    s: tuple = (0,)
    alpha: int = 0
    defects: object = None
    preset: str = None
    multi: bool = False
    modified: bool = False
    gl: bool = False
    sp: bool = False
    char2: bool = False
    q: int = None
    congruence: int = None
    basis_from: str = "s"
    basis_to: str = "m"
    tie_break: str = "default"
    guards: dict = field(default_factory=lambda: dict(DEFAULT_GUARDS))
    out: str = "json"

    def cache_key(self):
        data = asdict(self)
        data["schema_version"] = SCHEMA_VERSION
        blob = json.dumps(data, sort_keys=True, default=list).encode()
        return hashlib.sha256(blob).hexdigest()


# -- argument parsing ------------------------------------------------------------


def _parse_ints(text):
    return tuple(int(x) for x in text.split(",") if x.strip() != "")


def _parse_defects(text):
    if text in ("all", "sp", "sp-char2"):
        return text
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append(_parse_ints(chunk))
    return out


def _parse_guard(text):
    n, r = _parse_ints(text)
    return (n, r)


def build_parser():
    p = argparse.ArgumentParser(prog="greenkostka", description="Kostka functions and Green functions for W_{n,r}.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, config=True):
        sp.add_argument("--out", choices=("json", "csv"), default="json", help="output format")
        sp.add_argument("--output", help="write to this path instead of stdout")
        sp.add_argument("--cache-dir", help="result cache directory (default: $%s)" % CACHE_ENV)
        sp.add_argument("--guard-multi", type=_parse_guard, help="multi-parameter guard as N,R")
        sp.add_argument("--guard-one", type=_parse_guard, help="one-parameter guard as N,R")
        if config:
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--r", type=int, default=None)
            sp.add_argument("--e", type=int, default=None)
            sp.add_argument("--s", type=_parse_ints, default=None, help="comma separated s_1..s_r")
            sp.add_argument("--alpha", type=int, default=0)
            sp.add_argument("--defects", type=_parse_defects, default=None,
                            help="'d1,..,dr;d1,..,dr', 'all', or a preset name")
            sp.add_argument("--preset", choices=("sp", "sp-char2", "gl"))
            sp.add_argument("--tie-break", choices=("default", "reverse"), default="default")

    common(sub.add_parser("symbols", help="list the symbol table"))
    cp = sub.add_parser("chartable", help="character table of W_{n,r}")
    common(cp, config=False)
    cp.add_argument("--n", type=int, required=True)
    cp.add_argument("--r", type=int, required=True)
    hp = sub.add_parser("hl", help="Hall-Littlewood functions by Gram-Schmidt")
    common(hp)
    hp.add_argument("--multi", action="store_true")
    kp = sub.add_parser("kostka", help="Kostka functions by block factorization")
    common(kp)
    kp.add_argument("--multi", action="store_true")
    kp.add_argument("--modified", action="store_true")
    gp = sub.add_parser("green", help="Green functions")
    common(gp, config=False)
    gp.add_argument("--n", type=int, required=True)
    kind = gp.add_mutually_exclusive_group(required=True)
    kind.add_argument("--gl", action="store_true")
    kind.add_argument("--sp", action="store_true")
    gp.add_argument("--char2", action="store_true")
    gp.add_argument("--q", type=int)
    gp.add_argument("--congruence", type=int, metavar="R")
    vp = sub.add_parser("verify", help="compare both Kostka algorithms and check the characterization")
    common(vp)
    vp.add_argument("--multi", action="store_true")
    fp = sub.add_parser("symfunc", help="symmetric function utilities")
    fsub = fp.add_subparsers(dest="action", required=True)
    ep = fsub.add_parser("expand", help="transition matrix between two bases")
    common(ep, config=False)
    ep.add_argument("--n", type=int, required=True)
    ep.add_argument("--r", type=int, required=True)
    ep.add_argument("--from", dest="basis_from", choices=("m", "s", "p", "q+", "q-"), default="s")
    ep.add_argument("--to", dest="basis_to", choices=("m", "s", "p", "q+", "q-"), default="m")
    ep.add_argument("--multi", action="store_true")
    return p


def make_config(args):
    sub = args.subcommand
    guards = dict(DEFAULT_GUARDS)
    if getattr(args, "guard_multi", None):
        guards["multi"] = args.guard_multi
    if getattr(args, "guard_one", None):
        guards["one"] = args.guard_one
    cfg = RunConfig(sub, n=args.n, out=args.out, guards=guards)
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if sub == "chartable":
        cfg.r = args.r
    elif sub == "symfunc":
        cfg.subcommand = "symfunc-expand"
        cfg.r, cfg.basis_from, cfg.basis_to, cfg.multi = args.r, args.basis_from, args.basis_to, args.multi
    elif sub == "green":
        cfg.gl, cfg.sp, cfg.char2, cfg.q, cfg.congruence = args.gl, args.sp, args.char2, args.q, args.congruence
        if args.gl and (args.char2 or args.congruence):
            raise UsageError("--char2 and --congruence apply to --sp only")
        if args.congruence is not None and args.q is None:
            raise UsageError("--congruence needs --q")
    else:
        cfg.multi = getattr(args, "multi", False)
        cfg.modified = getattr(args, "modified", False)
        if cfg.multi and cfg.modified:
            raise UsageError("--modified is a one-parameter notion; drop --multi")
        cfg.tie_break = args.tie_break
        _fill_symbol_config(cfg, args)
    if cfg.r is not None and cfg.r < 1:
        raise UsageError("--r must be positive")
    return cfg


def _fill_symbol_config(cfg, args):
    preset = args.preset
    if preset is None and args.defects in ("sp", "sp-char2"):
        preset = args.defects
    cfg.preset = preset
    if preset in ("sp", "sp-char2"):
        config, _ = symplectic_defects(args.n, preset == "sp-char2")
        cfg.r, cfg.e, cfg.s, cfg.alpha = config.r, config.e, config.s, config.alpha
        cfg.defects = preset
        return
    if preset == "gl":
        cfg.r, cfg.e, cfg.s, cfg.alpha, cfg.defects = 1, 0, (0,), 0, [(0,)]
        return
    if args.r is None or args.e is None or args.s is None:
        raise UsageError("give --r, --e and --s, or a --preset")
    cfg.r, cfg.e, cfg.s, cfg.alpha = args.r, args.e, tuple(args.s), args.alpha
    if len(cfg.s) != cfg.r:
        raise UsageError("--s needs exactly r values")
    cfg.defects = args.defects if args.defects is not None else [(0,) * cfg.r]


def _symbol_setup(cfg):
    if cfg.defects in ("sp", "sp-char2"):
        config, defects = symplectic_defects(cfg.n, cfg.defects == "sp-char2")
        return config, defects
    try:
        config = SymbolConfig(cfg.r, cfg.e, tuple(cfg.s), cfg.alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.defects == "all":
        return config, all_defects(cfg.n, config)
    defects = []
    for d in cfg.defects:
        if len(d) != cfg.r:
            raise UsageError("defect %s needs r entries" % (d,))
        defects.append(canonical_defect(d))
    return config, defects


# -- computation ---------------------------------------------------------------


def _entry_json(x):
    """Polynomials as coefficient lists, other rational functions as {num, den}."""
    if isinstance(x, RationalFunction) and x.is_polynomial():
        return x.as_polynomial().to_json()
    if isinstance(x, MultiRationalFunction) and x.is_polynomial():
        return {"terms": x.num.to_json()}
    return x.to_json()


def _matrix_json(M, label_json=str):
    return {
        "row_labels": [label_json(x) for x in M.row_labels],
        "col_labels": [label_json(x) for x in M.col_labels],
        "rows": [[_entry_json(x) for x in row] for row in M.rows],
    }


def run(cfg):
    """Compute the result for a RunConfig as a JSON-ready dict."""
    sub = cfg.subcommand
    if sub == "chartable":
        check_guard(cfg.n, cfg.r, "one", cfg.guards)
        return {"chartable": character_table(cfg.n, cfg.r).to_json()}
    if sub == "symfunc-expand":
        check_guard(cfg.n, cfg.r, "multi" if cfg.multi else "one", cfg.guards)
        space = sym_space(cfg.n, cfg.r, ParamRing(cfg.r, "multi" if cfg.multi else "one"))
        M = space.transition(cfg.basis_from) * space.transition_inverse(cfg.basis_to)
        return {"from": cfg.basis_from, "to": cfg.basis_to, "matrix": _matrix_json(M, multipartition_to_str)}
    if sub == "green":
        return _run_green(cfg)
    config, defects = _symbol_setup(cfg)
    mode = "multi" if cfg.multi else "one"
    check_guard(cfg.n, config.r, mode, cfg.guards)
    table = build_table(cfg.n, config, defects, cfg.tie_break)
    if sub == "symbols":
        return {"table": table.to_json()}
    if sub == "hl":
        hl = construct_hl(table, mode)
        Kp, Km = kostka_via_transition(hl)
        qp, qm = q_functions(hl)
        names = [str(s) for s in table.symbols]

        def rows_json(rows):
            return {names[i]: {names[j]: _entry_json(c) for j, c in sorted(row.items())} for i, row in enumerate(rows)}

        out = {"table": table.to_json(), "mode": mode,
               "P+": rows_json(hl.p_plus), "P-": rows_json(hl.p_minus),
               "Q+": rows_json(qp), "Q-": rows_json(qm),
               "K+": _matrix_json(Kp), "K-": _matrix_json(Km)}
        if mode == "one":
            out["K~+"] = _matrix_json(modified_kostka(Kp, table.a_values))
            out["K~-"] = _matrix_json(modified_kostka(Km, table.a_values))
        return out
    if sub == "kostka":
        if cfg.multi:
            res = kostka_multi_param(cfg.n, config, defects, cfg.tie_break, cfg.guards, table=table)
        else:
            res = kostka_one_param(cfg.n, config, defects, cfg.tie_break, cfg.guards, table=table)
        if not res.residual_is_zero():
            raise InvariantViolation("factorization residual is nonzero")
        out = {"table": table.to_json(), "mode": mode}
        if not cfg.modified:
            out["K+"] = _matrix_json(res.k_plus)
            out["K-"] = _matrix_json(res.k_minus)
        if not cfg.multi:
            out["K~+"] = _matrix_json(res.p_plus)
            out["K~-"] = _matrix_json(res.p_minus)
            out["omega~"] = _matrix_json(res.omega)
        return out
    if sub == "verify":
        return _run_verify(cfg, table, mode)
    raise UsageError("unknown subcommand %r" % sub)


def _run_green(cfg):
    if cfg.gl:
        check_guard(cfg.n, 1, "one", cfg.guards)
        g = green_gl(cfg.n, cfg.guards)
        return {"green": g.to_json(_entry_json)}
    check_guard(cfg.n, 2, "one", cfg.guards)
    g = green_sp(cfg.n, cfg.char2, q=cfg.q, guards=cfg.guards)
    out = {"green": g.to_json(_entry_json)}
    if cfg.congruence is not None:
        rep = congruence_check(cfg.n, cfg.q, cfg.congruence, cfg.char2, table=g)
        out["congruence"] = {
            "q": rep.q,
            "rprime": rep.rprime,
            "passed": rep.passed,
            "entries": [{"defect": list(d), "w_type": [list(p) for p in w], "symbol": s,
                         "value_q": str(a), "value_q_r": str(b), "ok": ok} for d, w, s, a, b, ok in rep.entries],
        }
    return out


def _run_verify(cfg, table, mode):
    hl = construct_hl(table, mode)
    Kp, Km = kostka_via_transition(hl)
    if mode == "multi":
        res = kostka_multi_param(cfg.n, table.config, table.defects, cfg.tie_break, cfg.guards, table=table)
    else:
        res = kostka_one_param(cfg.n, table.config, table.defects, cfg.tie_break, cfg.guards, table=table)
    report = verify_characterization(hl)
    out = {
        "table": table.to_json(),
        "mode": mode,
        "dual_path_K+": res.k_plus == Kp,
        "dual_path_K-": res.k_minus == Km,
        "residual_zero": res.residual_is_zero(),
        "characterization": [{"symbol": s, "passed": ok, "note": note} for s, ok, note in report],
    }
    out["passed"] = (out["dual_path_K+"] and out["dual_path_K-"] and out["residual_zero"]
                     and all(ok for _, ok, _ in report))
    return out


# -- output ------------------------------------------------------------------


def emit(payload, fmt):
    """Serialize a result envelope; JSON keys are sorted so output is stable."""
    if fmt == "json":
        return (_dump(payload, 0) + "\n").encode()
    return _to_csv(payload["result"]).encode()


def _dump(x, level):
    """Indented JSON with sorted keys; short containers stay on one line."""
    flat = json.dumps(x, sort_keys=True)
    if not isinstance(x, (dict, list)) or len(flat) + 2 * level <= 100:
        return flat
    pad, inner = "  " * level, "  " * (level + 1)
    if isinstance(x, dict):
        items = ["%s%s: %s" % (inner, json.dumps(k), _dump(x[k], level + 1)) for k in sorted(x)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    items = [inner + _dump(v, level + 1) for v in x]
    return "[\n" + ",\n".join(items) + "\n" + pad + "]"


def _cell(x):
    if isinstance(x, (dict, list)):
        return _render(x)
    return str(x)


def _render(x):
    """Human-readable form of a serialized field element."""
    if isinstance(x, dict) and "num" in x:
        num, den = _render_poly(x["num"]), _render_poly(x["den"])
        return num if den == "1" else "(%s)/(%s)" % (num, den)
    if isinstance(x, dict) and "order" in x:
        return _render_cyclo(x)
    if isinstance(x, dict) and "terms" in x:
        return _render_poly(x["terms"])
    if isinstance(x, list):
        return _render_poly(x)
    return str(x)


def _render_cyclo(x):
    parts = []
    for i, c in enumerate(x["coeffs"]):
        if c in (0, "0"):
            continue
        mono = "" if i == 0 else ("z" if i == 1 else "z^%d" % i)
        parts.append(_term(c, mono))
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _term(c, mono):
    c = str(c)
    if not mono:
        return c
    if c == "1":
        return mono
    if c == "-1":
        return "-" + mono
    return "%s*%s" % (c, mono)


def _render_poly(coeffs):
    if not coeffs:
        return "0"
    if isinstance(coeffs[0], list) and len(coeffs[0]) == 2 and isinstance(coeffs[0][0], list):
        parts = []
        for exps, c in coeffs:
            mono = "*".join(("t%d" % (i + 1)) + ("^%d" % e if e > 1 else "") for i, e in enumerate(exps) if e)
            parts.append(_term(_render(c) if isinstance(c, dict) else c, mono))
        return " + ".join(parts).replace("+ -", "- ")
    parts = []
    for i, c in enumerate(coeffs):
        if c in (0, "0"):
            continue
        mono = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
        cs = "(%s)" % _render_cyclo(c) if isinstance(c, dict) else c
        parts.append(_term(cs, mono))
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _to_csv(result):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for name in sorted(result):
        value = result[name]
        if isinstance(value, dict) and "rows" in value and "row_labels" in value:
            w.writerow([name] + value["col_labels"])
            for label, row in zip(value["row_labels"], value["rows"]):
                w.writerow([label] + [_cell(x) for x in row])
        elif name == "chartable":
            w.writerow(["chartable"] + value["classes"])
            for label, row in zip(value["characters"], value["values"]):
                w.writerow([label] + [_render_cyclo(x) for x in row])
        elif name == "table":
            w.writerow(["symbol", "defect", "source", "a"])
            for s in value["symbols"]:
                w.writerow([s["symbol"], ",".join(map(str, s["defect"])), s["source"], s["a"]])
        elif name == "green":
            if "gl" in value:
                g = value["gl"]
                w.writerow(["Q"] + g["col_labels"])
                for label, row in zip(g["row_labels"], g["rows"]):
                    w.writerow([label] + [_cell(x) for x in row])
            for item in value.get("sp", []):
                for c in item["coefficients"]:
                    w.writerow(["Y", ",".join(map(str, item["defect"])), item["w_type"], c["symbol"], _render(c["value"])])
        elif isinstance(value, (str, int, bool)):
            w.writerow([name, value])
    return buf.getvalue()


# -- cache -------------------------------------------------------------------


def _cache_path(cache_dir, cfg):
    return os.path.join(cache_dir, cfg.cache_key() + "." + cfg.out)


def _write_atomic(path, data):
    d = os.path.dirname(path) or "."
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def parse_and_dispatch(argv=None, stdout=None):
    """Run the CLI; returns the exit status."""
    stdout = stdout or sys.stdout.buffer
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
        data = None
        if cache_dir:
            path = _cache_path(cache_dir, cfg)
            if os.path.exists(path):
                with open(path, "rb") as fh:
                    data = fh.read()
        if data is None:
            result = run(cfg)
            payload = {"schema_version": SCHEMA_VERSION, "command": cfg.subcommand,
                       "config": _config_json(cfg), "result": result}
            data = emit(payload, cfg.out)
            if cache_dir:
                _write_atomic(path, data)
            failed = cfg.subcommand == "verify" and not result["passed"]
        else:
            failed = False
    except (UsageError, InvalidPrime) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_GUARD
    except (AlgorithmBreakdown, DegenerateGramBlock) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BREAKDOWN
    except (OmegaIntegrityError, InvariantViolation) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVARIANT
    if args.output:
        _write_atomic(args.output, data)
    else:
        stdout.write(data)
        stdout.flush()
    return EXIT_INVARIANT if failed else EXIT_OK


def _config_json(cfg):
    data = asdict(cfg)
    data["guards"] = {k: list(v) for k, v in sorted(cfg.guards.items())}
    data["s"] = list(cfg.s) if cfg.s is not None else None
    if isinstance(cfg.defects, list):
        data["defects"] = [list(d) for d in cfg.defects]
    return data


def main():
    sys.exit(parse_and_dispatch())


if __name__ == "__main__":
    main()
