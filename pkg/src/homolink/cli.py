"""Command-line front end.

Subcommands: analyze, enumerate, monodromy, verify-table, bounds.
Exit codes: 0 success, 2 parse failure, 3 disconnected word (split factors
listed), 4 inhomogeneous input where homogeneity is required, 5 work cap
exceeded. Output is deterministic for a fixed configuration; JSON reports
carry a "schema": 1 version field and all file I/O is UTF-8.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .burau import alexander_via_burau
from .enumeration import (SearchSpace, bound_n, bound_p, classify,
                          report_to_csv, report_to_json)
from .errors import (BraidSyntaxError, CapExceededError,
                     DisconnectedWordError, InhomogeneousWordError)
from .jones import JONES_LENGTH_CAP, jones_kauffman
from .monodromy import (action_of_word, char_poly, matrix_order,
                        monodromy_from_seifert, monodromy_order_bound,
                        twist_sequence)
from .polynomials import ConwayPolynomial, equal_up_to_unit
from .seifert import (alexander_from_seifert, build_surface,
                      conway_from_seifert, seifert_matrix)
from .skein import conway_skein, degree_and_leading
from .words import (BraidWord, component_count, connected, exponent_profile,
                    homogeneous_letters, normalize_nonweak, parse_word,
                    split_factors, weak_indices)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_INHOMOGENEOUS = 4
EXIT_CAP = 5


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    word_text: str = ""
    strands: int | None = None
    degree: int | None = None
    genus: int | None = None
    fmt: str = "text"
    kauffman_cap: int = JONES_LENGTH_CAP
    search_cap: int = 6
    table_path: str | None = None
    out_path: str | None = None
    json_path: str | None = None
    csv_path: str | None = None
    threads: int = 1


def _emit(text=""):
    sys.stdout.write(text + "\n")


def _fail(code, message):
    sys.stderr.write(message + "\n")
    return code


def _word_str(w: BraidWord) -> str:
    return " ".join(str(x) for x in w.letters)


def cmd_analyze(cfg: RunConfig) -> int:
    try:
        w = parse_word(cfg.word_text, cfg.strands)
    except BraidSyntaxError as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")

    if w.letters and not connected(w.letters, w.strands):
        factors = split_factors(w)
        sys.stderr.write("disconnected word; split closure with factors:\n")
        for f in factors:
            sys.stderr.write(f"  [{_word_str(f)}] on {f.strands} strands\n")
        return EXIT_DISCONNECTED

    profile = exponent_profile(w)
    homogeneous = homogeneous_letters(w.letters)
    comps = component_count(w)
    report = {
        "schema": 1,
        "word": {"n": w.strands, "word": list(w.letters)},
        "length": len(w.letters),
        "homogeneous": homogeneous,
        "weak_indices": sorted(weak_indices(w)),
        "q": list(profile.q),
        "alpha": [a if a is not None else 0 for a in profile.alpha],
        "components": comps,
        "euler_characteristic": w.strands - len(w.letters),
    }

    alex = alexander_via_burau(w)
    report["alexander"] = alex.to_json()

    skein = surface = norm = None
    if homogeneous:
        norm = normalize_nonweak(w)
        report["normalized"] = {"n": norm.strands, "word": list(norm.letters)}
        if norm.letters:
            deg, lead = degree_and_leading(norm)
        else:
            deg, lead = 0, 1
        report["degree"] = deg
        report["leading_coefficient"] = lead
        if comps == 1:
            report["genus"] = (1 + len(norm.letters) - norm.strands) // 2
        skein = conway_skein(w)
        surface = conway_from_seifert(seifert_matrix(build_surface(w)))
        report["conway_skein"] = skein.to_json()
        report["conway_seifert"] = surface.to_json()
        report["routes_agree"] = skein == surface

    if len(w.letters) <= cfg.kauffman_cap:
        report["jones"] = jones_kauffman(w, cfg.kauffman_cap).to_json()
    else:
        report["jones"] = None

    if cfg.fmt == "json":
        _emit(json.dumps(report, sort_keys=True))
        return EXIT_OK

    _emit(f"word: [{_word_str(w)}] on {w.strands} strands, length "
          f"{len(w.letters)}")
    _emit(f"homogeneous: {homogeneous}")
    _emit(f"occurrences q: {list(profile.q)}")
    _emit(f"signs alpha: {list(profile.alpha)}")
    _emit(f"weak indices: {sorted(weak_indices(w)) or 'none'}")
    _emit(f"components: {comps}")
    _emit(f"surface euler characteristic: {report['euler_characteristic']}")
    if homogeneous:
        _emit(f"normalized (non-weak) word: [{_word_str(norm)}] on "
              f"{norm.strands} strands")
        _emit(f"conway degree: {report['degree']}, leading coefficient "
              f"{report['leading_coefficient']:+d}")
        if "genus" in report:
            _emit(f"genus: {report['genus']}")
        _emit(f"conway (skein route):   {skein}")
        _emit(f"conway (seifert route): {surface}")
        _emit(f"routes agree: {report['routes_agree']}")
    else:
        _emit("word is not homogeneous: conway/degree formulas need a "
              "homogeneous word, reporting determinant-route alexander only")
    _emit(f"alexander (symmetric): {alex}")
    if report["jones"] is None:
        _emit(f"jones: skipped (length over cap {cfg.kauffman_cap})")
    else:
        _emit(f"jones: {jones_kauffman(w, cfg.kauffman_cap)}")
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    space = SearchSpace(degree=cfg.degree, genus=cfg.genus,
                        cap=cfg.search_cap)
    try:
        report = classify(space)
    except CapExceededError as exc:
        return _fail(EXIT_CAP, f"cap exceeded: {exc}")

    payload = report_to_json(report)
    csv_text = report_to_csv(report)
    if cfg.json_path:
        with open(cfg.json_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
    if cfg.csv_path:
        with open(cfg.csv_path, "w", encoding="utf-8") as fh:
            fh.write(csv_text)

    if cfg.fmt == "json":
        _emit(json.dumps(payload, sort_keys=True))
    elif cfg.fmt == "csv":
        sys.stdout.write(csv_text)
    else:
        mode = (f"degree {space.degree}" if space.degree is not None
                else f"genus {space.genus} (knots)")
        _emit(f"{mode}: {len(report.classes)} classes")
        for ix, c in enumerate(report.classes):
            conway = ConwayPolynomial(c.signature.conway)
            _emit(f"  [{ix}] rep [{_word_str(c.representative)}] on "
                  f"{c.representative.strands} strands | components "
                  f"{c.signature.component_count} | conway {conway} | "
                  f"{c.matched} | orbits {c.size}")
        for note in report.notes:
            _emit(f"note: {note}")
    return EXIT_OK


def cmd_monodromy(cfg: RunConfig) -> int:
    try:
        w = parse_word(cfg.word_text, cfg.strands)
    except BraidSyntaxError as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")
    if not homogeneous_letters(w.letters):
        return _fail(EXIT_INHOMOGENEOUS,
                     "monodromy needs a homogeneous word")
    if w.letters and not connected(w.letters, w.strands):
        factors = split_factors(w)
        sys.stderr.write("disconnected word; split closure with factors:\n")
        for f in factors:
            sys.stderr.write(f"  [{_word_str(f)}] on {f.strands} strands\n")
        return EXIT_DISCONNECTED

    norm = normalize_nonweak(w)
    seq = twist_sequence(norm)
    V = seifert_matrix(build_surface(norm))
    act = action_of_word(norm)
    seif_act = monodromy_from_seifert(V)
    cp = char_poly(act)
    alex = alexander_from_seifert(V)
    verdict = equal_up_to_unit(cp, alex)

    report = {
        "schema": 1,
        "word": {"n": norm.strands, "word": list(norm.letters)},
        "twists": [{"loop": [i, j], "sign": s} for (i, j), s in seq.twists],
        "homology_matrix": [list(row) for row in act.matrix],
        "char_poly": cp.to_json(),
        "alexander": alex.to_json(),
        "alexander_match": verdict,
        "form_preserved": act.preserves_form(),
        "routes_agree": act.matrix == seif_act.matrix,
    }
    is_torus = (norm.strands == 2 and len(norm.letters) >= 2
                and len(set(norm.letters)) == 1)
    if is_torus:
        report["order_bound"] = monodromy_order_bound(norm)
        report["order"] = matrix_order(act)

    if cfg.fmt == "json":
        _emit(json.dumps(report, sort_keys=True))
        return EXIT_OK

    if norm.letters != w.letters or norm.strands != w.strands:
        _emit(f"normalized to [{_word_str(norm)}] on {norm.strands} strands")
    _emit(f"twists ({len(seq.twists)}):")
    for (i, j), s in seq.twists:
        _emit(f"  loop ({i},{j}) sign {s:+d}")
    _emit("homology action:")
    for row in act.matrix:
        _emit("  " + " ".join(f"{v:4d}" for v in row))
    _emit(f"characteristic polynomial: {cp}")
    _emit(f"alexander polynomial:      {alex}")
    _emit(f"char poly matches alexander up to unit: {verdict}")
    _emit(f"intersection form preserved: {report['form_preserved']}")
    _emit(f"twist route equals seifert route: {report['routes_agree']}")
    if is_torus:
        _emit(f"torus link order bound lcm(2,q): {report['order_bound']}, "
              f"computed homology order: {report['order']}")
    return EXIT_OK


def cmd_verify_table(cfg: RunConfig) -> int:
    from .reference import entry_to_json, parse_entry, verify_entry

    path = cfg.table_path
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        return _fail(EXIT_PARSE, f"cannot read {path}: {exc}")

    out_path = cfg.out_path or (path + ".verified")
    results = []
    ok_count = fail_count = bad_lines = 0
    with open(out_path, "w", encoding="utf-8") as fh:
        for ln, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                entry = parse_entry(json.loads(line))
            except (ValueError, KeyError, TypeError) as exc:
                bad_lines += 1
                results.append(f"line {ln}: malformed entry skipped ({exc})")
                continue
            new, detail = verify_entry(entry)
            if new.verified:
                ok_count += 1
            else:
                fail_count += 1
            results.append(f"{new.name}: "
                           f"{'ok' if new.verified else 'FAIL'} ({detail})")
            fh.write(json.dumps(entry_to_json(new), sort_keys=True) + "\n")

    for line in results:
        _emit(line)
    _emit(f"verified {ok_count}, failed {fail_count}, malformed {bad_lines}; "
          f"wrote {out_path}")
    return EXIT_OK


def cmd_bounds(cfg: RunConfig) -> int:
    if cfg.degree is None and cfg.genus is None:
        return _fail(EXIT_PARSE, "bounds needs --degree and/or --genus")
    if cfg.degree is not None:
        _emit(f"bound_p({cfg.degree}) = {bound_p(cfg.degree)}")
    if cfg.genus is not None:
        _emit(f"bound_n({cfg.genus}) = {bound_n(cfg.genus)}")
    return EXIT_OK


def _build_parser():
    p = argparse.ArgumentParser(
        prog="homolink",
        description="invariants and classification of homogeneous braid "
                    "closures")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def add_word(sp):
        sp.add_argument("word", help="whitespace-separated signed letters, "
                                     "e.g. \"1 -2 1 -2\"")
        sp.add_argument("--strands", type=int, default=None)
        sp.add_argument("--format", dest="fmt", default="text",
                        choices=("text", "json"))

    sp = sub.add_parser("analyze", help="invariants of one closure")
    add_word(sp)
    sp.add_argument("--kauffman-cap", type=int, default=JONES_LENGTH_CAP)

    sp = sub.add_parser("enumerate", help="classify a degree or genus range")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--degree", type=int)
    group.add_argument("--genus", type=int)
    sp.add_argument("--cap", dest="search_cap", type=int, default=6)
    sp.add_argument("--format", dest="fmt", default="text",
                    choices=("text", "json", "csv"))
    sp.add_argument("--json", dest="json_path", default=None,
                    help="also write the JSON report here")
    sp.add_argument("--csv", dest="csv_path", default=None,
                    help="also write the CSV summary here")

    sp = sub.add_parser("monodromy", help="twist factorization and "
                                          "homology action")
    add_word(sp)

    sp = sub.add_parser("verify-table", help="recompute reference entries")
    sp.add_argument("table", help="JSONL reference table path")
    sp.add_argument("--out", dest="out_path", default=None,
                    help="output path (default: <table>.verified)")

    sp = sub.add_parser("bounds", help="candidate-count bounds")
    sp.add_argument("--degree", type=int, default=None)
    sp.add_argument("--genus", type=int, default=None)
    return p


def _config_from_args(args) -> RunConfig:
    threads = 1
    try:
        threads = max(1, int(os.environ.get("HOMOLINK_THREADS", "1")))
    except ValueError:
        pass
    return RunConfig(
        subcommand=args.subcommand,
        word_text=getattr(args, "word", ""),
        strands=getattr(args, "strands", None),
        degree=getattr(args, "degree", None),
        genus=getattr(args, "genus", None),
        fmt=getattr(args, "fmt", "text"),
        kauffman_cap=getattr(args, "kauffman_cap", JONES_LENGTH_CAP),
        search_cap=getattr(args, "search_cap", 6),
        table_path=getattr(args, "table", None),
        out_path=getattr(args, "out_path", None),
        json_path=getattr(args, "json_path", None),
        csv_path=getattr(args, "csv_path", None),
        threads=threads,
    )


_COMMANDS = {
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "monodromy": cmd_monodromy,
    "verify-table": cmd_verify_table,
    "bounds": cmd_bounds,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = _config_from_args(args)
    try:
        return _COMMANDS[cfg.subcommand](cfg)
    except DisconnectedWordError as exc:
        msg = str(exc)
        for f in exc.factors:
            msg += f"\n  factor: [{_word_str(f)}] on {f.strands} strands"
        return _fail(EXIT_DISCONNECTED, msg)
    except InhomogeneousWordError as exc:
        return _fail(EXIT_INHOMOGENEOUS, str(exc))
    except CapExceededError as exc:
        return _fail(EXIT_CAP, str(exc))
    except BraidSyntaxError as exc:
        return _fail(EXIT_PARSE, str(exc))


if __name__ == "__main__":
    sys.exit(main())
