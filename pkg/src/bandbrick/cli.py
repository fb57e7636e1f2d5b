"""Command-line interface: one subcommand per library operation.

Words arrive as lowercase letters (a maps to 1), digit strings, or
comma-separated integers; output repeats the input encoding.  g-vectors
are comma-separated integers.  ``--json`` (or BANDBRICK_FORMAT=json)
switches every subcommand to machine output.  Exit codes: 0 success,
1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import acceptance, dyck, forms, gentle, render, words
from .errors import DomainError, InternalInconsistency


class UsageError(Exception):
    """Bad flags or unparseable input; maps to exit code 2."""


# Lets tokens like "-3,-1,3" pass as positional values instead of flags.
_NEG_CSV = re.compile(r"^-\d+(?:,-?\d+)*$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEG_CSV


_ALPHA = re.compile(r"^[a-z]+$")
_DIGITS = re.compile(r"^[0-9]+$")
_CSV = re.compile(r"^-?\d+(?:,-?\d+)*$")
_WALK_TOKEN = re.compile(r"^[ab]\d+-?$")


def _parse_word(text: str) -> tuple[tuple[int, ...], str]:
    if _ALPHA.fullmatch(text):
        return tuple(ord(c) - ord("a") + 1 for c in text), "alpha"
    if _DIGITS.fullmatch(text):
        if "0" in text:
            raise UsageError("digit-string words use digits 1-9")
        return tuple(int(c) for c in text), "digits"
    if _CSV.fullmatch(text):
        vals = tuple(int(p) for p in text.split(","))
        if any(v < 1 for v in vals):
            raise UsageError("word letters must be positive integers")
        return vals, "csv"
    raise UsageError(
        f"cannot read word {text!r}: use a-z, digits 1-9, or comma-separated integers"
    )


def _format_word(word: tuple[int, ...], style: str) -> str:
    if style == "alpha":
        return "".join(chr(v + ord("a") - 1) for v in word)
    if style == "digits":
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


def _infer_style(word: tuple[int, ...]) -> str:
    top = max(word, default=1)
    if top <= 9:
        return "digits"
    if top <= 26:
        return "alpha"
    return "csv"


def _parse_gvector(text: str) -> tuple[int, ...]:
    if not _CSV.fullmatch(text):
        raise UsageError(f"cannot read g-vector {text!r}: use comma-separated integers")
    return tuple(int(p) for p in text.split(","))


def _parse_lambda(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read scalar {text!r}: use an integer or p/q") from exc


def _parse_band_spec(text: str, n: int | None) -> tuple[gentle.Step, ...]:
    tokens = text.split()
    if tokens and all(_WALK_TOKEN.fullmatch(t) for t in tokens):
        return gentle.walk_from_str(text)
    word, _ = _parse_word(text)
    return gentle.psi(word, n)


def _emit(args: argparse.Namespace, human: str, data) -> None:
    if getattr(args, "json", False) or os.environ.get("BANDBRICK_FORMAT", "").lower() == "json":
        print(json.dumps(data))
    else:
        print(human)


def _bool_out(args: argparse.Namespace, value: bool) -> int:
    _emit(args, "true" if value else "false", value)
    return 0


def _cmd_bw(args) -> int:
    word, style = _parse_word(args.word)
    out = words.bw_transform(word)
    _emit(args, _format_word(out, style), list(out))
    return 0


def _cmd_bw_inverse(args) -> int:
    word, style = _parse_word(args.word)
    out = words.bw_inverse(word)
    _emit(args, _format_word(out, style), list(out))
    return 0


def _cmd_pcw(args) -> int:
    word, _ = _parse_word(args.word)
    if args.method == "bw":
        return _bool_out(args, words.is_perfectly_clustering(word))
    if args.method == "factors":
        return _bool_out(args, words.is_perfectly_clustering_by_factors(word))
    by_bw = words.is_perfectly_clustering(word)
    if words.is_primitive(word):
        by_factors = words.is_perfectly_clustering_by_factors(word)
        if by_bw != by_factors:
            raise InternalInconsistency(
                f"methods disagree on {word}: bw={by_bw} factors={by_factors}"
            )
    return _bool_out(args, by_bw)


def _cmd_phi(args) -> int:
    word, style = _parse_word(args.word)
    ms = words.phi(word)
    human = " ".join(f"({_format_word(w, style)})" for w in ms)
    _emit(args, human, [list(w) for w in ms])
    return 0


def _cmd_phi_inverse(args) -> int:
    try:
        raw = json.loads(args.multiset)
    except json.JSONDecodeError as exc:
        raise UsageError(f"multiset must be a JSON array of integer arrays: {exc}") from exc
    if not isinstance(raw, list) or not all(
        isinstance(w, list) and all(isinstance(v, int) and v >= 1 for v in w) for w in raw
    ):
        raise UsageError("multiset must be a JSON array of arrays of positive integers")
    ms = tuple(tuple(w) for w in raw)
    out = words.phi_inverse(ms)
    _emit(args, _format_word(out, _infer_style(out)), list(out))
    return 0


def _cmd_gvec_check(args) -> int:
    g = _parse_gvector(args.gvector)
    return _bool_out(args, dyck.validate_gvector(g))


def _cmd_gvec_dyck(args) -> int:
    g = _parse_gvector(args.gvector)
    diagram = dyck.to_dyck_diagram(g)
    labels = list(diagram.labels)
    human = f"steps: {diagram.word}\nlabels: {','.join(map(str, labels))}"
    _emit(args, human, {"steps": diagram.word, "labels": labels})
    return 0


def _cmd_gvec_words(args) -> int:
    g = _parse_gvector(args.gvector)
    ms = dyck.circular_words(g)
    human = " ".join("(" + ",".join(map(str, w)) + ")" for w in ms)
    _emit(args, human, [list(w) for w in ms])
    return 0


def _cmd_gvec_decompose(args) -> int:
    g = _parse_gvector(args.gvector)
    comps = dyck.component_gvectors(g)
    human = "\n".join(",".join(map(str, c)) for c in comps)
    _emit(args, human, {"gvector": list(g), "components": [list(c) for c in comps]})
    return 0


def _cmd_band_walk(args) -> int:
    word, _ = _parse_word(args.word)
    walk = gentle.psi(word, args.n)
    g = gentle.g_vector_of_band(walk)
    human = gentle.walk_to_str(walk)
    _emit(args, human, {"walk": human, "gvector": list(g)})
    return 0


def _cmd_band_module(args) -> int:
    word, _ = _parse_word(args.word)
    walk = gentle.psi(word, args.n)
    mod = gentle.band_module(walk, _parse_lambda(args.lam))
    arrows = {
        f"{kind}{idx}": [[str(v) for v in row] for row in mat]
        for (kind, idx), mat in sorted(mod.mats.items())
    }
    lines = [f"n: {mod.n}", f"lambda: {mod.lam}", f"dims: {','.join(map(str, mod.dims))}"]
    for name, rows in arrows.items():
        lines.append(f"{name}: {rows}")
    data = {
        "n": mod.n,
        "lambda": str(mod.lam),
        "dims": list(mod.dims),
        "arrows": arrows,
    }
    _emit(args, "\n".join(lines), data)
    return 0


def _cmd_band_brick(args) -> int:
    word, _ = _parse_word(args.word)
    walk = gentle.psi(word, args.n)
    mod = gentle.band_module(walk, _parse_lambda(args.lam))
    return _bool_out(args, gentle.is_brick(mod))


def _cmd_band_hom(args) -> int:
    n = args.n
    w1 = _parse_band_spec(args.spec1, n)
    w2 = _parse_band_spec(args.spec2, n)
    shared = n or 1 + max(s.index for s in w1 + w2)
    lam1 = _parse_lambda(args.lambda1)
    if args.lambda2 is not None:
        lam2 = _parse_lambda(args.lambda2)
    else:
        same = gentle.canonical_walk(w1) == gentle.canonical_walk(w2)
        lam2 = Fraction(2) if same and lam1 == Fraction(1) else Fraction(1)
    x = gentle.band_module(w1, lam1, shared)
    y = gentle.band_module(w2, lam2, shared)
    hom_xy = gentle.hom_dim(x, y)
    hom_yx = gentle.hom_dim(y, x)
    euler = forms.euler_form(
        gentle.g_vector_of_band(w1, shared), gentle.g_vector_of_band(w2, shared)
    )
    data = {
        "hom_xy": hom_xy,
        "hom_yx": hom_yx,
        "ext1_xy": gentle.ext1_dim(x, y),
        "ext1_yx": gentle.ext1_dim(y, x),
        "euler": euler,
    }
    human = "\n".join(f"{k}: {v}" for k, v in data.items())
    _emit(args, human, data)
    return 0


def _cmd_euler(args) -> int:
    x = _parse_gvector(args.gvector1)
    y = _parse_gvector(args.gvector2)
    value = forms.euler_form(x, y)
    _emit(args, str(value), value)
    return 0


def _cmd_fan_brick4(args) -> int:
    g = _parse_gvector(args.gvector)
    return _bool_out(args, forms.is_brick_gvector_n4(g))


def _cmd_fan_maxcompat(args) -> int:
    size, witness = forms.max_compatible_search(args.n, args.box)
    human = f"size: {size}\n" + "\n".join(",".join(map(str, g)) for g in witness)
    _emit(args, human, {"size": size, "max_clique": [list(g) for g in witness]})
    return 0


def _cmd_verify(args) -> int:
    names = acceptance.suite_names()
    if args.suite == "all":
        selected = acceptance.SUITES
    else:
        wanted = args.suite
        if wanted.isdigit():
            selected = [s for s in acceptance.SUITES if s[0] == int(wanted)]
        else:
            selected = [s for s in acceptance.SUITES if s[1] == wanted]
        if not selected:
            raise UsageError(f"unknown suite {args.suite!r}: pick from all, {', '.join(names)}")
    results = []
    for num, name, fn in selected:
        ok, detail = fn(args.seed)
        results.append({"criterion": num, "name": name, "ok": ok, "detail": detail})
    all_ok = all(r["ok"] for r in results)
    human = "\n".join(
        f"criterion {r['criterion']} ({r['name']}): "
        f"{'PASS' if r['ok'] else 'FAIL'} ({r['detail']})"
        for r in results
    )
    _emit(args, human, {"ok": all_ok, "results": results})
    return 0 if all_ok else 1


def _cmd_render(args) -> int:
    g = _parse_gvector(args.gvector)
    svg = render.render_dyck(
        g, unit=args.unit, width=args.width, palette_seed=args.palette_seed
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        _emit(args, args.output, {"path": args.output})
    else:
        sys.stdout.write(svg)
    return 0


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bandbrick", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("bw", help="Burrows-Wheeler transform of a word")
    p.add_argument("word")
    _add_json(p)
    p.set_defaults(fn=_cmd_bw)

    p = sub.add_parser("bw-inverse", help="necklace whose transform is the given word")
    p.add_argument("word")
    _add_json(p)
    p.set_defaults(fn=_cmd_bw_inverse)

    p = sub.add_parser("pcw", help="test whether a word is perfectly clustering")
    p.add_argument("word")
    p.add_argument("--method", choices=["bw", "factors", "both"], default="bw")
    _add_json(p)
    p.set_defaults(fn=_cmd_pcw)

    p = sub.add_parser("phi", help="necklace multiset of a word")
    p.add_argument("word")
    _add_json(p)
    p.set_defaults(fn=_cmd_phi)

    p = sub.add_parser("phi-inverse", help="word of a necklace multiset (JSON)")
    p.add_argument("multiset")
    _add_json(p)
    p.set_defaults(fn=_cmd_phi_inverse)

    gvec = sub.add_parser("gvec", help="g-vector operations")
    gsub = gvec.add_subparsers(dest="subcommand", required=True, metavar="op")
    for name, fn, help_text in [
        ("check", _cmd_gvec_check, "validate a g-vector"),
        ("dyck", _cmd_gvec_dyck, "labeled Dyck path of a g-vector"),
        ("words", _cmd_gvec_words, "circular word multiset of a g-vector"),
        ("decompose", _cmd_gvec_decompose, "component g-vectors"),
    ]:
        p = gsub.add_parser(name, help=help_text)
        p.add_argument("gvector")
        _add_json(p)
        p.set_defaults(fn=fn)

    band = sub.add_parser("band", help="band walks and band modules")
    bsub = band.add_subparsers(dest="subcommand", required=True, metavar="op")
    for name, fn, help_text in [
        ("walk", _cmd_band_walk, "band walk of a word"),
        ("module", _cmd_band_module, "band module matrices of a word"),
        ("brick", _cmd_band_brick, "test whether the band module is a brick"),
    ]:
        p = bsub.add_parser(name, help=help_text)
        p.add_argument("word")
        p.add_argument("--n", type=int, default=None, help="number of vertices")
        if name != "walk":
            p.add_argument("--lambda", dest="lam", default="1", metavar="P/Q")
        _add_json(p)
        p.set_defaults(fn=fn)
    p = bsub.add_parser("hom", help="Hom, Ext and Euler data for two bands")
    p.add_argument("spec1", help="word or walk string such as 'a1 b1-'")
    p.add_argument("spec2")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--lambda1", default="1", metavar="P/Q")
    p.add_argument("--lambda2", default=None, metavar="P/Q")
    _add_json(p)
    p.set_defaults(fn=_cmd_band_hom)

    p = sub.add_parser("euler", help="Euler form of two g-vectors")
    p.add_argument("gvector1")
    p.add_argument("gvector2")
    _add_json(p)
    p.set_defaults(fn=_cmd_euler)

    fan = sub.add_parser("fan", help="brick g-vector tests and searches")
    fsub = fan.add_subparsers(dest="subcommand", required=True, metavar="op")
    p = fsub.add_parser("brick4", help="closed-form brick test for four vertices")
    p.add_argument("gvector")
    _add_json(p)
    p.set_defaults(fn=_cmd_fan_brick4)
    p = fsub.add_parser("maxcompat", help="maximum pairwise-compatible brick set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_json(p)
    p.set_defaults(fn=_cmd_fan_maxcompat)

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("suite", help="suite name, criterion number, or 'all'")
    p.add_argument("--seed", type=int, default=0)
    _add_json(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("render", help="draw the Dyck path model as SVG")
    p.add_argument("gvector")
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.add_argument("--unit", type=float, default=40.0)
    p.add_argument("--width", type=float, default=None)
    p.add_argument("--palette-seed", type=int, default=0)
    _add_json(p)
    p.set_defaults(fn=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
