"""Command-line entry point: ``ihara {zeta,cycles,verify,identity,words}``.

Exit codes: 0 when every requested identity holds, 1 when one fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import identities as ids
from .errors import GraphError, IharaError, NotLyndon, ScaleGuard, TooShort
from .graph import OrientedGraph, build_oriented, parse_graph
from .words import (
    beta_dec,
    beta_vert,
    circuit_walkthrough,
    decreasing_factorization,
    donlyn,
    is_lyndon,
    lyndon_factorization,
    phi,
    phi_inverse,
    standard_factorization,
)
from .zeta import default_degree, enumerate_prime_reduced_cycles, prime_cycle_counts, verify_bass

DEFAULT_SEED = 20240601

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_LIST = 100_000


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    L: int | None = None
    fmt: str = "text"
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.L is not None and self.L < 0:
            raise ValueError("L must be >= 0")


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def load_graph(path: str) -> OrientedGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return build_oriented(parse_graph(text))


# ---------------------------------------------------------------------------


def cmd_zeta(cfg: RunConfig, out) -> int:
    g = load_graph(cfg.input)
    L = default_degree(g) if cfg.L is None else cfg.L
    rep = verify_bass(g, L)
    if cfg.fmt == "json":
        _emit(rep.to_json(), out)
    else:
        out.write(f"graph: c0={g.c0} c1={g.c1}\n")
        out.write(f"zeta_edges: {rep.zeta_edges}\n")
        out.write(f"zeta_vertices: {rep.zeta_vertices}\n")
        out.write(f"eta_truncated (L={L}): {rep.eta_truncated}\n")
        out.write("census: " + (" ".join(f"{k}:{v}" for k, v in rep.census.items()) or "(none)") + "\n")
        out.write(f"pass_13: {_flag(rep.pass_13)}\n")
        out.write(f"pass_12: {_flag(rep.pass_12)}\n")
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_cycles(cfg: RunConfig, out, reduced_only: bool = True, max_list: int = DEFAULT_MAX_LIST) -> int:
    g = load_graph(cfg.input)
    L = default_degree(g) if cfg.L is None else cfg.L
    counts = prime_cycle_counts(g, L, reduced_only) if L >= 1 else {}
    total = sum(counts.values())
    listed = total <= max_list
    cycles = enumerate_prime_reduced_cycles(g, L, reduced_only) if listed and L >= 1 else []
    if cfg.fmt == "json":
        _emit(
            {
                "L": L,
                "reduced_only": reduced_only,
                "census": {str(k): v for k, v in counts.items()},
                "total": total,
                "cycles": [list(c.representative) for c in cycles] if listed else None,
            },
            out,
        )
        return EXIT_OK
    for length, count in counts.items():
        out.write(f"length {length}: {count}\n")
        for c in cycles:
            if c.length == length:
                out.write(f"  {c.format(g)}\n")
    out.write(f"total: {total}\n")
    if not listed:
        out.write(f"listing skipped: {total} classes exceed --max-list {max_list}\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    g = load_graph(cfg.input)
    L = default_degree(g) if cfg.L is None else cfg.L
    bass = verify_bass(g, L)
    b81 = ids.verify_bass_from_8_1(g)
    p81 = ids.verify_prop_8_1(g, "random_eval", 20, cfg.seed)
    ok = bass.ok and b81.ok and p81.ok
    if cfg.fmt == "json":
        _emit({"bass": bass.to_json(), "bass_from_8_1": b81.to_json(), "prop_8_1": p81.to_json(), "pass": ok}, out)
    else:
        out.write(f"pass_13: {_flag(bass.pass_13)}\n")
        out.write(f"pass_12: {_flag(bass.pass_12)} (L={L})\n")
        for name, flag in b81.checks.items():
            out.write(f"specialization.{name}: {_flag(flag)}\n")
        out.write(f"common_origin_factorization: {p81.agreements}/{p81.points} random points\n")
        out.write(f"pass: {_flag(ok)}\n")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_identity(args, cfg: RunConfig, out) -> int:
    results = {}
    lines = []
    if args.thm11:
        n, d = args.thm11
        r = ids.verify_thm_1_1(n, d)
        results["thm11"] = r.to_json()
        lines += [f"thm11(n={n}, d={d}).{k}: {_flag(v)}" for k, v in r.checks.items()]
    if args.thm41:
        n, d = args.thm41
        r = ids.verify_thm_4_1(n, d)
        results["thm41"] = r.to_json()
        lines.append(
            f"thm41(n={n}, d={d}): {r.monomials} monomials, {r.good} good, {r.orbits} pairs; "
            f"good_sum==det: {_flag(r.pass_good_sum)}; cancellation: {_flag(r.pass_cancellation)}"
        )
    if args.macmahon:
        n, d = args.macmahon
        ok = ids.verify_macmahon(n, d)
        results["macmahon"] = {"n": n, "d": d, "pass": ok}
        lines.append(f"macmahon(n={n}, d={d}): {_flag(ok)}")
    if args.amitsur:
        k, dim, d, seeds = args.amitsur
        rng = random.Random(cfg.seed)
        passed = sum(ids.verify_amitsur(ids.random_matrices(rng, k, dim), d) for _ in range(seeds))
        results["amitsur"] = {"k": k, "dim": dim, "d": d, "instances": seeds, "passed": passed,
                              "pass": passed == seeds}
        lines.append(f"amitsur(k={k}, dim={dim}, d={d}): {passed}/{seeds}")
    if args.prop81:
        g = load_graph(args.prop81)
        if args.symbolic:
            r = ids.verify_prop_8_1(g, "symbolic")
        else:
            r = ids.verify_prop_8_1(g, "random_eval", args.random, cfg.seed)
        results["prop81"] = r.to_json()
        lines.append(f"prop81({r.mode}): {r.agreements}/{r.points}")
    if not results:
        sys.stderr.write("identity: request at least one check\n")
        return EXIT_USAGE
    ok = all(v["pass"] for v in results.values())
    if cfg.fmt == "json":
        _emit({**results, "pass": ok}, out)
    else:
        out.write("\n".join(lines) + f"\npass: {_flag(ok)}\n")
    return EXIT_OK if ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# words


class LetterCodec:
    """Reads ``3,4,5`` as int letters or ``aabab`` as letters a < b < ..."""

    def __init__(self, alpha: bool):
        self.alpha = alpha

    @classmethod
    def parse(cls, text: str):
        text = text.strip()
        if text and "," not in text and not text.isdigit() and text.isalpha():
            if not text.islower():
                raise ValueError("alphabetic words use lowercase letters")
            return cls(True), tuple(ord(c) - ord("a") for c in text)
        try:
            return cls(False), tuple(int(t) for t in text.split(",")) if text else ()
        except ValueError:
            raise ValueError(f"cannot parse word {text!r}") from None

    def letter(self, x: int) -> str:
        return chr(ord("a") + x) if self.alpha else str(x)

    def word(self, w) -> str:
        if not w:
            return "(empty)"
        return "".join(map(self.letter, w)) if self.alpha else ",".join(map(self.letter, w))

    def seq(self, ws, sep="; ") -> str:
        return "(" + sep.join(self.word(w) for w in ws) + ")"

    def biword(self, bw) -> str:
        top, bottom = bw
        return f"[{self.word(top)} / {self.word(bottom)}]"


def cmd_words(args, cfg: RunConfig, out) -> int:
    codec, w = LetterCodec.parse(cfg.input)
    if args.inverse:
        pre = phi_inverse(w)
        if cfg.fmt == "json":
            _emit({"word": list(w), "phi_inverse": list(pre), "round_trip": list(phi(pre))}, out)
        else:
            out.write(f"phi_inverse: {codec.word(pre)}\n")
            out.write(f"phi(phi_inverse): {codec.word(phi(pre))}\n")
        return EXIT_OK if phi(pre) == w else EXIT_VIOLATION
    walk = circuit_walkthrough(w)
    image = phi(w)
    std = None
    if is_lyndon(w) and len(w) >= 2:
        std = standard_factorization(w)
    report = {
        "word": list(w),
        "lyndon_factorization": [list(l) for l in lyndon_factorization(w)],
        "decreasing_factorization": [list(d) for d in decreasing_factorization(w)],
        "is_lyndon": is_lyndon(w),
        "standard_factorization": [list(x) for x in std] if std else None,
        "donlyn": list(donlyn(w)) if std else None,
        "beta_dec": walk_monomial(beta_dec(w)),
        "dominated_circuits": [[list(t), list(b)] for t, b in walk.circuits],
        "sorted_by_top_desc": [list(r) for r in walk.by_top_desc],
        "swapped_reversed": [list(r) for r in walk.swapped_reversed],
        "sorted_by_top_asc": [list(r) for r in walk.by_top_asc],
        "circuit_image": list(walk.image),
        "phi": list(image),
        "beta_vert_phi": walk_monomial(beta_vert(image)),
        "phi_inverse_phi": list(phi_inverse(image)),
    }
    ok = beta_vert(image) == beta_dec(w) and phi_inverse(image) == w
    if cfg.fmt == "json":
        _emit({**report, "pass": ok}, out)
        return EXIT_OK if ok else EXIT_VIOLATION
    mono = lambda m: m.format(codec.letter)
    out.write(f"word: {codec.word(w)}\n")
    out.write(f"lyndon factorization: {codec.seq(lyndon_factorization(w))}\n")
    out.write(f"decreasing factorization: {codec.seq(decreasing_factorization(w))}\n")
    if std:
        out.write(f"standard factorization: {codec.seq(std)}\n")
        out.write(f"donlyn: {codec.word(donlyn(w))}\n")
    out.write(f"beta_dec: {mono(beta_dec(w))}\n")
    out.write("dominated circuits: " + " ".join(codec.biword(b) for b in walk.circuits) + "\n")
    out.write(f"sorted by top, nonincreasing: {codec.biword(walk.by_top_desc)}\n")
    out.write(f"swapped and reversed: {codec.biword(walk.swapped_reversed)}\n")
    out.write(f"sorted by top, nondecreasing: {codec.biword(walk.by_top_asc)}\n")
    out.write(f"circuit image (block-sorted): {codec.word(walk.image)}\n")
    out.write(f"phi: {codec.word(image)}\n")
    out.write(f"beta_vert(phi): {mono(beta_vert(image))}\n")
    out.write(f"phi_inverse(phi): {codec.word(phi_inverse(image))}\n")
    return EXIT_OK if ok else EXIT_VIOLATION


def walk_monomial(m) -> list:
    return [[x, y, k] for (x, y), k in m.items()]


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ihara", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph=True):
        if graph:
            sp.add_argument("graph", help="graph file ('-' for stdin)")
            sp.add_argument("-L", type=int, default=None, help="truncation degree (default max(2*c1, 10))")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    common(sub.add_parser("zeta", help="zeta polynomial by all three routes"))
    sp = sub.add_parser("cycles", help="prime reduced cycles by length")
    common(sp)
    sp.add_argument("--all", action="store_true", help="drop the reducedness constraint")
    sp.add_argument("--max-list", type=int, default=DEFAULT_MAX_LIST, metavar="N",
                    help="print representatives only when there are at most N classes")
    common(sub.add_parser("verify", help="all graph identities on one graph"))

    sp = sub.add_parser("identity", help="algebraic identity suites")
    common(sp, graph=False)
    sp.add_argument("--thm11", nargs=2, type=int, metavar=("N", "D"))
    sp.add_argument("--thm41", nargs=2, type=int, metavar=("N", "D"))
    sp.add_argument("--macmahon", nargs=2, type=int, metavar=("N", "D"))
    sp.add_argument("--amitsur", nargs=4, type=int, metavar=("K", "DIM", "D", "SEEDS"))
    sp.add_argument("--prop81", metavar="GRAPH")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true")
    mode.add_argument("--random", type=int, default=20, metavar="N")

    sp = sub.add_parser("words", help="factorizations and the bijection on one word")
    common(sp, graph=False)
    sp.add_argument("word", help="comma-separated letters (3,4,5,1) or a lowercase string (aabab)")
    sp.add_argument("--inverse", action="store_true", help="treat WORD as an image and invert")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            input=args.word if args.command == "words" else getattr(args, "graph", None),
            L=getattr(args, "L", None),
            fmt="json" if args.json else "text",
            seed=args.seed,
        )
        if args.command == "zeta":
            return cmd_zeta(cfg, out)
        if args.command == "cycles":
            return cmd_cycles(cfg, out, reduced_only=not args.all, max_list=args.max_list)
        if args.command == "verify":
            return cmd_verify(cfg, out)
        if args.command == "identity":
            return cmd_identity(args, cfg, out)
        return cmd_words(args, cfg, out)
    except (GraphError, ScaleGuard, NotLyndon, TooShort, ValueError, OSError) as exc:
        sys.stderr.write(f"ihara: error: {exc}\n")
        return EXIT_USAGE
    except IharaError as exc:
        sys.stderr.write(f"ihara: identity violation: {exc}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
