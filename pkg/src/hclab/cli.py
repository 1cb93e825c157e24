"""Command-line interface: ``hclab info``, ``hclab check`` and ``hclab verify``.

Exit codes: 0 green, 1 a FAIL verdict, 2 usage error, 3 a skipped tuple.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import config as _config
from .classes import is_cyclic, is_nilpotent, is_solvable, is_supersolvable
from .corpus import load_group, realize
from .embedding import PREDICATES, EmbeddingVerdict
from .errors import HcLabError
from .group import Group, Subgroup, generated_subgroup, is_normal
from .harness import REGISTRY, STATEMENTS, SuiteConfig, verify_suite
from .lattice import all_subgroups, frattini, prime_factors, sylow_subgroup, sylow_subgroups
from .series import center, fitting, generalized_fitting, hypercenter, nilpotent_residual

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SKIP = 0, 1, 2, 3


@dataclass
class CliConfig:
    caps: _config.Caps = field(default_factory=_config.Caps)
    corpus: list[str] | None = None
    fmt: str = "text"
    out: str | None = None
    jobs: int = 1
    diagnostic: bool = False

    @classmethod
    def from_args(cls, args) -> "CliConfig":
        caps = _config.get_caps()
        overrides = {
            "order": args.cap_order,
            "lattice": args.cap_lattice,
            "isomorphism": args.cap_iso,
        }
        caps = _config.Caps(**{k: (v if v is not None else getattr(caps, k)) for k, v in overrides.items()})
        if args.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        return cls(caps, args.corpus, args.format, args.out, args.jobs, args.diagnostic)


def _positive(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-order", type=_positive)
    common.add_argument("--cap-lattice", type=_positive)
    common.add_argument("--cap-iso", type=_positive)
    common.add_argument("--corpus", nargs="+", metavar="PATH", help="Cayley-table files replacing the default corpus")
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--out", metavar="PATH", help="also write line-delimited records here")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--diagnostic", action="store_true", help="evaluate conclusions even when hypotheses fail")

    ap = argparse.ArgumentParser(prog="hclab", description="Finite group engine and theorem harness.")
    sub = ap.add_subparsers(dest="command", required=True)
    info = sub.add_parser("info", parents=[common], help="characteristic subgroups and class membership")
    info.add_argument("group")
    check = sub.add_parser("check", parents=[common], help="evaluate an embedding predicate")
    check.add_argument("predicate", choices=sorted(PREDICATES))
    check.add_argument("group")
    check.add_argument("selector", help="'order=k,index=j', comma-separated generator indices, or 'whole'")
    verify = sub.add_parser("verify", parents=[common], help="run statements over the corpus")
    verify.add_argument("ids", nargs="+", help="statement ids or 'all'")
    return ap


def select_subgroup(G: Group, selector: str) -> Subgroup:
    selector = selector.strip()
    if selector == "whole":
        return G.whole
    if selector.startswith("order="):
        parts = dict(p.split("=", 1) for p in selector.split(","))
        try:
            return all_subgroups(G).select(int(parts["order"]), int(parts.get("index", 0)))
        except KeyError:
            raise ValueError(f"selector {selector!r} needs order=k[,index=j]") from None
        except IndexError as exc:
            raise ValueError(str(exc)) from None
    gens = [int(x) for x in selector.split(",") if x.strip()]
    if any(not 0 <= g < G.order for g in gens):
        raise ValueError(f"element index out of range 0..{G.order - 1}")
    return generated_subgroup(G, gens)


def _describe(G: Group, H: Subgroup | None) -> str:
    if H is None:
        return "-"
    return f"{all_subgroups(G).selector(H)} members={list(H.members)}"


def cmd_info(G: Group) -> str:
    lines = [f"group {G.name}", f"order {G.order}"]
    rows = [
        ("center", center(G)),
        ("frattini", frattini(G)),
        ("fitting", fitting(G)),
        ("generalized_fitting", generalized_fitting(G)),
        ("hypercenter", hypercenter(G)),
        ("nilpotent_residual", nilpotent_residual(G)),
    ]
    lines += [f"{name} order {S.size}" for name, S in rows]
    lines.append(f"nilpotent {str(is_nilpotent(G)).lower()}")
    lines.append(f"supersolvable {str(is_supersolvable(G)).lower()}")
    lines.append(f"solvable {str(is_solvable(G)).lower()}")
    for p in prime_factors(G.order):
        P = sylow_subgroup(G, p)
        lines.append(
            f"sylow p={p} order={P.size} count={len(sylow_subgroups(G, p))} "
            f"cyclic={str(is_cyclic(P)).lower()} normal={str(is_normal(G, P)).lower()}"
        )
    return "\n".join(lines) + "\n"


def cmd_check(predicate: str, G: Group, H: Subgroup) -> tuple[str, EmbeddingVerdict]:
    v = PREDICATES[predicate](G, H)
    lines = [
        f"{predicate}({G.name}, {_describe(G, H)}) = {str(v.holds).lower()}",
    ]
    if v.witness is not None:
        lines.append(f"witness {_describe(G, v.witness)}")
    if v.counterexample is not None:
        a, b = v.counterexample
        lines.append(f"counterexample ({a}, {b}) = ({G.label(a)}, {G.label(b)})")
    if v.detail:
        lines.append(f"detail {json.dumps(v.detail, sort_keys=True)}")
    return "\n".join(lines) + "\n", v


def cmd_verify(ids: list[str], cfg: CliConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    if ids == ["all"]:
        ids = [s.id for s in STATEMENTS]
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        print(f"error: unknown statement id(s): {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    corpus = [load_group(p) for p in cfg.corpus] if cfg.corpus else None
    report = verify_suite(ids, corpus, SuiteConfig(cfg.jobs, cfg.diagnostic, None, cfg.caps))
    records = report.to_records()
    if cfg.fmt == "records":
        stdout.write(records)
    else:
        stdout.write(report.to_text(by_group=len(ids) < len(STATEMENTS)))
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(records)
    return report.exit_code()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = _config.get_caps()
    try:
        cfg = CliConfig.from_args(args)
        _config.set_caps(cfg.caps)
        if args.command == "info":
            sys.stdout.write(cmd_info(realize(args.group)))
            return EXIT_OK
        if args.command == "check":
            G = realize(args.group)
            text, _ = cmd_check(args.predicate, G, select_subgroup(G, args.selector))
            sys.stdout.write(text)
            return EXIT_OK
        return cmd_verify(args.ids, cfg)
    except (HcLabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        _config.set_caps(saved)


if __name__ == "__main__":
    sys.exit(main())
