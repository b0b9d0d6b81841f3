"""
Command-line front end.

    hermorbit catalog [--bounds B] [--json]
    hermorbit dim <space> [--deg d] [--json]
    hermorbit holonomy <space> [--bounds B] [--json]
    hermorbit verify table2|table1|para|alto|orbits|all [--bounds B] [--json]

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional, Sequence, TextIO

from .catalog import (
    DEFAULT_BOUNDS,
    HSS,
    Bounds,
    CatalogError,
    NoStoredOrbitError,
    canonical,
    complex_orbit,
    cominuscule,
    enumerate_spaces,
    isotropy,
    parse_space,
    presentation,
    table1_row,
)
from .classify import ClassificationError, holonomy_match, normal_holonomy
from .embed import embedding_report, first_codim
from .verify import SUITES, VerificationSummary, run_suite

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 by default; 2 is reserved here
        raise UsageError(message)


@dataclass(frozen=True)
class CatalogEntry:
    space: str
    dim_c: int
    rank: int
    presentation: str
    isotropy: str
    ambient: str
    node: int
    codim_1: int

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "CatalogEntry":
        return cls(**data)


@dataclass(frozen=True)
class HolonomyReport:
    space: str
    row: Optional[str]
    orbit: Optional[str]
    holonomy: Optional[str]
    holonomy_presentation: Optional[str]
    coarse_candidates: list
    own_holonomy: Optional[str]
    bounds: str

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "HolonomyReport":
        return cls(**data)


def catalog_entries(bounds: Bounds) -> list[CatalogEntry]:
    out = []
    for d in enumerate_spaces(bounds):
        t, j = cominuscule(d)
        out.append(CatalogEntry(str(d), d.dim_c, d.rank, presentation(d), str(isotropy(d)), str(t), j, first_codim(d)))
    return out


def holonomy_report(d, bounds: Bounds) -> HolonomyReport:
    d = canonical(d)
    if not isinstance(d, HSS):
        hol = normal_holonomy(d, bounds)
        coarse, _ = holonomy_match(d, bounds)
        return HolonomyReport(str(d), None, None, str(hol), presentation(hol),
                              [str(c) for c in coarse.candidates], None, str(bounds))
    row = orbit = hol = pres = own = None
    coarse_c: list = []
    try:
        row, _ = table1_row(d)
    except NoStoredOrbitError:
        pass
    if row is not None:
        m = complex_orbit(d)
        h = normal_holonomy(m, bounds)
        coarse, _ = holonomy_match(m, bounds)
        orbit, hol, pres = str(m), str(h), presentation(h)
        coarse_c = [str(c) for c in coarse.candidates]
    if d.rank <= 2:
        own = str(normal_holonomy(d, bounds))
    return HolonomyReport(str(d), row, orbit, hol, pres, coarse_c, own, str(bounds))


def _render_holonomy(r: HolonomyReport) -> str:
    lines = []
    if r.orbit is not None:
        lines.append(f"{r.orbit}")
        lines.append(f"  {r.space}: {r.row} row, K-orbit of highest weight vectors in P(T_o) is {r.orbit}")
        lines.append(f"  normal holonomy of {r.orbit}: {r.holonomy} [{r.holonomy_presentation}]")
    elif r.holonomy is not None:
        lines.append(f"{r.holonomy}")
        lines.append(f"  normal holonomy of {r.space} (Segre): {r.holonomy} [{r.holonomy_presentation}]")
    else:
        lines.append(f"{r.space}: no proper K-orbit (rank 1)")
    if r.holonomy is not None:
        n = len(r.coarse_candidates)
        lines.append(
            f"  unique match within bounds {r.bounds} "
            f"(type-level quotient matching gives {n} candidate{'s' if n != 1 else ''}: "
            f"{', '.join(r.coarse_candidates) or '-'})"
        )
    if r.own_holonomy is not None:
        lines.append(f"  normal holonomy of {r.space} in its parallel embedding: {r.own_holonomy}")
    return "\n".join(lines)


def _bounds(text: Optional[str]) -> Bounds:
    return DEFAULT_BOUNDS if text is None else Bounds.parse(text)


def _space(text: str):
    return parse_space(text)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hermorbit", description="Parallel submanifolds of CP^N and their normal holonomy.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("catalog", help="list catalog entries")
    c.add_argument("--bounds")
    c.add_argument("--json", action="store_true")

    d = sub.add_parser("dim", help="embedding dimension and codimension")
    d.add_argument("space")
    d.add_argument("--deg", type=int, default=1)
    d.add_argument("--json", action="store_true")

    h = sub.add_parser("holonomy", help="orbit and normal holonomy")
    h.add_argument("space")
    h.add_argument("--bounds")
    h.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=[*SUITES, "all"])
    v.add_argument("--bounds")
    v.add_argument("--json", action="store_true")
    return p


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "catalog":
            entries = catalog_entries(_bounds(args.bounds))
            if args.json:
                print(_dump([e.to_dict() for e in entries]), file=out)
            else:
                for e in entries:
                    print(
                        f"{e.space:<14} dim {e.dim_c:>3}  rank {e.rank}  {e.presentation:<28} "
                        f"K = {e.isotropy:<16} {e.ambient} node {e.node}  codim f_1 = {e.codim_1}",
                        file=out,
                    )
            return EXIT_OK

        if args.command == "dim":
            rep = embedding_report(_space(args.space), args.deg)
            if args.json:
                print(_dump(rep.to_dict()), file=out)
            else:
                print(f"N_{rep.d} = {rep.N_d}, dim = {rep.dim_c}, codim = {rep.codim}", file=out)
                if rep.star is not None:
                    print(f"codim > m(m+1)/2: {rep.star}", file=out)
                    print(f"codim >= N_1(N_1+1)/2: {rep.para0_weak}", file=out)
            return EXIT_OK

        if args.command == "holonomy":
            bounds = _bounds(args.bounds)
            space = _space(args.space)
            try:
                rep = holonomy_report(space, bounds)
            except ClassificationError as e:
                print(f"error: {e}", file=err)
                return EXIT_FAILED
            print(_dump(rep.to_dict()) if args.json else _render_holonomy(rep), file=out)
            return EXIT_OK

        bounds = _bounds(args.bounds)
        names = list(SUITES) if args.suite == "all" else [args.suite]
        summaries: list[VerificationSummary] = [run_suite(n, bounds) for n in names]
        if args.json:
            print(_dump([s.to_dict() for s in summaries]), file=out)
        else:
            for s in summaries:
                print(s.render(), file=out)
        return EXIT_OK if all(s.passed for s in summaries) else EXIT_FAILED

    except (UsageError, CatalogError, NoStoredOrbitError, ValueError) as e:
        print(f"hermorbit: error: {e}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
