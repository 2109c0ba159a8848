"""Command-line front end: ``ledger``, ``flip``, ``bott``, ``adhm``, ``walls``.

Exit codes: 0 success, 2 invalid input, 3 request outside the supported scope
under ``--strict``, 4 quiver relation violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import adhm, bott, grassflip, strata
from .lattice import ChernCharacter, NotRepresentableError, expected_dim
from .strata import ContractionKind, ContractionReport, KSign, Side, StratumReport
from .walls import StabilityParam, chamber_sample, classify_parameter, wall_between

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_SCOPE = 3
EXIT_RELATION = 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


# -- serialization ----------------------------------------------------------

def chern_to_dict(v: ChernCharacter) -> dict:
    return {"r": v.r, "k": v.k, "ch2": str(v.ch2)}


def chern_from_dict(d: dict) -> ChernCharacter:
    return ChernCharacter(int(d["r"]), int(d["k"]), Fraction(d["ch2"]))


_STRATUM_INT_FIELDS = (
    "m", "i", "rk_w_minus", "rk_w_plus", "dim_base", "dim_g_minus", "dim_g_plus",
    "codim_minus", "codim_plus",
)


def stratum_to_dict(s: StratumReport) -> dict:
    out: dict[str, Any] = {f: getattr(s, f) for f in _STRATUM_INT_FIELDS}
    out["v"] = chern_to_dict(s.v)
    out["vprime"] = chern_to_dict(s.vprime)
    out["nonempty"] = s.nonempty
    out["fiber_minus"] = f"Gr({s.i},{s.rk_w_minus})"
    out["fiber_plus"] = f"Gr({s.i},{s.rk_w_plus})"
    return out


def stratum_from_dict(d: dict) -> StratumReport:
    return StratumReport(
        v=chern_from_dict(d["v"]),
        vprime=chern_from_dict(d["vprime"]),
        nonempty=bool(d["nonempty"]),
        **{f: int(d[f]) for f in _STRATUM_INT_FIELDS},
    )


def contraction_to_dict(c: ContractionReport) -> dict:
    return {
        "m": c.m,
        "side": c.side.value,
        "k_sign": c.k_sign.value,
        "kind": c.kind.value,
        "per_stratum": [stratum_to_dict(s) for s in c.per_stratum],
    }


def contraction_from_dict(d: dict) -> ContractionReport:
    return ContractionReport(
        m=int(d["m"]),
        side=Side(d["side"]),
        k_sign=KSign(d["k_sign"]),
        kind=ContractionKind(d["kind"]),
        per_stratum=tuple(stratum_from_dict(s) for s in d["per_stratum"]),
    )


@dataclass(frozen=True)
class SodSummand:
    i: int
    count: grassflip.SodCount
    base: ChernCharacter
    base_dim: int

    def to_dict(self) -> dict:
        count = "unknown" if self.count is grassflip.UNKNOWN else self.count
        return {"i": self.i, "count": count, "base": chern_to_dict(self.base), "base_dim": self.base_dim}

    @classmethod
    def from_dict(cls, d: dict) -> "SodSummand":
        count = grassflip.UNKNOWN if d["count"] == "unknown" else int(d["count"])
        return cls(int(d["i"]), count, chern_from_dict(d["base"]), int(d["base_dim"]))


def sod_summary(report: ContractionReport) -> tuple[SodSummand, ...]:
    out = []
    for s in report.per_stratum:
        if not s.nonempty:
            continue
        count = grassflip.sod_summand_count_standard(s.i, s.rk_w_minus, s.rk_w_plus)
        out.append(SodSummand(s.i, count, s.vprime, s.dim_base))
    return tuple(out)


@dataclass(frozen=True)
class LedgerDocument:
    v: ChernCharacter
    m_stop: int
    walls: tuple[ContractionReport, ...]
    sod: tuple[tuple[SodSummand, ...], ...]

    @classmethod
    def build(cls, v: ChernCharacter) -> "LedgerDocument":
        m_stop, reports = strata.wall_sweep(v, Side.PLUS)
        return cls(v, m_stop, tuple(reports), tuple(sod_summary(r) for r in reports))

    def to_dict(self) -> dict:
        return {
            "v": chern_to_dict(self.v),
            "moduli_dim": expected_dim(self.v),
            "m_stop": self.m_stop,
            "active_walls": [w.m for w in self.walls if w.active],
            "walls": [contraction_to_dict(w) for w in self.walls],
            "sod": [
                {"m": w.m, "summands": [s.to_dict() for s in summands]}
                for w, summands in zip(self.walls, self.sod)
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LedgerDocument":
        return cls(
            v=chern_from_dict(d["v"]),
            m_stop=int(d["m_stop"]),
            walls=tuple(contraction_from_dict(w) for w in d["walls"]),
            sod=tuple(tuple(SodSummand.from_dict(s) for s in w["summands"]) for w in d["sod"]),
        )


def flip_to_dict(g: grassflip.FlipGeometry) -> dict:
    sod = grassflip.sod_summand_count_standard(g.i, g.w_minus, g.w_plus)
    return {
        "i": g.i,
        "w_minus": g.w_minus,
        "w_plus": g.w_plus,
        "dim_y": g.dim_y,
        "dim_z_strata": list(g.dim_z_strata),
        "exc_dim_minus": g.exc_dim_minus,
        "exc_dim_plus": g.exc_dim_plus,
        "canonical_weight": g.canonical_weight,
        "kind": g.kind.value,
        "sod_summands": "unknown" if sod is grassflip.UNKNOWN else sod,
    }


# -- output -------------------------------------------------------------------

def flatten(doc: Any, prefix: str = "") -> list[tuple[str, Any]]:
    if isinstance(doc, dict):
        items = []
        for key in sorted(doc):
            items.extend(flatten(doc[key], f"{prefix}.{key}" if prefix else str(key)))
        return items
    if isinstance(doc, list):
        if not doc:
            return [(prefix, [])]
        items = []
        for idx, value in enumerate(doc):
            items.extend(flatten(value, f"{prefix}.{idx}"))
        return items
    return [(prefix, doc)]


def _scalar_text(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "null"
    if x == []:
        return "[]"
    return str(x)


def render_text(doc: dict, headline: Sequence[str] = ()) -> str:
    """Comment lines followed by one ``path = value`` line per leaf of ``doc``."""
    lines = [f"# {h}" for h in headline]
    lines.extend(f"{path} = {_scalar_text(value)}" for path, value in flatten(doc))
    return "\n".join(lines) + "\n"


def emit(doc: dict, fmt: str, headline: Sequence[str] = ()) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(render_text(doc, headline))


def _ledger_headline(doc: LedgerDocument) -> list[str]:
    lines = [f"v = {doc.v}, moduli dim = {expected_dim(doc.v)}, m_stop = {doc.m_stop}"]
    for w in doc.walls:
        fibers = ", ".join(
            f"i={s.i}: Gr({s.i},{s.rk_w_minus})/Gr({s.i},{s.rk_w_plus}) over dim {s.dim_base}"
            for s in w.per_stratum if s.nonempty
        )
        lines.append(f"wall {w.m}: {w.kind.value} ({w.k_sign.value}); {fibers or 'no strata'}")
    return lines


# -- commands -------------------------------------------------------------------

def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise CliError("missing required option(s): " + ", ".join("--" + m for m in missing))


def cmd_ledger(args: argparse.Namespace) -> int:
    _require(args, "r", "ch2x2")
    try:
        v = ChernCharacter.from_twice_ch2(args.r, args.k, args.ch2x2)
    except ValueError as exc:
        raise CliError(f"invalid class: {exc}") from exc
    if v.r <= 0:
        raise CliError("invalid class: rank must be positive")
    if v.k != 0:
        if args.strict:
            raise CliError("k != 0 lies outside the MMP statement (v = (r, 0, ch2))", EXIT_SCOPE)
        print("warning: k != 0; reporting per-wall data only, no MMP claim", file=sys.stderr)
    doc = LedgerDocument.build(v)
    emit(doc.to_dict(), args.format, _ledger_headline(doc))
    return EXIT_OK


def cmd_flip(args: argparse.Namespace) -> int:
    _require(args, "i", "wminus", "wplus")
    try:
        g = grassflip.geometry(args.i, args.wminus, args.wplus)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    emit(flip_to_dict(g), args.format, [f"Grassmannian {g.kind.value}: dim Y = {g.dim_y}"])
    return EXIT_OK


def cmd_bott(args: argparse.Namespace) -> int:
    _require(args, "n", "i", "kmax")
    n, i, kmax = args.n, args.i, args.kmax
    if not 0 < i < n or kmax < 0:
        raise CliError(f"need 0 < i < n and kmax >= 0 (got n={n}, i={i}, kmax={kmax})")
    rows = []
    for k in range(kmax + 1):
        t, s, sym = bott.check_lemma_vanishing(n, i, k)
        rows.append({"k": k, "tangent": t, "sub": s, "sym": sym})
    doc = {"n": n, "i": i, "rows": rows, "all_vanish": all(r["tangent"] and r["sub"] and r["sym"] for r in rows)}
    emit(doc, args.format, [f"H^1 vanishing on Gr({i},{n}) for k <= {kmax}"])
    return EXIT_OK


def cmd_adhm(args: argparse.Namespace) -> int:
    _require(args, "file")
    try:
        rep = adhm.load_rep(args.file)
    except OSError as exc:
        raise CliError(f"cannot read {args.file}: {exc}") from exc
    except ValueError as exc:
        raise CliError(f"cannot parse {args.file}: {exc}") from exc
    dims = rep.dims
    residual = adhm.to_fractions(rep.residual())
    doc: dict[str, Any] = {
        "dims": {"d0": dims.d0, "d1": dims.d1, "dinf": dims.dinf},
        "relation": adhm.check_relation_blowup(rep),
        "residual": [[str(x) for x in row] for row in residual],
    }
    if not doc["relation"]:
        emit(doc, args.format, ["relation B1 d B2 - B2 d B1 + i j = 0 violated"])
        return EXIT_RELATION
    ms = args.m if args.m else [1]
    levels = []
    for m in ms:
        if m < 0:
            raise CliError("m must be non-negative")
        entry: dict[str, Any] = {"m": m, "bn_index": adhm.bn_index(rep, m), "cond1": adhm.m_stability_cond1(rep, m)}
        entry["cond2"] = adhm.m_stability_test(rep, m)[1] if m >= 1 else None
        levels.append(entry)
    doc["levels"] = levels
    if dims.d0 == dims.d1:
        doc["collapsed_stable"] = adhm.is_stable_p2(adhm.collapse_to_p2(rep))
    emit(doc, args.format, [f"representation with dims {dims.as_tuple()}"])
    return EXIT_OK


def cmd_walls(args: argparse.Namespace) -> int:
    if args.zeta0 is not None or args.zeta1 is not None:
        _require(args, "zeta0", "zeta1")
        try:
            z = StabilityParam(Fraction(args.zeta0), Fraction(args.zeta1))
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError(f"invalid stability parameter: {exc}") from exc
        pos = classify_parameter(z)
        doc = {"zeta0": str(z.zeta0), "zeta1": str(z.zeta1), "region": pos.region.value, "m": pos.m}
        emit(doc, args.format, [str(pos)])
        return EXIT_OK
    mmax = 5 if args.mmax is None else args.mmax
    if mmax < 0:
        raise CliError("mmax must be non-negative")
    rows = []
    for m in range(mmax + 1):
        a, b = wall_between(m)
        sample = chamber_sample(m)
        rows.append({"m": m, "wall": [a, b], "chamber_sample": [str(sample.zeta0), str(sample.zeta1)]})
    emit({"walls": rows}, args.format, [f"walls m zeta0 + (m+1) zeta1 = 0 for m <= {mmax}"])
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="framedwall", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="TOML file whose keys mirror the flags")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default=None)
        p.add_argument("--config", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    p = sub.add_parser("ledger", help="wall-by-wall contraction ledger for a class (r, k, ch2)")
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--ch2x2", type=int, help="twice ch2")
    p.add_argument("--strict", action="store_true", default=None)
    common(p)
    p.set_defaults(func=cmd_ledger)

    p = sub.add_parser("flip", help="local Grassmannian flip geometry")
    p.add_argument("--i", type=int)
    p.add_argument("--wminus", type=int)
    p.add_argument("--wplus", type=int)
    common(p)
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("bott", help="H^1 vanishing table on Gr(i, n)")
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--kmax", type=int)
    common(p)
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser("adhm", help="check a blow-up quiver representation file")
    p.add_argument("--file")
    p.add_argument("--m", type=int, action="append")
    common(p)
    p.set_defaults(func=cmd_adhm)

    p = sub.add_parser("walls", help="classify a stability parameter or list walls")
    p.add_argument("--zeta0")
    p.add_argument("--zeta1")
    p.add_argument("--mmax", type=int)
    common(p)
    p.set_defaults(func=cmd_walls)
    return parser


_DEFAULTS = {"format": "text", "k": 0, "strict": False}


def _load_config(path: str, command: str) -> dict:
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise CliError(f"cannot parse config {path}: {exc}") from exc
    merged = {k: v for k, v in raw.items() if not isinstance(v, dict)}
    section = raw.get(command, {})
    if isinstance(section, dict):
        merged.update(section)
    return {key.replace("-", "_"): value for key, value in merged.items()}


def _apply_config(args: argparse.Namespace, config: dict) -> None:
    for key, value in config.items():
        if key in ("func", "command", "config"):
            continue
        if hasattr(args, key) and getattr(args, key) is None:
            if key == "m" and not isinstance(value, list):
                value = [value]
            setattr(args, key, value)
    for key, value in _DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config, args.command) if getattr(args, "config", None) else {}
        _apply_config(args, config)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotRepresentableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
