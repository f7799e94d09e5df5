"""Command-line surface: rendering, configuration, and a content-addressed cache.

Subcommands: betti, verify, diagram, decompose, cube, wps.  Payloads go to
stdout and are byte-stable for fixed arguments and configuration; progress and
timing go to stderr.  Results are cached under a content hash of (command,
arguments, configuration, engine version); cached reruns replay the payload
without touching any rank computation.

Exit codes: 0 success / verified match, 1 verified mismatch, 2 usage error,
3 resource cap exceeded.

Configuration precedence: flags > environment (VSYZ_*) > config file > defaults.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from dataclasses import dataclass

from . import __version__, betti, exactla, partitions
from .characters import (
    SchurDecomposition,
    decompose_character,
    exterior_power_character,
    ext_sym2_decomposition,
    multiplicity_free,
    schur_character,
    schur_dimension,
    sym_power_character,
    tensor_decompose,
)
from .exactla import CapExceeded, DEFAULT_PRIMES

DEFAULT_EXACT_CAP = 2000
DEFAULT_MATRIX_CAP = 250_000


@dataclass(frozen=True)
class RunConfig:
    primes: tuple[int, int] = DEFAULT_PRIMES
    exact_cap: int = DEFAULT_EXACT_CAP
    matrix_cap: int = DEFAULT_MATRIX_CAP
    cache_dir: str = ""
    workers: int = 1

    def validate(self) -> "RunConfig":
        p1, p2 = self.primes
        if p1 == p2:
            raise ValueError("the two working primes must be distinct")
        for p in self.primes:
            if not exactla.is_prime(p):
                raise ValueError(f"{p} is not prime")
        if self.exact_cap < 1 or self.matrix_cap < 1 or self.workers < 1:
            raise ValueError("caps and worker count must be positive")
        return self


def _default_cache_dir() -> str:
    return os.path.join(os.path.expanduser("~"), ".cache", "vsyz")


def _read_config_file(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def _parse_primes(text: str) -> tuple[int, int]:
    parts = [int(x) for x in text.replace(" ", "").split(",") if x]
    if len(parts) != 2:
        raise ValueError(f"expected two primes, got {text!r}")
    return (parts[0], parts[1])


def resolve_config(args) -> RunConfig:
    values = {
        "primes": DEFAULT_PRIMES,
        "exact_cap": DEFAULT_EXACT_CAP,
        "matrix_cap": DEFAULT_MATRIX_CAP,
        "cache_dir": _default_cache_dir(),
        "workers": min(4, os.cpu_count() or 1),
    }
    if getattr(args, "config", None):
        file_vals = _read_config_file(args.config)
        if "primes" in file_vals:
            values["primes"] = _parse_primes(file_vals["primes"])
        for key in ("exact_cap", "matrix_cap", "workers"):
            if key in file_vals:
                values[key] = int(file_vals[key])
        if "cache_dir" in file_vals:
            values["cache_dir"] = file_vals["cache_dir"]
    env = os.environ
    if env.get("VSYZ_PRIMES"):
        values["primes"] = _parse_primes(env["VSYZ_PRIMES"])
    if env.get("VSYZ_EXACT_CAP"):
        values["exact_cap"] = int(env["VSYZ_EXACT_CAP"])
    if env.get("VSYZ_MATRIX_CAP"):
        values["matrix_cap"] = int(env["VSYZ_MATRIX_CAP"])
    if env.get("VSYZ_CACHE_DIR"):
        values["cache_dir"] = env["VSYZ_CACHE_DIR"]
    if env.get("VSYZ_WORKERS"):
        values["workers"] = int(env["VSYZ_WORKERS"])
    if getattr(args, "primes", None):
        values["primes"] = _parse_primes(args.primes)
    if getattr(args, "exact_cap", None) is not None:
        values["exact_cap"] = args.exact_cap
    if getattr(args, "matrix_cap", None) is not None:
        values["matrix_cap"] = args.matrix_cap
    if getattr(args, "cache_dir", None):
        values["cache_dir"] = args.cache_dir
    if getattr(args, "workers", None) is not None:
        values["workers"] = args.workers
    return RunConfig(**values).validate()


# -- cache ------------------------------------------------------------------

def _cache_key(command: str, params: dict, config: RunConfig) -> str:
    blob = json.dumps({
        "command": command,
        "params": params,
        "config": {
            "primes": list(config.primes),
            "exact_cap": config.exact_cap,
            "matrix_cap": config.matrix_cap,
        },
        "version": __version__,
    }, sort_keys=True)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _cache_load(config: RunConfig, key: str):
    path = os.path.join(config.cache_dir, key + ".json")
    try:
        with open(path, encoding="utf-8") as fh:
            record = json.load(fh)
        payload = record["payload"]
        digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
        if record.get("sha256") != digest or record.get("key") != key:
            return None
        return payload, int(record.get("exit", 0))
    except (OSError, ValueError, KeyError):
        return None


def _cache_store(config: RunConfig, key: str, payload: str, exit_code: int) -> None:
    try:
        os.makedirs(config.cache_dir, exist_ok=True)
        record = {
            "key": key,
            "sha256": hashlib.sha256(payload.encode("utf-8")).hexdigest(),
            "exit": exit_code,
            "payload": payload,
        }
        fd, tmp = tempfile.mkstemp(dir=config.cache_dir, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(record, fh)
        os.replace(tmp, os.path.join(config.cache_dir, key + ".json"))
    except OSError as exc:  # cache failures must never break results
        print(f"warning: cache write failed: {exc}", file=sys.stderr)


# -- rendering ----------------------------------------------------------------

def format_decomposition(dec: SchurDecomposition) -> str:
    if dec.is_zero():
        return "0"
    bits = []
    for lam, mult in dec.terms:
        bits.append(f"({partitions.format_partition(lam)}):{mult} "
                    f"[{schur_dimension(lam, dec.n)}]")
    return ", ".join(bits)


def _schur_json(dec: SchurDecomposition) -> list:
    return [{"partition": list(lam), "mult": m} for lam, m in dec.terms]


def table_to_json(table: betti.BettiTable) -> str:
    obj = {
        "n": table.n,
        "a": table.a,
        "entries": [
            {
                "p": e.p,
                "degree": e.degree,
                "dimension": e.dimension,
                "schur": _schur_json(e.decomposition),
            }
            for _, e in table.entries
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def table_from_json(text: str) -> betti.BettiTable:
    obj = json.loads(text)
    n, a = obj["n"], obj["a"]
    entries = []
    for item in obj["entries"]:
        dec = SchurDecomposition.from_dict(
            n, {tuple(t["partition"]): t["mult"] for t in item["schur"]})
        e = betti.BettiEntry(item["p"], item["degree"], dec, item["dimension"])
        entries.append(((e.p, e.degree), e))
    return betti.BettiTable(n=n, a=a, p_max=betti.default_p_max(n),
                            entries=tuple(sorted(entries, key=lambda kv: kv[0])))


def table_to_csv(table: betti.BettiTable) -> str:
    import csv
    import io
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", "degree", "dimension", "schur"])
    for _, e in table.entries:
        schur = "+".join(f"({partitions.format_partition(lam)}):{m}"
                         for lam, m in e.decomposition.terms)
        writer.writerow([e.p, e.degree, e.dimension, schur])
    return buf.getvalue()


def render_grid(table: betti.BettiTable) -> str:
    """Macaulay2-style display: columns p, rows indexed by degree - p."""
    dims = table.dims()
    if not dims:
        return "(empty table)\n"
    pmax = max(p for p, _ in dims)
    rows = sorted({d - p for p, d in dims})
    totals = [sum(v for (p, _), v in dims.items() if p == pc) for pc in range(pmax + 1)]
    grid = {}
    for (p, d), v in dims.items():
        grid[(d - p, p)] = v
    width = max(len(str(v)) for v in list(dims.values()) + totals + [0]) + 1
    head_label = max(len(f"{r}:") for r in rows + [0])
    head_label = max(head_label, len("total:"))
    lines = []
    lines.append(" " * head_label + "".join(f"{p:>{width}}" for p in range(pmax + 1)))
    lines.append("total:".rjust(head_label)
                 + "".join(f"{t:>{width}}" for t in totals))
    for r in rows:
        cells = []
        for p in range(pmax + 1):
            v = grid.get((r, p))
            cells.append(f"{v if v is not None else '.':>{width}}")
        lines.append(f"{r}:".rjust(head_label) + "".join(cells))
    return "\n".join(lines) + "\n"


def render_table(table: betti.BettiTable) -> str:
    parts = [render_grid(table), "\n"]
    for _, e in table.entries:
        parts.append(f"R_{{{e.p},{e.degree}}} = "
                     f"{format_decomposition(e.decomposition)}  (dim {e.dimension})\n")
    return "".join(parts)


# -- subcommands --------------------------------------------------------------

def _cmd_betti(args, config: RunConfig) -> tuple[str, int]:
    table = betti.betti_table(args.n, args.a, p_max=args.p_max)
    if args.format == "json":
        return table_to_json(table), 0
    if args.format == "csv":
        return table_to_csv(table), 0
    return render_table(table), 0


def _cmd_wps(args, config: RunConfig) -> tuple[str, int]:
    table = betti.wps_betti(args.l, args.m, p_max=args.p_max)
    ambient = betti.wps_ambient_dim(args.l, args.m)
    if args.format == "json":
        obj = {"l": args.l, "m": args.m, "ambient": ambient,
               "table": json.loads(table_to_json(table))}
        return json.dumps(obj, indent=2) + "\n", 0
    if args.format == "csv":
        return table_to_csv(table), 0
    head = f"P(1^{args.l}, 2^{args.m}) in P^{ambient}\n\n"
    return head + render_table(table), 0


def _cmd_verify(args, config: RunConfig) -> tuple[str, int]:
    from . import koszul
    field = "exact" if args.exact else (args.prime if args.prime else None)
    p_max = args.p_max if args.p_max is not None else betti.default_p_max(args.n)
    report = koszul.verify_theorem(
        args.n, args.a, p_max, args.q_max,
        equivariant=args.equivariant, field=field,
        primes=config.primes, matrix_cap=config.matrix_cap,
        workers=config.workers,
    )
    print(f"verified {len(report.results)} positions in {report.elapsed:.2f}s "
          f"(backend: {exactla.active_backend()})", file=sys.stderr)
    code = 0 if report.all_match else 1
    if args.format == "json":
        obj = {
            "n": report.n, "a": report.a, "equivariant": report.equivariant,
            "all_match": report.all_match,
            "positions": [
                {
                    "p": r.p, "q": r.q, "degree": r.p + r.q,
                    "closed_dim": r.closed_dim, "oracle_dim": r.oracle_dim,
                    "match": r.match,
                    **({"closed": _schur_json(r.closed_decomposition),
                        "oracle": _schur_json(r.oracle_decomposition)}
                       if report.equivariant else {}),
                }
                for r in report.results
            ],
        }
        return json.dumps(obj, indent=2) + "\n", code
    lines = []
    for r in report.results:
        status = "ok" if r.match else "MISMATCH"
        line = (f"p={r.p} q={r.q} degree={r.p + r.q}: closed={r.closed_dim} "
                f"oracle={r.oracle_dim} {status}")
        if report.equivariant and (r.closed_dim or r.oracle_dim or not r.match):
            line += (f"\n    closed: {format_decomposition(r.closed_decomposition)}"
                     f"\n    oracle: {format_decomposition(r.oracle_decomposition)}")
        lines.append(line)
    verdict = ("all positions match" if report.all_match
               else f"{len(report.mismatches)} position(s) mismatch")
    lines.append(verdict)
    return "\n".join(lines) + "\n", code


def _cmd_diagram(args, config: RunConfig) -> tuple[str, int]:
    p = partitions.parse_partition(args.partition)
    if args.kind == "hooks":
        return partitions.format_hooks(partitions.frobenius_hooks(p)) + "\n", 0
    if args.kind == "cset":
        inner = ",".join(str(x) for x in sorted(partitions.c_set(p)))
        return "{" + inner + "}\n", 0
    return partitions.format_partition(partitions.conjugate(p)) + "\n", 0


def _parse_rep(spec: str, n: int):
    if spec.startswith("sym:"):
        return sym_power_character(int(spec[4:]), n)
    return schur_character(partitions.parse_partition(spec), n)


def _cmd_decompose(args, config: RunConfig) -> tuple[str, int]:
    if args.kind == "ext-sym2":
        if args.w is None:
            raise UsageError("ext-sym2 needs --w")
        dec = ext_sym2_decomposition(args.w, args.n)
        return format_decomposition(dec) + "\n", 0
    if args.kind == "tensor":
        if args.lhs is None or args.rhs is None:
            raise UsageError("tensor needs --lhs and --rhs")
        dec = tensor_decompose(partitions.parse_partition(args.lhs),
                               partitions.parse_partition(args.rhs), args.n)
        return format_decomposition(dec) + "\n", 0
    if args.k is None or args.rep is None:
        raise UsageError("ext-char needs --rep and --k")
    chi = _parse_rep(args.rep, args.n)
    dec = decompose_character(exterior_power_character(chi, args.k))
    text = format_decomposition(dec)
    flag = "no" if multiplicity_free(dec) else "yes"
    return f"{text}\nrepeated summands: {flag}\n", 0


def _cmd_cube(args, config: RunConfig) -> tuple[str, int]:
    from . import koszul
    if not 0 <= args.truncate <= args.c:
        raise UsageError("need 0 <= truncate <= c")
    hom = koszul.truncated_cube_homology(args.c, args.truncate)
    if not hom:
        return "acyclic\n", 0
    return "".join(f"degree {j}: {d}\n" for j, d in sorted(hom.items())), 0


class UsageError(ValueError):
    pass


_COMMANDS = {
    "betti": _cmd_betti,
    "verify": _cmd_verify,
    "diagram": _cmd_diagram,
    "decompose": _cmd_decompose,
    "cube": _cmd_cube,
    "wps": _cmd_wps,
}


def _cache_params(command: str, args) -> dict:
    keys = {
        "betti": ("n", "a", "p_max", "format"),
        "verify": ("n", "a", "p_max", "q_max", "equivariant", "prime", "exact",
                   "format"),
        "diagram": ("kind", "partition"),
        "decompose": ("kind", "w", "n", "lhs", "rhs", "rep", "k"),
        "cube": ("c", "truncate"),
        "wps": ("l", "m", "p_max", "format"),
    }[command]
    return {k: getattr(args, k, None) for k in keys}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value configuration file")
    common.add_argument("--cache-dir", dest="cache_dir")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--workers", type=int)
    common.add_argument("--primes", help="two comma-separated working primes")
    common.add_argument("--exact-cap", dest="exact_cap", type=int)
    common.add_argument("--matrix-cap", dest="matrix_cap", type=int)

    parser = argparse.ArgumentParser(
        prog="vsyz",
        description="Equivariant syzygies of the quadratic Veronese embedding",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_betti = sub.add_parser("betti", parents=[common],
                             help="closed-form Betti table")
    p_betti.add_argument("--n", type=int, required=True)
    p_betti.add_argument("--a", type=int, required=True)
    p_betti.add_argument("--p-max", dest="p_max", type=int)
    p_betti.add_argument("--format", choices=("table", "json", "csv"),
                         default="table")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="closed form vs Koszul rank oracle")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--a", type=int, required=True)
    p_verify.add_argument("--p-max", dest="p_max", type=int)
    p_verify.add_argument("--q-max", dest="q_max", type=int, default=3)
    p_verify.add_argument("--equivariant", action="store_true")
    p_verify.add_argument("--prime", type=int)
    p_verify.add_argument("--exact", action="store_true")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_diag = sub.add_parser("diagram", parents=[common],
                            help="hook notation, C-set, conjugate")
    p_diag.add_argument("kind", choices=("hooks", "cset", "conj"))
    p_diag.add_argument("partition")

    p_dec = sub.add_parser("decompose", parents=[common],
                           help="representation decompositions")
    p_dec.add_argument("kind", choices=("ext-sym2", "tensor", "ext-char"))
    p_dec.add_argument("--n", type=int, required=True)
    p_dec.add_argument("--w", type=int)
    p_dec.add_argument("--lhs")
    p_dec.add_argument("--rhs")
    p_dec.add_argument("--rep", help="sym:<d> or a partition like 2,1")
    p_dec.add_argument("--k", type=int)

    p_cube = sub.add_parser("cube", parents=[common],
                            help="truncated combinatorial cube homology")
    p_cube.add_argument("--c", type=int, required=True)
    p_cube.add_argument("--truncate", type=int, default=0)

    p_wps = sub.add_parser("wps", parents=[common],
                           help="weighted projective space P(1^l, 2^m)")
    p_wps.add_argument("--l", type=int, required=True)
    p_wps.add_argument("--m", type=int, required=True)
    p_wps.add_argument("--p-max", dest="p_max", type=int)
    p_wps.add_argument("--format", choices=("table", "json", "csv"),
                       default="table")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = resolve_config(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    use_cache = not args.no_cache
    key = _cache_key(args.command, _cache_params(args.command, args), config)
    if use_cache:
        hit = _cache_load(config, key)
        if hit is not None:
            payload, code = hit
            sys.stdout.write(payload)
            return code
    try:
        payload, code = _COMMANDS[args.command](args, config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(payload)
    if use_cache:
        _cache_store(config, key, payload, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
