"""
The `qa` command-line driver.

Each subcommand builds its objects from flags, runs one computation and
writes JSON (default), CSV or DOT to stdout. Logging goes to stderr.
Exit codes: 0 on success, 2 on domain errors and usage errors, 3 when a
result is not computable in the requested frame or the truncation is
inconclusive.
"""
import argparse
import csv
import json
import logging
import sys
from typing import Dict, List, Optional, Sequence

from .algebra_core.rootdata import RootDatum, build_root_datum
from .algebra_core.weyl import ExtendedWeylElement, omega_word
from .combinatorics.cells import (
    JRing,
    cell_partition,
    d_count,
    jring_rows,
)
from .combinatorics.crystals import build_BW, parse_lambda
from .combinatorics.symfun import LaurentSchur, lr_multiply, oracle_multiply, parse_shape
from .config import get_config
from .quantum.canonical import canonical_basis_at_weight
from .quantum.pbw import PBWBasis
from .quantum.uplus import configure_form_cache, form, form_cache_stats, parse_element, root_of_weight
from .workbench_utils.errors import DomainError, WorkbenchError
from .workbench_utils.logging import ComputationLogger
from .workbench_utils.metrics import get_metrics

# Set up logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _emit_json(payload, out) -> None:
    out.write(json.dumps(payload, sort_keys=True, indent=2))
    out.write("\n")


def _emit_csv(rows: Sequence[Sequence[str]], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)


def _parse_ints(text: str, what: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",")] if text.strip() else []
    except ValueError as e:
        raise DomainError(f"cannot parse {what} '{text}'") from e


def _parse_weight(datum: RootDatum, text: str):
    coords = _parse_ints(text, "weight")
    if len(coords) != len(datum.nodes):
        raise DomainError(f"weight '{text}' needs {len(datum.nodes)} coordinates")
    return root_of_weight(coords)


# subcommand handlers

def cmd_rootdata(args, cfg, out) -> int:
    datum = build_root_datum(args.type)
    payload = datum.to_dict()
    payload['classical_gram_positive_definite'] = datum.gram_is_positive_definite()
    _emit_json(payload, out)
    return EXIT_OK


def cmd_roots(args, cfg, out) -> int:
    datum = build_root_datum(args.type)
    entries = datum.enumerate_positive_roots(args.cutoff)
    if args.csv:
        rows = [["root", "kind", "node", "d_alpha"]]
        for e in entries:
            d_alpha = "" if e.kind == 'R0' else str(datum.d_alpha(e.root))
            rows.append([str(e.root), e.kind, "" if e.node is None else str(e.node), d_alpha])
        _emit_csv(rows, out)
        return EXIT_OK
    payload = []
    for e in entries:
        item = {"root": [str(c) for c in e.root.coords], "kind": e.kind}
        if e.node is not None:
            item["node"] = str(e.node)
        else:
            item["d_alpha"] = str(datum.d_alpha(e.root))
        payload.append(item)
    _emit_json({"type": args.type, "cutoff": str(args.cutoff), "roots": payload}, out)
    return EXIT_OK


def cmd_weyl(args, cfg, out) -> int:
    datum = build_root_datum(args.type)
    h = omega_word(datum)
    payload: Dict[str, object] = {
        "h": {
            "base": [str(i) for i in h.base],
            "tau": [str(i) for i in h.tau],
            "N": str(h.N),
        },
    }
    window = args.window if args.window > 0 else h.N
    payload["beta"] = {
        str(k): {"letter": str(h.letter(k)), "root": [str(c) for c in h.beta(k).coords], "side": h.kind(k)}
        for k in range(-window + 1, window + 1)
    }
    if args.word is not None or args.translation is not None:
        word = _parse_ints(args.word or "", "word")
        element = ExtendedWeylElement.from_word(datum, word)
        if args.translation:
            xi = _parse_ints(args.translation, "translation")
            if len(xi) != datum.n:
                raise DomainError(f"translation needs {datum.n} coordinates")
            element = ExtendedWeylElement.translation_omega(datum, xi) * element
        reduced, tau = element.reduced_word()
        decomposition = element.translation_decompose()
        payload["element"] = {
            "reduced_word": [str(i) for i in reduced],
            "tau": [str(i) for i in tau],
            "length": str(len(reduced)),
            "translation": [str(c) for c in decomposition.xi],
            "finite_word": [str(i) for i in decomposition.finite_word],
        }
    _emit_json(payload, out)
    return EXIT_OK


def cmd_pbw(args, cfg, out) -> int:
    datum = build_root_datum(args.type)
    h = omega_word(datum)
    nu = _parse_weight(datum, args.weight)
    basis = PBWBasis(nu, args.frame, h, cfg.SCHUR_TRANSPOSE, cfg.FRAME_LIMIT, cfg.SHOW_PROGRESS)
    payload: Dict[str, object] = {
        "weight": [str(c) for c in nu.coords],
        "frame": str(args.frame),
        "indices": [{"label": c.label(), **c.to_json()} for c in basis.indices],
    }
    if args.gram:
        payload["gram"] = [[str(v) for v in row] for row in basis.gram]
        payload["almost_orthonormal"] = basis.almost_orthonormal()
    _emit_json(payload, out)
    return EXIT_OK


def cmd_form(args, cfg, out) -> int:
    datum = build_root_datum(args.type)
    x = parse_element(args.x, datum)
    y = parse_element(args.y, datum)
    value = form(x, y, datum)
    ComputationLogger.log_form_cache_stats(*form_cache_stats())
    _emit_json({"x": args.x, "y": args.y, "form": str(value)}, out)
    return EXIT_OK


def cmd_canonical(args, cfg, out) -> int:
    datum = build_root_datum(args.type)
    h = omega_word(datum)
    nu = _parse_weight(datum, args.weight)
    result = canonical_basis_at_weight(nu, args.frame, h, cfg.SCHUR_TRANSPOSE, cfg.FRAME_LIMIT,
                                       cfg.SHOW_PROGRESS)
    _emit_json({
        "weight": [str(c) for c in nu.coords],
        "frame": str(args.frame),
        "canonical": [b.to_json() for b in result.values()],
    }, out)
    return EXIT_OK


def cmd_crystal(args, cfg, out) -> int:
    datum = build_root_datum(args.type)
    crystal = build_BW(datum, parse_lambda(args.lam, datum.n), cfg.EXTREMAL_BFS_FACTOR)
    if args.dot:
        out.write(crystal.to_dot())
        out.write("\n")
        return EXIT_OK
    payload = crystal.to_json()
    payload["lambda"] = [str(v) for v in crystal.lam]
    payload["connected"] = crystal.is_connected()
    payload["axiom_violations"] = crystal.check_axioms()
    if sum(crystal.lam) == 1:
        payload["simple_check"] = crystal.simple_crystal_check()
    _emit_json(payload, out)
    return EXIT_OK


def _ring(args, cfg) -> JRing:
    datum = build_root_datum(args.type)
    boxes = cfg.TRUNC_BOXES if args.boxes is None else args.boxes
    det = cfg.TRUNC_DET if args.det is None else args.det
    return JRing(datum, parse_lambda(args.lam, datum.n), boxes, det)


def cmd_cells(args, cfg, out) -> int:
    partition = cell_partition(_ring(args, cfg))
    _emit_json(partition.to_json(), out)
    if not partition.conclusive:
        logger.warning("cell partition is inconclusive at this truncation")
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_jring(args, cfg, out) -> int:
    rows = jring_rows(_ring(args, cfg), cfg.SHOW_PROGRESS)
    if args.csv:
        _emit_csv(rows, out)
    else:
        header, body = rows[0], rows[1:]
        _emit_json([dict(zip(header, row)) for row in body], out)
    return EXIT_OK


def cmd_afn(args, cfg, out) -> int:
    datum = build_root_datum(args.type)
    # a depends only on b', so the trivial truncation suffices
    ring = JRing(datum, parse_lambda(args.lam, datum.n), 0, 0)
    values = {str(t.b_prime): str(ring.a_function(t)) for t in ring.d_set()}
    _emit_json({"lambda": [str(v) for v in ring.lam], "a": values}, out)
    return EXIT_OK


def cmd_dcount(args, cfg, out) -> int:
    datum = build_root_datum(args.type)
    out.write(f"{d_count(datum, parse_lambda(args.lam, datum.n))}\n")
    return EXIT_OK


def cmd_lr(args, cfg, out) -> int:
    a = LaurentSchur.of(args.m, parse_shape(args.a))
    b = LaurentSchur.of(args.m, parse_shape(args.b))
    product = oracle_multiply(a, b) if args.oracle else lr_multiply(a, b)
    _emit_json({
        "m": str(args.m),
        "a": [str(v) for v in a.shape],
        "b": [str(v) for v in b.shape],
        "product": [[[str(v) for v in s.shape], str(c)] for s, c in sorted(product.items())],
    }, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qa", description="Affine quantum algebra workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    def typed(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--type", required=True, help="Affine type, e.g. A1~1 or A2~2")
        return p

    p = typed("rootdata", "Cartan matrix, marks, comarks and the invariant form")
    p.set_defaults(handler=cmd_rootdata)

    p = typed("roots", "Positive roots up to a delta-degree")
    p.add_argument("--cutoff", type=int, default=2)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=cmd_roots)

    p = typed("weyl", "h-sequence, beta_k and reduced words")
    p.add_argument("--word", help="Comma list of simple reflections")
    p.add_argument("--translation", help="omega~ coordinates of a translation applied on the left")
    p.add_argument("--window", type=int, default=0, help="Print beta_k for -window < k <= window")
    p.set_defaults(handler=cmd_weyl)

    for name, handler, help_text in (("pbw", cmd_pbw, "PBW indices at a weight"),
                                     ("canonical", cmd_canonical, "Canonical basis at a weight")):
        p = typed(name, help_text)
        p.add_argument("--weight", required=True, help="Coordinates in the simple roots, e.g. 1,1")
        p.add_argument("--frame", type=int, default=0)
        if name == "pbw":
            p.add_argument("--gram", action="store_true", help="Include the Gram matrix")
        p.set_defaults(handler=handler)

    p = typed("form", "Drinfeld form of two elements")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(handler=cmd_form)

    p = typed("crystal", "The crystal B_W(lambda)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(handler=cmd_crystal)

    for name, handler, help_text in (("cells", cmd_cells, "Cells of J_lambda"),
                                     ("jring", cmd_jring, "Structure constants of J_lambda")):
        p = typed(name, help_text)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--boxes", type=int, default=None)
        p.add_argument("--det", type=int, default=None)
        if name == "jring":
            p.add_argument("--csv", action="store_true")
        p.set_defaults(handler=handler)

    p = typed("afn", "a-function on B_W(lambda)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(handler=cmd_afn)

    p = typed("dcount", "Number of distinguished involutions")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(handler=cmd_dcount)

    p = sub.add_parser("lr", help="Littlewood-Richardson product of two GL_m representations")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--oracle", action="store_true", help="Use the tableau oracle instead")
    p.set_defaults(handler=cmd_lr)

    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """
    Parse argv, dispatch and return the exit code.

    Args:
        argv: Arguments without the program name
        out: Output stream, stdout by default
    """
    cfg = get_config()
    logging.basicConfig(
        level=getattr(logging, cfg.LOG_LEVEL, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    metrics = get_metrics()
    try:
        configure_form_cache(cfg.FORM_CACHE_SIZE)
        return args.handler(args, cfg, out)
    except WorkbenchError as e:
        logger.error(f"{args.command}: {e}")
        metrics.record_error(type(e).__name__)
        return e.exit_code
    finally:
        logger.debug(f"metrics: {metrics.get_summary()}")


def main() -> None:
    sys.exit(run())
