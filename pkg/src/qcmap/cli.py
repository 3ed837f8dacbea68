"""``qcmap`` command line front end.

Exit codes: 0 on success, 1 when ``certify`` finds violations, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import io
from .mapping import invert_relations, jordan_wigner, mapping_from_decomposition, pauli_to_pauli
from .maxacomm import extending_elements, max_anticommuting_set
from .pauli import parse_pauli
from .qca import LOWEST_PAIR, monomial_chi, monomial_square_sign, run_splitting
from .verify import (
    MAX_CERTIFICATE_QUBITS,
    MAX_RELATION_QUBITS,
    BlockCertificate,
    Report,
    block_structure,
    check_block_certificate,
    check_qca_relations,
    check_star_isomorphism,
    dense_from_paulis,
)


class InputError(Exception):
    pass


def _parse_pivots(text: str | None):
    if not text:
        return LOWEST_PAIR
    pivots = []
    for chunk in text.split(":"):
        try:
            u, v = (int(t) for t in chunk.split(","))
        except ValueError:
            raise InputError(f"bad pivot {chunk!r}; expected u,v:u,v:...") from None
        pivots.append((u - 1, v - 1))
    return pivots


def _parse_branch(text: str | None):
    if text is None:
        return None
    if set(text) - {"+", "-"}:
        raise InputError(f"bad branch {text!r}; expected a string of + and -")
    return [1 if ch == "+" else -1 for ch in text]


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _strings(args_strings: Sequence[str], path: str | None):
    texts = list(args_strings)
    if path:
        doc = _read_json(path)
        texts += doc if isinstance(doc, list) else doc.get("strings", [])
    if not texts:
        raise InputError("no Pauli strings given")
    return [parse_pauli(t) for t in texts]


def _cmd_decompose(args) -> dict:
    spec = io.spec_from_json(_read_json(args.spec))
    return io.decomposition_to_json(run_splitting(spec, _parse_pivots(args.pivots)))


def _cmd_map(args) -> dict:
    if bool(args.spec) == bool(args.from_decomposition):
        raise InputError("give exactly one of --spec and --from-decomposition")
    if args.from_decomposition:
        if args.pivots:
            raise InputError("--pivots cannot be combined with --from-decomposition")
        dec = io.decomposition_from_json(_read_json(args.from_decomposition))
    else:
        spec = io.spec_from_json(_read_json(args.spec))
        dec = run_splitting(spec, _parse_pivots(args.pivots))
    independent = args.mode == "independent"
    branch = _parse_branch(args.branch)
    if independent and branch:
        raise InputError("--branch only applies to scalar mode")
    mapping = mapping_from_decomposition(dec, independent, branch, not args.no_hermitize)
    return io.mapping_to_json(mapping)


def _cmd_pauli_map(args) -> dict:
    return io.star_to_json(pauli_to_pauli(_strings(args.strings, args.file)))


def _cmd_jw(args) -> dict:
    return io.mapping_to_json(jordan_wigner(args.N))


def _cmd_maxacomm(args) -> dict:
    return io.anticommuting_to_json(max_anticommuting_set(_strings(args.strings, args.file)))


def _cmd_blocks(args) -> dict:
    images = _strings(args.strings, args.file)
    return io.certificate_to_json(block_structure(images), images)


def _certify(doc: dict) -> Report:
    if "mode" in doc and "images" in doc:
        spec = io.spec_from_json(doc["spec"])
        images = [parse_pauli(t) for t in doc["images"]]
        k = list(spec.k)
        for i in doc.get("hermitized", []):
            k[int(i) - 1] *= -1
        _cap(images, MAX_RELATION_QUBITS)
        return check_qca_relations(spec.with_k(k), dense_from_paulis(images))
    if "domain" in doc:
        return check_star_isomorphism(io.star_from_json(doc))
    if "pivot_log" in doc:
        return _certify_decomposition(doc)
    if "set" in doc:
        return _certify_set(doc)
    if "diagonal_coords" in doc:
        images = [parse_pauli(t) for t in doc["images"]]
        _cap(images, MAX_CERTIFICATE_QUBITS)
        n = images[0].n
        cert = BlockCertificate(n, tuple(int(q) - 1 for q in doc["diagonal_coords"]))
        report = check_block_certificate(images, cert)
        if doc.get("block_count") != cert.block_count or doc.get("block_size") != cert.block_size:
            report.add("block", ())
        return report
    raise InputError("unrecognized document; expected output of another qcmap subcommand")


def _cap(images, cap: int) -> None:
    if images and images[0].n > cap:
        raise InputError(f"{images[0].n} qubits exceeds the oracle cap of {cap}")


def _certify_decomposition(doc: dict) -> Report:
    dec = io.decomposition_from_json(doc)
    spec = dec.spec
    report = Report()
    gens = dec.generators
    if dec.r + 2 * dec.s != spec.m:
        report.add("decomposition", ())
    try:
        invert_relations(dec.T)
    except ValueError:
        report.add("decomposition", ())
    for a, g in enumerate(gens):
        if monomial_square_sign(spec, g) != dec.squares[a]:
            report.add("square", (a + 1,))
        for b in range(a + 1, len(gens)):
            partner = a < 2 * dec.s and a % 2 == 0 and b == a + 1
            if monomial_chi(spec, g, gens[b]) != int(partner):
                report.add("commutation", (a + 1, b + 1))
    # the decomposition must also realize faithfully on qubits
    mapping = mapping_from_decomposition(dec, True, None, hermitize=False)
    _cap(list(mapping.images), MAX_RELATION_QUBITS)
    rel = check_qca_relations(spec, dense_from_paulis(list(mapping.images)))
    report.violations.extend(rel.violations)
    return report


def _certify_set(doc: dict) -> Report:
    elems = [parse_pauli(t) for t in doc["set"]]
    _cap(elems, MAX_RELATION_QUBITS)
    rep = dense_from_paulis(elems)
    report = Report()
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            a, b = rep.mats[i], rep.mats[j]
            if a @ b != (b @ a).scale(-1):
                report.add("commutation", (i + 1, j + 1))
    if len(elems) % 2 == 0:
        report.add("size", (len(elems),))
    gens = [parse_pauli(t) for t in doc.get("generators", [])]
    if gens and gens[0].n <= 4 and extending_elements(elems, gens):
        report.add("maximality", ())
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcmap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="Wedderburn decomposition of a QcaSpec JSON")
    p.add_argument("--spec", required=True, help="QcaSpec JSON file ('-' for stdin)")
    p.add_argument("--pivots", help="explicit 1-based pivots, e.g. 1,2:3,4")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("map", help="quasi-Clifford to qubit mapping")
    p.add_argument("--spec", help="QcaSpec JSON file ('-' for stdin)")
    p.add_argument("--from-decomposition", help="decomposition JSON from 'decompose'")
    p.add_argument("--pivots", help="explicit 1-based pivots, e.g. 1,2:3,4")
    p.add_argument("--mode", choices=("scalar", "independent"), default="scalar")
    p.add_argument("--branch", help="one of + or - per central element (scalar mode)")
    p.add_argument("--no-hermitize", action="store_true", help="keep anti-Hermitian images")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("pauli-map", help="Pauli-to-Pauli star-isomorphism")
    p.add_argument("strings", nargs="*")
    p.add_argument("--file", help="JSON list of Pauli strings")
    p.set_defaults(func=_cmd_pauli_map)

    p = sub.add_parser("jw", help="Jordan-Wigner images of 2N Majorana operators")
    p.add_argument("N", type=int)
    p.set_defaults(func=_cmd_jw)

    p = sub.add_parser("maxacomm", help="maximal anti-commuting subset of a Pauli group")
    p.add_argument("strings", nargs="*")
    p.add_argument("--file", help="JSON list of Pauli strings")
    p.set_defaults(func=_cmd_maxacomm)

    p = sub.add_parser("blocks", help="block-diagonal certificate for Pauli images")
    p.add_argument("strings", nargs="*")
    p.add_argument("--file", help="JSON list of Pauli strings")
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("certify", help="run the explicit-matrix oracle on a qcmap output")
    p.add_argument("input", help="JSON output of another subcommand ('-' for stdin)")
    p.set_defaults(func=None)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "certify":
            report = _certify(_read_json(args.input))
            stdout.write(io.dumps(report.to_json()))
            return 0 if report.passed else 1
        stdout.write(io.dumps(args.func(args)))
        return 0
    except (InputError, ValueError, KeyError, TypeError) as exc:
        stderr.write(f"qcmap: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
