"""JSON and CSV formats for the command-line surface.

Integer fields in these files are decimal strings: coefficients and
matrix entries routinely exceed 64 bits, and strings keep every consumer
exact.  Polynomials are stored by descending-degree coefficients.
"""

import json

from .exactalg import IntMatrix, IntPolynomial
from .involution import InvolutionRecord
from .lattice import Lattice
from .salem import SalemCertificate, frac_from_str


def _enc_vec(v):
    return [str(int(x)) for x in v]


def _enc_mat(rows):
    return [[str(int(x)) for x in row] for row in rows]


def _dec_vec(v):
    return tuple(int(x) for x in v)


def _dec_mat(rows):
    return IntMatrix([[int(x) for x in row] for row in rows])


def poly_to_json(poly: IntPolynomial) -> dict:
    return {"coeffs_desc": [str(c) for c in reversed(poly.coeffs)]}


def poly_from_json(data: dict) -> IntPolynomial:
    return IntPolynomial([int(c) for c in reversed(data["coeffs_desc"])])


def certificate_to_json(cert: SalemCertificate) -> dict:
    return cert.to_json_dict()


def lattice_to_json(params, tags, gram: IntMatrix) -> dict:
    return {
        "p": str(params.p),
        "sigma": str(params.sigma),
        "q": str(params.q),
        "gamma": str(params.gamma),
        "gram": _enc_mat(gram.rows),
        "tags": [{"kind": t.kind, "block": str(t.block),
                  "index": str(t.index), "scale": str(t.scale)}
                 for t in tags],
    }


def record_to_json(rec: InvolutionRecord) -> dict:
    return {
        "h": _enc_vec(rec.h),
        "singularities": rec.singularities,
        "matrix": _enc_mat(rec.matrix.rows),
    }


def record_from_json(data: dict) -> InvolutionRecord:
    return InvolutionRecord(
        h=_dec_vec(data["h"]),
        components=(),
        matrix=_dec_mat(data["matrix"]),
        singularities=data["singularities"],
    )


def pool_to_json(bundle) -> dict:
    return {
        "p": str(bundle.params.p),
        "sigma": str(bundle.params.sigma),
        "q": str(bundle.params.q),
        "gamma": str(bundle.params.gamma),
        "gram": _enc_mat(bundle.lattice.gram.rows),
        "h0": _enc_vec(bundle.h0),
        "records": [record_to_json(r) for r in bundle.records],
    }


def pool_from_json(data: dict):
    """Rebuild a PoolBundle; every stored matrix is re-checked to be an
    isometric involution fixing its polarization."""
    from .pipeline import PoolBundle
    from .rs_lattices import RSParams

    gram = _dec_mat(data["gram"])
    h0 = _dec_vec(data["h0"])
    lat = Lattice(gram, cone_anchor=h0, hyperbolic=True)
    params = RSParams(p=int(data["p"]), sigma=int(data["sigma"]),
                      q=int(data["q"]), gamma=int(data["gamma"]))
    records = []
    for rd in data["records"]:
        rec = record_from_json(rd)
        _assert_record(lat, rec)
        records.append(rec)
    return PoolBundle(lattice=lat, params=params, h0=h0,
                      records=tuple(records))


def _assert_record(lat, rec):
    m = rec.matrix
    n = lat.rank
    if m * m != IntMatrix.identity(n):
        raise ValueError("stored matrix is not an involution")
    if m * lat.gram * m.transpose() != lat.gram:
        raise ValueError("stored matrix is not an isometry")
    if m.mul_vec_left(rec.h) != rec.h:
        raise ValueError("stored matrix does not fix its polarization")


def result_to_json(result) -> dict:
    return {
        "word": [str(i) for i in result.word],
        "involutions": [record_to_json(r) for r in result.involutions],
        "charpoly": poly_to_json(result.charpoly),
        "certificate": certificate_to_json(result.certificate),
        "gram": _enc_mat(result.lattice.gram.rows),
        "provenance": {k: (str(v) if isinstance(v, int) else v)
                       for k, v in result.provenance.items()},
    }


def verify_result_json(data: dict):
    """Re-derive everything a stored search result claims.

    Checks the involution invariants of every stored matrix, re-multiplies
    the word, recomputes the characteristic polynomial, and re-runs the
    Salem certification; returns a CheckReport.
    """
    from .exactalg import char_poly
    from .pipeline import CheckReport, _product_matrix
    from .salem import CONTEXT_FROM_K3, SalemRejection, salem_check

    rep = CheckReport()
    gram = _dec_mat(data["gram"])
    lat = Lattice(gram, require_even=False)
    records = [record_from_json(rd) for rd in data["involutions"]]
    try:
        for rec in records:
            _assert_record(lat, rec)
        rep.add("involution invariants", True, f"{len(records)} matrices")
    except ValueError as exc:
        rep.add("involution invariants", False, str(exc))
        return rep
    word = [int(i) for i in data["word"]]
    stored = poly_from_json(data["charpoly"])
    prod = _product_matrix([records[i].matrix for i in word])
    cp = char_poly(prod)
    rep.add("characteristic polynomial reproduces", cp == stored)
    try:
        cert = salem_check(cp, context=CONTEXT_FROM_K3)
        lo = frac_from_str(data["certificate"]["lambda_lo"])
        hi = frac_from_str(data["certificate"]["lambda_hi"])
        overlap = cert.lambda_lo <= hi and lo <= cert.lambda_hi
        rep.add("Salem certificate reproduces", overlap,
                f"irreducibility {cert.irreducibility}")
    except SalemRejection as rej:
        rep.add("Salem certificate reproduces", False, rej.reason)
    return rep


def sweep_to_csv(sweep) -> str:
    lines = ["p,log_p,lambda_str,entropy"]
    for row in sweep.rows:
        lines.append(f"{row.p},{row.log_p!r},{row.lambda_str},{row.entropy!r}")
    return "\n".join(lines) + "\n"


def dump(data: dict, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def load(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
