"""End-to-end search for automorphisms with degree-22 Salem charpoly.

The flow: construct the rank-22 lattice, pick the anchor h0 = u1 + u2 and
the scaled-dual ample list, harvest square-2 polarizations by reflecting
random square-2 vectors into the chamber, form their involution
matrices, and test characteristic polynomials of random products until
one certifies as a Salem polynomial of degree 22.  The Artin-invariant-10
shortcut instead builds six base vectors plus sixteen E8-shifted
extensions whose involutions all have smooth branch data.
"""

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import refdata
from .chamber import send_to_chamber
from .enumeration import set_F, set_R, set_S
from .exactalg import IntMatrix, IntPolynomial, char_poly, determinant
from .involution import InvolutionRecord, smooth_branch_matrix
from .lattice import Lattice, inner, neg, norm
from .rs_lattices import (build_lambda, random_square2_general,
                          standard_ample_list)
from .salem import (CONTEXT_FROM_K3, SalemCertificate, SalemRejection,
                    leading_root, salem_check)

VERSION = "0.1.0"


@dataclass
class SearchConfig:
    p: int
    sigma: int
    seed: int = 0
    pool_size: int = 64
    max_word_length: int = 22
    trial_budget: int = 20000
    time_budget: float | None = None
    q: int | None = None
    gamma: int | None = None
    threads: int = 1
    sample_box: int = 2
    pool_attempt_budget: int = 4096

    def __post_init__(self):
        if not 2 <= self.max_word_length <= 22:
            raise ValueError("max_word_length must lie in 2..22")


@dataclass
class PoolBundle:
    lattice: Lattice
    params: object
    h0: tuple
    records: tuple  # of InvolutionRecord


@dataclass
class SearchResult:
    word: tuple            # indices into involutions
    involutions: tuple     # InvolutionRecord pool
    charpoly: IntPolynomial
    certificate: SalemCertificate
    provenance: dict
    lattice: Lattice


@dataclass
class ExhaustionReport:
    trials: int
    elapsed: float
    rejections: dict


class PoolExhausted(RuntimeError):
    pass


def generate_involution_pool(config: SearchConfig) -> PoolBundle:
    """Harvest distinct degree-2 polarizations in the chamber and their
    involution matrices, following the draw / discard / reflect loop."""
    L, _tags, params = build_lambda(config.p, config.sigma,
                                    q=config.q, gamma=config.gamma)
    h0 = (1, 1) + (0,) * 20
    ample = standard_ample_list(L, h0, config.p)
    rng = random.Random(config.seed)
    records: dict = {}
    attempts = 0
    while len(records) < config.pool_size and attempts < config.pool_attempt_budget:
        attempts += 1
        v = random_square2_general(L, params, rng, box=config.sample_box)
        if inner(L, v, h0) < 0:
            v = neg(v)
        if set_F(L, v):
            continue
        hv, _word, ample = send_to_chamber(L, ample, v, rng)
        if hv in records:
            continue
        records[hv] = InvolutionRecord.build(L, ample, hv)
    if len(records) < 2:
        raise PoolExhausted(
            f"only {len(records)} involutions found in {attempts} attempts")
    return PoolBundle(lattice=L, params=params, h0=h0,
                      records=tuple(records.values()))


def _product_matrix(mats):
    acc = mats[0]
    for m in mats[1:]:
        acc = acc * m
    return acc


def assert_isometry_charpoly_shape(cp: IntPolynomial, det: int):
    """Characteristic polynomials of lattice isometries are reciprocal up
    to the sign of the determinant, with constant coefficient +-1."""
    c = list(cp.coeffs)
    assert c[0] in (1, -1), "constant coefficient must be a unit"
    assert c == [det * x for x in reversed(c)], \
        "isometry charpoly must be (anti)reciprocal"


def _trial_word(seed, trial, pool_len, max_word_length):
    rng = random.Random(f"{seed}:{trial}")
    length = rng.randint(2, max_word_length)
    return tuple(rng.randrange(pool_len) for _ in range(length))


def _evaluate_trial(seed, trial, mats, dets, max_word_length, root_tol):
    word = _trial_word(seed, trial, len(mats), max_word_length)
    det = 1
    for i in word:
        det *= dets[i]
    if det != 1:
        return None, "determinant"
    prod = _product_matrix([mats[i] for i in word])
    cp = char_poly(prod)
    assert_isometry_charpoly_shape(cp, det)
    try:
        cert = salem_check(cp, context=CONTEXT_FROM_K3, root_tol=root_tol)
    except SalemRejection as rej:
        return None, rej.reason
    return (word, cp, cert), None


def search_irreducible_salem(config: SearchConfig, pool: PoolBundle,
                             root_tol=Fraction(1, 10**8)):
    """Sample random words over the pool until a product certifies Salem.

    Deterministic for a fixed (seed, budgets): trial i derives its own
    generator, so the examined word sequence does not depend on the
    thread count, and the accepted result is the lowest trial index.
    Returns SearchResult or ExhaustionReport.
    """
    mats = [r.matrix for r in pool.records]
    dets = [determinant(m) for m in mats]
    rejections: dict = {}
    start = time.monotonic()

    def record_rejection(reason):
        key = reason.split(":")[0]
        rejections[key] = rejections.get(key, 0) + 1

    def finish(trial, word, cp, cert):
        prov = {
            "version": VERSION, "seed": config.seed, "trial_index": trial,
            "p": config.p, "sigma": config.sigma,
            "q": pool.params.q, "gamma": pool.params.gamma,
            "pool_size": len(pool.records),
            "max_word_length": config.max_word_length,
        }
        return SearchResult(word=word, involutions=pool.records,
                            charpoly=cp, certificate=cert,
                            provenance=prov, lattice=pool.lattice)

    if config.threads > 1:
        result = _parallel_search(config, mats, dets, root_tol)
        if result is not None:
            trial, word, cp, cert = result
            return finish(trial, word, cp, cert)
        return ExhaustionReport(trials=config.trial_budget,
                                elapsed=time.monotonic() - start,
                                rejections={"parallel": config.trial_budget})

    trials_done = 0
    for trial in range(config.trial_budget):
        if config.time_budget is not None \
                and time.monotonic() - start > config.time_budget:
            break
        trials_done += 1
        hit, reason = _evaluate_trial(config.seed, trial, mats, dets,
                                      config.max_word_length, root_tol)
        if hit is None:
            record_rejection(reason)
            continue
        word, cp, cert = hit
        return finish(trial, word, cp, cert)
    return ExhaustionReport(trials=trials_done,
                            elapsed=time.monotonic() - start,
                            rejections=rejections)


_WORKER_STATE: dict = {}


def _worker_init(mats_rows, dets, seed, max_word_length, root_tol):
    _WORKER_STATE["mats"] = [IntMatrix(r) for r in mats_rows]
    _WORKER_STATE["dets"] = dets
    _WORKER_STATE["seed"] = seed
    _WORKER_STATE["maxw"] = max_word_length
    _WORKER_STATE["tol"] = root_tol


def _worker_eval(trial):
    hit, _ = _evaluate_trial(_WORKER_STATE["seed"], trial,
                             _WORKER_STATE["mats"], _WORKER_STATE["dets"],
                             _WORKER_STATE["maxw"], _WORKER_STATE["tol"])
    if hit is None:
        return None
    word, cp, cert = hit
    return trial, word, tuple(cp.coeffs)


def _parallel_search(config, mats, dets, root_tol):
    import multiprocessing as mp
    mats_rows = [m.rows for m in mats]
    chunk = max(config.threads * 4, 16)
    deadline = (time.monotonic() + config.time_budget
                if config.time_budget is not None else None)
    with mp.Pool(config.threads, initializer=_worker_init,
                 initargs=(mats_rows, dets, config.seed,
                           config.max_word_length, root_tol)) as pool:
        for lo in range(0, config.trial_budget, chunk):
            if deadline is not None and time.monotonic() > deadline:
                return None
            hi = min(lo + chunk, config.trial_budget)
            hits = [h for h in pool.map(_worker_eval, range(lo, hi))
                    if h is not None]
            if hits:
                trial, word, coeffs = min(hits)
                cp = IntPolynomial(coeffs)
                cert = salem_check(cp, context=CONTEXT_FROM_K3,
                                   root_tol=root_tol)
                return trial, word, cp, cert
    return None


# ---------------------------------------------------------------------------
# Artin invariant 10 construction

class Sigma10Error(RuntimeError):
    def __init__(self, message, failing_index=None, failing_property=None):
        super().__init__(message)
        self.failing_index = failing_index
        self.failing_property = failing_property


def _extend_base(base, k):
    """h_{6+nu} = (a_k + 1, 1, v_k) + e_nu and the primed twin block."""
    a_k = base[k - 1][0]
    core = (a_k + 1,) + base[k - 1][1:6]
    out = []
    for block in (0, 1):
        for nu in range(8):
            tail = [0] * 16
            tail[8 * block + nu] = 1
            out.append(core + tuple(tail))
    return out


def _check_properties(L, hs, collect_all=False):
    """Verify (i) norms, (ii) pairings, (iii) no separating roots,
    (iv) empty root/null sets.  Returns list of failures (index, prop)."""
    failures = []
    h1 = hs[0]
    for i, h in enumerate(hs, start=1):
        if norm(L, h) != 2:
            failures.append((i, "i"))
            if not collect_all:
                return failures
    for i, h in enumerate(hs[1:], start=2):
        if inner(L, h1, h) <= 0:
            failures.append((i, "ii"))
            if not collect_all:
                return failures
    for i, h in enumerate(hs[1:], start=2):
        if set_S(L, h1, h):
            failures.append((i, "iii"))
            if not collect_all:
                return failures
    for i, h in enumerate(hs, start=1):
        if set_R(L, h):
            failures.append((i, "iv-R"))
            if not collect_all:
                return failures
        if set_F(L, h):
            failures.append((i, "iv-F"))
            if not collect_all:
                return failures
    return failures


def _auto_base_vectors(L, params, rng, count=6, attempt_budget=200_000):
    """Search six vectors (a, 1, v) with v in the rank-4 block satisfying
    (i), (iv) and, against the first hit, (ii) and (iii)."""
    p = params.p
    accepted = []
    box = 8
    attempts = 0
    while len(accepted) < count and attempts < attempt_budget:
        attempts += 1
        if attempts % 4096 == 0:
            box *= 2
        v4 = tuple(rng.randint(-box, box) for _ in range(4))
        h = (0, 1) + v4 + (0,) * 16
        nn = norm(L, h)  # = <v,v> in the rank-4 block
        if (2 - nn) % (2 * p) != 0:
            continue
        a = (2 - nn) // (2 * p)
        if a < 1:
            continue
        h = (a, 1) + v4 + (0,) * 16
        assert norm(L, h) == 2
        if set_R(L, h) or set_F(L, h):
            continue
        if accepted:
            h1 = accepted[0]
            if inner(L, h1, h) <= 0 or set_S(L, h1, h):
                continue
        if h in accepted:
            continue
        accepted.append(h)
    if len(accepted) < count:
        raise Sigma10Error(
            f"found only {len(accepted)} base vectors in {attempts} attempts")
    return accepted


def sigma10_construct(p: int, vectors=None, base_k: int | None = None,
                      seed: int = 0, resample_limit: int = 8,
                      root_tol=Fraction(1, 10**8)) -> SearchResult:
    """Build 22 smooth-branch involutions at Artin invariant 10 and
    certify their ordered product.

    `vectors` may give the six base vectors (a, 1, v) over the basis
    u1, u2, eta1..eta4; otherwise they are searched with the given seed.
    `base_k` picks which base vector the sixteen extensions shift; the
    default tries k = 1..6 and keeps the first that certifies.
    """
    L, _tags, params = build_lambda(p, 10)
    rng = random.Random(seed)
    provided = vectors is not None
    if provided:
        base = [tuple(v) + (0,) * 16 for v in vectors]
        if len(base) != 6:
            raise ValueError("exactly six base vectors are required")
    ks = (base_k,) if base_k is not None else (1, 2, 3, 4, 5, 6)
    last_error = None
    for round_idx in range(resample_limit if not provided else 1):
        if not provided:
            base = _auto_base_vectors(L, params, rng)
        for k in ks:
            hs = list(base) + _extend_base([tuple(b[:6]) for b in base], k)
            failures = _check_properties(L, hs)
            if failures:
                idx, prop = failures[0]
                last_error = Sigma10Error(
                    f"property ({prop}) fails at vector {idx} with base_k={k}",
                    failing_index=idx, failing_property=prop)
                continue
            mats = [smooth_branch_matrix(L, h) for h in hs]
            prod = _product_matrix(mats)
            cp = char_poly(prod)
            assert_isometry_charpoly_shape(cp, 1)
            try:
                cert = salem_check(cp, context=CONTEXT_FROM_K3,
                                   root_tol=root_tol)
            except SalemRejection as rej:
                last_error = Sigma10Error(
                    f"property (v) fails with base_k={k}: {rej.reason}",
                    failing_property="v")
                continue
            records = tuple(
                InvolutionRecord(h=tuple(h), components=(), matrix=m,
                                 singularities="")
                for h, m in zip(hs, mats))
            prov = {"version": VERSION, "seed": seed, "p": p, "sigma": 10,
                    "q": params.q, "gamma": params.gamma, "base_k": k,
                    "vectors_provided": provided}
            return SearchResult(word=tuple(range(22)), involutions=records,
                                charpoly=cp, certificate=cert,
                                provenance=prov, lattice=L)
    raise last_error if last_error is not None else Sigma10Error("no construction found")


# ---------------------------------------------------------------------------
# The worked example in characteristic 7

@dataclass
class CheckReport:
    lines: list = field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.lines.append((name, bool(ok), detail))

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.lines)

    def render(self):
        out = []
        for name, ok, detail in self.lines:
            mark = "PASS" if ok else "FAIL"
            out.append(f"[{mark}] {name}" + (f": {detail}" if detail else ""))
        return "\n".join(out)


def verify_paper_example() -> CheckReport:
    """Recompute the characteristic-7 reference case and compare every
    stored value exactly."""
    from .chamber import chamber_contains
    from .involution import exceptional_classes, involution_matrix, \
        singularity_string
    from .rs_lattices import gram_H

    rep = CheckReport()
    L, _tags, params = build_lambda(7, 1)
    rep.add("q gamma minimal rule", (params.q, params.gamma) == (11, 2),
            f"got ({params.q}, {params.gamma})")
    rep.add("rank-4 block Gram", gram_H(params).rows == refdata.P7_GRAM_H)
    h0 = refdata.P7_H0
    roots = set_R(L, h0)
    rep.add("number of roots orthogonal to h0",
            len(roots) == refdata.P7_ROOT_COUNT_H0, f"got {len(roots)}")
    ample = standard_ample_list(L, h0, 7)
    rep.add("F(h0) nonempty (h0 is not a polarization)",
            bool(set_F(L, h0)))
    golden = (
        (refdata.P7_H1, refdata.P7_SINGULARITIES[0], refdata.P7_M1),
        (refdata.P7_H2, refdata.P7_SINGULARITIES[1], refdata.P7_M2),
        (refdata.P7_H3, refdata.P7_SINGULARITIES[2], refdata.P7_M3),
    )
    mats = []
    for idx, (h, sing, m_expect) in enumerate(golden, start=1):
        rep.add(f"h{idx} in the chamber", chamber_contains(L, ample, h))
        rep.add(f"F(h{idx}) empty", not set_F(L, h))
        comps = exceptional_classes(L, ample, h)
        s = singularity_string(comps)
        rep.add(f"h{idx} singularities", s == sing, f"got {s}")
        m = involution_matrix(L, h, comps)
        rep.add(f"M(h{idx}) matches stored matrix", m.rows == m_expect)
        mats.append(m)
    prod = _product_matrix(mats)
    cp = char_poly(prod)
    expected = IntPolynomial(tuple(reversed(refdata.P7_SALEM_COEFFS_DESC)))
    rep.add("characteristic polynomial of the product", cp == expected)
    try:
        cert = salem_check(cp, context=CONTEXT_FROM_K3,
                           root_tol=Fraction(1, 10**9))
        lo, hi = cert.lambda_lo, cert.lambda_hi
        target = Fraction(refdata.P7_SALEM_ROOT)
        close = abs((lo + hi) / 2 - target) <= Fraction(1, 10**4)
        rep.add("Salem certificate accepted", True,
                f"irreducibility {cert.irreducibility}")
        rep.add("leading root near 994.15889", close,
                f"enclosure ({float(lo):.6f}, {float(hi):.6f})")
    except SalemRejection as rej:
        rep.add("Salem certificate accepted", False, rej.reason)
    return rep


# ---------------------------------------------------------------------------
# Entropy sweep

def sci_str(x: Fraction, sig: int = 8) -> str:
    """Scientific-notation string of a positive rational, truncated to
    `sig` significant digits."""
    if x <= 0:
        raise ValueError("positive values only")
    num, den = x.numerator, x.denominator
    exp = len(str(num)) - len(str(den))
    if num * 10 ** max(0, -exp) < den * 10 ** max(0, exp):
        exp -= 1
    # now 10^exp <= x < 10^(exp+1)
    shift = sig - 1 - exp
    if shift >= 0:
        scaled = num * 10 ** shift // den
    else:
        scaled = num // (den * 10 ** (-shift))
    digits = str(scaled)
    mant = digits[0] + ("." + digits[1:] if len(digits) > 1 else "")
    return f"{mant}e{'+' if exp >= 0 else ''}{exp}"


@dataclass
class SweepRow:
    p: int
    log_p: float
    lambda_str: str
    entropy: float


@dataclass
class SweepResult:
    rows: list
    failures: list
    fit_ln: tuple | None     # (slope, intercept) against ln p
    fit_log10: tuple | None  # (slope, intercept) against log10 p


def _least_squares(xs, ys):
    n = len(xs)
    sx = sum(xs)
    sy = sum(ys)
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    denom = n * sxx - sx * sx
    if denom == 0:
        return None
    slope = (n * sxy - sx * sy) / denom
    intercept = (sy - slope * sx) / n
    return slope, intercept


def entropy_sweep(prime_list, seed: int = 0) -> SweepResult:
    """Run the Artin-invariant-10 construction per prime and fit the
    entropy against log p in both log bases."""
    rows = []
    failures = []
    for p in prime_list:
        try:
            result = sigma10_construct(p, seed=seed)
        except Exception as exc:  # record and continue with other primes
            failures.append((p, str(exc)))
            continue
        cert = result.certificate
        mid = (cert.lambda_lo + cert.lambda_hi) / 2
        rows.append(SweepRow(p=p, log_p=math.log(p),
                             lambda_str=sci_str(mid),
                             entropy=cert.entropy))
    fit = fit10 = None
    if len(rows) >= 2:
        xs = [r.log_p for r in rows]
        ys = [r.entropy for r in rows]
        fit = _least_squares(xs, ys)
        fit10 = _least_squares([x / math.log(10) for x in xs], ys)
    return SweepResult(rows=rows, failures=failures,
                       fit_ln=fit, fit_log10=fit10)
