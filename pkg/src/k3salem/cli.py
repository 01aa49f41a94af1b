"""Command-line interface.

Exit codes: 0 on success or an accepted certificate, 1 when a search is
exhausted or a certificate is rejected, 2 on invalid input.
"""

import argparse
import sys
from fractions import Fraction

from . import jsonio, pipeline
from .pipeline import (ExhaustionReport, SearchConfig, SearchResult,
                       generate_involution_pool, search_irreducible_salem,
                       sigma10_construct, verify_paper_example, entropy_sweep)
from .rs_lattices import build_lambda
from .salem import CONTEXT_FROM_K3, CONTEXT_STANDALONE, SalemRejection, \
    salem_check


def _add_pq(parser, sigma=True):
    parser.add_argument("--p", type=int, required=True, help="odd prime")
    if sigma:
        parser.add_argument("--sigma", type=int, required=True,
                            help="Artin invariant, 1..10")
    parser.add_argument("--q", type=int, default=None,
                        help="override the auxiliary prime q")
    parser.add_argument("--gamma", type=int, default=None,
                        help="override gamma (needs --q)")


def cmd_build_lattice(args):
    lat, tags, params = build_lambda(args.p, args.sigma,
                                     q=args.q, gamma=args.gamma)
    jsonio.dump(jsonio.lattice_to_json(params, tags, lat.gram), args.out)
    print(f"wrote {args.out} (p={params.p} sigma={params.sigma} "
          f"q={params.q} gamma={params.gamma})")
    return 0


def cmd_pool(args):
    cfg = SearchConfig(p=args.p, sigma=args.sigma, seed=args.seed,
                       pool_size=args.size, q=args.q, gamma=args.gamma)
    bundle = generate_involution_pool(cfg)
    jsonio.dump(jsonio.pool_to_json(bundle), args.out)
    print(f"wrote {args.out} with {len(bundle.records)} involutions")
    return 0


def cmd_search(args):
    cfg = SearchConfig(p=args.p, sigma=args.sigma, seed=args.seed,
                       pool_size=args.pool_size,
                       max_word_length=args.max_word,
                       trial_budget=args.budget_trials,
                       time_budget=args.budget_seconds,
                       threads=args.threads, q=args.q, gamma=args.gamma)
    if args.pool:
        bundle = jsonio.pool_from_json(jsonio.load(args.pool))
    else:
        bundle = generate_involution_pool(cfg)
    result = search_irreducible_salem(cfg, bundle)
    if isinstance(result, ExhaustionReport):
        print(f"exhausted after {result.trials} trials "
              f"({result.elapsed:.1f}s); rejections: {result.rejections}")
        return 1
    jsonio.dump(jsonio.result_to_json(result), args.out)
    print(f"accepted word of length {len(result.word)} at trial "
          f"{result.provenance['trial_index']}; entropy "
          f"{result.certificate.entropy:.6f}; wrote {args.out}")
    return 0


def cmd_sigma10(args):
    vectors = None
    if args.vectors:
        data = jsonio.load(args.vectors)
        vectors = [tuple(int(x) for x in v) for v in data["vectors"]]
    try:
        result = sigma10_construct(args.p, vectors=vectors,
                                   base_k=args.base_k, seed=args.seed)
    except pipeline.Sigma10Error as exc:
        print(f"construction failed: {exc}")
        return 1
    jsonio.dump(jsonio.result_to_json(result), args.out)
    print(f"accepted with base_k={result.provenance['base_k']}; entropy "
          f"{result.certificate.entropy:.6f}; wrote {args.out}")
    return 0


def cmd_verify(args):
    rep = jsonio.verify_result_json(jsonio.load(args.result))
    print(rep.render())
    return 0 if rep.ok else 1


def cmd_paper_example(args):
    rep = verify_paper_example()
    print(rep.render())
    return 0 if rep.ok else 1


def cmd_salem_check(args):
    poly = jsonio.poly_from_json(jsonio.load(args.poly))
    context = CONTEXT_STANDALONE if args.standalone else CONTEXT_FROM_K3
    try:
        cert = salem_check(poly, context=context)
    except SalemRejection as rej:
        print(f"rejected: {rej.reason}")
        return 1
    print(f"accepted: lambda in [{float(cert.lambda_lo):.6g}, "
          f"{float(cert.lambda_hi):.6g}], entropy {cert.entropy:.6f}, "
          f"irreducibility {cert.irreducibility}")
    jsonio.dump(jsonio.certificate_to_json(cert), args.out) if args.out else None
    return 0


def cmd_entropy_sweep(args):
    primes = [int(x) for x in args.primes.split(",") if x.strip()]
    sweep = entropy_sweep(primes, seed=args.seed)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(jsonio.sweep_to_csv(sweep))
    print(f"wrote {args.out} with {len(sweep.rows)} rows "
          f"({len(sweep.failures)} failures)")
    if sweep.fit_ln:
        s, i = sweep.fit_ln
        print(f"fit vs ln p:    entropy = {i:.3f} + {s:.3f} * ln p")
    if sweep.fit_log10:
        s, i = sweep.fit_log10
        print(f"fit vs log10 p: entropy = {i:.3f} + {s:.3f} * log10 p")
    for p, msg in sweep.failures:
        print(f"  failed p={p}: {msg}")
    return 0 if sweep.rows else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="k3salem",
        description="Exact lattice computations producing Salem-type "
                    "automorphism data for supersingular K3 surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-lattice", help="construct a lattice and dump JSON")
    _add_pq(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build_lattice)

    p = sub.add_parser("pool", help="generate an involution pool")
    _add_pq(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=64)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_pool)

    p = sub.add_parser("search", help="search products for a Salem charpoly")
    _add_pq(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pool", default=None, help="pool JSON to reuse")
    p.add_argument("--pool-size", type=int, default=64)
    p.add_argument("--max-word", type=int, default=22)
    p.add_argument("--budget-trials", type=int, default=20000)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sigma10",
                       help="22-involution construction at Artin invariant 10")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--vectors", default=None,
                   help="JSON with six base vectors (a, 1, v)")
    p.add_argument("--base-k", type=int, default=None, choices=range(1, 7))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sigma10)

    p = sub.add_parser("verify", help="recheck a stored search result")
    p.add_argument("--result", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-example",
                       help="run the characteristic-7 reference checks")
    p.set_defaults(func=cmd_paper_example)

    p = sub.add_parser("salem-check", help="certify a polynomial from JSON")
    p.add_argument("--poly", required=True)
    p.add_argument("--standalone", action="store_true",
                   help="require the irreducibility sieve to succeed")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_salem_check)

    p = sub.add_parser("entropy-sweep",
                       help="per-prime sigma=10 runs and entropy fit")
    p.add_argument("--primes", required=True, help="comma-separated odd primes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_entropy_sweep)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
