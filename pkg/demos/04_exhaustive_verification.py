"""Machine check: the k = 2 invariant is a complete invariant for small trees.

For every free tree with up to eight vertices: compute the tree classes of
its series, reconstruct, and compare; then check that no two distinct trees
produced the same class set.  Completeness on trees means exactly this pair
of facts — every tree comes back, and no two trees look alike.
"""

from kneserchrom import verify_trees


def main():
    report = verify_trees(8, witness=True)

    print("tree-by-tree round trip (k = 2):")
    for rec in report["records"]:
        status = "ok" if rec["pass"] else "FAIL"
        witness = "ok" if rec.get("witness_ok") else "FAIL"
        print(
            f"  n={rec['n']}  {rec['graph6']:>8s}  classes={rec['lambda_t_size']:3d}"
            f"  minimal={rec['lambda_t_tilde_size']}"
            f"  -> {rec['reconstructed']:>8s}  {status} (witness {witness})"
            f"  [{rec['ms']}ms]"
        )

    s = report["summary"]
    print(
        f"\ntrees: {s['trees']}   failures: {s['failures']}   "
        f"injective: {s['injective']}   all pass: {s['all_pass']}"
    )
    if not s["all_pass"]:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
