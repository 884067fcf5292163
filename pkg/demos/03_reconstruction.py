"""Rebuilding a tree from its k = 2 invariant.

The power-sum series of an n-vertex tree contains classes whose symbol
graph is a tree on n + 1 symbols.  Among those *tree classes*, pick the
ones of minimal profile, augment-and-compare: delete the minimum leaf of
the minimal class's symbol tree and the original tree reappears.  The same
classes can be produced directly from a tree by the *block augmentation*:
walk a minimal rooted order and give each vertex the block {parent
position, own position}.
"""

from kneserchrom import (
    SimpleGraph,
    are_isomorphic,
    augment_tree_lambda,
    canonical_graph6,
    graph_from_form,
    is_admissible,
    kneser_psum,
    lambda_class,
    lambda_t,
    lambda_t_tilde,
    min_degree_sequence,
    position_tree,
    reconstruct_from_invariant,
    reconstruct_from_lambda_t,
    tau_map,
    verify_tau_isomorphism,
)


def main():
    # the "chair": a 5-vertex tree, path of four with one extra leaf
    tree = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    print(f"input tree: {canonical_graph6(tree)} on {tree.n} vertices")

    # --- its tree classes ------------------------------------------------
    classes = lambda_t(tree)
    print(f"\ntree classes on {tree.n + 1} symbols in the support:")
    for cls in sorted(classes):
        sym = graph_from_form(cls[0])
        print(f"  {cls[0]}  degrees {sorted(sym.degrees())}")

    tilde, profile = lambda_t_tilde(tree)
    print(f"\nminimal profile among them: {profile}")
    print(f"minimal classes: {sorted(tilde)}")

    # --- the augmentation produces exactly a minimal class ---------------
    aug = augment_tree_lambda(tree)
    print(f"\naugmented blocks: {aug.lam.blocks}")
    print(f"augmentation lands in the minimal set: {lambda_class(aug.lam) in tilde}")
    print(f"tree profile: {min_degree_sequence(tree)} ->"
          f" augmented profile {profile} (pendant 1, 2 prefix)")

    # --- position maps certify the match ---------------------------------
    witness = is_admissible(aug.lam, tree)
    tau = tau_map(witness)
    print(f"\na witness assignment and its position map: {tau}")
    print(f"position map is an isomorphism: "
          f"{verify_tau_isomorphism(tree, aug.lam, witness)}")
    print(f"position tree matches input: "
          f"{are_isomorphic(position_tree(aug.lam), tree)}")

    # --- round trip from the classes and from the full series ------------
    rebuilt = reconstruct_from_lambda_t(classes)
    print(f"\nreconstructed from classes:  {canonical_graph6(rebuilt.graph)}"
          f"  (isomorphic: {are_isomorphic(rebuilt.graph, tree)})")
    print(f"  used class {rebuilt.source_class[0]}, removed leaf {rebuilt.removed_leaf}")

    series = kneser_psum(tree, 2)
    rebuilt2 = reconstruct_from_invariant(series)
    print(f"reconstructed from series:   {canonical_graph6(rebuilt2.graph)}"
          f"  (isomorphic: {are_isomorphic(rebuilt2.graph, tree)})")


if __name__ == "__main__":
    main()
