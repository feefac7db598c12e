"""Rank reversal: what happens to the survivors when one network disappears?

A ranking method is stable under removal when deleting an alternative
leaves the relative order of the others untouched. Value-based methods can
reverse because column extrema rescale the normalization; rank-based
scoring can reverse because positions shift. This script probes both a
hand-built witness and the bundled benchmark, then tries duplication.
"""

from netselect import (
    CriterionSpec,
    DecisionMatrix,
    Direction,
    METHODS,
    duplication_experiment,
    preset_weights,
    reference_matrix,
    reversal_experiment,
)

# A tiny witness: 'heavy' holds the column-1 maximum. Removing it rescales
# column 1 and flips SAW's order of the two survivors; msaw keeps them put.
witness = DecisionMatrix(
    ["heavy", "balanced", "specialist"],
    (CriterionSpec("c1", Direction.BENEFIT), CriterionSpec("c2", Direction.BENEFIT)),
    [[60.0, 2.0], [9.0, 9.0], [6.0, 10.0]],
)
weights = [0.6, 0.4]

print("witness matrix, removing 'heavy':")
for method in ("saw", "msaw"):
    report = reversal_experiment(witness, weights, method, "heavy")
    print(f"  {method:5s} baseline {' > '.join(report.baseline_order)}")
    print(f"        reduced  {' > '.join(report.reduced_order)}  reversed={report.reversed}")
    if report.flips:
        print(f"        flipped pairs: {report.flips}")

print("\nbundled benchmark, removing N(4) (voip weights):")
voip = preset_weights("voip")
for method in METHODS:
    report = reversal_experiment(reference_matrix(), voip, method, "N(4)")
    print(f"  {method:7s} reversed={report.reversed}  reduced={' > '.join(report.reduced_order)}")

print("\nduplication: append an exact copy of N(4) and re-rank (voip weights):")
for method in METHODS:
    report = duplication_experiment(reference_matrix(), voip, method, "N(4)")
    print(f"  {method:7s} reversed={report.reversed}  expanded={' > '.join(report.expanded_order)}")
