"""Rank the bundled six-network benchmark with all five methods.

The matrix scores six candidate networks on bandwidth, delay, packet loss,
energy draw, and monetary cost. Three weight presets encode service needs:
voip (delay/loss dominated), video, and best_effort.
"""

from netselect import METHODS, agreement_report, preset_weights, rank, reference_matrix

matrix = reference_matrix()

print("decision matrix:")
header = f"{'':8s}" + "".join(f"{name:>12s}" for name in matrix.criterion_names)
print(header)
for i, label in enumerate(matrix.alternatives):
    print(f"{label:8s}" + "".join(f"{v:12.2f}" for v in matrix.values[i]))

for service in ("voip", "video", "best_effort"):
    weights = preset_weights(service)
    print(f"\n=== service: {service} ===")
    print("weights:", tuple(round(w, 4) for w in weights))
    for method in METHODS:
        result = rank(matrix, weights, method)
        print(f"{method:7s} {' > '.join(result.order)}")

# How much do the methods agree? Kendall tau counts concordant minus
# discordant pairs: +1 is identical, -1 is exactly reversed.
report = agreement_report(matrix, preset_weights("voip"), METHODS)
print("\npairwise kendall tau (voip weights):")
print("        " + "".join(f"{m:>8s}" for m in report.methods))
for i, method in enumerate(report.methods):
    print(f"{method:8s}" + "".join(f"{report.tau[i][j]:+8.3f}" for j in range(len(METHODS))))
