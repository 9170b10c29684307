"""
Extracting a Berge-K_{3,t} from a large co-neighbourhood
========================================================

A planted context (u, w, v, W) is handed to the greedy extractor; the
trace shows each pick. The same greedy can stall when the u-lines and
w-lines through W close up into one long cycle; the matching route then
still finds the witness.
"""

import json

from berge_k3t import extract_witness, k3t_skeleton, validate_witness
from berge_k3t.errors import StabilityViolation
from berge_k3t.stability import matching_witness, plant_context, scan_contexts, threshold

H, ctx = plant_context(3, 4, seed=7, extra=1)
print("hypergraph:", H.n, "vertices,", H.m, "edges; |W| =", len(ctx.W), ">= threshold", threshold(3, 4))
wit, trace = extract_witness(H, ctx, 4)
print("case", trace.case, "k =", trace.k, "chosen", trace.chosen)
for step in trace.steps:
    print(f"  edge {step.edge}: candidates {step.candidates} -> {step.chosen} (min {step.min_value}, ties {step.tied})")
print("valid:", validate_witness(H, k3t_skeleton(4), wit))

# the scanner finds the planted context without being told
print("context found by scan:", ctx in scan_contexts(H, 4))

# five u-lines and five w-lines, two W cells each, forming a 10-cycle
H, ctx = plant_context(3, 5, seed=67, extra=1)
try:
    extract_witness(H, ctx, 5)
except StabilityViolation as exc:
    print("greedy stalled:", exc)
    print(json.dumps(exc.trace.to_dict()["chosen"]))
wit = matching_witness(H, ctx, 5)
print("matching route:", wit.core_map, validate_witness(H, k3t_skeleton(5), wit))

# each selection rule matters: drop one and the greedy stalls where it did not before
for seed, extra, rule in ((336, 0, "min_rule"), (2107, 1, "max_rule")):
    H, ctx = plant_context(3, 4, seed, extra=extra)
    extract_witness(H, ctx, 4)
    try:
        extract_witness(H, ctx, 4, **{rule: False})
        print(rule, "off: still fine")
    except StabilityViolation:
        print(rule, "off: stalls on seed", seed)
