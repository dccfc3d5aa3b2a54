#!/usr/bin/env python3
"""Previously published bounds vs the corrected sharp values.

One previously claimed estimate is outright falsified by an explicit
function: the starlike TS23 claim of 116.33 is exceeded by the inverse
of z/(1-iz)^2, which attains 221.  The other eight claims are merely
far from sharp.  The TS31 claims were already correct and come back
CONSISTENT.
"""

import toepinv as t

rows = t.refutation_report(starts=8, max_iters=600)

header = f"{'class':<9} {'functional':<10} {'prior':>9} {'corrected':>11} {'numeric max':>14} {'verdict':<10}"
print(header)
print("-" * len(header))
for record, verdict in rows:
    corrected = "(unchanged)" if record.exact_bound is None else str(record.exact_bound)
    numeric = "-" if record.numeric_max is None else f"{record.numeric_max:.6f}"
    print(
        f"{record.class_id.name:<9} {record.functional.name:<10} "
        f"{record.prior_claim:>9g} {corrected:>11} {numeric:>14} {verdict.name:<10}"
    )

violated = [r for r, v in rows if v is t.Verdict.VIOLATED]
print(
    f"\nfalsified claim: {violated[0].class_id.name} {violated[0].functional.name} "
    f"<= {violated[0].prior_claim}, but {violated[0].witness} attains "
    f"{violated[0].exact_bound}"
)
