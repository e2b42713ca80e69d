"""
Cohen conditions and sunflowers
===============================

The finite combinatorics behind adding generic subsets.
"""

import random
from collections import Counter

from bvlogic.combinatorics import (
    CohenAlgebra,
    CohenCondition,
    cohen_antichain,
    cohen_density_check,
    cohen_iota,
    default_ground,
    delta_extract,
    is_delta_system,
    random_family,
    sunflower_bound,
    total_conditions,
)

# ## Conditions and their images

ground = default_ground(3)
C = CohenAlgebra(ground)
p = CohenCondition({ground[0]}, {ground[1]})
img = cohen_iota(p, C)
print(ground, C.size)
print([sorted(C.subset(j)) for j in range(1 << len(ground)) if img >> j & 1])

# Images of conditions are dense: every nonzero element sits above one
print(cohen_density_check(ground))
# without the fully specified conditions, the atoms have nothing below them
print(cohen_density_check(ground, exclude_total=True))

# ## Antichains

totals = total_conditions(ground)
pairs = cohen_antichain(totals, C)
print(len(totals), all(pairs.values()))

q = CohenCondition({ground[1]})
print(cohen_antichain([p, q, CohenCondition({ground[2]})], C))

# ## Sunflowers

rng = random.Random(7)
k, target = 3, 3
n = sunflower_bound(k, target) + 1
fam = random_family(rng, n, k, 30, distinct=True)
idx, root = delta_extract(fam, target)
print(n, idx, sorted(root), [sorted(fam[i]) for i in idx])
print(is_delta_system(fam, idx, root))

# how often a larger sunflower shows up in smaller random families
hits = Counter()
for trial in range(200):
    r = random.Random(trial)
    small = random_family(r, 12, 2, 10, distinct=True)
    hits[delta_extract(small, 4) is not None] += 1
print(hits)
