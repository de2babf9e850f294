"""
Two perfect matchings that share few edges, and how long it all takes
=====================================================================
"""

from spreadmatch import small_intersection_pair
from spreadmatch import bench
from spreadmatch.generators import k4, petersen, random_cubic

# K4 splits into three disjoint perfect matchings
print(len(small_intersection_pair(k4()).shared))

# in the Petersen graph any two distinct perfect matchings share exactly one edge
p = small_intersection_pair(petersen())
print(sorted(p.m1), sorted(p.m2), sorted(p.shared))

g = random_cubic(2000, 1)
p = small_intersection_pair(g)
print(len(p.shared), "shared edges, allowed", p.bound)

# timings per phase in milliseconds
records = bench.run([1000, 2000, 4000], [1, 2])
print(bench.to_csv(records))
print("log-log slope", round(bench.loglog_slope(records), 2))
