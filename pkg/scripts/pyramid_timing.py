"""Time delta-vector computation for iterated pyramids over the three witnesses."""

import sys
import time

from ehrhart_delta.constructions import iterated_pyramid, paper_example
from ehrhart_delta.ehrhart import delta_vector

MAX_DIM = int(sys.argv[1]) if len(sys.argv) > 1 else 7

for k, d0 in ((1, 2), (2, 3), (3, 5)):
    for d in range(d0, MAX_DIM + 1):
        poly = iterated_pyramid(paper_example(k), d - d0)
        start = time.perf_counter()
        delta = delta_vector(poly)
        print(f"P{k} d={d}: delta = {delta}  ({time.perf_counter() - start:.2f}s)")
