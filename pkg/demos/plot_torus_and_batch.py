"""
The closed torus and batch queries
==================================

On the torus the minimal intersection number of (m1, l1) and (m2, l2) is
|m1 l2 - l1 m2|.  The same numbers are available from the command line
front end, one JSON record per line.
"""

import io
import json

from loopbracket import torus_min_intersection
from loopbracket.cli import run_batch

print(torus_min_intersection((2, 3), (1, 1)))
print(torus_min_intersection((2, 4), (1, 2)))

queries = io.StringIO(
    '{"mode": "minint", "surface": "pants", "w1": "aBB", "w2": "aB"}\n'
    '{"mode": "selfint", "surface": "torus1", "w1": "aaa"}\n'
    '{"mode": "torus", "w1": "(2,3)", "w2": "(1,1)"}\n'
)
for rec in run_batch(queries):
    print(json.dumps(rec.to_dict(show_raw=False), sort_keys=True))
