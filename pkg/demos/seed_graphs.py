"""Safe-base data for the seed graphs.

Nothing here is assumed: every line is computed by the rank oracle.
The modified octahedral ring is where rank and IE part ways.
"""
import json

from rigidkit import catalog as cat

for name in cat.SEED_GRAPHS:
    e = cat.named_graph(name)
    print(name, json.dumps(cat.seed_verdicts(e), sort_keys=True))
