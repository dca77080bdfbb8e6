"""Search 3-agent/3-object instances for provisioning-monotonicity violations.

Object o2 is moved between provisioners x and y while all other links stay
fixed. Whenever x has at least y's authority (measured with y as the
provisioner), o2 is expected to score no lower under x. Prints every
violation found.
"""

import argparse
import itertools

from linkrank import DegenerateVectorError, SolverConfig
from linkrank.eigenrumor import build_agent_object_graph, eigenrumor

PAIRS = [(i, j) for i in range(3) for j in range(3)]


def solve(p1, p2, x, mask, mixing, cfg):
    triples = [(f"a{p1}", "P", "o0"), (f"a{p2}", "P", "o1"), (f"a{x}", "P", "o2")]
    triples += [(f"a{i}", "E", f"o{j}") for k, (i, j) in enumerate(PAIRS) if mask >> k & 1]
    try:
        s = eigenrumor(build_agent_object_graph(sorted(triples)), mixing, cfg)
    except DegenerateVectorError:
        return None, triples
    return (s if s.converged else None), triples


def authority(s, agent):
    lab = f"a{agent}"
    return s.agent_authority[s.agents.index(lab)] if lab in s.agents else 0.0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mixing", type=float, nargs="+", default=[0.5, 1.0])
    args = ap.parse_args()
    cfg = SolverConfig(tolerance=1e-12, max_iterations=5000)

    checked = bad = 0
    for mixing, p1, p2 in itertools.product(args.mixing, range(3), range(3)):
        for mask in range(512):
            sols = {x: solve(p1, p2, x, mask, mixing, cfg) for x in range(3)}
            for x, y in itertools.permutations(range(3), 2):
                (sx, tx), (sy, _) = sols[x], sols[y]
                if sx is None or sy is None or authority(sy, x) < authority(sy, y):
                    continue
                checked += 1
                rx = sx.object_score[sx.objects.index("o2")]
                ry = sy.object_score[sy.objects.index("o2")]
                if rx < ry - 1e-9:
                    bad += 1
                    print(f"mixing={mixing} x=a{x} y=a{y} r(o2): {rx:.6f} < {ry:.6f}  links={tx}")
    print(f"{bad} violations in {checked} comparisons")


if __name__ == "__main__":
    main()
