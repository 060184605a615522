"""Which axioms hold where: the seeded suite plus the named counterexamples.

Run with ``python3 demos/axiom_matrix.py`` (about half a minute).
"""
from collections import defaultdict

from urstrings.axiomlab import SampleConfig, Status, known_counterexamples, run_suite
from urstrings.tcstrings import common_refinement, Partition, srs_concat


def main():
    print("partitions: refine ab|c against a|bc")
    gamma, f, g = common_refinement(Partition.parse("ab|c"), Partition.parse("a|bc"))
    print(f"  {gamma}  f={f}  g={g}")

    print("rewriting model: a * b * c =", repr(srs_concat(srs_concat("a", "b"), "c")))
    print()

    print("registry")
    for c in known_counterexamples():
        print(f"  {'ok ' if c.verify() else 'BAD'} {c.name:<14} {c.claim}")
    print()

    summary = run_suite(SampleConfig(seed=0))
    by_target = defaultdict(list)
    for e in summary.entries:
        by_target[e.report.target].append(e.report)
    for target, reports in by_target.items():
        held = sum(r.status is Status.HOLDS for r in reports)
        refuted = [r for r in reports if r.status is Status.REFUTED]
        print(f"{target:<11} holds {held:>2}/{len(reports):<2}", end="")
        print("  refuted: " + ", ".join(str(r.axiom) for r in refuted) if refuted else "")
        for r in refuted:
            print(f"    {r}")
    print(summary.lines()[-1])


if __name__ == "__main__":
    main()
