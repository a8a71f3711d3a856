"""Ranking transplant outcomes by how contradictory they are.

The ``kidney`` program adds viability rules to a ground transplant scenario.
One outcome believes the kidney is viable and not viable at once; the
inconsistency degree says how certain one must demand a conclusion to be
before that clash goes away, and the less contradictory outcome is preferred.

    python3 demos/transplant.py
"""
from possdlp import golden
from possdlp.cli import format_model
from possdlp.consistency import analyze, incons_degree
from possdlp.resolution import poss_answer_sets_resolution


def main():
    medical = poss_answer_sets_resolution(golden.load("medical"))
    print(f"medical program: {len(medical)} possibilistic answer sets")
    for M in medical:
        print("  " + format_model(M))
    print()

    program = golden.load("kidney")
    models = poss_answer_sets_resolution(program)
    report = analyze(program, models)
    for i, M in enumerate(models):
        mark = "preferred" if i in report.preferred_models else "dominated"
        print(f"{mark}: {format_model(M)}")
        print(f"  inconsistency degree {report.per_model_degrees[i]}"
              f" (with literal cuts: {incons_degree(M, literal=True)})")
    print()

    # ruling out complementary pairs explicitly keeps only the clean outcome
    constrained = poss_answer_sets_resolution(golden.load("kidney_constrained"))
    print("with complement constraints:")
    for M in constrained:
        print("  " + format_model(M))


if __name__ == "__main__":
    main()
