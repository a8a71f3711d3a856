"""Two ways to the same certainty values.

Runs the refutation engine and the unfolding engine side by side on the
bundled ``guarded`` program and prints how each one arrives at its values.

    python3 demos/two_engines.py
"""
from possdlp import golden, project
from possdlp.asp import answer_sets
from possdlp.parteval import pi_fixpoint, sem_min
from possdlp.reduct import poss_reduct
from possdlp.resolution import necessities, to_clausal


def main():
    program = golden.load("guarded")
    print("program:")
    print(golden.text("guarded"))

    for S in answer_sets(project(program)):
        print(f"classical answer set {sorted(S)}")
        reduct = poss_reduct(program, S)
        print("  reduct: " + "  ".join(str(c) for c in reduct))

        # refutations: add (~a, top) and look for the best empty clause
        print("  clauses: " + ", ".join(str(d) for d in to_clausal(reduct)))
        M, results = necessities(program, S, trace=True)
        for atom, res in results.items():
            print(f"  refuting ~{atom} gives {res.optimal_value}")
            for step in res.derivation_trace:
                print(f"      {step}")

        # unfolding: grow the program until nothing new appears
        rounds = []
        fixed = pi_fixpoint(reduct, rounds)
        for k, new in enumerate(rounds, 1):
            print(f"  unfolding round {k}: " + "  ".join(str(c) for c in new))
        print(f"  {len(fixed)} clause(s) at the fixed point")
        print(f"  resolution: {M}")
        print(f"  unfolding:  {sem_min(fixed)}")
        print()


if __name__ == "__main__":
    main()
