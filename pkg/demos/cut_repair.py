"""Restoring a program with no answer sets by cutting weak clauses.

``p_inc`` is an odd loop through default negation.  Cutting every clause
at or below the consistency cut degree breaks the loop.  The second half
contrasts a disjunction with the same knowledge written as shifted
default negation, which loses every model.

    python3 demos/cut_repair.py
"""
from possdlp import golden, solve, unparse
from possdlp.consistency import cons_cut_degree, repair
from possdlp.model import strict_alpha_cut


def main():
    program = golden.load("p_inc")
    print(unparse(program))
    print(f"answer sets: {solve(program)}")
    for alpha in program.lattice.sorted():
        cut = strict_alpha_cut(program, alpha)
        print(f"  strict cut above {alpha}: {len(cut)} clause(s), models {solve(cut)}")
    print(f"consistency cut degree: {cons_cut_degree(program)}")
    fixed = repair(program)
    print("repaired program:")
    print(unparse(fixed.program))
    print(f"its answer sets: {fixed.models}")
    print()

    for name in ("disjunctive_uniform", "shifted_normal"):
        p = golden.load(name)
        print(f"{name}: resolution {solve(p)}, unfolding {solve(p, engine='gppe')}")


if __name__ == "__main__":
    main()
