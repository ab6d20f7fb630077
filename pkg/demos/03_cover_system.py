"""The interval system over covers: diagrams, solutions and infeasibility."""

from gorenstein import bar_diagram, build_system, candidate_alpha, solve, verify_alpha

left = (6, 3, 1, 4, 7, 2, 5)
right = (5, 3, 1, 7, 4, 2, 6)

for w in (left, right):
    alpha = solve(w)
    print(bar_diagram(w, alpha))
    print("solution:", alpha)
    print()

sys_ = build_system(left)
print("candidate", candidate_alpha(left), "verifies:", verify_alpha(sys_, candidate_alpha(left)))
