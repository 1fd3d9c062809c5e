"""Walk through deciding that a paraboloid-cylinder intersection is planar.

The two surfaces carry nonzero constants a, b in their coefficients, so the
basis computation runs over the field of rational functions in a and b.

Run:  python demos/planar_intersection.py
CLI:  gbgeom planar --vars x,y,z --params a,b \
          --poly "z - x^2/a^2 - y^2/b^2" \
          --poly "x^2/a^2 + y^2/b^2 - x/a - y/b"
"""

from gbgeom import (
    VarContext,
    detect_planes,
    lt_membership,
    parse_expression,
    reduced_basis,
    render,
)

ctx = VarContext(("x", "y", "z"), ("a", "b"))
paraboloid = parse_expression("z - x^2/a^2 - y^2/b^2", ctx)
cylinder = parse_expression("x^2/a^2 + y^2/b^2 - x/a - y/b", ctx)

print("surfaces:")
print(" ", paraboloid, "= 0")
print(" ", cylinder, "= 0")

basis = reduced_basis([paraboloid, cylinder])
print("\nreduced basis (monic):")
for g in basis.elements:
    print(" ", g)
print("reduced basis (cleared denominators):")
for g in basis.elements:
    print(" ", render(g, "cleared"))

# the basis opens with a linear element, and the leading-term ideal avoids
# y and z, so that element is forced to appear in any reduced basis of a
# planar system
report = lt_membership(basis)
print("\nvariables inside the leading-term ideal:")
for name, inside in zip(report.variables, report.in_lt_ideal):
    print(f"  {name}: {'yes' if inside else 'no'}")
print("tail variables stay outside:", report.tail_variables_absent())

detection = detect_planes([paraboloid, cylinder])
print("\nplane detection:", detection.status)
for plane in detection.family.as_polynomials():
    print("  every intersection point satisfies", render(plane, "cleared"), "= 0")
