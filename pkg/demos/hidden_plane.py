"""Find a plane that the reduced basis does not display directly.

For this quartic-cubic space curve the reduced basis contains no polynomial
of degree one, yet the intersection is planar: a linear combination of the
generators collapses to x + y + z - 4. Scanning basis elements misses it;
the detector recovers it by solving for linear normal-form relations.

Run:  python demos/hidden_plane.py
CLI:  gbgeom planar --vars x,y,z --poly "x + y*z + y - z^4 - 4" \
          --poly "y - z^3 - 1"
"""

from gbgeom import (
    VarContext,
    detect_planes,
    normal_form,
    parse_expression,
    reduced_basis,
    scan_linear,
)

ctx = VarContext(("x", "y", "z"))
quartic = parse_expression("x + y*z + y - z^4 - 4", ctx)
cubic = parse_expression("y - z^3 - 1", ctx)

basis = reduced_basis([quartic, cubic])
print("reduced basis:")
for g in basis.elements:
    print(" ", g)

print("\nlinear element in the basis:", scan_linear(basis))

detection = detect_planes([quartic, cubic])
print("plane detection:", detection.status)
plane = detection.family.as_polynomials()[0]
print("  recovered plane:", plane, "= 0")

# membership certificate: the plane reduces to zero against the basis,
# so it lies in the ideal and vanishes on the whole curve
print("\nnormal form of the plane against the basis:", normal_form(plane, basis))
print("hand check: 1*(%s) - z*(%s) = %s" % (quartic, cubic, quartic - cubic * parse_expression("z", ctx)))
