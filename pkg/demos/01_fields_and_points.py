"""
Finite fields and the ordered projective point list
===================================================

The whole package hangs off two conventions: how GF(q) elements are encoded
and in what order the points of projective space are listed.  This script
walks through both for GF(4).
"""

from prmcodes import GF, affine_points, num_projective_points, projective_points

# --- the field ---

# elements are ints 0..q-1; for prime powers the int is the polynomial
# p(a) with base-p digits, so over GF(4) = GF(2)[a]/(a^2+a+1):
#   0 -> 0, 1 -> 1, 2 -> a, 3 -> a+1
gf = GF(2, 2)
print("GF(4), modulus digits", gf.modulus)
print("multiplication table:")
for a in range(4):
    print("  ", [gf.mul(a, b) for b in range(4)])

# the primitive element generates the ordering used everywhere: powers of xi
# first, zero last
print("xi =", gf.xi, "-> ordering", gf.ordering())
assert [gf.pow(gf.xi, s) for s in range(3)] + [0] == list(gf.ordering())

# --- projective points ---

# a projective point is the tuple whose leftmost nonzero coordinate is 1;
# the list is built recursively: the affine chart (first coordinate 1),
# then the smaller projective space with a leading 0
print()
for j in (0, 1, 2):
    pts = projective_points(gf, j)
    print(f"P^{j} has {len(pts)} points", "=", num_projective_points(4, j))
    if j < 2:
        print("  ", list(pts))

p2 = projective_points(gf, 2)
print("first five of P^2:", list(p2[:5]))
print("last five of P^2: ", list(p2[-5:]))

# the chart block of P^2 is the affine plane, ordered so that it decomposes
# into q-1 scaled copies of P^1 plus the origin; that alignment is what the
# recursive decoder leans on
chart = [pt[1:] for pt in p2[:16]]
plane = affine_points(gf, 2)
assert chart == list(plane)
p1 = projective_points(gf, 1)
for s in range(3):
    scale = gf.pow(gf.xi, s)
    block = plane[s * 5:(s + 1) * 5]
    copy = [tuple(gf.mul(scale, x) for x in pt) for pt in p1]
    assert list(block) == copy
    print(f"plane rows {s * 5}..{s * 5 + 4} = xi^{s} * P^1")
print("final plane point:", plane[-1], "(the origin)")
