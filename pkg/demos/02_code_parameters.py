"""
Code parameters and the recursive decoding radius
=================================================

For each degree d, the projective code PRM_d(m) has minimum weight wt and
true capability T = floor((wt-1)/2), while the recursive decoder is
guaranteed up to T0 = floor((eta-1)/2) for a combinatorial quantity eta that
sums the affine minimum weights along the recursion.  This script tabulates
both and shows exactly where they part ways.
"""

from prmcodes import GF, PRM, RM, CodeSpec, code_params, eta, rm_weight

# --- one family of codes over GF(4), m = 2 ---

gf = GF(2, 2)
print("PRM codes on the projective plane over GF(4)")
print(f"{'d':>2} {'n':>3} {'k':>3} {'wt':>3} {'eta':>4} {'T':>3} {'T0':>3}  ratio")
for d in range(1, 7):
    p = code_params(CodeSpec(PRM, gf, 2, d))
    ratio = f"{p.T0 / p.T:.3f}" if p.T else "  -"
    print(f"{d:>2} {p.n:>3} {p.k:>3} {p.wt:>3} {p.eta:>4} {p.T:>3} {p.T0:>3}  {ratio}")

# d = 3 is the lone deficit: eta = 6 < wt = 8, so the guarantee covers 2 of
# the 3 correctable errors; every other degree decodes to full capability

# --- where eta comes from ---

# eta's summation runs over the affine codes the recursion delegates to,
# one per level, plus 1 for the final single-point block
d = 3
nu, mu = divmod(d - 1, gf.q - 1)
terms = [rm_weight(gf.q, 2 - i, d) for i in range(2 - nu)]
print(f"\nd=3: eta = {' + '.join(str(t) for t in terms)} + 1 =",
      eta(gf.q, 2, 3))

# the affine block dominates the distance budget; wt(RM_3(2)) = 4 affine
# errors would already be uncorrectable for the [16,10,4] inner code

# --- equality characterization, swept ---

# eta equals wt exactly when mu = 0 or nu = m-1; checked here over a grid
print("\nfields q = 3,4,5,7, planes and m = 5:")
for q in (3, 4, 5, 7):
    gfq = GF.from_order(q)
    for m in (2, 5):
        deficit = []
        for d in range(1, m * (q - 1) + 1):
            nu, mu = divmod(d - 1, q - 1)
            p = code_params(CodeSpec(PRM, gfq, m, d))
            assert (p.eta == p.wt) == (mu == 0 or nu == m - 1)
            if p.eta != p.wt:
                deficit.append(d)
        tag = ",".join(str(d) for d in deficit) if deficit else "none"
        print(f"  q={q} m={m}: degrees below capability: {tag}")

# over GF(3) on the plane every degree reaches capability; larger fields pay
# in the middle band of degrees, which is the price of the recursion

# --- the affine relatives ---

print("\nRM codes on the affine plane over GF(4) for comparison:")
for d in range(0, 7):
    p = code_params(CodeSpec(RM, gf, 2, d))
    print(f"  d={d}: [{p.n},{p.k},{p.wt}], T = {p.T}")
