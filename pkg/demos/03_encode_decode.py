"""
Encoding and recursive decoding, traced
=======================================

Encode a homogeneous cubic on the projective plane over GF(4), corrupt it
within the guaranteed radius, and watch the strict recursive decoder work
block by block.  Then run the degree >= q case over GF(3), where homogenizing
the affine witness is ambiguous and the decoder has to split it.
"""

import numpy as np

from prmcodes import (GF, PRM, CodeSpec, code_params, decode_prm,
                      eval_projective, parse_poly)

# --- round trip within the radius ---

gf = GF(2, 2)
f = parse_poly(gf, "x0^3+x1^3+x2^3", 3)
c = eval_projective(f, 2)
print("f =", f)
print("codeword:", ",".join(str(int(x)) for x in c))

p = code_params(CodeSpec(PRM, gf, 2, 3))
print(f"[{p.n},{p.k},{p.wt}] code, guaranteed radius T0 = {p.T0}")

# two errors, one in the affine chart and one in the tail
r = c.copy()
r[2] = gf.add(int(r[2]), 3)
r[18] = gf.add(int(r[18]), 1)

trace = []
out = decode_prm(gf, 2, 3, r, trace=trace)
assert out.ok and np.array_equal(out.codeword, c)
print("\ndecoding two errors, the steps taken:")
for ev in trace:
    kind = ev["event"]
    if kind == "affine":
        print(f"  affine decode ({ev['part']} part) at m={ev['m']}, "
              f"d={ev['d']}: {'ok' if ev['ok'] else 'rejected'}")
    elif kind == "tail":
        print(f"  tail block decoded at m={ev['m'] - 1}, witness {ev['g']}")
    elif kind == "accept":
        print(f"  accepted in the {ev['part']} part: f = {ev['f']}")
print("recovered f =", out.witness)

# --- the split when d >= q ---

# over GF(3) with d = 3 the chart sees x^3 and x as the same function, so the
# affine witness comes back wrapped; the split/lift bookkeeping undoes it
gf3 = GF(3)
f3 = parse_poly(gf3, "x0^2*x1+2*x1^3+x1^2*x2+x0*x2^2+x2^3", 3)
c3 = eval_projective(f3, 2)
print("\nGF(3), d=3: f =", f3)

trace = []
out = decode_prm(gf3, 2, 3, c3, trace=trace)
assert out.ok
split = next(ev for ev in trace if ev["event"] == "split")
residue = next(ev for ev in trace if ev["event"] == "residue")
print("affine witness splits into:")
print("  ambiguous terms (lift not determined):", split["bad"])
print("  terms forced to stay top degree:      ", split["good_top"])
print("  terms forced to stay low degree:      ", split["good_low"])
print("recursive call at degree 1 returns:", residue["f_sub"])
print("leftover affine part:", residue["g0"])
print("reassembled f =", out.witness)
assert np.array_equal(eval_projective(out.witness, 2), c3)
