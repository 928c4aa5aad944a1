"""The chain of curves C~ - E_1 - ... - E_n - C~' and its canonical classes."""

from dp1.chain import build_chain_lattice, canonical_classes, verify_canonical_identities

for n in (0, 1, 5):
    lat = build_chain_lattice(n)
    K1, K2, F = canonical_classes(n)
    rep = verify_canonical_identities(lat)
    print(f"n = {n}: rank {lat.rank}, kernel {lat.kernel()}")
    print(f"  K1 = {K1}\n  K2 = {K2}\n  K2 - K1 = {K2 - K1} = {n + 1} F")
    print(f"  all identities hold: {rep.ok}")

broken = build_chain_lattice(3).with_entry(1, 1, -3)
rep = verify_canonical_identities(broken)
print("\nE1^2 = -3:", [k for k, v in rep.checks.items() if not v])
