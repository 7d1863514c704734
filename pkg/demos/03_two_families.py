"""
Weight hierarchies of the two code families
===========================================

For d = 1 the code is a one-weight code; for the special exponent it is a
two-weight code. Each hierarchy is computed four ways and then held against
the Singleton, Plotkin-like and Griesmer-like bounds.
"""

from ghwlab.analysis import AnalysisConfig, analyze

for p, m, mode in [(3, 3, "one"), (3, 6, "one"), (3, 2, "special"), (7, 2, "special"), (11, 2, "special")]:
    methods = ("closed", "hyperplane", "subcode") if m == 6 else ("closed", "hyperplane", "charsum", "subcode")
    a = analyze(AnalysisConfig(p, m, mode, methods=methods))
    s = a.summary
    print(f"\n(p, m) = ({p}, {m}), {mode}: [{s.n}, {s.k}] weights {s.nonzero_weights}")
    for meth in methods:
        print(f"  {meth:<10} {a.ghw.hierarchy(meth)}")
    print(f"  agreement: {a.ghw.agreement}")
    b = a.bounds
    print(f"  r-MDS at {b.mds_ranks}; Plotkin-like met at {b.plotkin_ranks}; Griesmer-like met at {b.griesmer_ranks}")
    for w in a.warnings:
        print("  note:", w)
