"""
Verification reports
====================

Run the full three-way check on small nets and the formula-only check far
beyond the enumeration ceiling, then serialize the reports.
"""

from trinet.validation import VerificationReport, cross_validate, formula_only_validate

full = cross_validate(10)
print("full check n <= 10:", "PASS" if full.verdict else "FAIL", full.timing)
print(full.to_csv().splitlines()[-1])

fast = formula_only_validate(10**4)
print("formula-only n <= 10^4:", "PASS" if fast.verdict else "FAIL")

text = full.to_json()
assert VerificationReport.from_json(text) == full
print(f"JSON report: {len(text)} bytes, round-trips cleanly")
