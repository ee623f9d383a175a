"""
Checking the catalog
====================

Every generating pair in the catalog is checked in turn.  Each report
compares the computed degree, cover and exceptional degree with the stated
ones and lists any disagreement.
"""

from trigon.catalog import verify_case, verify_theorem

for report in verify_theorem((2, 3, 7)):
    c = report.computed
    print("%-3s degree %-3s %-16s exceptional %-5s ok=%s" % (
        report.case, c["degree"], c["cover"], c["exceptional_degrees"], report.ok))
    for d in report.discrepancies:
        print("      flag:", d)

# One case in full, as JSON-ready data
r = verify_case("3", sig=(2, 3, 9))
print(r.to_dict())

# The (6.x) pairs are reduced by Nielsen moves instead of a cover
r = verify_case("6b", sig=(2, 3, 5))
print(r.nielsen)
