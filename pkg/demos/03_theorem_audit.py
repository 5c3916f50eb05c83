"""
Checking the family criteria against computation
================================================
"""

# %%
from ordsup.audit import audit_family, compare_with_ledger, default_ledger_text, load_ledger, nilpotent_catalog

# %%
dihedral = audit_family("dihedral", range(3, 33))
print([r.params["n"] for r in dihedral.rows if not r.computed])
print("disagreements:", len(dihedral.discrepancies))

# %%
# The nilpotent catalog turns up one group where the criterion and the
# computed answer differ; it is recorded in the bundled ledger.
nil = audit_family("nilpotent", nilpotent_catalog(max_order=60))
for row in nil.discrepancies:
    print(row.params, "predicted", row.predicate, "computed", row.computed)
    print("cutset", row.certificate["cutset"])

# %%
diff = compare_with_ledger(nil, load_ledger(default_ledger_text()))
print("ledger clean:", diff.clean)

# %%
print(nil.dumps_csv().splitlines()[:4])
