"""
Reproducing the published tables
================================

Recompute both tables from the bundled diagrams.  Rows whose surface has
no transcribed diagram show up as missing.  Running each table with the
other printed module is included because it matches far more rows.
"""

from bikeikit import catalog


def show(table, module=None):
    rows = catalog.reproduce(table, module)
    for r in rows:
        got = "-" if r.got is None else str(r.got)
        print(f"  {'ok' if r.ok else '  '} {r.name:14} {str(r.expected):22} {got:24} {r.status}")
    print(f"  {sum(r.ok for r in rows)}/{len(rows)} match\n")


print("first table, its own module")
show("ex-proper")
print("first table, the second module")
show("ex-proper", catalog.module("second"))
print("second table, its own module")
show("second")
print("second table, the first module")
show("second", catalog.module("ex-proper"))
