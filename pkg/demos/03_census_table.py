"""
Exact census of maximal forms
=============================

Masses are exact fractions; the counts per genus are integers with up to
fifty digits.
"""

from wicksforms import counts, masses
from wicksforms.census import census_table, table_csv

print("masses at genus 2:", [str(m) for m in masses(2)])

for row in census_table(2, 15):
    flag = " (bijection open)" if row.bijection_status == "open" else ""
    print("%3d %s%s" % (row.genus, row.M1, flag))

# Forms with exactly 1, 2, 3 and 6 automorphisms.
row = counts(6)
print("genus 6:", row.n1, row.n2, row.n3, row.n6)

# Disk radii come along in every row.
print("R_4 = %.12f, C_4 = %.12f" % (counts(4).R, counts(4).C))

print(table_csv(census_table(4, 5)))
