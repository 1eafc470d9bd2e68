"""
Upper and lower quandles of a Gauss code
========================================

Read both presentations off a single code and repair the lower matrix.
"""

from quandiff import flip, gfix, lower_relations, parse_text, relations_to_matrix, upper_relations
from quandiff.gauss import to_vector

code = parse_text("UA+OB-UC+OD+OA+UB-UD+OC+")
print("code   ", code, to_vector(code))

# upper quandle: cut at under-passes, one relation per crossing
upper = upper_relations(code)
print("upper  ", upper)
print(relations_to_matrix(upper))

# lower quandle: same procedure on the flipped code
lower = lower_relations(code)
print("lower  ", lower)

# two relations share the entry (4, 2); the matrix export reports it
print(relations_to_matrix(lower))

# a kink after the offending under-pass splits the shared arc
fixed = gfix(flip(code))
print("fixed  ", fixed)
print(relations_to_matrix(upper_relations(fixed)))
