"""
Detecting non-classical codes
=============================

Compare upper and lower counts against every built-in target.
A nonzero difference certifies that the code is not classical.
"""

from quandiff import BUILTIN_NAMES, builtin, parse_text, q2

codes = {
    "trefoil": "O1+U2+O3+U1+O2+U3+",
    "figure-eight": "O1+U2+O3-U4-O2+U1+O4-U3-",
    "virtual trefoil": "O1+O2+U1+U2+",
    "four-crossing example": "UA+OB-UC+OD+OA+UB-UD+OC+",
}

print(f"{'code':<24}" + "".join(f"{name:>12}" for name in BUILTIN_NAMES))
for label, text in codes.items():
    cells = []
    for name in BUILTIN_NAMES:
        up, low = q2(parse_text(text), builtin(name))
        cells.append(f"{up}/{low}")
    print(f"{label:<24}" + "".join(f"{c:>12}" for c in cells))

# the classical codes and the virtual trefoil give equal pairs everywhere;
# the four-crossing example is separated by the order-4 target.
