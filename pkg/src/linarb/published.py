"""Printed upper bounds that disagree with their own derivation.

Used only to flag the disagreement next to recomputed rows; never used as a value.
"""

# hyper Petersen lexicographic network, n = 4: k bucket (1, 2, 3, 4 meaning k >= 4) -> printed upper
HYPER_PETERSEN_LEX_PRINTED_UPPER = {4: {1: 14, 2: 13, 3: 13, 4: 12}}
