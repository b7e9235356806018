"""Assemble data/c3_chartab.csv from the transcribed 67 x 67 table of C_3.

The table is kept below in four blocks: rows 1-50 and rows 51-67, each split
into columns 1-32 and columns 33-67. Every block line is "row: values". Class
sizes are not part of the data; the CSV leaves them blank and they are
recovered from column orthogonality.

Run from the repository root:  python3 scripts/build_c3_fixture.py
"""

from __future__ import annotations

import csv
import pathlib

# rows 1-50, columns 1-32
BLOCK_A = """
 1: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
 2: 7 7 -2 1 3 3 3 3 4 4 -3 -3 -3 0 0 0 0 0 1 1 1 -1 -1 -1 2 2 1 1 -1 -1 -5 -5
 3: 15 15 -3 0 3 3 3 3 0 0 1 1 1 0 0 0 -2 -2 -3 -3 -3 7 7 7 -2 -2 3 3 1 1 -5 -5
 4: 21 21 3 0 5 5 5 5 6 6 -3 -3 -3 2 2 2 0 0 -3 -3 -3 5 5 5 2 2 0 0 2 2 -11 -11
 5: 21 21 3 0 1 1 1 1 6 6 3 3 3 -2 -2 -2 0 0 -1 -1 -1 -3 -3 -3 0 0 0 0 0 0 9 9
 6: 27 27 0 0 7 7 7 7 9 9 5 5 5 1 1 1 -1 -1 1 1 1 3 3 3 3 3 0 0 0 0 15 15
 7: 35 35 -1 -1 7 7 7 7 5 5 1 1 1 1 1 1 1 1 5 5 5 11 11 11 -1 -1 2 2 2 2 15 15
 8: 35 35 -1 -1 -5 -5 -5 -5 5 5 -1 -1 -1 1 1 1 -1 -1 -1 -1 -1 3 3 3 -3 -3 2 2 0 0 -5 -5
 9: 56 56 2 -1 8 8 8 8 11 11 -4 -4 -4 -1 -1 -1 -1 -1 4 4 4 -8 -8 -8 1 1 2 2 -2 -2 -24 -24
10: 63 -1 0 0 -1 -1 -1 15 -1 15 -1 -1 7 3 -1 -1 -1 1 -1 -1 7 -1 15 -1 -1 3 3 -1 -1 3 -1 31
11: 63 -1 0 0 -1 -5 3 11 -1 15 1 1 -7 -1 -1 3 1 -1 1 -3 5 -1 -9 7 -1 3 3 -1 1 -3 -1 -29
12: 70 70 7 1 6 6 6 6 -5 -5 2 2 2 3 3 3 -1 -1 2 2 2 -10 -10 -10 -1 -1 1 1 -1 -1 -10 -10
13: 84 84 3 0 4 4 4 4 -6 -6 0 0 0 -2 -2 -2 0 0 0 0 0 20 20 20 2 2 3 3 -1 -1 4 4
14: 105 105 -3 0 5 5 5 5 15 15 -5 -5 -5 -1 -1 -1 1 1 -1 -1 -1 1 1 1 1 1 -3 -3 1 1 -35 -35
15: 105 105 6 0 9 9 9 9 0 0 -3 -3 -3 0 0 0 0 0 -3 -3 -3 -7 -7 -7 -4 -4 3 3 -1 -1 25 25
16: 105 105 6 0 -3 -3 -3 -3 0 0 -1 -1 -1 0 0 0 2 2 3 3 3 17 17 17 2 2 3 3 -1 -1 5 5
17: 120 120 -6 0 8 8 8 8 15 15 4 4 4 -1 -1 -1 1 1 -4 -4 -4 -8 -8 -8 1 1 0 0 -2 -2 40 40
18: 168 168 6 0 8 8 8 8 6 6 0 0 0 2 2 2 0 0 0 0 0 8 8 8 2 2 -3 -3 -1 -1 40 40
19: 189 189 0 0 1 1 1 1 9 9 -1 -1 -1 1 1 1 -1 -1 -5 -5 -5 21 21 21 3 3 0 0 0 0 -39 -39
20: 189 189 0 0 13 13 13 13 9 9 1 1 1 1 1 1 1 1 1 1 1 -3 -3 -3 -3 -3 0 0 0 0 -51 -51
21: 189 189 0 0 -11 -11 -11 -11 9 9 1 1 1 1 1 1 1 1 1 1 1 -3 -3 -3 -3 -3 0 0 0 0 21 21
22: 210 210 3 0 2 2 2 2 15 15 2 2 2 -1 -1 -1 -1 -1 2 2 2 2 2 2 -1 -1 0 0 2 2 50 50
23: 210 210 -6 0 10 10 10 10 -15 -15 -2 -2 -2 1 1 1 1 1 -2 -2 -2 -14 -14 -14 1 1 3 3 1 1 10 10
24: 216 216 0 0 8 8 8 8 -9 -9 4 4 4 -1 -1 -1 1 1 -4 -4 -4 24 24 24 -3 -3 0 0 0 0 -24 -24
25: 280 280 -8 1 8 8 8 8 -5 -5 -4 -4 -4 -1 -1 -1 -1 -1 4 4 4 24 24 24 -3 -3 -2 -2 0 0 40 40
26: 280 280 10 1 -8 -8 -8 -8 10 10 0 0 0 -2 -2 -2 0 0 0 0 0 -8 -8 -8 -2 -2 1 1 1 1 -40 -40
27: 315 -5 0 0 -5 -5 11 11 -2 30 3 -1 -9 2 -2 2 0 0 3 -1 -9 -5 27 11 -2 6 -3 1 -1 3 -5 -85
28: 315 -5 0 0 -5 7 -1 23 -2 30 -3 1 9 2 -2 2 0 0 -3 5 -3 -5 3 19 -2 6 -3 1 1 -3 -5 95
29: 315 315 -9 0 3 3 3 3 0 0 3 3 3 0 0 0 0 0 3 3 3 -21 -21 -21 0 0 0 0 0 0 -45 -45
30: 315 -5 0 0 -5 -1 7 15 1 -15 1 -3 5 -3 1 1 1 -1 1 1 -7 -5 51 3 1 -3 6 -2 0 0 -5 -25
31: 315 -5 0 0 -5 3 3 19 1 -15 -1 3 -5 1 1 -3 -1 1 -1 3 -5 -5 -21 27 1 -3 6 -2 0 0 -5 35
32: 336 336 -6 0 -16 -16 -16 -16 6 6 0 0 0 2 2 2 0 0 0 0 0 16 16 16 -2 -2 0 0 -2 -2 -16 -16
33: 378 378 0 0 2 2 2 2 -9 -9 2 2 2 -1 -1 -1 -1 -1 2 2 2 -6 -6 -6 3 3 0 0 0 0 -30 -30
34: 378 -6 0 0 -2 2 -6 34 -3 45 2 2 -14 1 1 -3 -1 1 -2 2 2 2 -6 -6 -1 3 0 0 0 0 6 -126
35: 378 -6 0 0 -2 -14 10 18 -3 45 -2 -2 14 -3 1 1 1 -1 2 -2 -2 2 -6 -6 -1 3 0 0 0 0 6 114
36: 405 405 0 0 -3 -3 -3 -3 0 0 -3 -3 -3 0 0 0 0 0 -3 -3 -3 -27 -27 -27 0 0 0 0 0 0 45 45
37: 420 420 -3 0 -12 -12 -12 -12 0 0 0 0 0 0 0 0 0 0 0 0 0 4 4 4 4 4 3 3 1 1 20 20
38: 512 512 8 -1 0 0 0 0 -16 -16 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -4 -4 0 0 0 0
39: 567 -9 0 0 -9 -1 15 15 0 0 3 -5 3 0 0 0 0 0 3 -5 3 -9 -9 39 0 0 0 0 0 0 -9 -81
40: 567 -9 0 0 -9 11 3 27 0 0 -3 5 -3 0 0 0 0 0 -3 1 9 -9 63 15 0 0 0 0 0 0 -9 99
41: 630 -10 0 0 2 -2 -10 30 -1 15 -2 2 2 3 -1 -1 1 -1 2 2 -14 -2 54 -10 1 -3 3 -1 -1 3 10 -130
42: 630 -10 0 0 2 -2 -10 30 -1 15 -2 2 2 3 -1 -1 1 -1 2 -6 10 -2 -42 22 1 -3 3 -1 1 -3 10 -130
43: 630 -10 0 0 -10 14 14 -18 -1 15 2 -2 -2 3 -1 -1 -1 1 2 -2 -2 -10 54 22 -1 3 3 -1 1 -3 -10 -50
44: 630 -10 0 0 2 -18 6 14 -1 15 2 -2 -2 -1 -1 3 -1 1 -2 -2 14 -2 54 -10 1 -3 3 -1 -1 3 10 110
45: 630 -10 0 0 2 -18 6 14 -1 15 2 -2 -2 -1 -1 3 -1 1 -2 6 -10 -2 -42 22 1 -3 3 -1 1 -3 10 110
46: 630 -10 0 0 -10 22 6 -10 -1 15 -2 2 2 -1 -1 3 1 -1 -2 2 2 -10 6 38 -1 3 3 -1 -1 3 -10 70
47: 945 -15 0 0 1 1 -15 49 -3 45 1 -3 5 1 1 -3 1 -1 1 -3 5 1 33 -15 1 -3 0 0 0 0 -15 225
48: 945 -15 0 0 1 -7 9 -23 -3 45 1 1 -7 1 1 -3 1 -1 1 1 -7 1 33 -15 1 -3 0 0 0 0 -15 -135
49: 945 -15 0 0 1 -27 13 21 -3 45 -1 3 -5 -3 1 1 -1 1 -1 -1 7 1 -39 9 1 -3 0 0 0 0 -15 -195
50: 945 -15 0 0 1 13 -11 -3 -3 45 -1 -1 7 -3 1 1 -1 1 -1 3 -5 1 -39 9 1 -3 0 0 0 0 -15 165
"""

# rows 1-50, columns 33-67
BLOCK_B = """
 1: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
 2: -5 1 1 -1 -1 -1 -1 -1 -1 3 3 2 0 2 2 0 0 -1 -1 -1 -1 -1 1 1 1 1 1 1 -1 -2 -2 -2 -2 -2 0
 3: -5 1 1 -1 -1 -1 -1 -1 -1 -1 -1 1 -1 0 0 0 0 1 1 3 3 3 -1 -1 1 1 1 1 0 -2 -2 -2 0 0 1
 4: -11 -2 -2 -3 -3 -3 -3 0 0 1 1 -1 1 1 1 -1 -1 -1 -1 1 1 1 -1 -1 1 1 1 1 1 -2 -2 -2 0 0 0
 5: 9 0 0 -3 -3 -3 -3 0 0 5 5 3 -1 1 1 -1 -1 -1 -1 1 1 1 1 1 -1 -1 -1 -1 1 0 0 0 2 2 0
 6: 15 0 0 3 3 3 3 0 0 3 3 0 0 2 2 0 0 1 1 -1 -1 -1 -1 -1 1 1 1 1 -1 3 3 3 1 1 -1
 7: 15 0 0 3 3 3 3 0 0 -1 -1 -1 -1 0 0 0 0 -1 -1 3 3 3 1 1 1 1 1 1 0 3 3 3 -1 -1 0
 8: -5 -2 -2 3 3 3 3 0 0 7 7 3 1 0 0 0 0 1 1 -1 -1 -1 1 1 -1 -1 -1 -1 0 1 1 1 -1 -1 0
 9: -24 0 0 0 0 0 0 0 0 0 0 -2 0 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 1 -3 -3 -3 1 1 0
10: -1 -1 1 -1 7 -1 -1 -1 1 3 -1 0 0 -1 3 1 -1 1 -1 3 -1 -1 -1 1 -1 3 -1 -1 0 -1 -1 7 1 -1 0
11: 3 -1 1 -1 -1 3 -5 1 -1 3 -1 0 0 -1 3 1 -1 -1 1 -1 -1 3 -1 1 1 1 1 -3 0 -1 3 -5 -1 1 0
12: -10 -1 -1 -2 -2 -2 -2 1 1 2 2 -1 -1 0 0 0 0 0 0 2 2 2 0 0 -2 -2 -2 -2 0 -1 -1 -1 -1 -1 0
13: 4 1 1 4 4 4 4 1 1 4 4 -1 1 -1 -1 -1 -1 0 0 4 4 4 0 0 0 0 0 0 -1 -2 -2 -2 0 0 0
14: -35 1 1 1 1 1 1 1 1 5 5 1 -1 0 0 0 0 1 1 1 1 1 -1 -1 -1 -1 -1 -1 0 1 1 1 -1 -1 0
15: 25 1 1 1 1 1 1 1 1 -3 -3 2 0 0 0 0 0 -1 -1 -3 -3 -3 -1 -1 1 1 1 1 0 4 4 4 0 0 0
16: 5 -1 -1 -7 -7 -7 -7 -1 -1 -3 -3 2 0 0 0 0 0 1 1 1 1 1 -1 -1 -1 -1 -1 -1 0 2 2 2 0 0 0
17: 40 -2 -2 0 0 0 0 0 0 0 0 -2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 -1 -1 1
18: 40 1 1 8 8 8 8 -1 -1 0 0 2 0 -2 -2 0 0 0 0 0 0 0 0 0 0 0 0 0 1 -2 -2 -2 0 0 0
19: -39 0 0 -3 -3 -3 -3 0 0 -3 -3 0 0 -1 -1 1 1 -1 -1 1 1 1 1 1 -1 -1 -1 -1 -1 3 3 3 1 1 0
20: -51 0 0 -3 -3 -3 -3 0 0 -3 -3 0 0 -1 -1 -1 -1 1 1 -3 -3 -3 1 1 1 1 1 1 -1 -3 -3 -3 1 1 0
21: 21 0 0 -3 -3 -3 -3 0 0 9 9 0 0 -1 -1 1 1 -1 -1 1 1 1 -1 -1 1 1 1 1 -1 -3 -3 -3 1 1 0
22: 50 2 2 -6 -6 -6 -6 0 0 -2 -2 -1 1 0 0 0 0 0 0 -2 -2 -2 0 0 -2 -2 -2 -2 0 -1 -1 -1 -1 -1 0
23: 10 1 1 2 2 2 2 -1 -1 6 6 -2 0 0 0 0 0 0 0 -2 -2 -2 0 0 -2 -2 -2 -2 0 1 1 1 1 1 0
24: -24 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 1 -3 -3 -3 -1 -1 -1
25: 40 -2 -2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 0
26: -40 -1 -1 8 8 8 8 -1 -1 0 0 -2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 2 2 0 0 0
27: 11 1 -1 3 -5 3 -13 -1 1 3 -1 0 0 0 0 0 0 -1 1 3 -1 -1 1 -1 3 -1 -1 -1 0 -2 2 2 0 0 0
28: -1 1 -1 -5 11 -1 7 1 -1 3 -1 0 0 0 0 0 0 1 -1 -1 -1 3 1 -1 1 1 -3 1 0 -2 2 2 0 0 0
29: -45 0 0 3 3 3 3 0 0 -5 -5 3 1 0 0 0 0 -1 -1 3 3 3 -1 -1 -1 -1 -1 -1 0 0 0 0 0 0 0
30: 7 -2 2 3 3 -1 -9 0 0 3 -1 0 0 0 0 0 0 1 -1 7 -1 -5 1 -1 1 1 -3 1 0 1 1 -7 -1 1 0
31: 3 -2 2 -5 3 3 3 0 0 3 -1 0 0 0 0 0 0 -1 1 -5 -1 7 1 -1 3 -1 -1 -1 0 1 -3 5 1 -1 0
32: -16 2 2 0 0 0 0 0 0 0 0 -2 0 1 1 -1 -1 0 0 0 0 0 0 0 0 0 0 0 1 2 2 2 0 0 0
33: -30 0 0 -6 -6 -6 -6 0 0 6 6 0 0 -2 -2 0 0 0 0 -2 -2 -2 0 0 2 2 2 2 1 3 3 3 -1 -1 0
34: 2 0 0 2 -6 -2 6 0 0 6 -2 0 0 -1 3 -1 1 0 0 -2 2 -2 0 0 -2 2 -2 2 0 3 -1 -9 -1 1 0
35: -14 0 0 2 -6 -2 6 0 0 6 -2 0 0 -1 3 -1 1 0 0 -2 2 -2 0 0 2 -2 2 -2 0 3 -5 3 1 -1 0
36: 45 0 0 -3 -3 -3 -3 0 0 -3 -3 0 0 0 0 0 0 1 1 5 5 5 1 1 1 1 1 1 0 0 0 0 0 0 -1
37: 20 -1 -1 4 4 4 4 1 1 -4 -4 1 -1 0 0 0 0 0 0 -4 -4 -4 0 0 0 0 0 0 0 -4 -4 -4 0 0 0
38: 0 0 0 0 0 0 0 0 0 0 0 0 0 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0 0 0 1
39: 15 0 0 -1 -9 7 -9 0 0 3 -1 0 0 1 -3 -1 1 1 -1 -5 -1 7 -1 1 -1 3 -1 -1 0 0 0 0 0 0 0
40: 3 0 0 -1 15 -5 3 0 0 3 -1 0 0 1 -3 -1 1 -1 1 7 -1 -5 -1 1 1 1 1 -3 0 0 0 0 0 0 0
41: -2 1 -1 -2 -10 2 10 1 -1 -6 2 0 0 0 0 0 0 0 0 2 -2 2 0 0 -2 2 2 -2 0 1 1 -7 1 -1 0
42: -2 1 -1 6 -2 -6 2 -1 1 -6 2 0 0 0 0 0 0 0 0 2 -2 2 0 0 2 -2 -2 2 0 1 1 -7 1 -1 0
43: 14 -1 1 6 -10 -2 -2 1 -1 -6 2 0 0 0 0 0 0 0 0 2 2 -6 0 0 -2 -2 2 2 0 -1 -1 7 1 -1 0
44: -18 1 -1 -2 -10 2 10 1 -1 -6 2 0 0 0 0 0 0 0 0 2 -2 2 0 0 2 -2 -2 2 0 1 -3 5 -1 1 0
45: -18 1 -1 6 -2 -6 2 -1 1 -6 2 0 0 0 0 0 0 0 0 2 -2 2 0 0 -2 2 2 -2 0 1 -3 5 -1 1 0
46: 6 -1 1 -2 -2 -2 14 -1 1 -6 2 0 0 0 0 0 0 0 0 -6 2 2 0 0 -2 -2 2 2 0 -1 3 -5 -1 1 0
47: 1 0 0 1 9 1 -15 0 0 -3 1 0 0 0 0 0 0 -1 1 -3 1 1 1 -1 -3 1 1 1 0 -3 1 9 -1 1 0
48: 25 0 0 1 9 -7 9 0 0 9 -3 0 0 0 0 0 0 1 -1 1 -3 5 -1 1 1 -3 1 1 0 -3 1 9 -1 1 0
49: 29 0 0 -7 9 5 -3 0 0 -3 1 0 0 0 0 0 0 1 -1 1 1 -3 1 -1 -1 -1 3 -1 0 -3 5 -3 1 -1 0
50: 5 0 0 1 -15 5 -3 0 0 9 -3 0 0 0 0 0 0 -1 1 5 -3 1 -1 1 -1 -1 -1 3 0 -3 5 -3 1 -1 0
"""

# rows 51-67, columns 1-32
BLOCK_C = """
51: 1008 -16 0 0 -16 16 16 16 2 -30 0 0 0 -2 2 -2 0 0 0 0 0 -16 48 48 2 -6 -6 2 0 0 -16 16
52: 1260 -20 0 0 4 12 -4 -52 -2 30 0 0 0 2 -2 2 0 0 0 0 0 -4 12 12 2 -6 6 -2 0 0 20 -20
53: 1512 -24 0 0 -8 -8 24 -8 -3 45 -4 4 4 1 1 -3 -1 1 4 -4 -4 8 -24 -24 -1 3 0 0 0 0 24 216
54: 1512 -24 0 0 -8 24 -8 24 -3 45 4 -4 -4 -3 1 1 1 -1 -4 4 4 8 -24 -24 -1 3 0 0 0 0 24 -264
55: 1890 -30 0 0 -10 10 2 42 3 -45 2 -6 10 3 -1 -1 -1 1 -2 2 2 10 -30 -30 1 -3 0 0 0 0 30 -150
56: 1890 -30 0 0 2 -14 2 18 3 -45 -2 2 2 3 -1 -1 1 -1 -2 2 2 2 -78 18 -1 3 0 0 0 0 -30 -30
57: 1890 -30 0 0 -10 -6 18 26 3 -45 -2 6 -10 -1 -1 3 1 -1 2 -2 -2 10 -30 -30 1 -3 0 0 0 0 30 90
58: 1890 -30 0 0 2 -6 -6 26 3 -45 2 -2 -2 -1 -1 3 -1 1 2 -2 -2 2 66 -30 -1 3 0 0 0 0 -30 90
59: 2268 -36 0 0 -12 28 12 -36 0 0 0 0 0 0 0 0 0 0 0 0 0 12 -36 -36 0 0 0 0 0 0 36 -36
60: 2520 -40 0 0 8 -24 8 -24 -1 15 4 -4 -4 3 -1 -1 1 -1 -4 4 4 -8 24 24 1 -3 -6 2 0 0 40 200
61: 2520 -40 0 0 8 8 -24 8 -1 15 -4 4 4 -1 -1 3 -1 1 4 -4 -4 -8 24 24 1 -3 -6 2 0 0 40 -280
62: 2520 -40 0 0 8 -8 -8 -8 2 -30 0 0 0 -2 2 -2 0 0 0 0 0 -8 -72 56 -2 6 3 -1 -1 3 40 -40
63: 2520 -40 0 0 8 -8 -8 -8 2 -30 0 0 0 -2 2 -2 0 0 0 0 0 -8 120 -8 -2 6 3 -1 1 -3 40 -40
64: 2835 -45 0 0 3 -25 15 -9 0 0 -3 1 9 0 0 0 0 0 -3 5 -3 3 27 -21 0 0 0 0 0 0 -45 -225
65: 2835 -45 0 0 3 11 -21 27 0 0 3 -1 -9 0 0 0 0 0 3 -1 -9 3 -45 3 0 0 0 0 0 0 -45 315
66: 2835 -45 0 0 3 15 -9 -33 0 0 -3 5 -3 0 0 0 0 0 -3 1 9 3 27 -21 0 0 0 0 0 0 -45 135
67: 2835 -45 0 0 3 3 3 -45 0 0 3 -5 3 0 0 0 0 0 3 -5 3 3 -45 3 0 0 0 0 0 0 -45 -45
"""

# rows 51-67, columns 33-67
BLOCK_D = """
51: 16 2 -2 0 0 0 0 0 0 0 0 0 0 -1 3 1 -1 0 0 0 0 0 0 0 0 0 0 0 0 2 -2 -2 0 0 0
52: -20 2 -2 -4 12 4 -12 0 0 12 -4 0 0 0 0 0 0 0 0 -4 4 -4 0 0 0 0 0 0 0 2 -2 -2 0 0 0
53: -40 0 0 0 0 0 0 0 0 0 0 0 0 1 -3 1 -1 0 0 0 0 0 0 0 0 0 0 0 0 3 -1 -9 -1 1 0
54: -8 0 0 0 0 0 0 0 0 0 0 0 0 1 -3 1 -1 0 0 0 0 0 0 0 0 0 0 0 0 3 -5 3 1 -1 0
55: -22 0 0 2 -6 -2 6 0 0 6 -2 0 0 0 0 0 0 0 0 -2 2 -2 0 0 2 -2 2 -2 0 -3 5 -3 -1 1 0
56: 34 0 0 -6 -6 10 -6 0 0 6 -2 0 0 0 0 0 0 0 0 6 -2 -2 0 0 -2 -2 2 2 0 3 -5 3 -1 1 0
57: -38 0 0 2 -6 -2 6 0 0 6 -2 0 0 0 0 0 0 0 0 -2 2 -2 0 0 -2 2 -2 2 0 -3 1 9 1 -1 0
58: 26 0 0 2 18 -6 -6 0 0 6 -2 0 0 0 0 0 0 0 0 -2 -2 6 0 0 -2 -2 2 2 0 3 -1 -9 1 -1 0
59: -36 0 0 -4 12 4 -12 0 0 -12 4 0 0 -1 3 -1 1 0 0 4 -4 4 0 0 0 0 0 0 0 0 0 0 0 0 0
60: -56 -2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 -7 1 -1 0
61: -24 -2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 -3 5 -1 1 0
62: -40 1 -1 8 8 -8 -8 1 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -2 2 2 0 0 0
63: -40 1 -1 -8 -8 8 8 -1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -2 2 2 0 0 0
64: 63 0 0 3 3 -1 -9 0 0 -9 3 0 0 0 0 0 0 -1 1 -5 3 -1 -1 1 1 1 -3 1 0 0 0 0 0 0 0
65: 27 0 0 -5 3 3 3 0 0 -9 3 0 0 0 0 0 0 1 -1 -1 3 -5 -1 1 3 -1 -1 -1 0 0 0 0 0 0 0
66: 39 0 0 11 -21 -1 -9 0 0 3 -1 0 0 0 0 0 0 1 -1 -1 -1 3 1 -1 1 1 1 -3 0 0 0 0 0 0 0
67: 51 0 0 -5 3 -5 27 0 0 3 -1 0 0 0 0 0 0 -1 1 3 -1 -1 1 -1 -1 3 -1 -1 0 0 0 0 0 0 0
"""

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "cliffchar" / "data" / "c3_chartab.csv"


def parse(block: str, rows: range, width: int) -> dict[int, list[int]]:
    out = {}
    for line in block.strip().splitlines():
        label, _, vals = line.partition(":")
        r = int(label)
        out[r] = [int(x) for x in vals.split()]
        if len(out[r]) != width:
            raise ValueError(f"row {r}: expected {width} values, got {len(out[r])}")
    if sorted(out) != list(rows):
        raise ValueError(f"block rows {sorted(out)[:3]}... do not match {rows}")
    return out


def assemble() -> list[list[int]]:
    a = parse(BLOCK_A, range(1, 51), 32)
    b = parse(BLOCK_B, range(1, 51), 35)
    c = parse(BLOCK_C, range(51, 68), 32)
    d = parse(BLOCK_D, range(51, 68), 35)
    left, right = {**a, **c}, {**b, **d}
    return [left[r] + right[r] for r in range(1, 68)]


def main() -> None:
    table = assemble()
    with OUT.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["size"] + [""] * 67)
        for r, row in enumerate(table, start=1):
            w.writerow([f"chi{r}"] + row)
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
