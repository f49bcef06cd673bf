"""Reference tables transcribed as plain text; parsed by the tests."""
from __future__ import annotations

from fractions import Fraction as Fr

FIB = ["1", "x", "-1+x^2", "-2x+x^3", "1-3x^2+x^4", "3x-4x^3+x^5"]

# the x^1 coefficient of the last entry is 1+t+t^2 (an odd polynomial has no x^2 term)
FIB_T = ["1", "x", "-1+x^2", "-x-tx+x^3", "1-2x^2-tx^2+x^4", "x+tx+t^2x-2x^3-2tx^3+x^5"]

LUCAS = ["1", "x", "-2+x^2", "-3x+x^3", "2-4x^2+x^4", "5x-5x^3+x^5"]

LUCAS_T = ["1", "x", "-1-t+x^2", "-x*(1+4t+t^2-x^2-tx^2)/(1+t)", "1+t^2-2x^2-2tx^2+x^4"]

NARAYANA = ["1", "1", "1+t", "1+3t+t^2", "1+6t+6t^2+t^3", "1+10t+20t^2+10t^3+t^4"]

Q_TABLE = [
    ["1"],
    ["1+t", "1"],
    ["1+t+t^2", "2+2t", "1"],
    ["1+t+t^2+t^3", "3+4t+3t^2", "3+3t", "1"],
    ["1+t+t^2+t^3+t^4", "4+6t+6t^2+4t^3", "6+9t+6t^2", "4+4t", "1"],
    ["1+t+t^2+t^3+t^4+t^5", "5+8t+9t^2+8t^3+5t^4", "10+18t+18t^2+10t^3", "10+16t+10t^2", "5+5t", "1"],
]

P_TABLE = [
    ["1"],
    ["1", "1"],
    ["1", "2+t", "1"],
    ["1", "3+2t+t^2", "3+2t", "1"],
    ["1", "4+3t+2t^2+t^3", "6+6t+3t^2", "4+3t", "1"],
    ["1", "5+4t+3t^2+2t^3+t^4", "10+12t+9t^2+4t^3", "10+12t+6t^2", "5+4t", "1"],
]

# columns as displayed
B_COLUMNS = [
    ["1", "1+t", "1+3t+t^2", "1+6t+6t^2+t^3", "1+10t+20t^2+10t^3+t^4"],
    ["1", "2+2t", "3+8t+3t^2", "4+20t+20t^2+4t^3"],
    ["1", "3+3t", "6+15t+6t^2"],
    ["1", "4+4t"],
    ["1"],
]

A_COLUMNS = [
    ["1", "1", "1+t", "1+3t+t^2", "1+6t+6t^2+t^3"],
    ["1", "2+t", "3+5t+t^2", "4+14t+9t^2+t^3"],
    ["1", "3+2t", "6+11t+3t^2"],
    ["1", "4+3t"],
    ["1"],
]

D_TABLE = [
    ["1"],
    ["1+t", "1"],
    ["1+4t+t^2", "2+2t", "1"],
    ["1+9t+9t^2+t^3", "3+9t+3t^2", "3+3t", "1"],
    ["1+16t+36t^2+16t^3+t^4", "4+24t+24t^2+4t^3", "6+16t+6t^2", "4+4t", "1"],
]

G_TABLE = [
    ["2"],
    ["1+4t+t^2", "1+t"],
    ["1+t+6t^2+t^3+t^4", "2+3t+3t^2+2t^3", "1+t^2"],
    ["1+t+t^2+8t^3+t^4+t^5+t^6", "3+5t+6t^2+6t^3+5t^4+3t^5", "3+4t+4t^3+3t^4", "1+t^3"],
]

# (1 + t^{k+1}) E_{n,k}(t)
E_CLEARED = [
    ["1+t"],
    ["1+4t+t^2", "1+t^2"],
    ["1+9t+9t^2+t^3", "2+3t+3t^2+2t^3", "1+t^3"],
    ["1+16t+36t^2+16t^3+t^4", "3+12t+12t^2+12t^3+3t^4", "3+4t+4t^3+3t^4", "1+t^4"],
]

E_AT_2 = [
    [Fr(1)],
    [Fr(13, 3), Fr(1)],
    [Fr(21), Fr(36, 5), Fr(1)],
    [Fr(107), Fr(219, 5), Fr(91, 9), Fr(1)],
    [Fr(561), Fr(1272, 5), Fr(226, 3), Fr(222, 17), Fr(1)],
    [Fr(8989, 3), Fr(1453), Fr(4510, 9), Fr(1970, 17), Fr(529, 33), Fr(1)],
    [Fr(16213), Fr(8244), Fr(3155), Fr(14886, 17), Fr(1821, 11), Fr(1236, 65), Fr(1)],
    [Fr(265729, 3), Fr(233303, 5), Fr(57799, 3), Fr(103299, 17), Fr(46403, 33), Fr(14581, 65), Fr(2839, 129),
     Fr(1)],
]

U_TABLE = {
    1: ["1", "1+t", "1+4t+t^2", "1+9t+9t^2+t^3", "1+16t+36t^2+16t^3+t^4"],
    2: ["1", "2+2t", "3+10t+3t^2", "4+28t+28t^2+4t^3", "5+60t+126t^2+60t^3+5t^4"],
    3: ["1", "3+3t", "6+18t+6t^2", "10+60t+60t^2+10t^3", "15+150t+300t^2+150t^3+15t^4"],
    4: ["1", "4+4t", "10+28t+10t^2", "20+108t+108t^2+20t^3", "35+308t+594t^2+308t^3+35t^4"],
    5: ["1", "5+5t", "15+40t+15t^2", "35+175t+175t^2+35t^3", "70+560t+1050t^2+560t^3+70t^4"],
}

# integer triangles, rows 0..4
B_AT_1 = [[1], [2, 1], [5, 4, 1], [14, 14, 6, 1], [42, 48, 27, 8, 1]]
B_AT_2 = [[1], [3, 1], [11, 6, 1], [45, 31, 9, 1], [197, 156, 60, 12, 1]]
A_AT_1 = [[1], [1, 1], [2, 3, 1], [5, 9, 5, 1], [14, 28, 20, 7, 1]]
A_AT_2 = [[1], [1, 1], [3, 4, 1], [11, 17, 7, 1], [45, 76, 40, 10, 1]]
D_AT_1 = [[1], [2, 1], [6, 4, 1], [20, 15, 6, 1], [70, 56, 28, 8, 1]]
D_AT_2 = [[1], [3, 1], [13, 6, 1], [63, 33, 9, 1], [321, 180, 62, 12, 1]]
LUCAS_TRIANGLE = [
    [1], [0, 1], [2, 0, 1], [0, 3, 0, 1], [6, 0, 4, 0, 1], [0, 10, 0, 5, 0, 1], [20, 0, 15, 0, 6, 0, 1],
]

SCHROEDER = [1, 1, 3, 11, 45, 197]
DELANNOY = [1, 3, 13, 63, 321, 1683]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
DELANNOY_DIV3_PREFIX = [1, 3, 4, 5, 7, 9]

F_1_3_PREFIX = [1, 1, 0, -3, -3, 6, 9, -9, -18, 9, 27, 0, -1]
R_1_3_PREFIX = [2, -3, 3, 0, -9, 27, -54, 81, -81, 0, 243, -729]
R_1_2_PREFIX = [2, -2, 0, 4, -8, 8, 0, -16]
