"""Reference values for the worked examples, as exact strings."""

RING_Q = [
    ["0", "0", "-3/(s^2+3s+2)"],
    ["-1/(s^2+7s+12)", "0", "0"],
    ["0", "10/(s^2+9s+20)", "0"],
]
RING_P = [
    ["2/(s+2)", "0", "0"],
    ["0", "3/(s+3)", "0"],
    ["0", "0", "6/(s+4)"],
]
RING_D = "s^6+19s^5+145s^4+565s^3+1174s^2+1216s+450"
RING_NUM = [
    ["2(s^5+17s^4+111s^3+343s^2+488s+240)", "-90(s+4)", "-18(s^3+12s^2+47s+60)"],
    ["-2(s^3+10s^2+29s+20)", "3(s^5+16s^4+97s^3+274s^2+352s+160)", "18(s+5)"],
    ["-20(s+1)", "30(s^3+7s^2+14s+8)", "6(s^5+15s^4+85s^3+225s^2+274s+120)"],
]

DIAGONAL_G = [["6/(s+3)", "0"], ["0", "-6/(s+6)"]]

# minimal realization shared by both two-structure examples
TWO_AO = [[-4, 1, 2, 1, 1], [1, -7, 2, 1, 3], [2, 1, -6, 1, 0], [1, 2, 2, -6, 0], [1, 2, 0, 0, -10]]
TWO_BO = [[1]] * 5
TWO_CO = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]]

_D3 = "(s^3+21s^2+130s+234)"
_D2 = "(s^2+12s+34)"
S11 = [
    [f"2(s^2+18s+76)/{_D3}", f"(s^2+18s+76)/{_D3}", f"(s^2+19s+86)/{_D3}"],
    [f"2(s^2+15s+52)/{_D3}", f"(s^2+15s+52)/{_D3}", f"(13+s)(s+5)/{_D3}"],
]
S12 = [["2/(s+6)", "1/(s+6)", "1/(s+6)", "1/(s+6)"]]
S13 = [["1/(s+6)", "2/(s+6)", "2/(s+6)", "1/(s+6)"]]
S21 = S11
S22 = [
    [f"(2s+13)/{_D2}", f"(s+8)/{_D2}", f"(7+s)/{_D2}"],
    [f"(s+10)/{_D2}", f"2(7+s)/{_D2}", f"(s+8)/{_D2}"],
]

# N = [[0, I], [L, K]]
N1_L = [[0], [0], [1], [0], [0], [0], [1], [0], [0], [0], [1]]
N1_K = [
    [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0],
    [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0],
    [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0],
]
N2_L = [[0], [0], [1], [0], [0], [1]]
N2_K = [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]

_A = "(s^2+14s+39)"
_B = "(s^2+17s+64)"
Q1 = [
    ["0", f"(12+s)/{_A}", f"2(s+10)/{_A}", f"(s+10)/{_A}"],
    [f"(13+s)/{_B}", "0", f"2(s+10)/{_B}", f"(s+10)/{_B}"],
    ["2/(s+6)", "1/(s+6)", "0", "1/(s+6)"],
    ["1/(s+6)", "2/(s+6)", "2/(s+6)", "0"],
]
P1 = [[f"(11+s)/{_A}"], [f"(13+s)/{_B}"], ["1/(s+6)"], ["1/(s+6)"]]
QINT1 = [
    ["0", f"(12+s)/{_A}", "0", "0"],
    [f"(13+s)/{_B}", "0", "0", "0"],
    ["0", "0", "0", "1/(s+6)"],
    ["0", "0", "2/(s+6)", "0"],
]
Q2 = [
    ["0", "0", f"2(s^2+18s+76)/{_D3}", f"(s^2+18s+76)/{_D3}"],
    ["0", "0", f"2(52+15s+s^2)/{_D3}", f"(52+15s+s^2)/{_D3}"],
    [f"(2s+13)/{_D2}", f"(s+8)/{_D2}", "0", "0"],
    [f"(s+10)/{_D2}", f"2(7+s)/{_D2}", "0", "0"],
]
P2 = [[f"(s^2+19s+86)/{_D3}"], [f"(13+s)(s+5)/{_D3}"], [f"(7+s)/{_D2}"], [f"(s+8)/{_D2}"]]

# 4-ring GDS from the zero state under inputs 1, 2, 3, 4, 1, ...
GDS_CHECKPOINTS = {
    1: (1, 0, 0, 0), 2: (1, 0, 0, 0), 3: (1, 0, 1, 0), 4: (1, 0, 1, 0), 8: (0, 0, 0, 1),
    12: (0, 1, 0, 0), 16: (0, 0, 1, 0), 20: (1, 0, 0, 0), 24: (0, 1, 0, 1), 28: (0, 0, 0, 0),
}


def rmat(rows):
    from sysstruct import RationalMatrix
    return RationalMatrix.from_rows([[str(x) for x in r] for r in rows])


def ring_g():
    from sysstruct import RationalFunction
    d = RationalFunction.coerce(RING_D)
    return rmat([[str(RationalFunction.coerce(n) / d) for n in r] for r in RING_NUM])
