"""Pure-Python twin of ``_ckernels``.

Same integer contract; Python ints make it exact for any magnitude, so it
also serves as the fallback when coordinates would overflow int64.
Points are rows (X, Y, Q) meaning (X/Q, Y/Q); polygon and translates are
integer rows in the same scaled frame.
"""


def _classify(poly, px, py, q):
    # 0 outside, 1 on boundary, 2 interior
    n = len(poly)
    zero = False
    for e in range(n):
        ax, ay = poly[e]
        bx, by = poly[e + 1 - n]
        c = (bx - ax) * (py - q * ay) - (by - ay) * (px - q * ax)
        if c < 0:
            return 0
        if c == 0:
            zero = True
    return 1 if zero else 2


def count_points(poly, trans, pts):
    poly = [(int(a), int(b)) for a, b in poly]
    trans = [(int(a), int(b)) for a, b in trans]
    opened, closed = [], []
    for X, Y, Q in pts:
        X, Y, Q = int(X), int(Y), int(Q)
        o = c = 0
        for tx, ty in trans:
            cls = _classify(poly, X - Q * tx, Y - Q * ty, Q)
            if cls:
                c += 1
                if cls == 2:
                    o += 1
        opened.append(o)
        closed.append(c)
    return opened, closed


def first_mismatch(poly, trans, pts, k):
    """Index of the first off-boundary point whose count differs from k, else -1.

    Points lying on some translate boundary are skipped.
    """
    poly = [(int(a), int(b)) for a, b in poly]
    trans = [(int(a), int(b)) for a, b in trans]
    for i, (X, Y, Q) in enumerate(pts):
        X, Y, Q = int(X), int(Y), int(Q)
        o = 0
        on_boundary = False
        for tx, ty in trans:
            cls = _classify(poly, X - Q * tx, Y - Q * ty, Q)
            if cls == 1:
                on_boundary = True
                break
            if cls == 2:
                o += 1
        if not on_boundary and o != k:
            return i
    return -1
