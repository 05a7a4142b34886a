"""Pure-Python kernels for the sweep-heavy primitives.

A poset on [n] is carried as a tuple of n bitmasks: up[i] has bit j set
exactly when i is below-or-equal j (0-based, reflexive).  The compiled twin
in _kernels_cy.pyx implements the same three functions with the same
signatures and bit conventions; heckeposet.kernels picks one at import.
"""

BACKEND = "python"


def enumerate_posets(n):
    """All partial orders on [n] as up-mask tuples.

    Backtracks over the pairs (i, j), i < j, grouped by j, assigning one of
    {incomparable, i below j, j below i}; transitivity over a triple is
    checked as soon as its last pair is decided, so every completed leaf is
    a partial order and none is missed.
    """
    pairs = [(i, j) for j in range(n) for i in range(j)]
    rel = [[0] * n for _ in range(n)]  # 0 none, 1 row below col, 2 col below row
    out = []

    def rec(k):
        if k == len(pairs):
            out.append(_to_masks(rel, n))
            return
        i, j = pairs[k]
        for code in (0, 1, 2):
            if _consistent(rel, i, j, code):
                rel[i][j] = code
                rec(k + 1)
                rel[i][j] = 0
        return

    rec(0)
    return out


def _consistent(rel, i, j, code):
    """Transitivity over every fully decided triple {h, i, j}, h < i."""
    for h in range(i):
        hi = rel[h][i]
        hj = rel[h][j]
        # translate pair codes into the three order relations on h, i, j
        # rel[a][b] for a < b: 1 means a <= b, 2 means b <= a
        h_le_i = hi == 1
        i_le_h = hi == 2
        h_le_j = hj == 1
        j_le_h = hj == 2
        i_le_j = code == 1
        j_le_i = code == 2
        if h_le_i and i_le_j and not h_le_j:
            return False
        if i_le_j and j_le_h and not i_le_h:
            return False
        if h_le_j and j_le_i and not h_le_i:
            return False
        if j_le_i and i_le_h and not j_le_h:
            return False
        if i_le_h and h_le_j and not i_le_j:
            return False
        if j_le_h and h_le_i and not j_le_i:
            return False
    return True


def _to_masks(rel, n):
    up = [1 << i for i in range(n)]
    for j in range(n):
        for i in range(j):
            if rel[i][j] == 1:
                up[i] |= 1 << j
            elif rel[i][j] == 2:
                up[j] |= 1 << i
    return tuple(up)


def linear_extension_words(up, n):
    """All one-line words (1-based tuples) of Sigma_L for the poset.

    sigma belongs to Sigma_L exactly when sigma(i) <= sigma(j) for i below j,
    so the positions of 1, 2, ..., n in sigma list a linear extension of the
    poset; the search walks linear extensions and inverts on the fly.
    """
    pred = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (up[i] >> j) & 1:
                pred[j] |= 1 << i
    word = [0] * n
    out = []
    placed_mask = 0

    def rec(step):
        if step > n:
            out.append(tuple(word))
            return
        nonlocal placed_mask
        for v in range(n):
            if (placed_mask >> v) & 1:
                continue
            if pred[v] & ~placed_mask:
                continue
            word[v] = step
            placed_mask |= 1 << v
            rec(step + 1)
            placed_mask &= ~(1 << v)

    rec(1)
    return out


def is_regular(up, n):
    """Integer-betweenness regularity of the poset."""
    for x in range(n):
        ux = up[x]
        for z in range(n):
            if z == x or not (ux >> z) & 1:
                continue
            lo, hi = (x, z) if x < z else (z, x)
            for y in range(lo + 1, hi):
                if not ((ux >> y) & 1 or (up[y] >> z) & 1):
                    return False
    return True
