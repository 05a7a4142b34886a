# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of _kernels_py: same functions, same bitmask conventions.

Sizes are bounded by 16 elements so every mask fits comfortably in a C int
and the work arrays can live on the stack; the callers never get past
n = 12 anyway because of the package size cap.
"""

BACKEND = "cython"

# rel is a flattened 16 x 16 code table: 0 none, 1 row below col, 2 col
# below row, addressed as rel[i * 16 + j] for i < j.


cdef bint _consistent(int* rel, int i, int j, int code) noexcept:
    cdef int h, hi, hj
    cdef bint h_le_i, i_le_h, h_le_j, j_le_h, i_le_j, j_le_i
    for h in range(i):
        hi = rel[h * 16 + i]
        hj = rel[h * 16 + j]
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


cdef tuple _to_masks(int* rel, int n):
    cdef int i, j
    cdef list up = [1 << i for i in range(n)]
    for j in range(n):
        for i in range(j):
            if rel[i * 16 + j] == 1:
                up[i] = up[i] | (1 << j)
            elif rel[i * 16 + j] == 2:
                up[j] = up[j] | (1 << i)
    return tuple(up)


cdef void _rec_posets(
    int k, int npairs, int n, int* pair_i, int* pair_j, int* rel, list out
):
    cdef int i, j, code
    if k == npairs:
        out.append(_to_masks(rel, n))
        return
    i = pair_i[k]
    j = pair_j[k]
    for code in range(3):
        if _consistent(rel, i, j, code):
            rel[i * 16 + j] = code
            _rec_posets(k + 1, npairs, n, pair_i, pair_j, rel, out)
            rel[i * 16 + j] = 0


def enumerate_posets(int n):
    """All partial orders on [n] as up-mask tuples."""
    if n < 1 or n > 16:
        raise ValueError("n out of range for the compiled kernel")
    cdef int pair_i[256]
    cdef int pair_j[256]
    cdef int rel[256]
    cdef int i, j
    cdef int k = 0
    for i in range(256):
        rel[i] = 0
    for j in range(n):
        for i in range(j):
            pair_i[k] = i
            pair_j[k] = j
            k += 1
    cdef list out = []
    _rec_posets(0, k, n, pair_i, pair_j, rel, out)
    return out


cdef void _rec_words(
    int step, int n, int* pred, int* word, int placed_mask, list out
):
    cdef int v, i
    if step > n:
        out.append(tuple([word[i] for i in range(n)]))
        return
    for v in range(n):
        if (placed_mask >> v) & 1:
            continue
        if pred[v] & ~placed_mask:
            continue
        word[v] = step
        _rec_words(step + 1, n, pred, word, placed_mask | (1 << v), out)


def linear_extension_words(up, int n):
    """All one-line words (1-based tuples) of Sigma_L for the poset."""
    if n < 1 or n > 16:
        raise ValueError("n out of range for the compiled kernel")
    cdef int pred[16]
    cdef int word[16]
    cdef int i, j, u
    for i in range(n):
        pred[i] = 0
        word[i] = 0
    for i in range(n):
        u = up[i]
        for j in range(n):
            if i != j and (u >> j) & 1:
                pred[j] |= 1 << i
    cdef list out = []
    _rec_words(1, n, pred, word, 0, out)
    return out


def is_regular(up, int n):
    """Integer-betweenness regularity of the poset."""
    if n < 1 or n > 16:
        raise ValueError("n out of range for the compiled kernel")
    cdef int masks[16]
    cdef int x, z, y, lo, hi, ux
    for x in range(n):
        masks[x] = up[x]
    for x in range(n):
        ux = masks[x]
        for z in range(n):
            if z == x or not (ux >> z) & 1:
                continue
            if x < z:
                lo = x
                hi = z
            else:
                lo = z
                hi = x
            for y in range(lo + 1, hi):
                if not ((ux >> y) & 1 or (masks[y] >> z) & 1):
                    return False
    return True
