# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled repetition-detection kernel (same interface as _kernels_py)."""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"

DEF SEP = -1


cdef void _z_fill(long long* s, Py_ssize_t n, Py_ssize_t* z):
    cdef Py_ssize_t i, k, l, r
    if n == 0:
        return
    z[0] = n
    l = r = 0
    for i in range(1, n):
        k = 0
        if i < r:
            k = r - i
            if z[i - l] < k:
                k = z[i - l]
        while i + k < n and s[k] == s[i + k]:
            k += 1
        z[i] = k
        if i + k > r:
            l = i
            r = i + k


cdef bint _crossing(long long* s, Py_ssize_t lo, Py_ssize_t mid, Py_ssize_t hi,
                    Py_ssize_t max_half, Py_ssize_t* out_start, Py_ssize_t* out_half) except? False:
    cdef Py_ssize_t p = mid - lo
    cdef Py_ssize_t q = hi - mid
    cdef Py_ssize_t i, l, k1, k2, m_lo, m_hi, lmax, catn
    cdef long long* ru
    cdef long long* cat
    cdef Py_ssize_t* z1
    cdef Py_ssize_t* z2
    cdef bint found = False
    if p == 0 or q == 0:
        return False
    catn = q + 1 + p
    ru = <long long*> malloc(p * sizeof(long long))
    cat = <long long*> malloc(catn * sizeof(long long))
    z1 = <Py_ssize_t*> malloc(p * sizeof(Py_ssize_t))
    z2 = <Py_ssize_t*> malloc(catn * sizeof(Py_ssize_t))
    if ru == NULL or cat == NULL or z1 == NULL or z2 == NULL:
        if ru != NULL: free(ru)
        if cat != NULL: free(cat)
        if z1 != NULL: free(z1)
        if z2 != NULL: free(z2)
        raise MemoryError()
    for i in range(p):
        ru[i] = s[mid - 1 - i]
    for i in range(q):
        cat[i] = s[mid + i]
    cat[q] = SEP
    for i in range(p):
        cat[q + 1 + i] = s[lo + i]
    _z_fill(ru, p, z1)
    _z_fill(cat, catn, z2)

    lmax = p
    if max_half > 0 and max_half < lmax:
        lmax = max_half
    for l in range(1, lmax + 1):
        k1 = z1[l] if l < p else 0
        k2 = z2[q + 1 + (p - l)]
        m_lo = l
        if p - l + 1 > m_lo:
            m_lo = p - l + 1
        if p - k1 > m_lo:
            m_lo = p - k1
        m_hi = p
        if p - l + k2 < m_hi:
            m_hi = p - l + k2
        if p + q - l < m_hi:
            m_hi = p + q - l
        if m_lo <= m_hi:
            out_start[0] = lo + m_lo - l
            out_half[0] = l
            found = True
            break
    free(ru)
    free(cat)
    free(z1)
    free(z2)
    return found


cdef bint _solve(long long* s, Py_ssize_t lo, Py_ssize_t hi, Py_ssize_t max_half,
                 Py_ssize_t* out_start, Py_ssize_t* out_half) except? False:
    cdef Py_ssize_t mid, i, n
    cdef long long* rseg
    cdef bint found
    if hi - lo < 2:
        return False
    mid = (lo + hi) // 2
    if _solve(s, lo, mid, max_half, out_start, out_half):
        return True
    if _solve(s, mid, hi, max_half, out_start, out_half):
        return True
    if _crossing(s, lo, mid, hi, max_half, out_start, out_half):
        return True
    # squares whose centre lies right of mid: search the reversed segment
    n = hi - lo
    rseg = <long long*> malloc(n * sizeof(long long))
    if rseg == NULL:
        raise MemoryError()
    for i in range(n):
        rseg[i] = s[hi - 1 - i]
    found = _crossing(rseg, 0, hi - mid, n, max_half, out_start, out_half)
    free(rseg)
    if found:
        out_start[0] = hi - out_start[0] - 2 * out_half[0]
        return True
    return False


def find_square(seq, max_half=0):
    """Locate a repetition in ``seq``; see thueplane._kernels_py.find_square."""
    cdef Py_ssize_t n = len(seq)
    cdef Py_ssize_t i, start, half
    cdef long long* s
    cdef bint found
    if n < 2:
        return None
    s = <long long*> malloc(n * sizeof(long long))
    if s == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            s[i] = seq[i]
        found = _solve(s, 0, n, max_half, &start, &half)
    finally:
        free(s)
    if found:
        return (start, half)
    return None
