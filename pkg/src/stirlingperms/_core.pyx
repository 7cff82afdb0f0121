# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels.

Mirrors ``stirlingperms._pure`` function for function; see that module
for the semantics.  Words are packed ``bytes`` (letter k = byte value k,
sentinel 0), multiplicity vectors are tuples of positive ints.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING
from libc.string cimport memcpy, memset
from libc.stdlib cimport malloc, free

BACKEND_NAME = "c"

cdef enum:
    C_FIXED = 0
    C_FREE_DESCENT_PLATEAU = 1
    C_SINGLE_DOUBLE_DESCENT = 2
    C_DOUBLE_ASCENT = 3

FIXED = C_FIXED
FREE_DESCENT_PLATEAU = C_FREE_DESCENT_PLATEAU
SINGLE_DOUBLE_DESCENT = C_SINGLE_DOUBLE_DESCENT
DOUBLE_ASCENT = C_DOUBLE_ASCENT


cdef int _fill_parts(object parts, int* buf) except -1:
    cdef int n = len(parts)
    cdef int k, p
    if n > 255:
        raise ValueError("at most 255 distinct letters are supported")
    for k in range(n):
        p = parts[k]
        if p < 1:
            raise ValueError("multiplicities must be positive")
        buf[k] = p
    return n


def words_of(parts):
    """Sorted list of all generalized Stirling words with content ``parts``."""
    cdef int mparts[256]
    cdef int n = _fill_parts(parts, mparts)
    cdef list cur = [b""]
    cdef list nxt
    cdef int k, mk, L, g, i
    cdef bytes w, nw
    cdef char* src
    cdef char* dst
    L = 0
    for k in range(1, n + 1):
        mk = mparts[k - 1]
        nxt = []
        for w in cur:
            src = PyBytes_AS_STRING(w)
            for g in range(L + 1):
                nw = PyBytes_FromStringAndSize(NULL, L + mk)
                dst = PyBytes_AS_STRING(nw)
                memcpy(dst, src, g)
                for i in range(mk):
                    dst[g + i] = <char> k
                memcpy(dst + g + mk, src + g, L - g)
                nxt.append(nw)
        cur = nxt
        L += mk
    cur.sort()
    return cur


def enum_counts(parts):
    """``(total, distinct)`` sizes of the insertion-construction output."""
    cdef list ws = words_of(parts)
    cdef Py_ssize_t i, distinct = 0
    cdef object prev = None
    for i in range(len(ws)):
        if prev is None or ws[i] != prev:
            distinct += 1
        prev = ws[i]
    return len(ws), distinct


cdef bint _stirling_property(const unsigned char* w, int m,
                             const int* mult, int* seen,
                             unsigned char* stack) nogil:
    cdef int top = -1
    cdef int i
    cdef unsigned char c
    for i in range(m):
        c = w[i]
        if top >= 0 and stack[top] == c:
            seen[c] += 1
            if seen[c] == mult[c]:
                top -= 1
        else:
            if top >= 0 and stack[top] > c:
                return False
            seen[c] = 1
            if mult[c] > 1:
                top += 1
                stack[top] = c
    return True


def is_stirling(word, parts):
    """Content check against ``parts`` plus the nesting property."""
    cdef int mparts[256]
    cdef int n = _fill_parts(parts, mparts)
    cdef bytes wb = bytes(word)
    cdef const unsigned char* w = <const unsigned char*> PyBytes_AS_STRING(wb)
    cdef int m = len(wb)
    cdef int total = 0, k
    cdef int mult[256]
    cdef int seen[256]
    cdef unsigned char stack[256]
    for k in range(n):
        total += mparts[k]
    if m != total:
        return False
    memset(mult, 0, sizeof(mult))
    for k in range(m):
        if w[k] < 1 or w[k] > n:
            return False
        mult[w[k]] += 1
    for k in range(1, n + 1):
        if mult[k] != mparts[k - 1]:
            return False
    memset(seen, 0, sizeof(seen))
    return _stirling_property(w, m, mult, seen, stack)


cdef bint _next_permutation(unsigned char* a, int m) nogil:
    cdef int i = m - 2
    cdef int j, lo, hi
    cdef unsigned char t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = m - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    lo = i + 1; hi = m - 1
    while lo < hi:
        t = a[lo]; a[lo] = a[hi]; a[hi] = t
        lo += 1; hi -= 1
    return True


def brute_count(parts):
    """Count Stirling words by filtering every multiset permutation."""
    cdef int mparts[256]
    cdef int n = _fill_parts(parts, mparts)
    cdef int mult[256]
    cdef int seen[256]
    cdef unsigned char stack[256]
    cdef int m = 0, k, i
    cdef long long count = 0
    memset(mult, 0, sizeof(mult))
    for k in range(n):
        mult[k + 1] = mparts[k]
        m += mparts[k]
    if m == 0:
        return 1
    cdef unsigned char* arr = <unsigned char*> malloc(m)
    if arr == NULL:
        raise MemoryError()
    try:
        i = 0
        for k in range(1, n + 1):
            for _ in range(mparts[k - 1]):
                arr[i] = <unsigned char> k
                i += 1
        with nogil:
            while True:
                memset(seen, 0, sizeof(seen))
                if _stirling_property(arr, m, mult, seen, stack):
                    count += 1
                if not _next_permutation(arr, m):
                    break
        return count
    finally:
        free(arr)


def brute_words(parts):
    """Materialized brute-force enumeration, lexicographically sorted."""
    cdef int mparts[256]
    cdef int n = _fill_parts(parts, mparts)
    cdef int mult[256]
    cdef int seen[256]
    cdef unsigned char stack[256]
    cdef int m = 0, k, i
    cdef list out = []
    memset(mult, 0, sizeof(mult))
    for k in range(n):
        mult[k + 1] = mparts[k]
        m += mparts[k]
    if m == 0:
        return [b""]
    cdef unsigned char* arr = <unsigned char*> malloc(m)
    if arr == NULL:
        raise MemoryError()
    try:
        i = 0
        for k in range(1, n + 1):
            for _ in range(mparts[k - 1]):
                arr[i] = <unsigned char> k
                i += 1
        while True:
            memset(seen, 0, sizeof(seen))
            if _stirling_property(arr, m, mult, seen, stack):
                out.append(PyBytes_FromStringAndSize(<char*> arr, m))
            if not _next_permutation(arr, m):
                break
        return out
    finally:
        free(arr)


def profile12(word):
    """The twelve comparison statistics; see the pure backend docstring."""
    cdef bytes wb = bytes(word)
    cdef const unsigned char* w = <const unsigned char*> PyBytes_AS_STRING(wb)
    cdef int m = len(wb)
    if m == 0:
        return (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)
    cdef int mult[256]
    cdef int first[256]
    cdef int i
    cdef unsigned char a, b, p, c, nx
    cdef bint multiple, leftmost
    cdef int asc = 0, plat = 0, des = 0
    cdef int sdes = 0, mdes = 0, fplat = 0, uplat = 0
    cdef int dasc = 0, sddes = 0, fdesp = 0, ascpp = 0, mdup = 0
    memset(mult, 0, sizeof(mult))
    memset(first, 0, sizeof(first))
    for i in range(m):
        c = w[i]
        mult[c] += 1
        if first[c] == 0:
            first[c] = i + 1
    for i in range(m + 1):
        a = w[i - 1] if i >= 1 else 0
        b = w[i] if i < m else 0
        if a < b:
            asc += 1
        elif a == b:
            plat += 1
        else:
            des += 1
    for i in range(1, m + 1):
        p = w[i - 2] if i >= 2 else 0
        c = w[i - 1]
        nx = w[i] if i < m else 0
        multiple = mult[c] > 1
        leftmost = first[c] == i
        if c > nx:
            if multiple:
                mdes += 1
                mdup += 1
            else:
                sdes += 1
        elif c == nx:
            if leftmost:
                fplat += 1
            if not (p > c and leftmost) and not p < c:
                uplat += 1
                mdup += 1
        if p < c < nx:
            dasc += 1
        if p > c > nx and not multiple:
            sddes += 1
        if p > c == nx and leftmost:
            fdesp += 1
        if p < c and c >= nx:
            ascpp += 1
    return (asc, plat, des, sdes, mdes, fplat, uplat, dasc, sddes, fdesp, ascpp, mdup)


cdef int _classify(const unsigned char* w, int m, int x) nogil:
    cdef int pos = -1
    cdef int i, cnt
    cdef unsigned char p, nx
    for i in range(m):
        if w[i] == x:
            pos = i
            break
    if pos < 0:
        return -1
    p = w[pos - 1] if pos >= 1 else 0
    nx = w[pos + 1] if pos + 1 < m else 0
    if p > x and x == nx:
        return C_FREE_DESCENT_PLATEAU
    if p > x > nx:
        cnt = 0
        for i in range(m):
            if w[i] == x:
                cnt += 1
        if cnt == 1:
            return C_SINGLE_DOUBLE_DESCENT
    if p < x < nx:
        return C_DOUBLE_ASCENT
    return C_FIXED


def classify_letter(word, x):
    """Value class of letter ``x`` (0 fixed, 1 free descent-plateau value,
    2 single double-descent value, 3 double-ascent value)."""
    cdef bytes wb = bytes(word)
    cdef int cls = _classify(<const unsigned char*> PyBytes_AS_STRING(wb),
                             len(wb), x)
    if cls < 0:
        raise ValueError(f"letter {x} does not occur in the word")
    return cls


def phi_letter(word, x):
    """One hop of the letter action; see the pure backend docstring."""
    cdef bytes wb = bytes(word)
    cdef const unsigned char* w = <const unsigned char*> PyBytes_AS_STRING(wb)
    cdef int m = len(wb)
    cdef int cls = _classify(w, m, x)
    cdef int l1 = 0, k, a
    cdef bytes nw
    cdef char* dst
    if cls < 0:
        raise ValueError(f"letter {x} does not occur in the word")
    if cls == C_FIXED:
        return wb
    for a in range(m):
        if w[a] == x:
            l1 = a + 1
            break
    nw = PyBytes_FromStringAndSize(NULL, m)
    dst = PyBytes_AS_STRING(nw)
    if cls == C_FREE_DESCENT_PLATEAU or cls == C_SINGLE_DOUBLE_DESCENT:
        k = 0
        for a in range(l1 - 2, 0, -1):
            if w[a - 1] < x:
                k = a
                break
        memcpy(dst, w, k)
        dst[k] = <char> x
        memcpy(dst + k + 1, w + k, l1 - 1 - k)
        memcpy(dst + l1, w + l1, m - l1)
    else:
        k = m + 1
        for a in range(l1 + 2, m + 1):
            if w[a - 1] <= x:
                k = a
                break
        memcpy(dst, w, l1 - 1)
        memcpy(dst + l1 - 1, w + l1, k - 1 - l1)
        dst[k - 2] = <char> x
        memcpy(dst + k - 1, w + k - 1, m - k + 1)
    return nw
