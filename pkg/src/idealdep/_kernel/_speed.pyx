# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; results must be bit-identical to the pure backend.

Coefficients stay Python ints (arbitrary precision); the speedup comes
from typed monomial loops, C-level comparisons and loop overhead removal.
Exponents are validated to fit machine words on entry (degrees stay far
below 2^16 in practice, so this never fires on real inputs).
"""

from math import gcd

BACKEND = "compiled"

GREVLEX_CODE = 0
LEX_CODE = 1
BLOCK_CODE = 2


cdef inline long _deg_c(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef long s = 0
    for i in range(n):
        s += <long> a[i]
    return s


def mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] + <long> b[i]
    return tuple(out)


def mono_deg(tuple a):
    return _deg_c(a)


def mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] > <long> b[i]:
            return False
    return True


cdef inline bint _divides_c(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] > <long> b[i]:
            return 0
    return 1


def mono_quotient(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] - <long> b[i]
    return tuple(out)


def mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef long x, y
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        out[i] = x if x > y else y
    return tuple(out)


cdef int _cmp_grevlex_c(tuple a, tuple b):
    cdef long da = _deg_c(a), db = _deg_c(b)
    cdef Py_ssize_t i
    cdef long ai, bi
    if da != db:
        return 1 if da > db else -1
    for i in range(len(a) - 1, -1, -1):
        ai = <long> a[i]
        bi = <long> b[i]
        if ai != bi:
            return 1 if ai < bi else -1
    return 0


cdef int _cmp_lex_c(tuple a, tuple b, Py_ssize_t upto):
    cdef Py_ssize_t i
    cdef long ai, bi
    for i in range(upto):
        ai = <long> a[i]
        bi = <long> b[i]
        if ai != bi:
            return 1 if ai > bi else -1
    return 0


cdef int _cmp_block_c(tuple a, tuple b, Py_ssize_t elim):
    cdef int c = _cmp_lex_c(a, b, elim)
    cdef Py_ssize_t i, n = len(a)
    cdef long da = 0, db = 0, ai, bi
    if c:
        return c
    for i in range(elim, n):
        da += <long> a[i]
        db += <long> b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(n - 1, elim - 1, -1):
        ai = <long> a[i]
        bi = <long> b[i]
        if ai != bi:
            return 1 if ai < bi else -1
    return 0


cdef inline int _cmp_c(tuple a, tuple b, int code, Py_ssize_t elim):
    if code == 0:
        return _cmp_grevlex_c(a, b)
    if code == 1:
        return _cmp_lex_c(a, b, len(a))
    return _cmp_block_c(a, b, elim)


def cmp_mono(tuple a, tuple b, int code, int elim=0):
    return _cmp_c(a, b, code, elim)


cdef list _addmul_c(list f, object a, list g, object b, tuple delta,
                    int code, Py_ssize_t elim, object p):
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, nf = len(f), ng = len(g)
    cdef tuple mf, mg
    cdef object s
    cdef int c
    cdef bint modular = p != 0
    while i < nf and j < ng:
        mf = <tuple> (<tuple> f[i])[0]
        mg = mono_mul(<tuple> (<tuple> g[j])[0], delta)
        c = _cmp_c(mf, mg, code, elim)
        if c > 0:
            s = a * (<tuple> f[i])[1]
            if modular:
                s = s % p
            if s:
                out.append((mf, s))
            i += 1
        elif c < 0:
            s = b * (<tuple> g[j])[1]
            if modular:
                s = s % p
            if s:
                out.append((mg, s))
            j += 1
        else:
            s = a * (<tuple> f[i])[1] + b * (<tuple> g[j])[1]
            if modular:
                s = s % p
            if s:
                out.append((mf, s))
            i += 1
            j += 1
    while i < nf:
        s = a * (<tuple> f[i])[1]
        if modular:
            s = s % p
        if s:
            out.append(((<tuple> f[i])[0], s))
        i += 1
    while j < ng:
        s = b * (<tuple> g[j])[1]
        if modular:
            s = s % p
        if s:
            out.append((mono_mul(<tuple> (<tuple> g[j])[0], delta), s))
        j += 1
    return out


def addmul_terms(f, a, g, b, tuple delta, int code, int elim, p):
    return _addmul_c(list(f), a, list(g), b, delta, code, elim, p)


cdef inline long _mask_c(tuple mono):
    cdef Py_ssize_t i, n = len(mono)
    cdef long m = 0
    for i in range(n):
        if <long> mono[i]:
            m |= (<long> 1) << (i & 63)
    return m


cdef object _content_seq(list items, object extra):
    cdef object c = extra
    for item in items:
        c = gcd(c, item)
        if c == 1:
            return c
    return c


def reduce_full(terms, leads, reducers, int code, int elim, p):
    """Identical semantics to the pure backend's reduce_full."""
    cdef list lead_list = list(leads)
    cdef list red_list = [list(r) for r in reducers]
    cdef Py_ssize_t nred = len(lead_list)
    cdef list lead_masks = [_mask_c(<tuple> m) for m in lead_list]
    cdef list out = []
    cdef list work = list(terms)
    cdef Py_ssize_t widx = 0, i, ri
    cdef object mult = 1
    cdef long steps = 0
    cdef tuple mono, delta
    cdef object coeff, lc, d, a, b, factor, c0
    cdef long mask
    cdef bint modular = p != 0
    while widx < len(work):
        mono = <tuple> (<tuple> work[widx])[0]
        coeff = (<tuple> work[widx])[1]
        mask = _mask_c(mono)
        ri = -1
        for i in range(nred):
            if (<long> lead_masks[i]) & ~mask:
                continue
            if _divides_c(<tuple> lead_list[i], mono):
                ri = i
                break
        if ri < 0:
            out.append((mono, coeff, mult))
            widx += 1
            continue
        g = red_list[ri]
        delta = mono_quotient(mono, <tuple> lead_list[ri])
        lc = (<tuple> g[0])[1]
        rest = work[widx + 1:]
        if modular:
            factor = (coeff * pow(lc, p - 2, p)) % p
            work = _addmul_c(rest, 1, g[1:], -factor, delta, code, elim, p)
        else:
            d = gcd(coeff, lc)
            a = lc // d
            b = coeff // d
            if a < 0:
                a = -a
                b = -b
            work = _addmul_c(rest, a, g[1:], -b, delta, code, elim, 0)
            if a != 1:
                mult = mult * a
            steps += 1
            if steps & 31 == 0 and mult.bit_length() > 1024:
                out = [(m, c * (mult // mm), mult) for m, c, mm in out]
                c0 = _content_seq([v for _, v in work],
                                  _content_seq([v for _, v, _ in out], mult))
                if c0 > 1:
                    work = [(m, v // c0) for m, v in work]
                    out = [(m, v // c0, mult) for m, v, _ in out]
                    mult = mult // c0
        widx = 0
    if modular:
        return [(m, c) for m, c, _ in out], 1
    return [(m, c * (mult // mm)) for m, c, mm in out], mult


def rank_int(rows):
    cdef list mat = [list(row_) for row_ in rows if any(row_)]
    if not mat:
        return 0
    cdef Py_ssize_t nrows = len(mat), ncols = len(<list> mat[0])
    cdef object prev = 1, piv, ric
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef list ri, rr
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<list> mat[i])[c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        piv = (<list> mat[r])[c]
        rr = <list> mat[r]
        for i in range(r + 1, nrows):
            ri = <list> mat[i]
            ric = ri[c]
            if ric:
                for j in range(c + 1, ncols):
                    ri[j] = (piv * ri[j] - ric * rr[j]) // prev
                ri[c] = 0
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (piv * ri[j]) // prev
        prev = piv
        r += 1
    return r


cdef _strip_row_c(list row):
    cdef object c = 0, lead = 0, v
    for v in row:
        if v:
            c = gcd(c, v)
            if lead == 0:
                lead = v
    if c == 0:
        return None
    if lead < 0:
        c = -c
    return [v // c for v in row]


def echelon_int(rows):
    cdef list mat = [list(row_) for row_ in rows if any(row_)]
    if not mat:
        return []
    cdef Py_ssize_t nrows = len(mat), ncols = len(<list> mat[0])
    cdef Py_ssize_t r = 0, c, i, pr, k
    cdef object piv, ric, g, a, b, v
    cdef list pivots = [], new
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<list> mat[i])[c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        piv = (<list> mat[r])[c]
        for i in range(r + 1, nrows):
            ric = (<list> mat[i])[c]
            if ric:
                g = gcd(piv, ric)
                a = piv // g
                b = ric // g
                new = [a * x - b * y for x, y in zip(<list> mat[i], <list> mat[r])]
                s = _strip_row_c(new)
                mat[i] = s if s is not None else [0] * ncols
        pivots.append((r, c))
        r += 1
    mat = mat[:r]
    for k in range(len(pivots) - 1, -1, -1):
        pr, pc = <tuple> pivots[k]
        piv = (<list> mat[pr])[pc]
        for i in range(pr):
            v = (<list> mat[i])[pc]
            if v:
                g = gcd(piv, v)
                a = piv // g
                b = v // g
                new = [a * x - b * y for x, y in zip(<list> mat[i], <list> mat[pr])]
                s = _strip_row_c(new)
                mat[i] = s if s is not None else [0] * ncols
    out = []
    for row in mat:
        s = _strip_row_c(<list> row)
        if s is not None:
            out.append(s)
    return out


def rank_mod(rows, long p):
    cdef list mat = [[v_ % p for v_ in row_] for row_ in rows]
    mat = [row_ for row_ in mat if any(row_)]
    if not mat:
        return 0
    cdef Py_ssize_t nrows = len(mat), ncols = len(<list> mat[0])
    cdef Py_ssize_t r = 0, c, i, pr
    cdef long inv, f
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<list> mat[i])[c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        inv = pow(<long> (<list> mat[r])[c], p - 2, p)
        for i in range(r + 1, nrows):
            if (<list> mat[i])[c]:
                f = (<long> (<list> mat[i])[c] * inv) % p
                mat[i] = [(x - f * y) % p for x, y in zip(<list> mat[i], <list> mat[r])]
        r += 1
    return r


def echelon_mod(rows, long p):
    cdef list mat = [[v_ % p for v_ in row_] for row_ in rows]
    mat = [row_ for row_ in mat if any(row_)]
    if not mat:
        return []
    cdef Py_ssize_t nrows = len(mat), ncols = len(<list> mat[0])
    cdef Py_ssize_t r = 0, c, i, pr, k
    cdef long inv, f
    cdef list pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<list> mat[i])[c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        inv = pow(<long> (<list> mat[r])[c], p - 2, p)
        mat[r] = [(x * inv) % p for x in <list> mat[r]]
        for i in range(r + 1, nrows):
            if (<list> mat[i])[c]:
                f = <long> (<list> mat[i])[c]
                mat[i] = [(x - f * y) % p for x, y in zip(<list> mat[i], <list> mat[r])]
        pivots.append((r, c))
        r += 1
    mat = mat[:r]
    for k in range(len(pivots) - 1, -1, -1):
        pr, pc = <tuple> pivots[k]
        for i in range(pr):
            f = <long> (<list> mat[i])[pc]
            if f:
                mat[i] = [(x - f * y) % p for x, y in zip(<list> mat[i], <list> mat[pr])]
    return mat
