"""Pure-Python implementations of the hot computational kernels.

The compiled extension ``idealdep._kernel._speed`` provides the same
functions with identical results; this module is the import-time fallback
and the executable reference used by the backend cross-checking tests.

Shared conventions:

* a monomial is a tuple of nonnegative ints, one entry per variable;
* a term list is a list of ``(monomial, coefficient)`` pairs sorted in
  strictly decreasing monomial order with nonzero coefficients;
* rational-coefficient polynomials travel as *integer* term lists; a
  reduction returns the remainder together with the integer multiplier
  applied to the input, so the exact remainder is ``terms / multiplier``;
* prime-field coefficients are ints in ``[1, p)`` and the multiplier is 1.

Order codes: 0 = grevlex, 1 = lex, 2 = block (lex on the first ``elim``
variables, grevlex on the rest).
"""

from math import gcd

BACKEND = "pure"

GREVLEX_CODE = 0
LEX_CODE = 1
BLOCK_CODE = 2


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def mono_divides(a, b):
    """True when a divides b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_quotient(a, b):
    """a / b; caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _cmp_grevlex(a, b):
    da = sum(a)
    db = sum(b)
    if da != db:
        return 1 if da > db else -1
    for i in range(len(a) - 1, -1, -1):
        if a[i] != b[i]:
            return 1 if a[i] < b[i] else -1
    return 0


def _cmp_lex(a, b):
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


def cmp_mono(a, b, code, elim=0):
    """Three-way comparison of monomials under the given order code."""
    if code == GREVLEX_CODE:
        return _cmp_grevlex(a, b)
    if code == LEX_CODE:
        return _cmp_lex(a, b)
    c = _cmp_lex(a[:elim], b[:elim])
    if c:
        return c
    return _cmp_grevlex(a[elim:], b[elim:])


def addmul_terms(f, a, g, b, delta, code, elim, p):
    """a*f + b*(x^delta * g), both term lists sorted descending.

    Coefficients are ints; over the rationals (p == 0) this is exact, over
    GF(p) everything is reduced mod p.  Zero coefficients are dropped.
    """
    out = []
    i = 0
    j = 0
    nf = len(f)
    ng = len(g)
    while i < nf and j < ng:
        mf = f[i][0]
        mg = mono_mul(g[j][0], delta)
        c = cmp_mono(mf, mg, code, elim)
        if c > 0:
            s = a * f[i][1]
            if p:
                s %= p
            if s:
                out.append((mf, s))
            i += 1
        elif c < 0:
            s = b * g[j][1]
            if p:
                s %= p
            if s:
                out.append((mg, s))
            j += 1
        else:
            s = a * f[i][1] + b * g[j][1]
            if p:
                s %= p
            if s:
                out.append((mf, s))
            i += 1
            j += 1
    while i < nf:
        s = a * f[i][1]
        if p:
            s %= p
        if s:
            out.append((f[i][0], s))
        i += 1
    while j < ng:
        s = b * g[j][1]
        if p:
            s %= p
        if s:
            out.append((mono_mul(g[j][0], delta), s))
        j += 1
    return out


def _presence_mask(mono):
    m = 0
    for i, e in enumerate(mono):
        if e:
            m |= 1 << (i & 63)
    return m


def _content(terms, extra=0):
    c = extra
    for _, v in terms:
        c = gcd(c, v)
        if c == 1:
            return 1
    return c


def reduce_full(terms, leads, reducers, code, elim, p):
    """Full normal form of ``terms`` against the reducer list.

    ``leads[i]`` is the leading monomial of ``reducers[i]``.  Every term of
    the result is divisible by no lead.  Returns ``(result, mult)`` where
    ``mult`` is the nonzero integer the input was scaled by (always 1 over
    GF(p)); the exact remainder over the rationals is ``result / mult``.
    """
    nred = len(leads)
    lead_masks = [_presence_mask(m) for m in leads]
    out = []  # (mono, coeff, mult_at_append)
    work = list(terms)
    widx = 0
    mult = 1
    steps = 0
    while widx < len(work):
        mono, coeff = work[widx]
        mask = _presence_mask(mono)
        ri = -1
        for i in range(nred):
            if lead_masks[i] & ~mask:
                continue
            if mono_divides(leads[i], mono):
                ri = i
                break
        if ri < 0:
            out.append((mono, coeff, mult))
            widx += 1
            continue
        g = reducers[ri]
        delta = mono_quotient(mono, leads[ri])
        lc = g[0][1]
        rest = work[widx + 1:]
        if p:
            factor = (coeff * pow(lc, p - 2, p)) % p
            work = addmul_terms(rest, 1, g[1:], -factor, delta, code, elim, p)
        else:
            d = gcd(coeff, lc)
            a = lc // d
            b = coeff // d
            if a < 0:
                a = -a
                b = -b
            work = addmul_terms(rest, a, g[1:], -b, delta, code, elim, 0)
            if a != 1:
                mult *= a
            steps += 1
            if steps & 31 == 0 and mult.bit_length() > 1024:
                # strip accumulated content to keep integers small
                out = [(m, c * (mult // mm), mult) for m, c, mm in out]
                c0 = _content(work, _content([(None, v) for _, v, _ in out], mult))
                if c0 > 1:
                    work = [(m, v // c0) for m, v in work]
                    out = [(m, v // c0, mult) for m, v, _ in out]
                    mult //= c0
        widx = 0
    if p:
        return [(m, c) for m, c, _ in out], 1
    result = [(m, c * (mult // mm)) for m, c, mm in out]
    return result, mult


def rank_int(rows):
    """Rank of an integer matrix via Bareiss fraction-free elimination."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    nrows = len(rows)
    ncols = len(rows[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            ric = rows[i][c]
            if ric:
                ri = rows[i]
                rr = rows[r]
                for j in range(c + 1, ncols):
                    ri[j] = (piv * ri[j] - ric * rr[j]) // prev
                ri[c] = 0
            else:
                ri = rows[i]
                for j in range(c + 1, ncols):
                    ri[j] = (piv * ri[j]) // prev
        prev = piv
        r += 1
    return r


def _strip_row(row):
    c = 0
    lead = 0
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
    """Canonical reduced echelon form of the row space of an integer matrix.

    Rows come back primitive (content 1, positive leading entry) with each
    pivot column cleared in all other rows.  The result depends only on the
    row space, which makes it usable as a canonical basis.
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    nrows = len(rows)
    ncols = len(rows[0])
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            ric = rows[i][c]
            if ric:
                g = gcd(piv, ric)
                a = piv // g
                b = ric // g
                ri = rows[i]
                rr = rows[r]
                new = [a * x - b * y for x, y in zip(ri, rr)]
                s = _strip_row(new)
                rows[i] = s if s is not None else [0] * ncols
        pivots.append((r, c))
        r += 1
    rows = rows[:r]
    # back-substitution: clear pivot columns above each pivot
    for k in range(len(pivots) - 1, -1, -1):
        pr, pc = pivots[k]
        piv = rows[pr][pc]
        for i in range(pr):
            v = rows[i][pc]
            if v:
                g = gcd(piv, v)
                a = piv // g
                b = v // g
                new = [a * x - b * y for x, y in zip(rows[i], rows[pr])]
                s = _strip_row(new)
                rows[i] = s if s is not None else [0] * ncols
    out = []
    for row in rows:
        s = _strip_row(row)
        if s is not None:
            out.append(s)
    return out


def rank_mod(rows, p):
    """Rank of a matrix over GF(p)."""
    rows = [[v % p for v in r] for r in rows]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    nrows = len(rows)
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        for i in range(r + 1, nrows):
            if rows[i][c]:
                f = (rows[i][c] * inv) % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def echelon_mod(rows, p):
    """Reduced row echelon form over GF(p) with unit pivots."""
    rows = [[v % p for v in r] for r in rows]
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    nrows = len(rows)
    ncols = len(rows[0])
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(r + 1, nrows):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
    rows = rows[:r]
    for k in range(len(pivots) - 1, -1, -1):
        pr, pc = pivots[k]
        for i in range(pr):
            v = rows[i][pc]
            if v:
                rows[i] = [(x - v * y) % p for x, y in zip(rows[i], rows[pr])]
    return rows
