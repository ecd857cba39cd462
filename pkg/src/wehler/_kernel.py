"""Tight scan loop for counting surface points over a finite field.

Everything here speaks the packed table encoding of ff.FiniteField: elements
are ints 0..q-1, LOG[a] is the discrete log (LOG[0] = -1), EXP holds powers
of the generator doubled to length 2(q-1) so that a sum of TWO logs indexes
it directly, ZECH[k] is log(1 + g^k) with -1 standing for "1 + g^k = 0", and
NEG[a] = -a.  Sums of three or more logs can reach 4(q-2) and must be
reduced mod q-1 before indexing EXP; two-log sums must not be, that is what
the doubling is for.

count_fibers_range(start, stop, ...) walks base points start <= idx < stop
of P^2(F_q) in canonical order, resolves each fiber by the line-conic
restriction, and returns the number of surface points found.  A degenerate
(positive-dimensional) fiber aborts the scan with the sentinel -(idx + 1),
letting the caller re-diagnose idx precisely with the scalar machinery.

The function body is deliberately loop-structured rather than unrolled:
numba compiles it in about two seconds instead of minutes, and it runs
faster too.  Without numba the very same function works as plain Python,
only slower; callers decide whether that is acceptable.
"""

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the fallback alias
    HAVE_NUMBA = False

PAIR_A = np.array([0, 0, 0, 1, 1, 2], dtype=np.int64)
PAIR_B = np.array([0, 1, 2, 1, 2, 2], dtype=np.int64)
PAIR_IDX = np.array([[0, 1, 2], [1, 3, 4], [2, 4, 5]], dtype=np.int64)


def _count_range(start, stop, q, qm1, LOG, EXP, ZECH, NEG, Lc, Qc, c2, c4):
    q2 = q * q
    xv = np.empty(3, dtype=np.int64)
    Ls = np.empty(3, dtype=np.int64)
    Qs = np.empty(6, dtype=np.int64)
    G = np.empty(3, dtype=np.int64)
    H = np.empty(6, dtype=np.int64)  # indexed by pair index of (i,j)
    mon = np.empty(6, dtype=np.int64)
    yv = np.empty(3, dtype=np.int64)
    total = 0
    for idx in range(start, stop):
        if idx < q2:
            xv[0] = 1
            xv[1] = idx // q
            xv[2] = idx - q * xv[1]
        elif idx < q2 + q:
            xv[0] = 0
            xv[1] = 1
            xv[2] = idx - q2
        else:
            xv[0] = 0
            xv[1] = 0
            xv[2] = 1
        # line coefficients over x
        allz = True
        for j in range(3):
            s = 0
            for i in range(3):
                a = Lc[3 * i + j]
                b = xv[i]
                if a != 0 and b != 0:
                    t = EXP[LOG[a] + LOG[b]]
                    if s == 0:
                        s = t
                    else:
                        d = LOG[t] - LOG[s]
                        if d < 0:
                            d += qm1
                        z = ZECH[d]
                        s = 0 if z < 0 else EXP[LOG[s] + z]
            Ls[j] = s
            if s != 0:
                allz = False
        if allz:
            return -(idx + 1)
        # conic coefficients over x
        for A in range(6):
            a = xv[PAIR_A[A]]
            b = xv[PAIR_B[A]]
            mon[A] = 0 if (a == 0 or b == 0) else EXP[LOG[a] + LOG[b]]
        for B in range(6):
            s = 0
            for A in range(6):
                a = Qc[6 * A + B]
                b = mon[A]
                if a != 0 and b != 0:
                    t = EXP[LOG[a] + LOG[b]]
                    if s == 0:
                        s = t
                    else:
                        d = LOG[t] - LOG[s]
                        if d < 0:
                            d += qm1
                        z = ZECH[d]
                        s = 0 if z < 0 else EXP[LOG[s] + z]
            Qs[B] = s
        # G_k = lj^2 Q_ii - li lj Q_ij + li^2 Q_jj
        allz = True
        for k in range(3):
            i = 1 if k == 0 else 0
            j = 1 if k == 2 else 2
            li = Ls[i]
            lj = Ls[j]
            v = Qs[PAIR_IDX[i][i]]
            t1 = 0 if (lj == 0 or v == 0) else EXP[(LOG[lj] + LOG[lj] + LOG[v]) % qm1]
            v = Qs[PAIR_IDX[i][j]]
            t2 = 0 if (li == 0 or lj == 0 or v == 0) else EXP[(LOG[li] + LOG[lj] + LOG[v]) % qm1]
            v = Qs[PAIR_IDX[j][j]]
            t3 = 0 if (li == 0 or v == 0) else EXP[(LOG[li] + LOG[li] + LOG[v]) % qm1]
            s = t1
            for term in (NEG[t2], t3):
                if term != 0:
                    if s == 0:
                        s = term
                    else:
                        d = LOG[term] - LOG[s]
                        if d < 0:
                            d += qm1
                        z = ZECH[d]
                        s = 0 if z < 0 else EXP[LOG[s] + z]
            G[k] = s
            if s != 0:
                allz = False
        # H_ij = 2 li lj Q_kk - li lk Q_jk - lj lk Q_ik + lk^2 Q_ij
        for t in range(3):
            if t == 0:
                i = 0
                j = 1
                k = 2
            elif t == 1:
                i = 0
                j = 2
                k = 1
            else:
                i = 1
                j = 2
                k = 0
            li = Ls[i]
            lj = Ls[j]
            lk = Ls[k]
            v = Qs[PAIR_IDX[k][k]]
            t1 = 0
            if c2 != 0 and li != 0 and lj != 0 and v != 0:
                t1 = EXP[(LOG[c2] + LOG[li] + LOG[lj] + LOG[v]) % qm1]
            v = Qs[PAIR_IDX[j][k]]
            t2 = 0
            if li != 0 and lk != 0 and v != 0:
                t2 = EXP[(LOG[li] + LOG[lk] + LOG[v]) % qm1]
            v = Qs[PAIR_IDX[i][k]]
            t3 = 0
            if lj != 0 and lk != 0 and v != 0:
                t3 = EXP[(LOG[lj] + LOG[lk] + LOG[v]) % qm1]
            v = Qs[PAIR_IDX[i][j]]
            t4 = 0
            if lk != 0 and v != 0:
                t4 = EXP[(LOG[lk] + LOG[lk] + LOG[v]) % qm1]
            s = 0
            for term in (t1, NEG[t2], NEG[t3], t4):
                if term != 0:
                    if s == 0:
                        s = term
                    else:
                        d = LOG[term] - LOG[s]
                        if d < 0:
                            d += qm1
                        z = ZECH[d]
                        s = 0 if z < 0 else EXP[LOG[s] + z]
            H[PAIR_IDX[i][j]] = s
            if s != 0:
                allz = False
        if allz:
            return -(idx + 1)
        # completion index: first k with Ls[k] != 0 and a nonzero restriction
        kk = -1
        aa = 0
        bb = 0
        cc = 0
        ii = 0
        jj = 0
        for k in range(3):
            if Ls[k] == 0:
                continue
            i = 1 if k == 0 else 0
            j = 1 if k == 2 else 2
            a = G[j]
            b = H[PAIR_IDX[i][j]]
            c = G[i]
            if a == 0 and b == 0 and c == 0:
                continue
            kk = k
            aa = a
            bb = b
            cc = c
            ii = i
            jj = j
            break
        if kk < 0:
            return -(idx + 1)
        # roots (u : v) of aa u^2 + bb u v + cc v^2
        ncand = 0
        u1 = 0
        v1 = 0
        u2 = 0
        v2 = 0
        if aa != 0:
            t2v = 0 if cc == 0 else EXP[(LOG[c4] + LOG[aa] + LOG[cc]) % qm1]
            bsq = 0 if bb == 0 else EXP[(LOG[bb] + LOG[bb]) % qm1]
            nt = NEG[t2v]
            if bsq == 0:
                D = nt
            elif nt == 0:
                D = bsq
            else:
                d = LOG[nt] - LOG[bsq]
                if d < 0:
                    d += qm1
                z = ZECH[d]
                D = 0 if z < 0 else EXP[LOG[bsq] + z]
            inv2a = EXP[qm1 - (LOG[c2] + LOG[aa]) % qm1]
            if D == 0:
                u1 = 0 if bb == 0 else EXP[(LOG[NEG[bb]] + LOG[inv2a]) % qm1]
                v1 = 1
                ncand = 1
            elif LOG[D] & 1:
                ncand = 0
            else:
                r = EXP[LOG[D] >> 1]
                nb = NEG[bb]
                if nb == 0:
                    s1 = r
                else:
                    d = LOG[r] - LOG[nb]
                    if d < 0:
                        d += qm1
                    z = ZECH[d]
                    s1 = 0 if z < 0 else EXP[LOG[nb] + z]
                nr = NEG[r]
                if nb == 0:
                    s2 = nr
                else:
                    d = LOG[nr] - LOG[nb]
                    if d < 0:
                        d += qm1
                    z = ZECH[d]
                    s2 = 0 if z < 0 else EXP[LOG[nb] + z]
                u1 = 0 if s1 == 0 else EXP[(LOG[s1] + LOG[inv2a]) % qm1]
                u2 = 0 if s2 == 0 else EXP[(LOG[s2] + LOG[inv2a]) % qm1]
                v1 = 1
                v2 = 1
                ncand = 2
        else:
            if bb != 0:
                u1 = 1
                v1 = 0
                u2 = NEG[cc]
                v2 = bb
                ncand = 2
            else:
                u1 = 1
                v1 = 0
                ncand = 1
        # complete each root to y and re-check the conic
        lk = Ls[kk]
        li = Ls[ii]
        lj = Ls[jj]
        for cand in range(ncand):
            u = u1 if cand == 0 else u2
            v = v1 if cand == 0 else v2
            yi = 0 if u == 0 else EXP[LOG[lk] + LOG[u]]
            yj = 0 if v == 0 else EXP[LOG[lk] + LOG[v]]
            t1 = 0 if u == 0 or li == 0 else EXP[LOG[li] + LOG[u]]
            t2 = 0 if v == 0 or lj == 0 else EXP[LOG[lj] + LOG[v]]
            if t1 == 0:
                s = t2
            elif t2 == 0:
                s = t1
            else:
                d = LOG[t2] - LOG[t1]
                if d < 0:
                    d += qm1
                z = ZECH[d]
                s = 0 if z < 0 else EXP[LOG[t1] + z]
            yv[ii] = yi
            yv[jj] = yj
            yv[kk] = NEG[s]
            s = 0
            for B in range(6):
                a = yv[PAIR_A[B]]
                b = yv[PAIR_B[B]]
                c = Qs[B]
                if a != 0 and b != 0 and c != 0:
                    term = EXP[(LOG[a] + LOG[b] + LOG[c]) % qm1]
                    if s == 0:
                        s = term
                    else:
                        d = LOG[term] - LOG[s]
                        if d < 0:
                            d += qm1
                        z = ZECH[d]
                        s = 0 if z < 0 else EXP[LOG[s] + z]
            if s == 0:
                total += 1
    return total


if HAVE_NUMBA:
    count_fibers_range = njit(cache=True)(_count_range)
else:
    count_fibers_range = _count_range
