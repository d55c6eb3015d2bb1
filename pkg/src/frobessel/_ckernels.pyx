# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot numeric loops.

Signatures and arithmetic order mirror ``_pykernels``; see that module for
documentation.
"""
from libc.math cimport fabs, M_PI
from libc.stdlib cimport malloc, free

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex csin(double complex)
    double complex ccos(double complex)
    double cabs(double complex)

cdef int MAX_SERIES_TERMS = 100000

cdef double[8] GK_NODES = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
]
cdef double[8] GK_WEIGHTS_K = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
]
cdef double[4] GK_WEIGHTS_G = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
]


def gk15(f, double a, double b):
    cdef double c = 0.5 * (a + b)
    cdef double h = 0.5 * (b - a)
    cdef double complex fc = complex(f(c))
    cdef double complex res_k = fc * GK_WEIGHTS_K[7]
    cdef double complex res_g = fc * GK_WEIGHTS_G[3]
    cdef double complex s
    cdef double x
    cdef int j
    for j in range(7):
        x = h * GK_NODES[j]
        s = complex(f(c - x)) + complex(f(c + x))
        res_k += GK_WEIGHTS_K[j] * s
        if j % 2 == 1:
            res_g += GK_WEIGHTS_G[j // 2] * s
    return res_k * h, cabs((res_k - res_g) * h)


def theta_series(v, tau, double tol):
    cdef double complex cv = complex(v)
    cdef double complex ctau = complex(tau)
    cdef double complex ipt = 1j * M_PI * ctau
    cdef double complex q4 = cexp(0.25 * ipt)
    cdef double complex s1 = 0, s2 = 0, s3 = 1.0, s4 = 1.0
    cdef double complex piv = M_PI * cv
    cdef double complex qh, arg, t1, t2, qi, ci, t3
    cdef double sgn, big, scale
    cdef long n = 0, m
    while n < MAX_SERIES_TERMS:
        qh = cexp(ipt * <double>(n * (n + 1)))
        arg = (2 * n + 1) * piv
        sgn = -1.0 if n % 2 else 1.0
        t1 = sgn * qh * csin(arg)
        t2 = qh * ccos(arg)
        s1 += t1
        s2 += t2
        m = n + 1
        qi = cexp(ipt * <double>(m * m))
        ci = ccos(2 * m * piv)
        t3 = qi * ci
        s3 += 2.0 * t3
        s4 += (-2.0 if m % 2 else 2.0) * t3
        big = max(cabs(t1), cabs(t2), cabs(t3))
        scale = max(1.0, cabs(s1), cabs(s2), cabs(s3), cabs(s4))
        n += 1
        if big < tol * scale and cabs(qh) < 1.0:
            break
    return 2.0 * q4 * s1, 2.0 * q4 * s2, s3, s4, n


cdef double factorial(int n):
    cdef double r = 1.0
    cdef int i
    for i in range(2, n + 1):
        r *= i
    return r


cdef double complex cpow_int(double complex x, int n):
    cdef double complex r = 1.0
    cdef int i
    for i in range(n):
        r *= x
    return r


def j_series(int n, z, double tol):
    cdef double complex cz = complex(z)
    if cz == 0:
        return (1.0 + 0j) if n == 0 else 0j
    cdef double complex h = 0.5 * cz
    cdef double complex w = -h * h
    cdef double complex term = cpow_int(h, n) / factorial(n)
    cdef double complex total = term
    cdef double complex nxt
    cdef bint shrinking
    cdef long k = 0
    while k < MAX_SERIES_TERMS:
        k += 1
        nxt = term * w / <double>(k * (k + n))
        total += nxt
        shrinking = cabs(nxt) <= cabs(term)
        term = nxt
        if shrinking and cabs(term) < tol * max(1.0, cabs(total)):
            break
    return total


def j_series_derivative(int n, z, double tol):
    cdef double complex cz = complex(z)
    if cz == 0:
        return (0.5 + 0j) if n == 1 else 0j
    cdef double complex h = 0.5 * cz
    cdef double complex w = -h * h
    cdef double complex r, total, d
    cdef long k
    # r = h^(n+2k-1) (-1)^k / (k! (n+k)!), avoiding division by h
    if n == 0:
        k = 1
        r = -h
        total = r
    else:
        k = 0
        r = cpow_int(h, n - 1) / factorial(n)
        total = r * (0.5 * n)
    cdef double prev = cabs(total)
    while k < MAX_SERIES_TERMS:
        k += 1
        r = r * w / <double>(k * (k + n))
        d = r * (0.5 * (2 * k + n))
        total += d
        if cabs(d) <= prev and cabs(d) < tol * max(1.0, cabs(total)):
            break
        prev = cabs(d)
    return total


def hyp_series(upper, lower, z, double tol, long max_terms):
    cdef int p = len(upper), q = len(lower)
    cdef double complex *ua = <double complex *> malloc(max(p, 1) * sizeof(double complex))
    cdef double complex *lb = <double complex *> malloc(max(q, 1) * sizeof(double complex))
    cdef int i
    for i in range(p):
        ua[i] = complex(upper[i])
    for i in range(q):
        lb[i] = complex(lower[i])
    cdef double complex cz = complex(z)
    cdef double complex term = 1.0, total = 1.0, num, den
    cdef int small = 0
    cdef long n = 0
    try:
        while n < max_terms:
            num = 1.0
            for i in range(p):
                num *= ua[i] + n
            den = 1.0
            for i in range(q):
                den *= lb[i] + n
            term = term * num / (den * (n + 1)) * cz
            n += 1
            if term == 0:
                return total, n, True
            total += term
            if cabs(term) < tol * cabs(total):
                small += 1
                if small >= 3:
                    return total, n, True
            else:
                small = 0
        return total, n, False
    finally:
        free(ua)
        free(lb)
