# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Dormand-Prince 5(4) stepper for the mode equation.

Twin of `cosmo_qfi._kernel.pure`: same tableau, same step controller, same
status codes, so the two backends are interchangeable.  The stepping loop
holds no Python objects and releases the GIL, which lets verification sweeps
run the oracle concurrently from threads.
"""

from libc.math cimport fabs, sqrt, tanh, hypot, pow

BACKEND = "compiled"

STATUS_OK = 0
STATUS_MAX_STEPS = 1
STATUS_UNDERFLOW = 2

cdef int _ST_OK = 0
cdef int _ST_MAX_STEPS = 1
cdef int _ST_UNDERFLOW = 2

cdef double C2 = 0.2
cdef double C3 = 0.3
cdef double C4 = 0.8
cdef double C5 = 8.0 / 9.0
cdef double A21 = 0.2
cdef double A31 = 3.0 / 40.0
cdef double A32 = 9.0 / 40.0
cdef double A41 = 44.0 / 45.0
cdef double A42 = -56.0 / 15.0
cdef double A43 = 32.0 / 9.0
cdef double A51 = 19372.0 / 6561.0
cdef double A52 = -25360.0 / 2187.0
cdef double A53 = 64448.0 / 6561.0
cdef double A54 = -212.0 / 729.0
cdef double A61 = 9017.0 / 3168.0
cdef double A62 = -355.0 / 33.0
cdef double A63 = 46732.0 / 5247.0
cdef double A64 = 49.0 / 176.0
cdef double A65 = -5103.0 / 18656.0
cdef double B1 = 35.0 / 384.0
cdef double B3 = 500.0 / 1113.0
cdef double B4 = 125.0 / 192.0
cdef double B5 = -2187.0 / 6784.0
cdef double B6 = 11.0 / 84.0
cdef double E1 = 71.0 / 57600.0
cdef double E3 = -71.0 / 16695.0
cdef double E4 = 71.0 / 1920.0
cdef double E5 = -17253.0 / 339200.0
cdef double E6 = 22.0 / 525.0
cdef double E7 = -1.0 / 40.0

cdef double H_INIT = 1e-3
cdef double H_MAX = 1.0
cdef long MAX_STEPS = 5000000


cdef inline void deriv(double eta, double* y, double* out, int n,
                       double eps, double m, double k, double sign) noexcept nogil:
    cdef double th = tanh(eta)
    cdef double a = 1.0 + eps * (1.0 + th)
    cdef double w = k * k + m * m * a * a
    cdef double v = sign * m * eps * (1.0 - th * th)
    cdef int j
    for j in range(0, n, 4):
        out[j] = y[j + 2]
        out[j + 1] = y[j + 3]
        out[j + 2] = -(w * y[j] - v * y[j + 1])
        out[j + 3] = -(w * y[j + 1] + v * y[j])


cdef inline void wronskian(double* y, double* wr, double* wi) noexcept nogil:
    wr[0] = (y[0] * y[6] - y[1] * y[7]) - (y[4] * y[2] - y[5] * y[3])
    wi[0] = (y[0] * y[7] + y[1] * y[6]) - (y[4] * y[3] + y[5] * y[2])


cdef int advance(double eps, double m, double k, double sign,
                 double eta0, double eta1, double* y, int n,
                 double rtol, double atol, bint track_w,
                 double* max_drift, long* accepted) noexcept nogil:
    cdef double k1[8]
    cdef double k2[8]
    cdef double k3[8]
    cdef double k4[8]
    cdef double k5[8]
    cdef double k6[8]
    cdef double k7[8]
    cdef double yt[8]
    cdef double ynew[8]
    cdef double eta = eta0
    cdef double h = eta1 - eta0
    cdef double e, sc, err_sq, err, fac, w0r, w0i, w0_abs, wr, wi, drift
    cdef long attempts = 0
    cdef int i
    cdef bint last

    if h > H_INIT:
        h = H_INIT
    accepted[0] = 0
    max_drift[0] = 0.0
    w0r = 0.0
    w0i = 0.0
    w0_abs = 1.0
    if track_w:
        wronskian(y, &w0r, &w0i)
        w0_abs = hypot(w0r, w0i)

    deriv(eta, y, k1, n, eps, m, k, sign)
    while eta < eta1:
        attempts += 1
        if attempts > MAX_STEPS:
            return _ST_MAX_STEPS
        if h < 1e-14 * max(1.0, fabs(eta)):
            return _ST_UNDERFLOW
        last = eta + h >= eta1
        if last:
            h = eta1 - eta
        for i in range(n):
            yt[i] = y[i] + h * A21 * k1[i]
        deriv(eta + C2 * h, yt, k2, n, eps, m, k, sign)
        for i in range(n):
            yt[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i])
        deriv(eta + C3 * h, yt, k3, n, eps, m, k, sign)
        for i in range(n):
            yt[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i])
        deriv(eta + C4 * h, yt, k4, n, eps, m, k, sign)
        for i in range(n):
            yt[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i])
        deriv(eta + C5 * h, yt, k5, n, eps, m, k, sign)
        for i in range(n):
            yt[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i]
                                + A64 * k4[i] + A65 * k5[i])
        deriv(eta + h, yt, k6, n, eps, m, k, sign)
        for i in range(n):
            ynew[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i]
                                  + B5 * k5[i] + B6 * k6[i])
        deriv(eta + h, ynew, k7, n, eps, m, k, sign)
        err_sq = 0.0
        for i in range(n):
            e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i]
                     + E5 * k5[i] + E6 * k6[i] + E7 * k7[i])
            sc = atol + rtol * max(fabs(y[i]), fabs(ynew[i]))
            err_sq += (e / sc) * (e / sc)
        err = sqrt(err_sq / n)
        if err <= 1.0:
            eta = eta1 if last else eta + h
            for i in range(n):
                y[i] = ynew[i]
                k1[i] = k7[i]  # first-same-as-last
            accepted[0] += 1
            if track_w:
                wronskian(y, &wr, &wi)
                drift = hypot(wr - w0r, wi - w0i) / w0_abs
                if drift > max_drift[0]:
                    max_drift[0] = drift
            if err == 0.0:
                fac = 5.0
            else:
                fac = 0.9 * pow(err, -0.2)
                if fac > 5.0:
                    fac = 5.0
                elif fac < 0.2:
                    fac = 0.2
        else:
            fac = 0.9 * pow(err, -0.2)
            if fac > 1.0:
                fac = 1.0
            elif fac < 0.2:
                fac = 0.2
        h = h * fac
        if h > H_MAX:
            h = H_MAX
    return _ST_OK


def integrate_endpoint(double eps, double m_tilde, double k_tilde, double sign,
                       double eta0, double eta1, y0, double rel_tol, double abs_tol):
    """Integrate one solution; y0 has 4 components.

    Returns (endpoint state tuple, accepted step count, status).
    """
    cdef double y[8]
    cdef double max_drift = 0.0
    cdef long accepted = 0
    cdef int status, i
    if len(y0) != 4:
        raise ValueError("integrate_endpoint expects a 4-component state")
    for i in range(4):
        y[i] = y0[i]
    with nogil:
        status = advance(eps, m_tilde, k_tilde, sign, eta0, eta1, y, 4,
                         rel_tol, abs_tol, 0, &max_drift, &accepted)
    return (y[0], y[1], y[2], y[3]), accepted, status


def integrate_pair_drift(double eps, double m_tilde, double k_tilde, double sign,
                         double eta0, double eta1, y0, double rel_tol, double abs_tol):
    """Integrate two stacked solutions, tracking the Wronskian at every
    accepted step.  y0 has 8 components.

    Returns (endpoint state tuple, max relative Wronskian drift,
    accepted step count, status).
    """
    cdef double y[8]
    cdef double w0r, w0i
    cdef double max_drift = 0.0
    cdef long accepted = 0
    cdef int status, i
    if len(y0) != 8:
        raise ValueError("integrate_pair_drift expects an 8-component state")
    for i in range(8):
        y[i] = y0[i]
    wronskian(y, &w0r, &w0i)
    if hypot(w0r, w0i) == 0.0:
        raise ValueError("initial Wronskian vanishes; solutions not independent")
    with nogil:
        status = advance(eps, m_tilde, k_tilde, sign, eta0, eta1, y, 8,
                         rel_tol, abs_tol, 1, &max_drift, &accepted)
    return (y[0], y[1], y[2], y[3], y[4], y[5], y[6], y[7]), max_drift, accepted, status
