# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel: exhaustive program comparison over finite
carriers and ideal-closure BFS on packed int tables.

Mirrors mci._kernels.pure exactly (same arguments, same results).
"""

import numpy as np


cdef inline int run_prog(const int[::1] prog, const int* assign,
                         const int[::1] bin_flat, const int[::1] bin_off,
                         const int[::1] bin_ncols,
                         const int[::1] un_flat, const int[::1] un_off) nogil:
    cdef int stack[64]
    cdef int sp = 0
    cdef Py_ssize_t i = 0, ln = prog.shape[0]
    cdef int code, arg, x, y
    while i < ln:
        code = prog[i]
        arg = prog[i + 1]
        i += 2
        if code == 0:      # PUSH_VAR
            stack[sp] = assign[arg]
            sp += 1
        elif code == 1:    # PUSH_CONST
            stack[sp] = arg
            sp += 1
        elif code == 2:    # UNARY
            x = stack[sp - 1]
            stack[sp - 1] = un_flat[un_off[arg] + x]
        else:              # BINARY
            y = stack[sp - 1]
            x = stack[sp - 2]
            sp -= 1
            stack[sp - 1] = bin_flat[bin_off[arg] + x * bin_ncols[arg] + y]
    return stack[sp - 1]


def find_counterexample(prog_l, prog_r, domains, bin_flat, bin_off, bin_ncols,
                        un_flat, un_off):
    """First assignment (lexicographic, last variable fastest) where the two
    programs evaluate differently, or None."""
    cdef const int[::1] pl = np.ascontiguousarray(prog_l, dtype=np.int32)
    cdef const int[::1] pr = np.ascontiguousarray(prog_r, dtype=np.int32)
    cdef const int[::1] dom = np.ascontiguousarray(domains, dtype=np.int32)
    cdef const int[::1] bf = np.ascontiguousarray(bin_flat, dtype=np.int32)
    cdef const int[::1] bo = np.ascontiguousarray(bin_off, dtype=np.int32)
    cdef const int[::1] bn = np.ascontiguousarray(bin_ncols, dtype=np.int32)
    cdef const int[::1] uf = np.ascontiguousarray(un_flat, dtype=np.int32)
    cdef const int[::1] uo = np.ascontiguousarray(un_off, dtype=np.int32)

    cdef int nvars = dom.shape[0]
    cdef int assign[32]
    cdef int k, pos
    cdef bint found = False, done = False
    if nvars > 32:
        raise ValueError("too many variables")
    for k in range(nvars):
        assign[k] = 0
        if dom[k] <= 0:
            return None
    if nvars == 0:
        if run_prog(pl, assign, bf, bo, bn, uf, uo) != \
           run_prog(pr, assign, bf, bo, bn, uf, uo):
            return ()
        return None
    with nogil:
        while not done:
            if run_prog(pl, assign, bf, bo, bn, uf, uo) != \
               run_prog(pr, assign, bf, bo, bn, uf, uo):
                found = True
                break
            # odometer: last variable fastest
            pos = nvars - 1
            while pos >= 0:
                assign[pos] += 1
                if assign[pos] < dom[pos]:
                    break
                assign[pos] = 0
                pos -= 1
            if pos < 0:
                done = True
    if found:
        return tuple(assign[k] for k in range(nvars))
    return None


def ideal_closure(n, seeds, add_flat, neg, bin_flat, bin_off, un_flat, un_off):
    """Membership mask of the smallest ideal containing the seed ids."""
    cdef int nn = n
    cdef const int[::1] sd = np.ascontiguousarray(seeds, dtype=np.int32)
    cdef const int[::1] add = np.ascontiguousarray(add_flat, dtype=np.int32)
    cdef const int[::1] ng = np.ascontiguousarray(neg, dtype=np.int32)
    cdef const int[::1] bf = np.ascontiguousarray(bin_flat, dtype=np.int32)
    cdef const int[::1] bo = np.ascontiguousarray(bin_off, dtype=np.int32)
    cdef const int[::1] uf = np.ascontiguousarray(un_flat, dtype=np.int32)
    cdef const int[::1] uo = np.ascontiguousarray(un_off, dtype=np.int32)

    mask_arr = np.zeros(nn, dtype=np.uint8)
    cdef unsigned char[::1] mask = mask_arr
    queued_arr = np.zeros(nn, dtype=np.uint8)
    cdef unsigned char[::1] queued = queued_arr
    members_arr = np.empty(nn, dtype=np.int32)
    cdef int[::1] members = members_arr
    queue_arr = np.empty(nn + 1, dtype=np.int32)
    cdef int[::1] queue = queue_arr
    cdef int qlen = 0, nmembers = 0
    cdef int a, m, x, g, c, j, s, base
    cdef Py_ssize_t t
    cdef int nbin = bo.shape[0], nun = uo.shape[0]

    if not queued[0]:
        queued[0] = 1
        queue[qlen] = 0
        qlen += 1
    for j in range(sd.shape[0]):
        s = sd[j]
        if not queued[s]:
            queued[s] = 1
            queue[qlen] = s
            qlen += 1

    with nogil:
        while qlen > 0:
            qlen -= 1
            a = queue[qlen]
            mask[a] = 1
            for j in range(nmembers):
                m = members[j]
                x = add[a * nn + m]
                if not queued[x]:
                    queued[x] = 1
                    queue[qlen] = x
                    qlen += 1
                x = add[m * nn + a]
                if not queued[x]:
                    queued[x] = 1
                    queue[qlen] = x
                    qlen += 1
            members[nmembers] = a
            nmembers += 1
            x = add[a * nn + a]
            if not queued[x]:
                queued[x] = 1
                queue[qlen] = x
                qlen += 1
            x = ng[a]
            if not queued[x]:
                queued[x] = 1
                queue[qlen] = x
                qlen += 1
            for g in range(nn):
                x = add[add[g * nn + a] * nn + ng[g]]
                if not queued[x]:
                    queued[x] = 1
                    queue[qlen] = x
                    qlen += 1
            for t in range(nbin):
                base = bo[t] + a * nn
                for c in range(nn):
                    x = bf[base + c]
                    if not queued[x]:
                        queued[x] = 1
                        queue[qlen] = x
                        qlen += 1
            for t in range(nun):
                x = uf[uo[t] + a]
                if not queued[x]:
                    queued[x] = 1
                    queue[qlen] = x
                    qlen += 1
    return mask_arr
