"""Pure-Python twin of the compiled enumeration kernel.

Same calling convention as ``mci._kernels._fast`` (packed int tables, flat
stack programs); results are identical, only slower.  Selected at import time
when the extension is unavailable or MCI_FORCE_PURE is set.
"""

from itertools import product

import numpy as np

OP_PUSH_VAR = 0
OP_PUSH_CONST = 1
OP_UNARY = 2
OP_BINARY = 3


def find_counterexample(prog_l, prog_r, domains, bin_flat, bin_off, bin_ncols, un_flat, un_off):
    """First assignment (lexicographic, last variable fastest) where the two
    programs evaluate differently, or None."""
    progs = (list(prog_l), list(prog_r))
    bin_flat = list(bin_flat)
    bin_off = list(bin_off)
    bin_ncols = list(bin_ncols)
    un_flat = list(un_flat)
    un_off = list(un_off)

    def run(prog, assign):
        stack = []
        push = stack.append
        pop = stack.pop
        i = 0
        ln = len(prog)
        while i < ln:
            code = prog[i]
            arg = prog[i + 1]
            i += 2
            if code == OP_PUSH_VAR:
                push(assign[arg])
            elif code == OP_PUSH_CONST:
                push(arg)
            elif code == OP_UNARY:
                x = pop()
                push(un_flat[un_off[arg] + x])
            else:
                y = pop()
                x = pop()
                push(bin_flat[bin_off[arg] + x * bin_ncols[arg] + y])
        return stack[-1]

    ranges = [range(int(d)) for d in domains]
    for assign in product(*ranges):
        if run(progs[0], assign) != run(progs[1], assign):
            return tuple(int(a) for a in assign)
    return None


def ideal_closure(n, seeds, add_flat, neg, bin_flat, bin_off, un_flat, un_off):
    """Membership mask of the smallest ideal containing the seed ids.

    Closes {0} ∪ seeds under negation, addition with members (both sides),
    conjugation g + a - g by every carrier element, the binary operations
    against every carrier element on the right (swap partners must be among
    the tables so both sides are covered), and the unary operations.
    """
    add_flat = list(add_flat)
    neg = list(neg)
    bin_flat = list(bin_flat)
    bin_off = list(bin_off)
    un_flat = list(un_flat)
    un_off = list(un_off)

    mask = np.zeros(n, dtype=np.uint8)
    queued = [False] * n
    members = []
    queue = []
    for s in [0] + [int(s) for s in seeds]:
        if not queued[s]:
            queued[s] = True
            queue.append(s)

    def push(x):
        if not queued[x]:
            queued[x] = True
            queue.append(x)

    while queue:
        a = queue.pop()
        mask[a] = 1
        for m in members:
            push(add_flat[a * n + m])
            push(add_flat[m * n + a])
        members.append(a)
        push(add_flat[a * n + a])
        push(neg[a])
        for g in range(n):
            push(add_flat[add_flat[g * n + a] * n + neg[g]])
        for off in bin_off:
            base = off + a * n
            for c in range(n):
                push(bin_flat[base + c])
        for off in un_off:
            push(un_flat[off + a])
    return mask
