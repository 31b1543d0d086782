"""Vectorized numpy fallback for the bit-basis kernels.

Same API as the compiled ``_core`` extension.  Occupation patterns are
unsigned 64-bit words with bit j = site j; fermionic signs are the parity
of the occupied sites strictly between the two hop endpoints (Jordan-Wigner
string counted from site 0, so the ring's wrap bond picks up (-1)^(N-1)).
"""

from itertools import combinations

import numpy as np

BACKEND = "python"


def _between_mask(a, b):
    """Bit mask of the sites strictly between a and b (order-independent)."""
    lo, hi = (a, b) if a < b else (b, a)
    return ((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1)


def enumerate_states(L, N):
    """All length-L patterns with popcount N, ascending by integer value."""
    if N == 0:
        return np.zeros(1, dtype=np.uint64)
    pats = np.fromiter(
        (sum(1 << j for j in c) for c in combinations(range(L), N)),
        dtype=np.uint64,
    )
    pats.sort()
    return pats


_TABLE_MAX_BITS = 20


def _rank_table(states, L):
    """Direct pattern -> ordinal map (None above the memory cutoff)."""
    if L > _TABLE_MAX_BITS:
        return None
    table = np.full(1 << L, -1, dtype=np.int64)
    table[states.astype(np.int64)] = np.arange(states.shape[0], dtype=np.int64)
    return table


def _locate(states, targets, table=None):
    """Ordinals of `targets` in the sorted pattern table `states`."""
    if table is not None:
        return table[targets.astype(np.int64)]
    return np.searchsorted(states, targets)


def hamiltonian_coo(states, L, gamma_l, gamma_r, V, W, pbc):
    """COO triplets (rows, cols, vals) of the chain Hamiltonian on `states`.

    H = -sum_j (Gamma_L c_j^+ c_{j+1} + Gamma_R c_{j+1}^+ c_j)
        + sum_j (V n_j n_{j+1} + W_j n_j),
    with the (L-1,0) bond included iff pbc.
    """
    D = states.shape[0]
    sites = np.arange(L, dtype=np.uint64)
    bits = ((states[:, None] >> sites[None, :]) & np.uint64(1)).astype(np.float64)

    nbond = L if pbc else L - 1
    diag = bits @ np.asarray(W, dtype=np.float64)
    for j in range(nbond):
        diag += V * bits[:, j] * bits[:, (j + 1) % L]

    rows = [np.arange(D, dtype=np.int64)]
    cols = [np.arange(D, dtype=np.int64)]
    vals = [diag]

    table = _rank_table(states, L)
    col_index = np.arange(D, dtype=np.int64)
    for j in range(nbond):
        jp = (j + 1) % L
        mj = np.uint64(1 << j)
        mjp = np.uint64(1 << jp)
        flip = mj | mjp
        btw = np.uint64(_between_mask(j, jp))
        occ_j = (states & mj) != 0
        occ_jp = (states & mjp) != 0
        sign = 1.0 - 2.0 * (np.bitwise_count(states & btw) & np.uint64(1)).astype(np.float64)

        # hop jp -> j carries -Gamma_L, hop j -> jp carries -Gamma_R
        for src, coeff in ((occ_jp & ~occ_j, -gamma_l), (occ_j & ~occ_jp, -gamma_r)):
            sel = np.nonzero(src)[0]
            if sel.size == 0:
                continue
            targets = states[sel] ^ flip
            rows.append(_locate(states, targets, table))
            cols.append(col_index[sel])
            vals.append(coeff * sign[sel])

    return np.concatenate(rows), np.concatenate(cols), np.concatenate(vals)


def opdm(states, amps, L):
    """One-particle density matrix G[i,j] = <psi| c_i^+ c_j |psi>."""
    G = np.zeros((L, L), dtype=np.complex128)
    sites = np.arange(L, dtype=np.uint64)
    bits = ((states[:, None] >> sites[None, :]) & np.uint64(1)) != 0
    prob = np.abs(amps) ** 2
    table = _rank_table(states, L)
    for j in range(L):
        G[j, j] = prob[bits[:, j]].sum()
    for i in range(L):
        mi = np.uint64(1 << i)
        for j in range(L):
            if i == j:
                continue
            mj = np.uint64(1 << j)
            sel = np.nonzero(bits[:, j] & ~bits[:, i])[0]
            if sel.size == 0:
                continue
            src = states[sel]
            targets = src ^ (mi | mj)
            btw = np.uint64(_between_mask(i, j))
            sign = 1.0 - 2.0 * (np.bitwise_count(src & btw) & np.uint64(1)).astype(np.float64)
            rows = _locate(states, targets, table)
            G[i, j] = np.sum(np.conj(amps[rows]) * sign * amps[sel])
    return G


def annihilate(states, amps, j, out_states):
    """Apply c_j: amplitudes over `out_states` (popcount one less)."""
    mj = np.uint64(1 << j)
    sel = np.nonzero((states & mj) != 0)[0]
    below = np.uint64((1 << j) - 1)
    sign = 1.0 - 2.0 * (np.bitwise_count(states[sel] & below) & np.uint64(1)).astype(np.float64)
    out = np.zeros(out_states.shape[0], dtype=np.complex128)
    rows = np.searchsorted(out_states, states[sel] ^ mj)  # one pass; table not worth it
    out[rows] = sign * amps[sel]
    return out
