# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled F_2 elimination kernels.

Same contract as hwgroups._f2pure (bit j of a row is column j, pivots on
the highest set bit) with rows packed into 64-bit words.
"""

import sys

if sys.byteorder != "little":
    raise ImportError("compiled F_2 backend requires a little-endian host")

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

__all__ = ["f2_rank", "f2_rank_kernel", "BACKEND"]

BACKEND = "compiled"

ctypedef unsigned long long u64


cdef inline Py_ssize_t _top_bit(u64 *vec, Py_ssize_t words) nogil:
    cdef Py_ssize_t w
    for w in range(words - 1, -1, -1):
        if vec[w]:
            return w * 64 + 63 - __builtin_clzll(vec[w])
    return -1


cdef u64 *_pack_rows(rows, Py_ssize_t n_rows, Py_ssize_t words) except NULL:
    cdef u64 *buf = <u64 *>calloc(max(n_rows * words, 1), sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef Py_ssize_t nbytes = words * 8
    cdef bytes chunk
    try:
        for i in range(n_rows):
            chunk = rows[i].to_bytes(nbytes, "little")
            memcpy(buf + i * words, <const char *>chunk, nbytes)
    except BaseException:
        free(buf)
        raise
    return buf


def f2_rank(rows, n_cols):
    """Rank of the matrix whose rows are the given bit-vectors."""
    cdef Py_ssize_t n_rows = len(rows)
    cdef Py_ssize_t cols = n_cols
    if n_rows == 0 or cols == 0:
        return 0
    cdef Py_ssize_t words = (cols + 63) // 64
    cdef u64 *mat = _pack_rows(rows, n_rows, words)
    cdef Py_ssize_t *pivot_of = <Py_ssize_t *>calloc(cols, sizeof(Py_ssize_t))
    if pivot_of == NULL:
        free(mat)
        raise MemoryError()
    cdef Py_ssize_t i, w, lead, p
    cdef Py_ssize_t rank = 0
    cdef u64 *row
    cdef u64 *piv
    try:
        for i in range(cols):
            pivot_of[i] = -1
        for i in range(n_rows):
            row = mat + i * words
            while True:
                lead = _top_bit(row, words)
                if lead < 0:
                    break
                p = pivot_of[lead]
                if p < 0:
                    pivot_of[lead] = i
                    rank += 1
                    break
                piv = mat + p * words
                for w in range(words):
                    row[w] ^= piv[w]
        return rank
    finally:
        free(pivot_of)
        free(mat)


def f2_rank_kernel(rows, n_rows_arg, n_cols_arg):
    """Rank and a triangular basis of the right kernel.

    Columns are reduced left to right against a pivot table over row
    indices; a column combination that vanishes contributes its tracking
    vector to the kernel basis, matching the pure backend bit for bit.
    """
    cdef Py_ssize_t n_rows = n_rows_arg
    cdef Py_ssize_t n_cols = n_cols_arg
    if n_cols == 0:
        return 0, []
    cdef Py_ssize_t rwords = (n_cols + 63) // 64
    cdef Py_ssize_t cwords = max((n_rows + 63) // 64, 1)
    cdef Py_ssize_t max_piv = min(n_rows, n_cols) if n_rows > 0 else 1
    cdef u64 *packed = _pack_rows(rows, n_rows, rwords)
    cdef u64 *colmat = <u64 *>calloc(n_cols * cwords, sizeof(u64))
    cdef u64 *piv_vec = <u64 *>calloc(max_piv * cwords, sizeof(u64))
    cdef u64 *piv_trk = <u64 *>calloc(max_piv * rwords, sizeof(u64))
    cdef u64 *vec = <u64 *>calloc(cwords, sizeof(u64))
    cdef u64 *trk = <u64 *>calloc(rwords, sizeof(u64))
    cdef Py_ssize_t *pivot_of = <Py_ssize_t *>calloc(max(n_rows, 1), sizeof(Py_ssize_t))
    if (colmat == NULL or piv_vec == NULL or piv_trk == NULL or vec == NULL
            or trk == NULL or pivot_of == NULL):
        free(packed)
        free(colmat)
        free(piv_vec)
        free(piv_trk)
        free(vec)
        free(trk)
        free(pivot_of)
        raise MemoryError()
    cdef Py_ssize_t i, w, j, col, lead, p
    cdef Py_ssize_t slot = 0
    cdef u64 word
    kernel = []
    try:
        for i in range(n_rows):
            pivot_of[i] = -1
        for i in range(n_rows):
            for w in range(rwords):
                word = packed[i * rwords + w]
                while word:
                    col = w * 64 + __builtin_ctzll(word)
                    if col < n_cols:
                        colmat[col * cwords + (i >> 6)] |= (<u64>1) << (i & 63)
                    word &= word - 1
        for j in range(n_cols):
            memcpy(vec, colmat + j * cwords, cwords * sizeof(u64))
            memset(trk, 0, rwords * sizeof(u64))
            trk[j >> 6] = (<u64>1) << (j & 63)
            while True:
                lead = _top_bit(vec, cwords)
                if lead < 0:
                    kernel.append(int.from_bytes(
                        PyBytes_FromStringAndSize(<char *>trk, rwords * 8),
                        "little"))
                    break
                p = pivot_of[lead]
                if p < 0:
                    pivot_of[lead] = slot
                    memcpy(piv_vec + slot * cwords, vec, cwords * sizeof(u64))
                    memcpy(piv_trk + slot * rwords, trk, rwords * sizeof(u64))
                    slot += 1
                    break
                for w in range(cwords):
                    vec[w] ^= piv_vec[p * cwords + w]
                for w in range(rwords):
                    trk[w] ^= piv_trk[p * rwords + w]
        return n_cols - len(kernel), kernel
    finally:
        free(packed)
        free(colmat)
        free(piv_vec)
        free(piv_trk)
        free(vec)
        free(trk)
        free(pivot_of)
